#pragma once

// Exhaustive and sampled verification campaigns. Every check walks a pair
// (or quadruple) space, tracks an extremal value or a violation count, and
// reports pass/fail with up to ten replayable witnesses.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recon/codefamilies.hpp"
#include "recon/seqcore.hpp"

namespace recon {

struct Witness {
    BinSeq x, y;
    std::string note;
};

struct VerifyReport {
    std::string check_id;
    int n_lo = 0, n_hi = 0;
    std::string params;
    std::uint64_t pairs_scanned = 0;
    long long max_observed = 0;
    long long bound = 0;
    bool at_least = false;  // pass means max_observed >= bound instead of <=
    bool passed = false;
    std::vector<Witness> witnesses;
    double wall_time_s = 0.0;
};

/// Max |B(x, y)| over all same-code pairs of the family (or, with no family,
/// over all Sigma^n pairs with empty deletion- and substitution-ball
/// intersections). Passes iff the maximum stays below N.
VerifyReport verify_bound(std::optional<Family> family, int N, int n_lo, int n_hi, int jobs = 1);

/// Partition identities at one length: the eighteen subsets cover B(x, y)
/// on every qualifying pair, and C1 pairs lose the first four subsets.
std::vector<VerifyReport> verify_partition_union(int n, int jobs = 1);

/// Realized (d1, d2, d3) tuples with total <= 2 match the published rows;
/// equal deletion indices force d2 = 0 and total != 1.
VerifyReport verify_table1(int n, int jobs = 1);

/// Closed-form E_k candidates contain the brute-force sets for every k,
/// with equality in the determinate branches. Pairs of deletion indices
/// are compared up to run equivalence of the deletions.
VerifyReport verify_e_forms(int n, int jobs = 1);

/// The conditional-lemma battery over all C1 pairs at one length.
std::vector<VerifyReport> verify_c1_battery(int n, int jobs = 1);

/// Aggregate structural suite over an n-range (the partition, tuple-table,
/// E-form, and battery checks for each n).
std::vector<VerifyReport> verify_structure(int n_lo, int n_hi, int jobs = 1);

/// Syndrome-delta identity and table-cell consistency: exhaustive over all
/// confusable quadruples up to n_exhaustive, plus `samples` random
/// quadruples at length n_sampled.
VerifyReport verify_delta(int n_exhaustive, int n_sampled, std::uint64_t samples,
                          std::uint64_t seed, int jobs = 1);

/// Counting results: |R(n, 2, ceil(log n)+3)| >= 2^(n-1) over one range, and
/// best-residue redundancy bounds for the C1/C14 and CL families.
std::vector<VerifyReport> verify_counts(int r_lo, int r_hi, int c14_lo, int c14_hi,
                                        int cl_lo, int cl_hi);

/// Weight moves of the differential sequence stay in {0,2} under deletion
/// and {-2,0,2} under substitution, and a substitution flips exactly its pair.
VerifyReport verify_observations(int n_lo, int n_hi);

/// Same-code CDSP pairs with a disagreement window of length at most P have
/// empty B-intersection.
VerifyReport verify_pbounded(long long P, int n_lo, int n_hi, int jobs = 1);

/// End-to-end reconstruction: every codeword of the family decodes correctly
/// from `trials` random N-subsets of its ball (all subsets when the ball has
/// at most `exhaustive_ball_cap` elements).
VerifyReport verify_reconstruction(Family family, int N, int n_lo, int n_hi,
                                   int trials, std::uint64_t seed, int jobs = 1,
                                   int exhaustive_ball_cap = 20);

}  // namespace recon
