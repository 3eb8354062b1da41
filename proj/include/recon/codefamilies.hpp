#pragma once

// Membership predicates, enumerators, and residue search for the code
// families: plain VT, the mod-4 weight refinement C1 (= the N=14 code),
// the order-2 list-decodable code CL (= the N=5 code), run-constrained
// and locally balanced sets, the block-syndrome P-bounded code, and the
// composite N=11 / N=9 constructions.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "recon/seqcore.hpp"

namespace recon {

enum class Family { VT, C1, CL, Rconstrained, LocBal, CDSP, C14, C11, C9 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// All residue and structural parameters of one concrete code. Structural
/// fields left at 0 are derived from n with the published defaults; setting
/// them explicitly selects a non-default regime (used to give the block and
/// balance machinery a testable surface at small n).
struct CodeSpec {
    Family family = Family::C1;
    int n = 0;

    // residues
    long long s0 = 0;                    // weight mod 4
    long long s1 = 0;                    // VT^1 mod 2n (mod 3n+1 for C9)
    long long s2 = 0;                    // VT^2 mod 2n^2 (CL)
    long long h0 = 0;                    // wt(psi) mod 7 (C9)
    long long h1 = 0;                    // VT^1(psi) mod 6(n+1)+1 (C9)
    std::array<long long, 3> g{0, 0, 0};   // odd block-pair sums mod 3(2P)^k
    std::array<long long, 3> gp{0, 0, 0};  // even block-pair sums mod 3(2P)^k

    // structural
    int t_prime = 2;
    int t = 0;        // 0: ceil(log2 n) + 3
    long long P = 0;  // 0: family default (6t+4 for C11, 4l for C9)
    long long l = 0;  // 0: ceil(1296 log2 n)
    long long eps_num = 1, eps_den = 18;

    static CodeSpec make(Family f, int n);

    int resolved_t() const;
    long long resolved_l() const;
    long long resolved_P() const;

    /// Throws ParamOutOfRange if any residue lies outside its defining range.
    void validate() const;
};

/// Does x satisfy every congruence and structural constraint of the family?
bool member(const BinSeq& x, const CodeSpec& spec);

/// Non-residue constraints only (run limits, local balance).
bool structural_ok(const BinSeq& x, const CodeSpec& spec);

/// The residues x induces, in the fixed per-family order. Two sequences can
/// share a code of this family iff both pass structural_ok and their
/// signatures coincide.
std::vector<long long> residue_signature(const BinSeq& x, const CodeSpec& spec);

/// All members in lexicographic order. Exhaustive over Sigma^n; refuses
/// n beyond the exhaustive cap.
std::vector<BinSeq> enumerate_code(const CodeSpec& spec);

struct RedundancyRow {
    int n = 0;
    std::vector<long long> best_residues;
    std::uint64_t code_size = 0;
    double redundancy = 0.0;
};

/// Scan all residue classes of the family at length n and return the
/// lexicographically first size maximizer.
RedundancyRow best_residues(Family f, int n);

/// The pairwise predicate a P-bounded code must satisfy: the disagreement
/// window is longer than P, or B(x, y) is empty.
bool is_p_bounded_pair_safe(const BinSeq& x, const BinSeq& y, long long P);

/// The unique spec of the family whose residues match x. Throws
/// ParamOutOfRange when x fails the family's structural constraints.
CodeSpec spec_for_member(Family f, const BinSeq& x);

/// Exhaustive-surface cap: RECON_DS_MAX_N from the environment, default 24.
int exhaustive_cap();

/// Sum of VT^k over the odd (pair_offset = 0) or even (pair_offset = 1)
/// P-block pairs, reduced mod 3(2P)^k.
long long block_pair_syndrome(const BinSeq& x, long long P, int k, int pair_offset);

}  // namespace recon
