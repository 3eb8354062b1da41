#pragma once

// Structural decomposition of B(x, y): tuple classification of deletion
// index pairs, the eighteen (overlapping) subsets B_1..B_18 with their
// deletion-index-pair sets E_1..E_18, closed-form E candidates, and the
// minimum decomposition of a string into period-<=2 pieces.

#include <array>
#include <utility>
#include <vector>

#include "recon/balls.hpp"
#include "recon/seqcore.hpp"

namespace recon {

enum class DeleteOrder { XFirst, YFirst };

/// Segment-distance triple of a deletion pair. For d_x <= d_y the middle
/// term compares x_[d_x+1, d_y] against y_[d_x, d_y-1]; mirrored otherwise.
struct TupleClass {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;
    DeleteOrder side = DeleteOrder::XFirst;
    int total() const { return d1 + d2 + d3; }
};

TupleClass classify_tuple(const BinSeq& x, const BinSeq& y, int dx, int dy);

/// The eighteen subsets of B(x, y) keyed by the relative order of deletion
/// and substitution indices, together with the witness deletion pairs.
/// Index 0 is unused; subsets are stored sorted and deduped, overlapping
/// as the definitions allow.
struct SubsetPartition {
    std::array<std::vector<BinSeq>, 19> subsets;
    std::array<std::vector<std::pair<int, int>>, 19> epairs;
    std::vector<BinSeq> united;  // union of subsets[1..18], sorted

    bool subset_empty(int k) const { return subsets[static_cast<std::size_t>(k)].empty(); }
};

SubsetPartition subset_partition(const BinSeq& x, const BinSeq& y);

/// Witness-quadruple predicate behind subsets[k]: does (d_x, e_x, d_y, e_y)
/// satisfy B_k's ordering constraints? Absent substitutions are passed as 0.
bool bk_predicate(int k, int dx, int ex, int dy, int ey);

/// Candidate (d_x, d_y) pairs dictated by the closed-form E_k tests on the
/// disagreement indices. Throws PreconditionViolated when the governing
/// statement needs a larger Hamming distance than the pair has.
std::vector<std::pair<int, int>> closed_form_E(const BinSeq& x, const BinSeq& y, int k);

/// Minimum decomposition of s into substrings of period <= 2, lexicographic
/// on (total pieces, length-1 pieces). `pieces` counts pieces of length >= 2.
struct P2Decomposition {
    int pieces = 0;
    int singles = 0;
};
P2Decomposition min_p2_decomposition(const BinSeq& s);

/// Does some period-<=2 decomposition keep at most `max_long` pieces of
/// length >= 2 while using at most max_long + extra_singles pieces overall?
/// Spare long-piece budget may be spent on singles.
bool p2_budget_feasible(const BinSeq& s, int max_long, int extra_singles);

}  // namespace recon
