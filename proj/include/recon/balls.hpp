#pragma once

// Exact single-deletion, single-substitution and combined 1D1S balls,
// plus their pairwise intersections.

#include <vector>

#include "recon/seqcore.hpp"

namespace recon {

/// A finite set of equal-length sequences, canonically sorted and deduped.
struct BallView {
    std::vector<BinSeq> elements;
    int source_len = 0;

    std::size_t size() const { return elements.size(); }
    bool contains(const BinSeq& s) const;
};

/// D(x): one representative per run, |D(x)| = r(x).
BallView deletion_ball(const BinSeq& x);

/// S(x): x plus its n single-flip neighbors.
BallView substitution_ball(const BinSeq& x);

/// B(x): union of S(w) over w in D(x). Contains D(x) itself since the
/// substitution may be trivial.
BallView ds_ball(const BinSeq& x);

/// D(x, y) = D(x) intersect D(y).
BallView deletion_intersection(const BinSeq& x, const BinSeq& y);

/// Closed-form emptiness test for D(x, y): true iff both shifted segment
/// distances between the outermost disagreement indices are nonzero.
bool is_deletion_intersection_empty(const BinSeq& x, const BinSeq& y);

/// S(x, y): empty when d_H >= 3, otherwise exactly two sequences.
struct SubIntersection {
    std::vector<BinSeq> elements;
    std::size_t size() const { return elements.size(); }
};
SubIntersection substitution_intersection(const BinSeq& x, const BinSeq& y);

/// B(x, y) = B(x) intersect B(y).
BallView ds_intersection(const BinSeq& x, const BinSeq& y);

}  // namespace recon
