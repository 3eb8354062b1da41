#pragma once

// Differential-syndrome deltas: how one deletion or substitution moves the
// weight and first-order VT syndrome of psi(x), and the exact decomposition
// of VT^1(psi(x)) - VT^1(psi(y)) for a confusable quadruple.

#include <utility>

#include "recon/seqcore.hpp"

namespace recon {

struct NotConfusable : std::invalid_argument {
    explicit NotConfusable(const std::string& what) : std::invalid_argument(what) {}
};
struct DegenerateOrder : std::invalid_argument {
    explicit DegenerateOrder(const std::string& what) : std::invalid_argument(what) {}
};

/// The psi-pair (psi_i, psi_{i+1}) touched by an event, read before it.
enum class PairKind { K00, K01, K10, K11 };

/// delta_weight is the decrease wt(psi before) - wt(psi after):
/// {0, 2} for deletions, {-2, 0, 2} for substitutions.
struct EffectClass {
    int delta_weight = 0;
    PairKind kind = PairKind::K00;
};

/// Deleting x_d merges the psi-pair at d into its xor.
EffectClass classify_deletion_effect(const BinSeq& x, int d);

/// Flipping x_e complements the psi-pair at e.
EffectClass classify_substitution_effect(const BinSeq& x, int e);

/// Substitution contributions to the syndrome delta:
/// eta^x = e_x(2 psi(x)_{e_x} - 1) + (e_x+1)(2 psi(x)_{e_x+1} - 1) and the
/// sign-flipped analogue on y.
std::pair<long long, long long> eta_terms(const BinSeq& x, int ex, const BinSeq& y, int ey);

struct DeltaBreakdown {
    long long eta_x = 0;       // 0 when e_x = 0
    long long eta_y = 0;       // 0 when e_y = 0
    long long boundary_x = 0;  // zeta/xi term of the x-side deletion
    long long boundary_y = 0;  // zeta/xi term of the y-side deletion
    long long middle_sum = 0;  // sum of psi(x(0,e_x)) over the inter-deletion window
    long long total = 0;       // VT^1(psi(x)) - VT^1(psi(y))

    // weight decreases per event, for N_xy-style bookkeeping
    int n_del_x = 0;
    int n_del_y = 0;
    int n_sub_x = 0;
    int n_sub_y = 0;
};

/// Exact term-by-term evaluation of the syndrome-delta identity for a
/// confusable quadruple x(d_x, e_x) = y(d_y, e_y) with d_x != d_y.
/// Substitution indices of 0 mean no substitution on that side.
DeltaBreakdown delta_psi_decomposition(const BinSeq& x, const BinSeq& y,
                                       int dx, int ex, int dy, int ey);

}  // namespace recon
