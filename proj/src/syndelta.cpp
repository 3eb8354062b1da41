#include "recon/syndelta.hpp"

namespace recon {

namespace {

PairKind kind_of(int hi, int lo) {
    if (hi == 0) return lo == 0 ? PairKind::K00 : PairKind::K01;
    return lo == 0 ? PairKind::K10 : PairKind::K11;
}

}  // namespace

EffectClass classify_deletion_effect(const BinSeq& x, int d) {
    if (d < 1 || d > x.size()) throw IndexOutOfRange("classify_deletion_effect: d=" + std::to_string(d));
    BinSeq psi = differential(x);
    EffectClass e;
    e.kind = kind_of(psi.get(d), psi.get(d + 1));
    e.delta_weight = psi.weight() - differential(x.delete_at(d)).weight();
    return e;
}

EffectClass classify_substitution_effect(const BinSeq& x, int e) {
    if (e < 1 || e > x.size()) throw IndexOutOfRange("classify_substitution_effect: e=" + std::to_string(e));
    BinSeq psi = differential(x);
    EffectClass out;
    out.kind = kind_of(psi.get(e), psi.get(e + 1));
    out.delta_weight = psi.weight() - differential(x.flipped(e)).weight();
    return out;
}

namespace {

long long eta_x_term(const BinSeq& psi, int e) {
    if (e == 0) return 0;
    return static_cast<long long>(e) * (2 * psi.get(e) - 1) +
           static_cast<long long>(e + 1) * (2 * psi.get(e + 1) - 1);
}

long long eta_y_term(const BinSeq& psi, int e) {
    if (e == 0) return 0;
    return static_cast<long long>(e) * (1 - 2 * psi.get(e)) +
           static_cast<long long>(e + 1) * (1 - 2 * psi.get(e + 1));
}

}  // namespace

std::pair<long long, long long> eta_terms(const BinSeq& x, int ex, const BinSeq& y, int ey) {
    if (ex < 1 || ex > x.size()) throw IndexOutOfRange("eta_terms: e_x=" + std::to_string(ex));
    if (ey < 1 || ey > y.size()) throw IndexOutOfRange("eta_terms: e_y=" + std::to_string(ey));
    return {eta_x_term(differential(x), ex), eta_y_term(differential(y), ey)};
}

DeltaBreakdown delta_psi_decomposition(const BinSeq& x, const BinSeq& y,
                                       int dx, int ex, int dy, int ey) {
    const int n = x.size();
    if (y.size() != n) throw LengthMismatch("delta_psi_decomposition: lengths differ");
    if (dx < 1 || dx > n) throw IndexOutOfRange("delta_psi_decomposition: d_x=" + std::to_string(dx));
    if (dy < 1 || dy > n) throw IndexOutOfRange("delta_psi_decomposition: d_y=" + std::to_string(dy));
    if (dx == dy) throw DegenerateOrder("delta_psi_decomposition: d_x = d_y");

    ErrorOp opx{dx, ex == 0 ? std::optional<int>{} : std::optional<int>{ex}};
    ErrorOp opy{dy, ey == 0 ? std::optional<int>{} : std::optional<int>{ey}};
    BinSeq zx = apply_error(x, opx);
    BinSeq zy = apply_error(y, opy);
    if (zx != zy) throw NotConfusable("delta_psi_decomposition: x(d_x,e_x) != y(d_y,e_y)");

    BinSeq xs = ex == 0 ? x : x.flipped(ex);  // x(0, e_x)
    BinSeq ys = ey == 0 ? y : y.flipped(ey);  // y(0, e_y)
    BinSeq px = differential(x), py = differential(y);
    BinSeq pxs = differential(xs), pys = differential(ys);

    DeltaBreakdown out;
    out.eta_x = eta_x_term(px, ex);
    out.eta_y = eta_y_term(py, ey);

    if (dx > dy) {
        out.boundary_x = static_cast<long long>(dx) * pxs.get(dx) +
                         static_cast<long long>(dx + 1) * pxs.get(dx + 1) -
                         static_cast<long long>(dx + 1) * pys.get(dx + 1);
        out.boundary_y = static_cast<long long>(dy) * pxs.get(dy) -
                         static_cast<long long>(dy) * pys.get(dy) -
                         static_cast<long long>(dy + 1) * pys.get(dy + 1);
        for (int i = dy + 1; i <= dx - 1; ++i) out.middle_sum += pxs.get(i);
        out.total = out.eta_x + out.eta_y + out.boundary_x + out.boundary_y - out.middle_sum;
    } else {
        out.boundary_x = static_cast<long long>(dx) * pxs.get(dx) +
                         static_cast<long long>(dx + 1) * pxs.get(dx + 1) -
                         static_cast<long long>(dx) * pys.get(dx);
        out.boundary_y = static_cast<long long>(dy + 1) * pxs.get(dy + 1) -
                         static_cast<long long>(dy) * pys.get(dy) -
                         static_cast<long long>(dy + 1) * pys.get(dy + 1);
        for (int i = dx + 2; i <= dy; ++i) out.middle_sum += pxs.get(i);
        out.total = out.eta_x + out.eta_y + out.boundary_x + out.boundary_y + out.middle_sum;
    }

    out.n_sub_x = ex == 0 ? 0 : px.weight() - pxs.weight();
    out.n_sub_y = ey == 0 ? 0 : py.weight() - pys.weight();
    out.n_del_x = pxs.weight() - differential(zx).weight();
    out.n_del_y = pys.weight() - differential(zy).weight();
    return out;
}

}  // namespace recon
