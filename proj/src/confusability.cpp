#include "recon/confusability.hpp"

#include <algorithm>
#include <limits>

namespace recon {

namespace {

void check_pair(const BinSeq& x, const BinSeq& y, const char* who) {
    if (x.size() != y.size())
        throw LengthMismatch(std::string(who) + ": lengths " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    if (x == y) throw IdenticalInputs(std::string(who) + ": sequences are equal");
}

}  // namespace

TupleClass classify_tuple(const BinSeq& x, const BinSeq& y, int dx, int dy) {
    if (x.size() != y.size())
        throw LengthMismatch("classify_tuple: lengths differ");
    const int n = x.size();
    if (dx < 1 || dx > n || dy < 1 || dy > n)
        throw IndexOutOfRange("classify_tuple: deletion index outside [1,n]");
    TupleClass t;
    if (dx <= dy) {
        t.side = DeleteOrder::XFirst;
        t.d1 = hamming(x.slice(1, dx - 1), y.slice(1, dx - 1));
        t.d2 = hamming(x.slice(dx + 1, dy), y.slice(dx, dy - 1));
        t.d3 = hamming(x.slice(dy + 1, n), y.slice(dy + 1, n));
    } else {
        t.side = DeleteOrder::YFirst;
        t.d1 = hamming(x.slice(1, dy - 1), y.slice(1, dy - 1));
        t.d2 = hamming(x.slice(dy, dx - 1), y.slice(dy + 1, dx));
        t.d3 = hamming(x.slice(dx + 1, n), y.slice(dx + 1, n));
    }
    return t;
}

bool bk_predicate(int k, int dx, int ex, int dy, int ey) {
    const bool sx = ex > 0, sy = ey > 0;  // real substitutions
    switch (k) {
        case 1: return (!sy && sx && ex < dx && dx < dy) || (!sx && sy && ey < dx && dx < dy);
        case 2: return (!sy && sx && ex < dy && dy < dx) || (!sx && sy && ey < dy && dy < dx);
        case 3: return (!sy && sx && dx < dy && dy < ex) || (!sx && sy && dx < dy && dy < ey);
        case 4: return (!sy && sx && dy < dx && dx < ex) || (!sx && sy && dy < dx && dx < ey);
        case 5: return (!sy && sx && dx < ex && ex <= dy) || (!sx && sy && dx <= ey && ey < dy);
        case 6: return (!sy && sx && dy <= ex && ex < dx) || (!sx && sy && dy < ey && ey <= dx);
        case 7: return sx && sy && ex < dx && ey < dx && dx <= dy;
        case 8: return sx && sy && ex < dy && ey < dy && dy <= dx;
        case 9: return sx && sy && dx <= dy && dy < ex && dy < ey;
        case 10: return sx && sy && dy <= dx && dx < ex && dx < ey;
        case 11: return sx && sy && ((ex < dx && dx <= dy && dy < ey) || (ey < dx && dx <= dy && dy < ex));
        case 12: return sx && sy && ((ex < dy && dy <= dx && dx < ey) || (ey < dy && dy <= dx && dx < ex));
        case 13: return sx && sy && ((ex < dx && dx <= ey && ey < dy) || (ey < dx && dx < ex && ex <= dy));
        case 14: return sx && sy && ((ex < dy && dy < ey && ey <= dx) || (ey < dy && dy <= ex && ex < dx));
        case 15: return sx && sy && ((dx < ex && ex <= dy && dy < ey) || (dx <= ey && ey < dy && dy < ex));
        case 16: return sx && sy && ((dy <= ex && ex < dx && dx < ey) || (dy < ey && ey <= dx && dx < ex));
        case 17: return sx && sy && dx < ex && ex <= dy && dx <= ey && ey < dy;
        case 18: return sx && sy && dy <= ex && ex < dx && dy < ey && ey <= dx;
        default: throw ParamOutOfRange("bk_predicate: k outside [1,18]");
    }
}

SubsetPartition subset_partition(const BinSeq& x, const BinSeq& y) {
    check_pair(x, y, "subset_partition");
    const int n = x.size();
    if (n < 2) throw ParamOutOfRange("subset_partition: need length >= 2");

    SubsetPartition part;
    for (int dx = 1; dx <= n; ++dx) {
        BinSeq u = x.delete_at(dx);
        for (int dy = 1; dy <= n; ++dy) {
            BinSeq v = y.delete_at(dy);
            int dh = hamming(u, v);
            if (dh < 1 || dh > 2) continue;

            // S(u, v) holds at most two sequences; recover the witness
            // substitution indices on the original numbering of x and y.
            std::vector<BinSeq> mids;
            if (dh == 1) {
                mids = {u, v};
            } else {
                DiffProfile p = diff_profile(u, v);
                mids = {u.flipped(p.j[0]), u.flipped(p.j[1])};
            }
            for (const BinSeq& z : mids) {
                int ex = 0, ey = 0;
                for (int q = 1; q <= n - 1; ++q) {
                    if (z.get(q) != u.get(q)) ex = q < dx ? q : q + 1;
                    if (z.get(q) != v.get(q)) ey = q < dy ? q : q + 1;
                }
                for (int k = 1; k <= 18; ++k) {
                    if (bk_predicate(k, dx, ex, dy, ey)) {
                        part.subsets[static_cast<std::size_t>(k)].push_back(z);
                        part.epairs[static_cast<std::size_t>(k)].emplace_back(dx, dy);
                    }
                }
            }
        }
    }
    for (int k = 1; k <= 18; ++k) {
        auto& s = part.subsets[static_cast<std::size_t>(k)];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        auto& e = part.epairs[static_cast<std::size_t>(k)];
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        part.united.insert(part.united.end(), s.begin(), s.end());
    }
    std::sort(part.united.begin(), part.united.end());
    part.united.erase(std::unique(part.united.begin(), part.united.end()), part.united.end());
    return part;
}

namespace {

// d_H(x_[a+1, b], y_[a, b-1]) — left-shifted segment distance.
int shift_left(const BinSeq& x, const BinSeq& y, int a, int b) {
    return hamming(x.slice(a + 1, b), y.slice(a, b - 1));
}
// d_H(x_[a, b-1], y_[a+1, b]) — right-shifted segment distance.
int shift_right(const BinSeq& x, const BinSeq& y, int a, int b) {
    return hamming(x.slice(a, b - 1), y.slice(a + 1, b));
}

// Largest boundary position i in [2, limit] with s_i != s_{i-1}, or 0.
int last_boundary_at_most(const BinSeq& s, int limit) {
    for (int i = limit; i >= 2; --i)
        if (s.get(i) != s.get(i - 1)) return i;
    return 0;
}
// Smallest boundary position i in [from, n] with s_i != s_{i-1}, or 0.
int first_boundary_at_least(const BinSeq& s, int from) {
    for (int i = std::max(from, 2); i <= s.size(); ++i)
        if (s.get(i) != s.get(i - 1)) return i;
    return 0;
}

}  // namespace

std::vector<std::pair<int, int>> closed_form_E(const BinSeq& x, const BinSeq& y, int k) {
    check_pair(x, y, "closed_form_E");
    if (k < 1 || k > 18) throw ParamOutOfRange("closed_form_E: k outside [1,18]");
    DiffProfile p = diff_profile(x, y);
    const int dh = p.dh;
    const int j1 = p.j.front(), jh = p.j.back();

    auto need = [&](int mindh) {
        if (dh < mindh)
            throw PreconditionViolated("closed_form_E: E_" + std::to_string(k) + " needs d_H >= " + std::to_string(mindh));
    };

    std::vector<std::pair<int, int>> out;
    auto one = [&](bool cond, int a, int b) {
        if (cond) out.emplace_back(a, b);
    };

    switch (k) {
        case 1: need(2); one(shift_left(x, y, p.j[1], jh) == 0, p.j[1], jh); break;
        case 2: need(2); one(shift_right(x, y, p.j[1], jh) == 0, jh, p.j[1]); break;
        case 3: need(2); one(shift_left(x, y, j1, p.j[dh - 2]) == 0, j1, p.j[dh - 2]); break;
        case 4: need(2); one(shift_right(x, y, j1, p.j[dh - 2]) == 0, p.j[dh - 2], j1); break;
        case 5: one(shift_left(x, y, j1, jh) == 1, j1, jh); break;
        case 6: one(shift_right(x, y, j1, jh) == 1, jh, j1); break;
        case 7: need(3); one(shift_left(x, y, p.j[2], jh) == 0, p.j[2], jh); break;
        case 8: need(3); one(shift_right(x, y, p.j[2], jh) == 0, jh, p.j[2]); break;
        case 9: need(3); one(shift_left(x, y, j1, p.j[dh - 3]) == 0, j1, p.j[dh - 3]); break;
        case 10: need(3); one(shift_right(x, y, j1, p.j[dh - 3]) == 0, p.j[dh - 3], j1); break;
        case 11: need(3); one(shift_left(x, y, p.j[1], p.j[dh - 2]) == 0, p.j[1], p.j[dh - 2]); break;
        case 12: need(3); one(shift_right(x, y, p.j[1], p.j[dh - 2]) == 0, p.j[dh - 2], p.j[1]); break;
        case 13: need(2); one(shift_left(x, y, p.j[1], jh) == 1, p.j[1], jh); break;
        case 14: need(2); one(shift_right(x, y, p.j[1], jh) == 1, jh, p.j[1]); break;
        case 15: need(2); one(shift_left(x, y, j1, p.j[dh - 2]) == 1, j1, p.j[dh - 2]); break;
        case 16: need(2); one(shift_right(x, y, j1, p.j[dh - 2]) == 1, p.j[dh - 2], j1); break;
        case 17: {
            int delta = shift_left(x, y, j1, jh);
            if (delta == 1) {
                // x deleted before the prefix boundary, or y deleted past the
                // suffix boundary; both leave exactly one extra disagreement.
                int lam1 = last_boundary_at_most(x, j1);
                if (lam1 >= 2) out.emplace_back(lam1 - 1, jh);
                int lam2 = first_boundary_at_least(y, jh + 1);
                if (lam2 != 0) out.emplace_back(j1, lam2);
            } else if (delta == 2) {
                out.emplace_back(j1, jh);
            }
            break;
        }
        case 18: {
            int delta = shift_right(x, y, j1, jh);
            if (delta == 1) {
                int m1 = last_boundary_at_most(y, j1);
                if (m1 >= 2) out.emplace_back(jh, m1 - 1);
                int m1p = first_boundary_at_least(x, jh + 1);
                if (m1p != 0) out.emplace_back(m1p, j1);
            } else if (delta == 2) {
                out.emplace_back(jh, j1);
            }
            break;
        }
        default: break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Period <= 2 is equivalent to invariance under shift by two.
bool p2_piece(const BinSeq& s, int i, int j) {
    for (int k = i; k + 2 <= j; ++k)
        if (s.get(k) != s.get(k + 2)) return false;
    return true;
}

}  // namespace

P2Decomposition min_p2_decomposition(const BinSeq& s) {
    const int n = s.size();
    constexpr int inf = std::numeric_limits<int>::max() / 2;
    // dp over prefixes; cost ordered by (total pieces, singles)
    std::vector<std::pair<int, int>> dp(static_cast<std::size_t>(n) + 1, {inf, inf});
    dp[0] = {0, 0};
    for (int j = 1; j <= n; ++j) {
        for (int i = j; i >= 1; --i) {
            if (!p2_piece(s, i, j)) break;  // shrinking i only adds constraints
            auto cand = dp[static_cast<std::size_t>(i - 1)];
            if (cand.first >= inf) continue;
            cand.first += 1;
            cand.second += (i == j) ? 1 : 0;
            dp[static_cast<std::size_t>(j)] = std::min(dp[static_cast<std::size_t>(j)], cand);
        }
    }
    P2Decomposition out;
    if (n == 0) return out;
    out.singles = dp[static_cast<std::size_t>(n)].second;
    out.pieces = dp[static_cast<std::size_t>(n)].first - out.singles;
    return out;
}

bool p2_budget_feasible(const BinSeq& s, int max_long, int extra_singles) {
    const int n = s.size();
    const int cap_long = max_long;
    const int cap_total = max_long + extra_singles;
    if (cap_long < 0 || cap_total < 0) return n == 0;
    // reach[i][L][T]: prefix of length i decomposable with L long pieces, T total
    std::vector<std::vector<std::vector<char>>> reach(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::vector<char>>(static_cast<std::size_t>(cap_long) + 1,
                                       std::vector<char>(static_cast<std::size_t>(cap_total) + 1, 0)));
    reach[0][0][0] = 1;
    for (int i = 0; i < n; ++i)
        for (int L = 0; L <= cap_long; ++L)
            for (int T = 0; T <= cap_total; ++T) {
                if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(L)][static_cast<std::size_t>(T)]) continue;
                if (T == cap_total) continue;
                for (int j = i + 1; j <= n; ++j) {
                    if (!p2_piece(s, i + 1, j)) break;
                    bool single = (j == i + 1);
                    int L2 = L + (single ? 0 : 1);
                    if (L2 > cap_long) continue;
                    reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(L2)][static_cast<std::size_t>(T + 1)] = 1;
                }
            }
    for (int L = 0; L <= cap_long; ++L)
        for (int T = 0; T <= cap_total; ++T)
            if (reach[static_cast<std::size_t>(n)][static_cast<std::size_t>(L)][static_cast<std::size_t>(T)]) return true;
    return false;
}

}  // namespace recon
