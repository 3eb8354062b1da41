#include "recon/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <thread>

#include "recon/balls.hpp"
#include "recon/confusability.hpp"
#include "recon/reconstruct.hpp"
#include "recon/syndelta.hpp"

namespace recon {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// ds_ball of every length-n sequence, elements as sorted lexicographic ranks
std::vector<std::vector<std::uint32_t>> all_ds_balls(int n) {
    std::vector<std::vector<std::uint32_t>> balls(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        BallView b = ds_ball(BinSeq::from_rank(v, n));
        auto& out = balls[v];
        out.reserve(b.size());
        for (const BinSeq& e : b.elements) out.push_back(static_cast<std::uint32_t>(e.rank()));
        std::sort(out.begin(), out.end());
    }
    return balls;
}

std::size_t intersect_count(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

template <class Local, class Fn>
std::vector<Local> run_sharded(int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    std::vector<Local> locals(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        fn(0, 1, locals[0]);
        return locals;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
        threads.emplace_back([&, w] { fn(w, jobs, locals[static_cast<std::size_t>(w)]); });
    for (auto& t : threads) t.join();
    return locals;
}

constexpr int kWitnessCap = 10;

// Accumulator for "max over pairs" sweeps; keeps pairs achieving the max.
struct Extremal {
    long long max_val = -1;
    std::vector<Witness> achievers;
    std::uint64_t scanned = 0;

    void note(long long v, const BinSeq& x, const BinSeq& y, const std::string& note_text = {}) {
        if (v > max_val) {
            max_val = v;
            achievers.clear();
        }
        if (v == max_val && achievers.size() < kWitnessCap)
            achievers.push_back({x, y, note_text});
    }
    void merge(const Extremal& o) {
        scanned += o.scanned;
        if (o.max_val > max_val) {
            max_val = o.max_val;
            achievers = o.achievers;
        } else if (o.max_val == max_val) {
            for (const auto& w : o.achievers)
                if (achievers.size() < kWitnessCap) achievers.push_back(w);
        }
    }
};

// Accumulator for universally quantified predicates.
struct Violations {
    std::uint64_t count = 0;
    std::vector<Witness> witnesses;
    std::uint64_t scanned = 0;

    void fail(const BinSeq& x, const BinSeq& y, const std::string& note_text) {
        ++count;
        if (witnesses.size() < kWitnessCap) witnesses.push_back({x, y, note_text});
    }
    void merge(const Violations& o) {
        count += o.count;
        scanned += o.scanned;
        for (const auto& w : o.witnesses)
            if (witnesses.size() < kWitnessCap) witnesses.push_back(w);
    }
};

VerifyReport report_max(std::string id, int n_lo, int n_hi, std::string params,
                        const Extremal& acc, long long bound, Clock::time_point t0) {
    VerifyReport r;
    r.check_id = std::move(id);
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.params = std::move(params);
    r.pairs_scanned = acc.scanned;
    r.max_observed = acc.max_val;
    r.bound = bound;
    r.passed = acc.max_val <= bound;
    r.witnesses = acc.achievers;
    r.wall_time_s = elapsed(t0);
    return r;
}

VerifyReport report_violations(std::string id, int n_lo, int n_hi, std::string params,
                               const Violations& acc, Clock::time_point t0) {
    VerifyReport r;
    r.check_id = std::move(id);
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.params = std::move(params);
    r.pairs_scanned = acc.scanned;
    r.max_observed = static_cast<long long>(acc.count);
    r.bound = 0;
    r.passed = acc.count == 0;
    r.witnesses = acc.witnesses;
    r.wall_time_s = elapsed(t0);
    return r;
}

// First index of the run containing each position; deletions inside one run
// are positionally equivalent, so E-pair sets are compared after mapping
// each index to its run start.
std::vector<int> run_starts(const BinSeq& s) {
    std::vector<int> rs(static_cast<std::size_t>(s.size()) + 1, 1);
    for (int i = 2; i <= s.size(); ++i)
        rs[static_cast<std::size_t>(i)] = (s.get(i) == s.get(i - 1)) ? rs[static_cast<std::size_t>(i - 1)] : i;
    return rs;
}

std::vector<std::pair<int, int>> canonical_pairs(const std::vector<std::pair<int, int>>& pairs,
                                                 const std::vector<int>& rsx,
                                                 const std::vector<int>& rsy) {
    std::vector<std::pair<int, int>> out;
    out.reserve(pairs.size());
    for (auto [dx, dy] : pairs)
        out.emplace_back(rsx[static_cast<std::size_t>(dx)], rsy[static_cast<std::size_t>(dy)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Buckets of Sigma^n ranks sharing one code of the family (structural pass
// plus equal residue signature), keyed in deterministic signature order.
std::vector<std::vector<std::uint32_t>> family_buckets(Family f, int n) {
    CodeSpec probe = CodeSpec::make(f, n);
    std::map<std::vector<long long>, std::vector<std::uint32_t>> groups;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        BinSeq x = BinSeq::from_rank(v, n);
        if (!structural_ok(x, probe)) continue;
        groups[residue_signature(x, probe)].push_back(static_cast<std::uint32_t>(v));
    }
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(groups.size());
    for (auto& [sig, ranks] : groups) out.push_back(std::move(ranks));
    return out;
}

}  // namespace

// ===== bound sweeps =====

VerifyReport verify_bound(std::optional<Family> family, int N, int n_lo, int n_hi, int jobs) {
    auto t0 = Clock::now();
    Extremal total;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto balls = all_ds_balls(n);
        if (!family) {
            // all pairs with empty deletion- and substitution-ball intersections
            auto locals = run_sharded<Extremal>(jobs, [&](int w, int stride, Extremal& acc) {
                for (std::uint64_t vx = static_cast<std::uint64_t>(w); vx < (std::uint64_t{1} << n); vx += static_cast<std::uint64_t>(stride)) {
                    BinSeq x = BinSeq::from_rank(vx, n);
                    for (std::uint64_t vy = vx + 1; vy < (std::uint64_t{1} << n); ++vy) {
                        if (std::popcount(vx ^ vy) < 3) continue;  // S(x,y) nonempty otherwise
                        BinSeq y = BinSeq::from_rank(vy, n);
                        if (!is_deletion_intersection_empty(x, y)) continue;
                        ++acc.scanned;
                        acc.note(static_cast<long long>(intersect_count(balls[vx], balls[vy])), x, y);
                    }
                }
            });
            for (const auto& l : locals) total.merge(l);
        } else {
            auto buckets = family_buckets(*family, n);
            auto locals = run_sharded<Extremal>(jobs, [&](int w, int stride, Extremal& acc) {
                for (std::size_t b = static_cast<std::size_t>(w); b < buckets.size(); b += static_cast<std::size_t>(stride)) {
                    const auto& ranks = buckets[b];
                    for (std::size_t i = 0; i < ranks.size(); ++i)
                        for (std::size_t j = i + 1; j < ranks.size(); ++j) {
                            ++acc.scanned;
                            acc.note(static_cast<long long>(intersect_count(balls[ranks[i]], balls[ranks[j]])),
                                     BinSeq::from_rank(ranks[i], n), BinSeq::from_rank(ranks[j], n));
                        }
                }
            });
            for (const auto& l : locals) total.merge(l);
        }
    }
    std::string params = family ? "family=" + family_name(*family) : "family=all (d,s)=(0,0)";
    params += " N=" + std::to_string(N);
    return report_max(family ? "ball-bound-" + family_name(*family) : "ball-bound-global",
                      n_lo, n_hi, params, total, N - 1, t0);
}

// ===== structural sweeps =====

namespace {

// Shared per-pair work for the partition-union, tuple-table and E-form
// checks; battery checks run separately over C1 buckets.
struct StructAcc {
    Violations union_all;
    Violations union_c1;
    Violations table1;
    Violations eforms;
};

void check_structural_pair(const BinSeq& x, const BinSeq& y, int n,
                           const std::vector<std::uint32_t>& ball_x,
                           const std::vector<std::uint32_t>& ball_y,
                           bool same_c1_code, StructAcc& acc) {
    // qualifying pair: d_H >= 3 (S empty) and empty deletion intersection
    if (!is_deletion_intersection_empty(x, y)) return;

    SubsetPartition part = subset_partition(x, y);
    ++acc.union_all.scanned;
    ++acc.table1.scanned;
    ++acc.eforms.scanned;

    // exact set of B(x, y) as ranks
    std::vector<std::uint32_t> inter;
    std::set_intersection(ball_x.begin(), ball_x.end(), ball_y.begin(), ball_y.end(),
                          std::back_inserter(inter));

    auto united_ranks = [&](int klo, int khi) {
        std::vector<std::uint32_t> u;
        for (int k = klo; k <= khi; ++k)
            for (const BinSeq& z : part.subsets[static_cast<std::size_t>(k)])
                u.push_back(static_cast<std::uint32_t>(z.rank()));
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        return u;
    };

    if (united_ranks(1, 18) != inter)
        acc.union_all.fail(x, y, "union of B_1..B_18 differs from B(x,y)");

    if (same_c1_code) {
        ++acc.union_c1.scanned;
        bool first_four_empty = part.subset_empty(1) && part.subset_empty(2) &&
                                part.subset_empty(3) && part.subset_empty(4);
        if (!first_four_empty)
            acc.union_c1.fail(x, y, "some of B_1..B_4 nonempty on a C1 pair");
        else if (united_ranks(5, 18) != inter)
            acc.union_c1.fail(x, y, "union of B_5..B_18 differs from B(x,y)");
    }

    // tuple table: realized totals 1 and 2 at each deletion pair
    for (int dx = 1; dx <= n; ++dx) {
        BinSeq u = x.delete_at(dx);
        for (int dy = 1; dy <= n; ++dy) {
            BinSeq v = y.delete_at(dy);
            int dh = hamming(u, v);
            if (dh > 2) continue;
            TupleClass t = classify_tuple(x, y, dx, dy);
            if (t.total() != dh)
                acc.table1.fail(x, y, "segment distances do not add up at (" + std::to_string(dx) + "," + std::to_string(dy) + ")");
            if (dx == dy && dh != 2)
                acc.table1.fail(x, y, "equal deletion indices with d_H(x(d),y(d)) = " + std::to_string(dh));
            if (dx == dy && t.d2 != 0)
                acc.table1.fail(x, y, "equal deletion indices with nonzero middle distance");
        }
    }

    // closed-form E containment and determinate-branch equality
    DiffProfile p = diff_profile(x, y);
    auto rsx = run_starts(x), rsy = run_starts(y);
    for (int k = 1; k <= 18; ++k) {
        auto closed = canonical_pairs(closed_form_E(x, y, k), rsx, rsy);
        auto brute = canonical_pairs(part.epairs[static_cast<std::size_t>(k)], rsx, rsy);
        if (!std::includes(closed.begin(), closed.end(), brute.begin(), brute.end()))
            acc.eforms.fail(x, y, "brute-force E_" + std::to_string(k) + " escapes the closed form");
        bool determinate = true;
        if (k == 17)
            determinate = hamming(x.slice(p.j.front() + 1, p.j.back()), y.slice(p.j.front(), p.j.back() - 1)) != 1;
        else if (k == 18)
            determinate = hamming(x.slice(p.j.front(), p.j.back() - 1), y.slice(p.j.front() + 1, p.j.back())) != 1;
        if (determinate && closed != brute)
            acc.eforms.fail(x, y, "determinate E_" + std::to_string(k) + " branch not exact");
    }
}

StructAcc structural_sweep(int n, int jobs) {
    auto balls = all_ds_balls(n);
    auto locals = run_sharded<StructAcc>(jobs, [&](int w, int stride, StructAcc& acc) {
        for (std::uint64_t vx = static_cast<std::uint64_t>(w); vx < (std::uint64_t{1} << n); vx += static_cast<std::uint64_t>(stride)) {
            BinSeq x = BinSeq::from_rank(vx, n);
            long long c1a = x.weight() % 4;
            long long c1b = static_cast<long long>(vt_syndrome(x, 1)) % (2 * n);
            for (std::uint64_t vy = vx + 1; vy < (std::uint64_t{1} << n); ++vy) {
                if (std::popcount(vx ^ vy) < 3) continue;
                BinSeq y = BinSeq::from_rank(vy, n);
                bool same_c1 = c1a == y.weight() % 4 &&
                               c1b == static_cast<long long>(vt_syndrome(y, 1)) % (2 * n);
                check_structural_pair(x, y, n, balls[vx], balls[vy], same_c1, acc);
            }
        }
    });
    StructAcc total;
    for (const auto& l : locals) {
        total.union_all.merge(l.union_all);
        total.union_c1.merge(l.union_c1);
        total.table1.merge(l.table1);
        total.eforms.merge(l.eforms);
    }
    return total;
}

}  // namespace

std::vector<VerifyReport> verify_partition_union(int n, int jobs) {
    auto t0 = Clock::now();
    StructAcc acc = structural_sweep(n, jobs);
    return {report_violations("partition-union", n, n, "all qualifying pairs", acc.union_all, t0),
            report_violations("partition-union-c1", n, n, "C1 co-members only", acc.union_c1, t0)};
}

VerifyReport verify_table1(int n, int jobs) {
    auto t0 = Clock::now();
    StructAcc acc = structural_sweep(n, jobs);
    return report_violations("table1-rows", n, n, "deletion pairs with total <= 2", acc.table1, t0);
}

VerifyReport verify_e_forms(int n, int jobs) {
    auto t0 = Clock::now();
    StructAcc acc = structural_sweep(n, jobs);
    return report_violations("e-closed-forms", n, n, "containment + determinate equality", acc.eforms, t0);
}

// ===== C1 battery =====

namespace {

struct BatteryAcc {
    Violations base;        // d_H >= 4, D/S empty, B_1..B_4 empty, union identity
    Extremal const13;       // |B(x,y)| <= 13
    Violations b11_excl;    // B_11 forces B_5/B_7/B_9 empty (and mirror)
    Violations b7b9;        // d_H >= 5 exclusions
    Violations union3;      // |B_7 u B_13| <= 3 family
    Violations ifamily;     // B_5 => B_13,B_15,B_17 nonempty + union bounds
    Violations b5b6_13;     // B_5 u B_6 nonempty => <= 13 (+ structure when > 10)
    Violations b11b12_12;   // B_5,B_6 empty, B_11 u B_12 nonempty => <= 12
    Violations le8;         // B_5..B_12 empty => <= 8
    Violations le4;         // B_5..B_16 empty => <= 4
    Violations setsize;     // |B_k| <= 2 (5..16); 17/18 conditional; |E_k| <= 1

    void merge(const BatteryAcc& o) {
        base.merge(o.base);
        const13.merge(o.const13);
        b11_excl.merge(o.b11_excl);
        b7b9.merge(o.b7b9);
        union3.merge(o.union3);
        ifamily.merge(o.ifamily);
        b5b6_13.merge(o.b5b6_13);
        b11b12_12.merge(o.b11b12_12);
        le8.merge(o.le8);
        le4.merge(o.le4);
        setsize.merge(o.setsize);
    }
};

std::size_t union_size(const SubsetPartition& part, std::initializer_list<int> ks) {
    std::vector<std::uint32_t> u;
    for (int k : ks)
        for (const BinSeq& z : part.subsets[static_cast<std::size_t>(k)])
            u.push_back(static_cast<std::uint32_t>(z.rank()));
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u.size();
}

void check_battery_pair(const BinSeq& x, const BinSeq& y,
                        const std::vector<std::uint32_t>& ball_x,
                        const std::vector<std::uint32_t>& ball_y,
                        BatteryAcc& acc) {
    ++acc.base.scanned;
    DiffProfile p = diff_profile(x, y);
    if (p.dh < 4) {
        acc.base.fail(x, y, "C1 pair with d_H = " + std::to_string(p.dh));
        return;
    }
    if (!is_deletion_intersection_empty(x, y)) {
        acc.base.fail(x, y, "C1 pair with nonempty deletion intersection");
        return;
    }

    std::vector<std::uint32_t> inter;
    std::set_intersection(ball_x.begin(), ball_x.end(), ball_y.begin(), ball_y.end(),
                          std::back_inserter(inter));
    long long bi = static_cast<long long>(inter.size());
    acc.const13.note(bi, x, y);
    ++acc.const13.scanned;

    SubsetPartition part = subset_partition(x, y);
    auto empty = [&](int k) { return part.subset_empty(k); };
    auto size_of = [&](int k) { return part.subsets[static_cast<std::size_t>(k)].size(); };

    {
        std::vector<std::uint32_t> u;
        for (int k = 5; k <= 18; ++k)
            for (const BinSeq& z : part.subsets[static_cast<std::size_t>(k)])
                u.push_back(static_cast<std::uint32_t>(z.rank()));
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        if (!(empty(1) && empty(2) && empty(3) && empty(4)))
            acc.base.fail(x, y, "some of B_1..B_4 nonempty");
        else if (u != inter)
            acc.base.fail(x, y, "B_5..B_18 do not cover B(x,y)");
    }

    ++acc.b11_excl.scanned;
    if (!empty(11) && !(empty(5) && empty(7) && empty(9)))
        acc.b11_excl.fail(x, y, "B_11 nonempty with B_5/B_7/B_9 alive");
    if (!empty(12) && !(empty(6) && empty(8) && empty(10)))
        acc.b11_excl.fail(x, y, "B_12 nonempty with B_6/B_8/B_10 alive");

    ++acc.b7b9.scanned;
    if (p.dh >= 5) {
        if (!empty(7) && !empty(9)) acc.b7b9.fail(x, y, "B_7 and B_9 both nonempty at d_H >= 5");
        if (!empty(8) && !empty(10)) acc.b7b9.fail(x, y, "B_8 and B_10 both nonempty at d_H >= 5");
    }

    ++acc.union3.scanned;
    if (!empty(7) && !empty(13) && union_size(part, {7, 13}) > 3)
        acc.union3.fail(x, y, "|B_7 u B_13| > 3");
    if (!empty(10) && !empty(16) && union_size(part, {10, 16}) > 3)
        acc.union3.fail(x, y, "|B_10 u B_16| > 3");
    if (!empty(8) && !empty(14) && union_size(part, {8, 14}) > 3)
        acc.union3.fail(x, y, "|B_8 u B_14| > 3");
    if (!empty(9) && !empty(15) && union_size(part, {9, 15}) > 3)
        acc.union3.fail(x, y, "|B_9 u B_15| > 3");

    ++acc.ifamily.scanned;
    if (!empty(5)) {
        if (empty(13) || empty(15) || empty(17))
            acc.ifamily.fail(x, y, "B_5 nonempty but B_13/B_15/B_17 not all nonempty");
        if (union_size(part, {5, 7, 9, 13, 15, 17}) > 8 ||
            union_size(part, {5, 9, 13, 15, 17}) > 7 ||
            union_size(part, {5, 7, 13, 15, 17}) > 7 ||
            union_size(part, {5, 13, 15, 17}) > 6)
            acc.ifamily.fail(x, y, "odd I-family union bound violated");
    }
    if (!empty(6)) {
        if (empty(14) || empty(16) || empty(18))
            acc.ifamily.fail(x, y, "B_6 nonempty but B_14/B_16/B_18 not all nonempty");
        if (union_size(part, {6, 8, 10, 14, 16, 18}) > 8 ||
            union_size(part, {6, 10, 14, 16, 18}) > 7 ||
            union_size(part, {6, 8, 14, 16, 18}) > 7 ||
            union_size(part, {6, 14, 16, 18}) > 6)
            acc.ifamily.fail(x, y, "even I-family union bound violated");
    }

    ++acc.b5b6_13.scanned;
    if (!empty(5) || !empty(6)) {
        if (bi > 13) acc.b5b6_13.fail(x, y, "B_5 u B_6 nonempty with |B| = " + std::to_string(bi));
        if (bi > 10) {
            BinSeq xt = x.slice(p.j.front(), p.j.back());
            BinSeq yt = y.slice(p.j.front(), p.j.back());
            if (!p2_budget_feasible(xt, 4, 0) || !p2_budget_feasible(yt, 4, 0))
                acc.b5b6_13.fail(x, y, "middles exceed the four-piece periodic budget at |B| > 10");
        }
    }

    ++acc.b11b12_12.scanned;
    if (empty(5) && empty(6) && (!empty(11) || !empty(12)) && bi > 12)
        acc.b11b12_12.fail(x, y, "B_11 u B_12 nonempty with |B| = " + std::to_string(bi));

    ++acc.le8.scanned;
    {
        bool all_5_12 = true;
        for (int k = 5; k <= 12; ++k) all_5_12 = all_5_12 && empty(k);
        if (all_5_12 && bi > 8) acc.le8.fail(x, y, "B_5..B_12 empty with |B| = " + std::to_string(bi));
        bool all_5_16 = all_5_12;
        for (int k = 13; k <= 16; ++k) all_5_16 = all_5_16 && empty(k);
        ++acc.le4.scanned;
        if (all_5_16 && bi > 4) acc.le4.fail(x, y, "B_5..B_16 empty with |B| = " + std::to_string(bi));
    }

    ++acc.setsize.scanned;
    auto rsx = run_starts(x), rsy = run_starts(y);
    for (int k = 5; k <= 16; ++k) {
        if (size_of(k) > 2)
            acc.setsize.fail(x, y, "|B_" + std::to_string(k) + "| = " + std::to_string(size_of(k)));
        if (canonical_pairs(part.epairs[static_cast<std::size_t>(k)], rsx, rsy).size() > 1)
            acc.setsize.fail(x, y, "|E_" + std::to_string(k) + "| > 1 up to run equivalence");
    }
    if (size_of(17) > (empty(5) ? 2u : 4u)) acc.setsize.fail(x, y, "|B_17| too large");
    if (size_of(18) > (empty(6) ? 2u : 4u)) acc.setsize.fail(x, y, "|B_18| too large");
}

}  // namespace

std::vector<VerifyReport> verify_c1_battery(int n, int jobs) {
    auto t0 = Clock::now();
    auto balls = all_ds_balls(n);
    auto buckets = family_buckets(Family::C1, n);
    auto locals = run_sharded<BatteryAcc>(jobs, [&](int w, int stride, BatteryAcc& acc) {
        for (std::size_t b = static_cast<std::size_t>(w); b < buckets.size(); b += static_cast<std::size_t>(stride)) {
            const auto& ranks = buckets[b];
            for (std::size_t i = 0; i < ranks.size(); ++i)
                for (std::size_t j = i + 1; j < ranks.size(); ++j)
                    check_battery_pair(BinSeq::from_rank(ranks[i], n), BinSeq::from_rank(ranks[j], n),
                                       balls[ranks[i]], balls[ranks[j]], acc);
        }
    });
    BatteryAcc acc;
    for (const auto& l : locals) acc.merge(l);

    std::vector<VerifyReport> out;
    out.push_back(report_violations("c1-base", n, n, "d_H >= 4, D/S empty, B_1..B_4 empty, cover", acc.base, t0));
    out.push_back(report_max("c1-const-13", n, n, "max |B(x,y)| over C1 pairs", acc.const13, 13, t0));
    out.push_back(report_violations("c1-b11-forces-empty", n, n, "B_11/B_12 exclusions", acc.b11_excl, t0));
    out.push_back(report_violations("c1-b7b9-exclusion", n, n, "d_H >= 5 exclusions", acc.b7b9, t0));
    out.push_back(report_violations("c1-union3", n, n, "two-set unions at most 3", acc.union3, t0));
    out.push_back(report_violations("c1-ifamily-unions", n, n, "I-family unions 8/7/7/6", acc.ifamily, t0));
    out.push_back(report_violations("c1-b5b6-le13", n, n, "B_5 u B_6 => |B| <= 13 + periodic budget", acc.b5b6_13, t0));
    out.push_back(report_violations("c1-b11b12-le12", n, n, "B_11 u B_12 => |B| <= 12", acc.b11b12_12, t0));
    out.push_back(report_violations("c1-b5-12-empty-le8", n, n, "B_5..B_12 empty => |B| <= 8", acc.le8, t0));
    out.push_back(report_violations("c1-b5-16-empty-le4", n, n, "B_5..B_16 empty => |B| <= 4", acc.le4, t0));
    out.push_back(report_violations("c1-set-sizes", n, n, "|B_k| and |E_k| caps", acc.setsize, t0));
    return out;
}

std::vector<VerifyReport> verify_structure(int n_lo, int n_hi, int jobs) {
    std::vector<VerifyReport> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto t0 = Clock::now();
        StructAcc acc = structural_sweep(n, jobs);
        out.push_back(report_violations("partition-union", n, n, "all qualifying pairs", acc.union_all, t0));
        out.push_back(report_violations("partition-union-c1", n, n, "C1 co-members only", acc.union_c1, t0));
        out.push_back(report_violations("table1-rows", n, n, "deletion pairs with total <= 2", acc.table1, t0));
        out.push_back(report_violations("e-closed-forms", n, n, "containment + determinate equality", acc.eforms, t0));
        auto battery = verify_c1_battery(n, jobs);
        out.insert(out.end(), battery.begin(), battery.end());
    }
    return out;
}

// ===== syndrome-delta sweeps =====

namespace {

long long eta_cell(PairKind k, int e, bool x_side) {
    long long v = 0;
    switch (k) {
        case PairKind::K11: v = 2LL * e + 1; break;
        case PairKind::K01: v = 1; break;
        case PairKind::K10: v = -1; break;
        case PairKind::K00: v = -(2LL * e + 1); break;
    }
    return x_side ? v : -v;
}

long long boundary_cell(PairKind k, int d, bool x_side, bool x_deletes_later) {
    if (x_side) {
        switch (k) {
            case PairKind::K00: return 0;
            case PairKind::K01: return x_deletes_later ? 0 : 1;
            case PairKind::K10: return x_deletes_later ? -1 : 0;
            case PairKind::K11: return 2LL * d + 1;
        }
    } else {
        switch (k) {
            case PairKind::K00: return 0;
            case PairKind::K01: return x_deletes_later ? -1 : 0;
            case PairKind::K10: return x_deletes_later ? 0 : 1;
            case PairKind::K11: return -(2LL * d + 1);
        }
    }
    return 0;
}

void check_quadruple(const BinSeq& x, const BinSeq& y, int dx, int ex, int dy, int ey,
                     long long direct_delta, Violations& acc) {
    ++acc.scanned;
    DeltaBreakdown br = delta_psi_decomposition(x, y, dx, ex, dy, ey);
    auto tag = [&](const char* what) {
        return std::string(what) + " at (dx=" + std::to_string(dx) + ",ex=" + std::to_string(ex) +
               ",dy=" + std::to_string(dy) + ",ey=" + std::to_string(ey) + ")";
    };
    if (br.total != direct_delta) {
        acc.fail(x, y, tag("decomposition total differs from direct syndrome delta"));
        return;
    }
    const bool x_later = dx > dy;
    if (ex > 0) {
        EffectClass c = classify_substitution_effect(x, ex);
        if (br.eta_x != eta_cell(c.kind, ex, true)) acc.fail(x, y, tag("eta_x off its table cell"));
    }
    if (ey > 0) {
        EffectClass c = classify_substitution_effect(y, ey);
        if (br.eta_y != eta_cell(c.kind, ey, false)) acc.fail(x, y, tag("eta_y off its table cell"));
    }
    EffectClass cx = classify_deletion_effect(ex == 0 ? x : x.flipped(ex), dx);
    if (br.boundary_x != boundary_cell(cx.kind, dx, true, x_later))
        acc.fail(x, y, tag("x boundary off its table cell"));
    EffectClass cy = classify_deletion_effect(ey == 0 ? y : y.flipped(ey), dy);
    if (br.boundary_y != boundary_cell(cy.kind, dy, false, x_later))
        acc.fail(x, y, tag("y boundary off its table cell"));
}

}  // namespace

VerifyReport verify_delta(int n_exhaustive, int n_sampled, std::uint64_t samples,
                          std::uint64_t seed, int jobs) {
    auto t0 = Clock::now();
    Violations total;

    for (int n = 2; n <= n_exhaustive; ++n) {
        std::vector<long long> vt1psi(std::size_t{1} << n);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
            vt1psi[v] = static_cast<long long>(vt_syndrome(differential(BinSeq::from_rank(v, n)), 1));
        auto locals = run_sharded<Violations>(jobs, [&](int w, int stride, Violations& acc) {
            for (std::uint64_t vx = static_cast<std::uint64_t>(w); vx < (std::uint64_t{1} << n); vx += static_cast<std::uint64_t>(stride)) {
                BinSeq x = BinSeq::from_rank(vx, n);
                for (std::uint64_t vy = 0; vy < (std::uint64_t{1} << n); ++vy) {
                    BinSeq y = BinSeq::from_rank(vy, n);
                    long long direct = vt1psi[vx] - vt1psi[vy];
                    for (int dx = 1; dx <= n; ++dx) {
                        BinSeq u = x.delete_at(dx);
                        for (int dy = 1; dy <= n; ++dy) {
                            if (dx == dy) continue;
                            BinSeq v = y.delete_at(dy);
                            int dh = hamming(u, v);
                            if (dh > 2) continue;
                            std::vector<BinSeq> mids;
                            if (dh == 0) mids = {u};
                            else if (dh == 1) mids = {u, v};
                            else {
                                DiffProfile q = diff_profile(u, v);
                                mids = {u.flipped(q.j[0]), u.flipped(q.j[1])};
                            }
                            for (const BinSeq& z : mids) {
                                int ex = 0, ey = 0;
                                for (int q = 1; q <= n - 1; ++q) {
                                    if (z.get(q) != u.get(q)) ex = q < dx ? q : q + 1;
                                    if (z.get(q) != v.get(q)) ey = q < dy ? q : q + 1;
                                }
                                check_quadruple(x, y, dx, ex, dy, ey, direct, acc);
                            }
                        }
                    }
                }
            }
        });
        for (const auto& l : locals) total.merge(l);
    }

    // sampled regime at one larger length
    if (samples > 0) {
        auto locals = run_sharded<Violations>(jobs, [&](int w, int stride, Violations& acc) {
            for (std::uint64_t s = static_cast<std::uint64_t>(w); s < samples; s += static_cast<std::uint64_t>(stride)) {
                std::mt19937_64 rng(splitmix64(seed ^ (s * 0x9e3779b97f4a7c15ULL)));
                const int n = n_sampled;
                std::uint64_t vx = rng() & ((std::uint64_t{1} << n) - 1);
                BinSeq x = BinSeq::from_rank(vx, n);
                int dx = static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1;
                int ex = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));  // 0 means none
                if (ex == dx) ex = 0;
                BinSeq z = apply_error(x, {dx, ex == 0 ? std::optional<int>{} : std::optional<int>{ex}});
                int dy = static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1;
                if (dy == dx) continue;  // decomposition needs distinct deletion indices
                int bit = static_cast<int>(rng() & 1);
                BinSeq w2 = z.insert_at(dy, bit);
                int ey = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
                if (ey == dy) ey = 0;
                BinSeq y = ey == 0 ? w2 : w2.flipped(ey);
                // y(dy, ey) == z by construction
                long long direct = static_cast<long long>(vt_syndrome(differential(x), 1)) -
                                   static_cast<long long>(vt_syndrome(differential(y), 1));
                check_quadruple(x, y, dx, ex, dy, ey, direct, acc);
            }
        });
        for (const auto& l : locals) total.merge(l);
    }

    return report_violations("delta-identity", 2, std::max(n_exhaustive, n_sampled),
                             "exhaustive <= " + std::to_string(n_exhaustive) + ", " +
                                 std::to_string(samples) + " samples at n=" + std::to_string(n_sampled) +
                                 ", seed=" + std::to_string(seed),
                             total, t0);
}

// ===== counting =====

std::vector<VerifyReport> verify_counts(int r_lo, int r_hi, int c14_lo, int c14_hi,
                                        int cl_lo, int cl_hi) {
    std::vector<VerifyReport> out;
    for (int n = r_lo; n <= r_hi; ++n) {
        auto t0 = Clock::now();
        CodeSpec spec = CodeSpec::make(Family::Rconstrained, n);
        std::uint64_t count = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
            count += structural_ok(BinSeq::from_rank(v, n), spec) ? 1 : 0;
        VerifyReport r;
        r.check_id = "r-size";
        r.n_lo = r.n_hi = n;
        r.params = "t'=2 t=" + std::to_string(spec.resolved_t());
        r.pairs_scanned = std::uint64_t{1} << n;
        r.max_observed = static_cast<long long>(count);
        r.bound = static_cast<long long>(std::uint64_t{1} << (n - 1));
        r.at_least = true;
        r.passed = r.max_observed >= r.bound;
        r.wall_time_s = elapsed(t0);
        out.push_back(std::move(r));
    }
    auto redundancy_report = [](Family f, int lo, int hi, long long mult_num, const char* id) {
        // redundancy <= log2(mult_num * n^k) checked as size * multiplier >= 2^n
        auto t0 = Clock::now();
        Violations acc;
        for (int n = lo; n <= hi; ++n) {
            ++acc.scanned;
            RedundancyRow row = best_residues(f, n);
            long long mult = mult_num;
            for (int i = 0; i < (f == Family::CL ? 3 : 1); ++i) mult *= n;
            if (static_cast<unsigned long long>(row.code_size) * static_cast<unsigned long long>(mult) <
                (std::uint64_t{1} << n))
                acc.fail(BinSeq::zeros(n), BinSeq::zeros(n),
                         "n=" + std::to_string(n) + " best size " + std::to_string(row.code_size));
        }
        return report_violations(id, lo, hi, "pigeonhole redundancy bound", acc, t0);
    };
    out.push_back(redundancy_report(Family::C1, c14_lo, c14_hi, 8, "redundancy-c14"));
    out.push_back(redundancy_report(Family::CL, cl_lo, cl_hi, 16, "redundancy-cl"));
    return out;
}

// ===== observations =====

VerifyReport verify_observations(int n_lo, int n_hi) {
    auto t0 = Clock::now();
    Violations acc;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            BinSeq x = BinSeq::from_rank(v, n);
            BinSeq psi = differential(x);
            ++acc.scanned;
            for (int d = 1; d <= n; ++d) {
                int delta = classify_deletion_effect(x, d).delta_weight;
                if (delta != 0 && delta != 2)
                    acc.fail(x, x, "deletion at " + std::to_string(d) + " moved psi weight by " + std::to_string(-delta));
            }
            for (int e = 1; e <= n; ++e) {
                int delta = classify_substitution_effect(x, e).delta_weight;
                if (delta != -2 && delta != 0 && delta != 2)
                    acc.fail(x, x, "substitution at " + std::to_string(e) + " moved psi weight by " + std::to_string(-delta));
                BinSeq after = differential(x.flipped(e));
                for (int i = 1; i <= n + 1; ++i) {
                    bool should_flip = i == e || i == e + 1;
                    if ((after.get(i) != psi.get(i)) != should_flip)
                        acc.fail(x, x, "substitution at " + std::to_string(e) + " touched psi position " + std::to_string(i));
                }
            }
        }
    }
    return report_violations("observations", n_lo, n_hi, "psi weight moves and pair flips", acc, t0);
}

// ===== P-bounded =====

VerifyReport verify_pbounded(long long P, int n_lo, int n_hi, int jobs) {
    auto t0 = Clock::now();
    Violations total;
    for (int n = n_lo; n <= n_hi; ++n) {
        CodeSpec spec = CodeSpec::make(Family::CDSP, n);
        spec.P = P;
        std::map<std::vector<long long>, std::vector<std::uint32_t>> groups;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
            groups[residue_signature(BinSeq::from_rank(v, n), spec)].push_back(static_cast<std::uint32_t>(v));
        std::vector<std::vector<std::uint32_t>> buckets;
        for (auto& [sig, ranks] : groups) buckets.push_back(std::move(ranks));
        auto locals = run_sharded<Violations>(jobs, [&](int w, int stride, Violations& acc) {
            for (std::size_t b = static_cast<std::size_t>(w); b < buckets.size(); b += static_cast<std::size_t>(stride)) {
                const auto& ranks = buckets[b];
                for (std::size_t i = 0; i < ranks.size(); ++i)
                    for (std::size_t j = i + 1; j < ranks.size(); ++j) {
                        BinSeq x = BinSeq::from_rank(ranks[i], n);
                        BinSeq y = BinSeq::from_rank(ranks[j], n);
                        DiffProfile p = diff_profile(x, y);
                        if (p.j.back() - p.j.front() + 1 > P) continue;
                        ++acc.scanned;
                        if (!is_p_bounded_pair_safe(x, y, P))
                            acc.fail(x, y, "same-code pair inside the window with nonempty B(x,y)");
                    }
            }
        });
        for (const auto& l : locals) total.merge(l);
    }
    return report_violations("p-bounded", n_lo, n_hi, "P=" + std::to_string(P), total, t0);
}

// ===== reconstruction =====

VerifyReport verify_reconstruction(Family family, int N, int n_lo, int n_hi,
                                   int trials, std::uint64_t seed, int jobs,
                                   int exhaustive_ball_cap) {
    auto t0 = Clock::now();
    Violations total;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto locals = run_sharded<Violations>(jobs, [&](int w, int stride, Violations& acc) {
            for (std::uint64_t v = static_cast<std::uint64_t>(w); v < (std::uint64_t{1} << n); v += static_cast<std::uint64_t>(stride)) {
                BinSeq x = BinSeq::from_rank(v, n);
                CodeSpec spec = CodeSpec::make(family, n);
                if (!structural_ok(x, spec)) continue;
                spec = spec_for_member(family, x);
                BallView ball = ds_ball(x);
                if (static_cast<int>(ball.size()) < N) continue;

                auto try_reads = [&](const std::vector<BinSeq>& reads) {
                    ++acc.scanned;
                    ReadSet rs;
                    rs.n = n;
                    rs.claimed_N = N;
                    rs.reads = reads;
                    std::sort(rs.reads.begin(), rs.reads.end());
                    try {
                        if (decode(rs, spec, N) != x) acc.fail(x, x, "decoded to a different codeword");
                    } catch (const std::exception& ex) {
                        acc.fail(x, x, std::string("decode failed: ") + ex.what());
                    }
                };

                if (static_cast<int>(ball.size()) <= exhaustive_ball_cap) {
                    // every N-subset of the ball
                    const int m = static_cast<int>(ball.size());
                    std::vector<int> idx(static_cast<std::size_t>(N));
                    for (int i = 0; i < N; ++i) idx[static_cast<std::size_t>(i)] = i;
                    while (true) {
                        std::vector<BinSeq> reads;
                        reads.reserve(static_cast<std::size_t>(N));
                        for (int i : idx) reads.push_back(ball.elements[static_cast<std::size_t>(i)]);
                        try_reads(reads);
                        int i = N - 1;
                        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - N + i) --i;
                        if (i < 0) break;
                        ++idx[static_cast<std::size_t>(i)];
                        for (int k = i + 1; k < N; ++k) idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
                    }
                } else {
                    for (int trial = 0; trial < trials; ++trial) {
                        std::uint64_t s = splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(n) << 40) ^ (v << 8) ^ static_cast<std::uint64_t>(trial)));
                        try_reads(sample_reads(x, N, s).reads);
                    }
                }
            }
        });
        for (const auto& l : locals) total.merge(l);
    }
    return report_violations("reconstruction-" + family_name(family), n_lo, n_hi,
                             "N=" + std::to_string(N) + " trials=" + std::to_string(trials) +
                                 " seed=" + std::to_string(seed),
                             total, t0);
}

}  // namespace recon
