#include "recon/reconstruct.hpp"

#include <algorithm>
#include <random>

#include "recon/balls.hpp"

namespace recon {

namespace {

// Bounded uniform draw by rejection, stable across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % m;
}

}  // namespace

BinSeq channel_emit(const BinSeq& x, std::uint64_t seed) {
    const int n = x.size();
    if (n < 2) throw ParamOutOfRange("channel_emit: need length >= 2");
    std::mt19937_64 rng(seed);
    int d = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))) + 1;
    ErrorOp op;
    op.del = d;
    if (uniform_below(rng, static_cast<std::uint64_t>(n)) != 0) {  // pure deletion with probability 1/n
        int e = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1))) + 1;
        if (e >= d) ++e;
        op.sub = e;
    }
    return apply_error(x, op);
}

ReadSet sample_reads(const BinSeq& x, int N, std::uint64_t seed) {
    if (N < 1) throw ParamOutOfRange("sample_reads: N must be positive");
    BallView ball = ds_ball(x);
    if (static_cast<int>(ball.size()) < N)
        throw BallTooSmall("sample_reads: |B(x)|=" + std::to_string(ball.size()) + " < N=" + std::to_string(N));
    std::mt19937_64 rng(seed);
    std::vector<BinSeq> pool = ball.elements;
    for (int i = 0; i < N; ++i) {
        auto pick = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(pool.size() - static_cast<std::size_t>(i))));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick)]);
    }
    ReadSet rs;
    rs.n = x.size();
    rs.claimed_N = N;
    rs.reads.assign(pool.begin(), pool.begin() + N);
    std::sort(rs.reads.begin(), rs.reads.end());
    return rs;
}

std::vector<BinSeq> inverse_ball(const BinSeq& read) {
    std::vector<BinSeq> out;
    for (int p = 1; p <= read.size() + 1; ++p) {
        for (int bit = 0; bit <= 1; ++bit) {
            BinSeq w = read.insert_at(p, bit);
            out.push_back(w);
            for (int e = 1; e <= w.size(); ++e) out.push_back(w.flipped(e));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<BinSeq> consistent_codewords(const std::vector<BinSeq>& reads, const CodeSpec& spec) {
    std::vector<BinSeq> hits;
    if (reads.empty()) return hits;
    for (const BinSeq& w : inverse_ball(reads.front())) {
        if (w.size() != spec.n || !member(w, spec)) continue;
        BallView ball = ds_ball(w);
        bool all = true;
        for (const BinSeq& r : reads)
            if (!ball.contains(r)) { all = false; break; }
        if (all) hits.push_back(w);
    }
    return hits;
}

}  // namespace

BinSeq decode(const ReadSet& rs, const CodeSpec& spec, int N) {
    if (static_cast<int>(rs.reads.size()) != N)
        throw ParamOutOfRange("decode: |reads|=" + std::to_string(rs.reads.size()) + " != N=" + std::to_string(N));
    for (const BinSeq& r : rs.reads)
        if (r.size() != spec.n - 1)
            throw LengthMismatch("decode: read length " + std::to_string(r.size()) + " != n-1");
    std::vector<BinSeq> hits = consistent_codewords(rs.reads, spec);
    if (hits.empty()) throw NoCandidate("decode: no codeword explains all reads");
    if (hits.size() > 1) throw Ambiguous("decode: " + std::to_string(hits.size()) + " codewords explain all reads");
    return hits.front();
}

std::vector<BinSeq> list_decode_single(const BinSeq& read, const CodeSpec& spec) {
    std::vector<BinSeq> hits;
    for (const BinSeq& w : inverse_ball(read)) {
        if (w.size() != spec.n || !member(w, spec)) continue;
        if (ds_ball(w).contains(read)) hits.push_back(w);
    }
    return hits;
}

}  // namespace recon
