#include "recon/seqcore.hpp"

#include <algorithm>
#include <bit>

namespace recon {

namespace {

void check_len(int n) {
    if (n < 0 || n > BinSeq::max_len)
        throw TooLarge("sequence length " + std::to_string(n) + " outside [0," + std::to_string(BinSeq::max_len) + "]");
}

std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

BinSeq BinSeq::zeros(int n) {
    check_len(n);
    BinSeq s;
    s.len_ = n;
    return s;
}

BinSeq BinSeq::from_string(std::string_view text) {
    check_len(static_cast<int>(text.size()));
    BinSeq s;
    s.len_ = static_cast<int>(text.size());
    for (int i = 0; i < s.len_; ++i) {
        char c = text[static_cast<std::size_t>(i)];
        if (c != '0' && c != '1') throw ParamOutOfRange(std::string("bad symbol '") + c + "' in bit string");
        if (c == '1') s.word_ |= std::uint64_t{1} << i;
    }
    return s;
}

BinSeq BinSeq::from_rank(std::uint64_t v, int n) {
    check_len(n);
    if (n < 64 && (v >> n) != 0) throw ParamOutOfRange("rank does not fit in " + std::to_string(n) + " bits");
    BinSeq s;
    s.len_ = n;
    for (int i = 0; i < n; ++i)
        if ((v >> (n - 1 - i)) & 1u) s.word_ |= std::uint64_t{1} << i;
    return s;
}

std::uint64_t BinSeq::rank() const {
    std::uint64_t v = 0;
    for (int i = 0; i < len_; ++i) v = (v << 1) | ((word_ >> i) & 1u);
    return v;
}

std::string BinSeq::str() const {
    std::string out(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
        if ((word_ >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

BinSeq BinSeq::slice(int i, int j) const {
    if (i > j) return BinSeq::zeros(0);
    if (i < 1 || j > len_) throw IndexOutOfRange("slice [" + std::to_string(i) + "," + std::to_string(j) + "] outside [1," + std::to_string(len_) + "]");
    BinSeq s;
    s.len_ = j - i + 1;
    s.word_ = (word_ >> (i - 1)) & low_mask(s.len_);
    return s;
}

BinSeq BinSeq::concat(const BinSeq& other) const {
    check_len(len_ + other.len_);
    BinSeq s;
    s.len_ = len_ + other.len_;
    s.word_ = word_;
    if (other.len_ > 0) s.word_ |= other.word_ << len_;
    return s;
}

BinSeq BinSeq::delete_at(int d) const {
    check_index(d);
    BinSeq s;
    s.len_ = len_ - 1;
    std::uint64_t lo = word_ & low_mask(d - 1);
    std::uint64_t hi = (d < 64) ? (word_ >> d) : 0;
    s.word_ = lo | (hi << (d - 1));
    return s;
}

BinSeq BinSeq::flipped(int e) const {
    check_index(e);
    BinSeq s = *this;
    s.word_ ^= std::uint64_t{1} << (e - 1);
    return s;
}

BinSeq BinSeq::insert_at(int p, int bit) const {
    if (p < 1 || p > len_ + 1) throw IndexOutOfRange("insert position " + std::to_string(p) + " outside [1," + std::to_string(len_ + 1) + "]");
    check_len(len_ + 1);
    BinSeq s;
    s.len_ = len_ + 1;
    std::uint64_t lo = word_ & low_mask(p - 1);
    std::uint64_t hi = (word_ >> (p - 1)) << p;
    s.word_ = lo | hi | (static_cast<std::uint64_t>(bit & 1) << (p - 1));
    return s;
}

int BinSeq::weight() const { return std::popcount(word_); }

// ===== free operations =====

BinSeq complement(const BinSeq& x) {
    BinSeq s = x;
    for (int i = 1; i <= x.size(); ++i) s.set(i, 1 - x.get(i));
    return s;
}

BinSeq reverse(const BinSeq& x) {
    BinSeq s = BinSeq::zeros(x.size());
    for (int i = 1; i <= x.size(); ++i) s.set(i, x.get(x.size() + 1 - i));
    return s;
}

int hamming(const BinSeq& x, const BinSeq& y) {
    if (x.size() != y.size())
        throw LengthMismatch("hamming: lengths " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    int d = 0;
    for (int i = 1; i <= x.size(); ++i) d += x.get(i) != y.get(i);
    return d;
}

RunList runs(const BinSeq& x) {
    RunList r;
    if (x.size() == 0) return r;
    int lo = 1;
    for (int i = 2; i <= x.size(); ++i) {
        if (x.get(i) != x.get(i - 1)) {
            r.intervals.emplace_back(lo, i - 1);
            lo = i;
        }
    }
    r.intervals.emplace_back(lo, x.size());
    r.count = static_cast<int>(r.intervals.size());
    return r;
}

int period(const BinSeq& x) {
    const int n = x.size();
    if (n < 1) throw ParamOutOfRange("period: empty sequence");
    for (int t = 1; t < n; ++t) {
        bool ok = true;
        for (int i = 1; i + t <= n; ++i)
            if (x.get(i) != x.get(i + t)) { ok = false; break; }
        if (ok) return t;
    }
    return n;
}

std::uint64_t vt_syndrome(const BinSeq& x, int k) {
    if (k < 0) throw ParamOutOfRange("vt_syndrome: negative order");
    if (k == 0) return static_cast<std::uint64_t>(x.weight());
    std::uint64_t acc = 0, coeff = 0;
    for (int i = 1; i <= x.size(); ++i) {
        std::uint64_t p = 1;
        for (int e = 0; e < k - 1; ++e) p *= static_cast<std::uint64_t>(i);
        coeff += p;  // sum_{j<=i} j^{k-1}
        if (x.get(i)) acc += coeff;
    }
    return acc;
}

BinSeq differential(const BinSeq& x) {
    const int n = x.size();
    if (n + 1 > BinSeq::max_len) throw TooLarge("differential: length " + std::to_string(n) + " leaves no room for the sentinel position");
    BinSeq psi = BinSeq::zeros(n + 1);
    for (int i = 1; i <= n + 1; ++i) {
        int prev = (i - 1 >= 1 && i - 1 <= n) ? x.get(i - 1) : 0;
        int cur = (i >= 1 && i <= n) ? x.get(i) : 0;
        psi.set(i, prev ^ cur);
    }
    return psi;
}

BinSeq apply_error(const BinSeq& x, const ErrorOp& op) {
    const int n = x.size();
    if (op.del && (*op.del < 1 || *op.del > n)) throw IndexOutOfRange("apply_error: deletion index " + std::to_string(*op.del));
    if (op.sub && (*op.sub < 1 || *op.sub > n)) throw IndexOutOfRange("apply_error: substitution index " + std::to_string(*op.sub));
    if (op.del && op.sub && *op.del == *op.sub)
        throw DegenerateOp("apply_error: d = e = " + std::to_string(*op.del));
    BinSeq s = x;
    if (op.sub) s = s.flipped(*op.sub);
    if (op.del) s = s.delete_at(*op.del);
    return s;
}

DiffProfile diff_profile(const BinSeq& x, const BinSeq& y) {
    if (x.size() != y.size())
        throw LengthMismatch("diff_profile: lengths " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    DiffProfile p;
    for (int i = 1; i <= x.size(); ++i)
        if (x.get(i) != y.get(i)) p.j.push_back(i);
    if (p.j.empty()) throw IdenticalInputs("diff_profile: sequences are equal");
    p.dh = static_cast<int>(p.j.size());
    p.prefix_len = p.j.front() - 1;
    p.suffix_len = x.size() - p.j.back();
    return p;
}

int max_periodic_run(const BinSeq& x, int tmax) {
    if (tmax < 1) throw ParamOutOfRange("max_periodic_run: tmax must be positive");
    const int n = x.size();
    if (n == 0) return 0;
    int best = std::min(n, tmax);  // any substring of length <= tmax qualifies
    for (int p = 1; p <= std::min(tmax, n); ++p) {
        int streak = 0;
        for (int i = 1; i + p <= n; ++i) {
            streak = (x.get(i) == x.get(i + p)) ? streak + 1 : 0;
            best = std::max(best, streak + p);
        }
    }
    return best;
}

bool is_strong_locally_balanced(const BinSeq& x, int l, long long eps_num, long long eps_den) {
    if (l < 1) throw ParamOutOfRange("is_strong_locally_balanced: l must be positive");
    if (eps_den <= 0 || eps_num < 0 || 2 * eps_num > eps_den)
        throw ParamOutOfRange("is_strong_locally_balanced: eps must lie in [0, 1/2]");
    const int n = x.size();
    std::vector<int> pre(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pre[static_cast<std::size_t>(i)] = pre[static_cast<std::size_t>(i - 1)] + x.get(i);
    // (1/2 - eps) l' <= w <= (1/2 + eps) l'  with eps = p/q, cleared to integers:
    // l'(q - 2p) <= 2qw <= l'(q + 2p)
    for (int lp = l; lp <= n; ++lp) {
        for (int i = 1; i + lp - 1 <= n; ++i) {
            long long w = pre[static_cast<std::size_t>(i + lp - 1)] - pre[static_cast<std::size_t>(i - 1)];
            long long lo = static_cast<long long>(lp) * (eps_den - 2 * eps_num);
            long long hi = static_cast<long long>(lp) * (eps_den + 2 * eps_num);
            long long mid = 2 * eps_den * w;
            if (mid < lo || mid > hi) return false;
        }
    }
    return true;
}

}  // namespace recon
