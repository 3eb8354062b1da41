#include "recon/codefamilies.hpp"

#include "recon/balls.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

namespace recon {

std::string family_name(Family f) {
    switch (f) {
        case Family::VT: return "vt";
        case Family::C1: return "c1";
        case Family::CL: return "cl";
        case Family::Rconstrained: return "rconstrained";
        case Family::LocBal: return "locbal";
        case Family::CDSP: return "cdsp";
        case Family::C14: return "c14";
        case Family::C11: return "c11";
        case Family::C9: return "c9";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "vt") return Family::VT;
    if (name == "c1") return Family::C1;
    if (name == "cl" || name == "c5") return Family::CL;
    if (name == "rconstrained" || name == "r") return Family::Rconstrained;
    if (name == "locbal") return Family::LocBal;
    if (name == "cdsp") return Family::CDSP;
    if (name == "c14") return Family::C14;
    if (name == "c11") return Family::C11;
    if (name == "c9") return Family::C9;
    throw ParamOutOfRange("unknown family '" + name + "'");
}

namespace {

int ceil_log2(int n) {
    if (n <= 1) return 0;
    return std::bit_width(static_cast<unsigned>(n - 1));
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

CodeSpec CodeSpec::make(Family f, int n) {
    CodeSpec s;
    s.family = f;
    s.n = n;
    return s;
}

int CodeSpec::resolved_t() const { return t > 0 ? t : ceil_log2(n) + 3; }

long long CodeSpec::resolved_l() const {
    if (l > 0) return l;
    return static_cast<long long>(std::ceil(1296.0 * std::log2(static_cast<double>(n))));
}

long long CodeSpec::resolved_P() const {
    if (P > 0) return P;
    if (family == Family::C9) return 4 * resolved_l();
    return 6 * static_cast<long long>(resolved_t()) + 4;
}

void CodeSpec::validate() const {
    if (n < 1 || n > BinSeq::max_len) throw ParamOutOfRange("CodeSpec: n outside [1," + std::to_string(BinSeq::max_len) + "]");
    auto in = [](long long v, long long lo, long long hi, const char* what) {
        if (v < lo || v > hi) throw ParamOutOfRange(std::string("CodeSpec: ") + what + "=" + std::to_string(v) + " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    };
    const long long nn = n;
    switch (family) {
        case Family::VT:
            in(s1, 0, 2 * nn - 1, "s1");
            break;
        case Family::C1:
        case Family::C14:
            in(s0, 0, 3, "s0");
            in(s1, 0, 2 * nn - 1, "s1");
            break;
        case Family::CL:
            in(s0, 0, 3, "s0");
            in(s1, 0, 2 * nn - 1, "s1");
            in(s2, 0, 2 * nn * nn - 1, "s2");
            break;
        case Family::Rconstrained:
            if (t_prime < 1) throw ParamOutOfRange("CodeSpec: t' must be positive");
            if (resolved_t() < 1) throw ParamOutOfRange("CodeSpec: t must be positive");
            break;
        case Family::LocBal:
            if (resolved_l() < 1) throw ParamOutOfRange("CodeSpec: l must be positive");
            if (eps_den <= 0 || eps_num < 0 || 2 * eps_num > eps_den) throw ParamOutOfRange("CodeSpec: eps outside [0, 1/2]");
            break;
        case Family::CDSP:
        case Family::C11:
        case Family::C9: {
            long long p = resolved_P();
            if (p < 1) throw ParamOutOfRange("CodeSpec: P must be positive");
            for (int k = 1; k <= 3; ++k) {
                long long m = 3 * ipow(2 * p, k);
                in(g[static_cast<std::size_t>(k - 1)], 0, m - 1, "g_k");
                in(gp[static_cast<std::size_t>(k - 1)], 0, m - 1, "g_k'");
            }
            if (family == Family::C11) {
                in(s0, 0, 3, "s0");
                in(s1, 0, 2 * nn - 1, "s1");
            } else if (family == Family::C9) {
                in(s0, 0, 3, "s0");
                in(s1, 0, 3 * nn, "s1");
                in(h0, 0, 6, "h0");
                in(h1, 0, 6 * (nn + 1), "h1");
                if (eps_den <= 0 || eps_num < 0 || 2 * eps_num > eps_den) throw ParamOutOfRange("CodeSpec: eps outside [0, 1/2]");
            }
            break;
        }
    }
}

long long block_pair_syndrome(const BinSeq& x, long long P, int k, int pair_offset) {
    if (P < 1) throw ParamOutOfRange("block_pair_syndrome: P must be positive");
    if (k < 1 || k > 3) throw ParamOutOfRange("block_pair_syndrome: k outside [1,3]");
    const int n = x.size();
    const long long nblocks = n / P + 1;  // final block may be empty
    auto block = [&](long long b) -> BinSeq {
        long long lo = (b - 1) * P + 1;
        if (b > nblocks || lo > n) return BinSeq::zeros(0);
        long long hi = std::min<long long>(b * P, n);
        return x.slice(static_cast<int>(lo), static_cast<int>(hi));
    };
    long long mod = 3 * ipow(2 * P, k);
    long long acc = 0;
    for (long long i = 1;; ++i) {
        long long b1 = pair_offset == 0 ? 2 * i - 1 : 2 * i;
        long long b2 = b1 + 1;
        if (b1 > nblocks) break;
        BinSeq pair = block(b1).concat(block(b2));
        acc = (acc + static_cast<long long>(vt_syndrome(pair, k))) % mod;
    }
    return acc;
}

bool structural_ok(const BinSeq& x, const CodeSpec& spec) {
    switch (spec.family) {
        case Family::VT:
        case Family::C1:
        case Family::C14:
        case Family::CL:
        case Family::CDSP:
            return true;
        case Family::Rconstrained:
            return max_periodic_run(x, spec.t_prime) <= spec.resolved_t();
        case Family::LocBal: {
            int l = static_cast<int>(std::min<long long>(spec.resolved_l(), BinSeq::max_len + 1));
            return is_strong_locally_balanced(x, l, spec.eps_num, spec.eps_den) &&
                   is_strong_locally_balanced(differential(x), l, spec.eps_num, spec.eps_den);
        }
        case Family::C11:
            return max_periodic_run(x, 2) <= spec.resolved_t();
        case Family::C9: {
            if (max_periodic_run(x, 2) > spec.resolved_t()) return false;
            int l = static_cast<int>(std::min<long long>(spec.resolved_l(), BinSeq::max_len + 1));
            return is_strong_locally_balanced(x, l, spec.eps_num, spec.eps_den) &&
                   is_strong_locally_balanced(differential(x), l, spec.eps_num, spec.eps_den);
        }
    }
    return false;
}

std::vector<long long> residue_signature(const BinSeq& x, const CodeSpec& spec) {
    const long long nn = spec.n;
    std::vector<long long> sig;
    auto vt1 = static_cast<long long>(vt_syndrome(x, 1));
    switch (spec.family) {
        case Family::VT:
            sig = {vt1 % (2 * nn)};
            break;
        case Family::C1:
        case Family::C14:
            sig = {x.weight() % 4, vt1 % (2 * nn)};
            break;
        case Family::CL:
            sig = {x.weight() % 4, vt1 % (2 * nn), static_cast<long long>(vt_syndrome(x, 2)) % (2 * nn * nn)};
            break;
        case Family::Rconstrained:
        case Family::LocBal:
            break;
        case Family::CDSP: {
            long long p = spec.resolved_P();
            for (int k = 1; k <= 3; ++k) sig.push_back(block_pair_syndrome(x, p, k, 0));
            for (int k = 1; k <= 3; ++k) sig.push_back(block_pair_syndrome(x, p, k, 1));
            break;
        }
        case Family::C11: {
            sig = {x.weight() % 4, vt1 % (2 * nn)};
            long long p = spec.resolved_P();
            for (int k = 1; k <= 3; ++k) sig.push_back(block_pair_syndrome(x, p, k, 0));
            for (int k = 1; k <= 3; ++k) sig.push_back(block_pair_syndrome(x, p, k, 1));
            break;
        }
        case Family::C9: {
            BinSeq psi = differential(x);
            sig = {x.weight() % 4, vt1 % (3 * nn + 1),
                   psi.weight() % 7,
                   static_cast<long long>(vt_syndrome(psi, 1)) % (6 * (nn + 1) + 1)};
            long long p = spec.resolved_P();
            for (int k = 1; k <= 3; ++k) sig.push_back(block_pair_syndrome(x, p, k, 0));
            for (int k = 1; k <= 3; ++k) sig.push_back(block_pair_syndrome(x, p, k, 1));
            break;
        }
    }
    return sig;
}

namespace {

std::vector<long long> spec_signature(const CodeSpec& spec) {
    switch (spec.family) {
        case Family::VT: return {spec.s1};
        case Family::C1:
        case Family::C14: return {spec.s0, spec.s1};
        case Family::CL: return {spec.s0, spec.s1, spec.s2};
        case Family::Rconstrained:
        case Family::LocBal: return {};
        case Family::CDSP: {
            std::vector<long long> sig;
            for (auto v : spec.g) sig.push_back(v);
            for (auto v : spec.gp) sig.push_back(v);
            return sig;
        }
        case Family::C11: {
            std::vector<long long> sig{spec.s0, spec.s1};
            for (auto v : spec.g) sig.push_back(v);
            for (auto v : spec.gp) sig.push_back(v);
            return sig;
        }
        case Family::C9: {
            std::vector<long long> sig{spec.s0, spec.s1, spec.h0, spec.h1};
            for (auto v : spec.g) sig.push_back(v);
            for (auto v : spec.gp) sig.push_back(v);
            return sig;
        }
    }
    return {};
}

}  // namespace

bool member(const BinSeq& x, const CodeSpec& spec) {
    spec.validate();
    if (x.size() != spec.n)
        throw LengthMismatch("member: sequence length " + std::to_string(x.size()) + " vs spec n=" + std::to_string(spec.n));
    return structural_ok(x, spec) && residue_signature(x, spec) == spec_signature(spec);
}

int exhaustive_cap() {
    if (const char* env = std::getenv("RECON_DS_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= BinSeq::max_len) return v;
    }
    return 24;
}

std::vector<BinSeq> enumerate_code(const CodeSpec& spec) {
    spec.validate();
    if (spec.n > exhaustive_cap())
        throw TooLarge("enumerate_code: n=" + std::to_string(spec.n) + " beyond exhaustive cap " + std::to_string(exhaustive_cap()));
    std::vector<BinSeq> out;
    const auto sig = spec_signature(spec);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << spec.n); ++v) {
        BinSeq x = BinSeq::from_rank(v, spec.n);
        if (structural_ok(x, spec) && residue_signature(x, spec) == sig) out.push_back(x);
    }
    return out;
}

RedundancyRow best_residues(Family f, int n) {
    if (n > exhaustive_cap())
        throw TooLarge("best_residues: n=" + std::to_string(n) + " beyond exhaustive cap " + std::to_string(exhaustive_cap()));
    CodeSpec probe = CodeSpec::make(f, n);
    std::map<std::vector<long long>, std::uint64_t> counts;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        BinSeq x = BinSeq::from_rank(v, n);
        if (structural_ok(x, probe)) ++counts[residue_signature(x, probe)];
    }
    RedundancyRow row;
    row.n = n;
    for (const auto& [sig, cnt] : counts) {
        if (cnt > row.code_size) {
            row.code_size = cnt;
            row.best_residues = sig;
        }
    }
    row.redundancy = row.code_size == 0
                         ? std::numeric_limits<double>::infinity()
                         : n - std::log2(static_cast<double>(row.code_size));
    return row;
}

bool is_p_bounded_pair_safe(const BinSeq& x, const BinSeq& y, long long P) {
    if (x.size() != y.size())
        throw LengthMismatch("is_p_bounded_pair_safe: lengths differ");
    DiffProfile p = diff_profile(x, y);
    long long window = p.j.back() - p.j.front() + 1;
    if (window > P) return true;
    return ds_intersection(x, y).elements.empty();
}

CodeSpec spec_for_member(Family f, const BinSeq& x) {
    CodeSpec spec = CodeSpec::make(f, x.size());
    if (!structural_ok(x, spec))
        throw ParamOutOfRange("spec_for_member: sequence fails the structural constraints of " + family_name(f));
    std::vector<long long> sig = residue_signature(x, spec);
    std::size_t i = 0;
    auto next = [&]() { return sig.at(i++); };
    switch (f) {
        case Family::VT: spec.s1 = next(); break;
        case Family::C1:
        case Family::C14:
            spec.s0 = next();
            spec.s1 = next();
            break;
        case Family::CL:
            spec.s0 = next();
            spec.s1 = next();
            spec.s2 = next();
            break;
        case Family::Rconstrained:
        case Family::LocBal:
            break;
        case Family::CDSP:
            for (auto& v : spec.g) v = next();
            for (auto& v : spec.gp) v = next();
            break;
        case Family::C11:
            spec.s0 = next();
            spec.s1 = next();
            for (auto& v : spec.g) v = next();
            for (auto& v : spec.gp) v = next();
            break;
        case Family::C9:
            spec.s0 = next();
            spec.s1 = next();
            spec.h0 = next();
            spec.h1 = next();
            for (auto& v : spec.g) v = next();
            for (auto& v : spec.gp) v = next();
            break;
    }
    return spec;
}

}  // namespace recon
