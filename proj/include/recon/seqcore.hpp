#pragma once

// Binary-sequence primitives: syndromes, differential sequence, runs,
// periods, disagreement profiles, error application.
//
// Sequences are 1-based at every public boundary. Internally bits live in
// a single machine word, so lengths are capped at 64 (63 wherever the
// differential sequence, which has n+1 positions, is involved).

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace recon {

// ===== Errors =====

struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct IdenticalInputs : std::invalid_argument {
    explicit IdenticalInputs(const std::string& what) : std::invalid_argument(what) {}
};
struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};
struct DegenerateOp : std::invalid_argument {
    explicit DegenerateOp(const std::string& what) : std::invalid_argument(what) {}
};
struct ParamOutOfRange : std::invalid_argument {
    explicit ParamOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};
struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};
struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

// ===== BinSeq =====

/// Fixed-length binary sequence over {0,1}, 1-based indexing.
class BinSeq {
public:
    static constexpr int max_len = 64;

    BinSeq() = default;

    static BinSeq zeros(int n);
    /// Parse "0110"-style text, x_1 first.
    static BinSeq from_string(std::string_view s);
    /// Build from the lexicographic rank, i.e. the integer whose most
    /// significant of n bits is x_1. Inverse of rank().
    static BinSeq from_rank(std::uint64_t v, int n);

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }

    /// x_i for i in [1, n].
    int get(int i) const {
        check_index(i);
        return static_cast<int>((word_ >> (i - 1)) & 1u);
    }
    void set(int i, int bit) {
        check_index(i);
        word_ = (word_ & ~(std::uint64_t{1} << (i - 1))) |
                (static_cast<std::uint64_t>(bit & 1) << (i - 1));
    }

    /// Lexicographic rank of the string form; sorting by rank() sorts
    /// serialized sequences lexicographically.
    std::uint64_t rank() const;
    std::string str() const;

    /// Substring x_[i, j]; empty when i > j.
    BinSeq slice(int i, int j) const;
    BinSeq concat(const BinSeq& other) const;

    /// x with x_d removed (length n-1).
    BinSeq delete_at(int d) const;
    /// x with x_e flipped.
    BinSeq flipped(int e) const;
    /// Insert a bit so that it lands at position p in [1, n+1] of the result.
    BinSeq insert_at(int p, int bit) const;

    int weight() const;

    friend bool operator==(const BinSeq& a, const BinSeq& b) = default;
    friend std::strong_ordering operator<=>(const BinSeq& a, const BinSeq& b) {
        if (auto c = a.len_ <=> b.len_; c != 0) return c;
        return a.rank() <=> b.rank();
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > len_) throw IndexOutOfRange("BinSeq index " + std::to_string(i) + " outside [1," + std::to_string(len_) + "]");
    }

    std::uint64_t word_ = 0;  // bit (i-1) holds x_i
    int len_ = 0;
};

/// One channel event on a sequence: an optional deletion index d and an
/// optional substitution index e, both on the original indexing.
struct ErrorOp {
    std::optional<int> del;
    std::optional<int> sub;
};

/// Disagreement profile of an equal-length pair: Hamming distance, the
/// increasing index list j_1..j_dh, and the common prefix/suffix lengths.
struct DiffProfile {
    int dh = 0;
    std::vector<int> j;
    int prefix_len = 0;
    int suffix_len = 0;
};

struct RunList {
    int count = 0;
    std::vector<std::pair<int, int>> intervals;  // closed 1-based [lo, hi]
};

// ===== Operations =====

BinSeq complement(const BinSeq& x);
BinSeq reverse(const BinSeq& x);

int hamming(const BinSeq& x, const BinSeq& y);

RunList runs(const BinSeq& x);

/// Smallest t in [1, n] with x_i = x_{i+t} for all i in [n - t].
int period(const BinSeq& x);

/// Unreduced k-th order VT syndrome: weight for k = 0, otherwise
/// sum_i (sum_{j<=i} j^{k-1}) x_i. Callers apply their own moduli.
std::uint64_t vt_syndrome(const BinSeq& x, int k);

/// Differential sequence of length n+1 with zero sentinels:
/// psi(x)_i = x_{i-1} xor x_i. A deletion at i merges the pair
/// (psi_i, psi_{i+1}); a substitution at i flips that pair.
BinSeq differential(const BinSeq& x);

/// Apply x(d, e): substitute then delete, both on original indices.
/// Requires d != e when both are present.
BinSeq apply_error(const BinSeq& x, const ErrorOp& op);

DiffProfile diff_profile(const BinSeq& x, const BinSeq& y);

/// Length of the longest substring whose period is at most tmax.
int max_periodic_run(const BinSeq& x, int tmax);

/// Strong-(l, eps)-locally-balanced test with eps = eps_num / eps_den:
/// every window of length l' >= l has weight within eps*l' of l'/2.
bool is_strong_locally_balanced(const BinSeq& x, int l, long long eps_num, long long eps_den);

}  // namespace recon
