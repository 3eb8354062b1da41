#pragma once

// Channel simulation (one deletion plus one possibly trivial substitution
// per read) and reconstruction decoding from N distinct reads.

#include <cstdint>
#include <vector>

#include "recon/codefamilies.hpp"
#include "recon/seqcore.hpp"

namespace recon {

struct BallTooSmall : std::invalid_argument {
    explicit BallTooSmall(const std::string& what) : std::invalid_argument(what) {}
};
struct NoCandidate : std::runtime_error {
    explicit NoCandidate(const std::string& what) : std::runtime_error(what) {}
};
struct Ambiguous : std::runtime_error {
    explicit Ambiguous(const std::string& what) : std::runtime_error(what) {}
};

/// N distinct noisy reads of one length-n source.
struct ReadSet {
    std::vector<BinSeq> reads;  // sorted, distinct, each of length n-1
    int n = 0;
    int claimed_N = 0;
};

/// One read: uniform deletion index, and with probability (n-1)/n a uniform
/// substitution at another index. The pure-deletion branch keeps every
/// element of B(x) reachable. Deterministic in the seed.
BinSeq channel_emit(const BinSeq& x, std::uint64_t seed);

/// N distinct elements of B(x), uniform without replacement.
ReadSet sample_reads(const BinSeq& x, int N, std::uint64_t seed);

/// The unique codeword whose ball contains every read. Candidates come from
/// the inverse ball of one read, so no full enumeration is needed.
BinSeq decode(const ReadSet& reads, const CodeSpec& spec, int N);

/// All codewords of a list-decodable spec whose ball contains the read;
/// at most two for the CL family.
std::vector<BinSeq> list_decode_single(const BinSeq& read, const CodeSpec& spec);

/// {w : read in B(w)} — every sequence one insertion plus at most one flip
/// away from the read.
std::vector<BinSeq> inverse_ball(const BinSeq& read);

}  // namespace recon
