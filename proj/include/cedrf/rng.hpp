#pragma once

// Counter-based random number generation (Philox4x64, 10 rounds).
//
// Every Monte Carlo sample owns an independent substream keyed by
// (seed, stream index, domain tag), so results are bit-identical no
// matter how samples are distributed over worker threads.

#include <array>
#include <cstdint>

namespace cedrf {

struct Philox4x64 {
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static Counter block(Counter ctr, Key key);
};

class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint32_t domain = 0);

    std::uint64_t next_u64();

    /// Uniform double in the open interval (0, 1).
    double uniform();

    /// Standard normal via Box-Muller; pairs are cached.
    double normal();

    bool bernoulli(double p) { return uniform() < p; }

private:
    void refill();

    Philox4x64::Counter base_;
    Philox4x64::Key key_;
    std::array<std::uint64_t, 4> buf_{};
    std::uint64_t block_index_ = 0;
    int pos_ = 4;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

} // namespace cedrf
