#include "cedrf/rng.hpp"

#include <cmath>

namespace cedrf {
namespace {

constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    return static_cast<std::uint64_t>(p);
}

} // namespace

Philox4x64::Counter Philox4x64::block(Counter c, Key k) {
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, hi1;
        const std::uint64_t lo0 = mulhilo(kMult0, c[0], hi0);
        const std::uint64_t lo1 = mulhilo(kMult1, c[2], hi1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint32_t domain)
    : base_{stream, static_cast<std::uint64_t>(domain), 0, 0},
      key_{seed, seed ^ kWeyl1} {}

void RandomStream::refill() {
    Philox4x64::Counter ctr = base_;
    ctr[2] = block_index_++;
    buf_ = Philox4x64::block(ctr, key_);
    pos_ = 0;
}

std::uint64_t RandomStream::next_u64() {
    if (pos_ == 4)
        refill();
    return buf_[pos_++];
}

double RandomStream::uniform() {
    // 53 random bits plus a half-ulp offset keeps the value inside (0, 1).
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double RandomStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(t);
    has_cached_normal_ = true;
    return r * std::cos(t);
}

} // namespace cedrf
