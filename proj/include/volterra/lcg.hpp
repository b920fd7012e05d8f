#ifndef VOLTERRA_LCG_HPP
#define VOLTERRA_LCG_HPP

#include <cstdint>

namespace volterra {

/// 64-bit linear congruential generator (Knuth's MMIX constants).
/// state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64);
/// outputs are the top 31 bits. Identical on every platform.
class Lcg {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint32_t next() {
        state_ = state_ * kMultiplier + kIncrement;
        return static_cast<std::uint32_t>(state_ >> 33);
    }

    /// Value in [0, bound). Modulo bias is irrelevant for our bounds.
    std::uint32_t below(std::uint32_t bound) { return next() % bound; }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace volterra

#endif  // VOLTERRA_LCG_HPP
