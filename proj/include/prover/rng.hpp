#pragma once

// Counter-based splittable random stream. fork() derives an independent
// sub-stream from the key alone, so results never depend on how much the
// parent stream was consumed or on evaluation order across workers.

#include <cmath>
#include <cstdint>

namespace prover {

namespace detail {
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

class RandomStream {
public:
    explicit RandomStream(uint64_t seed) : key_(detail::mix64(seed)) {}

    RandomStream fork(uint64_t label) const {
        RandomStream s(0);
        s.key_ = detail::mix64(key_ ^ detail::mix64(label + 0x5851f42d4c957f2dULL));
        s.counter_ = 0;
        return s;
    }

    uint64_t next_u64() { return detail::mix64(key_ + counter_++); }

    // uniform on [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1]
    double next_double_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // standard normal, Box-Muller; consumes two draws
    double next_gauss() {
        const double u1 = next_double_open();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    uint32_t next_below(uint32_t n) { return static_cast<uint32_t>(next_u64() % n); }

private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

} // namespace prover
