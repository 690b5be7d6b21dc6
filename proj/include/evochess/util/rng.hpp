#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

namespace evochess {

/// Seeded random source. Wraps std::mt19937_64 but implements its own
/// bounded-draw and unit-interval helpers: the standard distributions are
/// implementation-defined, and evolution runs must replay bit-identically
/// on any platform.
class Rng {
  public:
    Rng() : engine_(0) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    bool coin_flip() { return (engine_() & 1) != 0; }

    /// Engine state round-trips through text streams (checkpoint resume).
    friend std::ostream& operator<<(std::ostream& os, const Rng& rng) { return os << rng.engine_; }
    friend std::istream& operator>>(std::istream& is, Rng& rng) { return is >> rng.engine_; }

    bool operator==(const Rng& other) const { return engine_ == other.engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace evochess
