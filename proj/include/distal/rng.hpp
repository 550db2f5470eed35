#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace distal {

// Deterministic 64-bit generator (splitmix64). All randomness in the library
// flows from one seed through derived per-task streams, so results are
// reproducible bit-for-bit and independent of scheduling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Derived stream for task `tag`; the parent stream is not advanced.
    Rng derive(std::uint64_t tag) const {
        Rng mix(state_ ^ (0xd1342543de82ef95ull * (tag + 1)));
        mix.next();
        return mix;
    }

    // Uniform in [0, n), rejection-free (Lemire multiply-shift).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // r = k/2^64 in [0,1) as an exact rational.
    Rational unit_rational() {
        return Rational(Integer(next()), ipow(Integer(2), 64));
    }

    // Index i with probability weights[i] / sum(weights). Exact.
    std::size_t weighted_index(const std::vector<Rational>& weights) {
        Rational total(0);
        for (const auto& w : weights) total += w;
        if (total <= 0) throw input_error("weighted_index: empty distribution");
        Rational r = unit_rational() * total;
        Rational cum(0);
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            cum += weights[i];
            if (r < cum) return i;
        }
        return weights.size() - 1;
    }

  private:
    std::uint64_t state_;
};

}  // namespace distal
