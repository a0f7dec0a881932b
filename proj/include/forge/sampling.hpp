#pragma once

#include <cstdint>
#include <random>

#include "forge/arith.hpp"
#include "forge/construction.hpp"
#include "forge/elliptic.hpp"

namespace forge {

/// Platform-independent draws (no std distributions) so seeded runs reproduce everywhere.
class Sampler {
   public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(rng_() % span);
    }

    /// p/q with |p| <= height, 1 <= q <= height.
    Rat rational(unsigned height, bool nonzero = false) {
        while (true) {
            Rat q = make_rat(Int(static_cast<long>(integer(-static_cast<std::int64_t>(height), height))),
                             Int(static_cast<long>(integer(1, height))));
            if (!nonzero || q != 0) return q;
        }
    }

    /// Nonsingular curve in the requested branch.
    Curve curve(unsigned height, Branch branch) {
        while (true) {
            const Rat a = branch == Branch::Generic ? rational(height, true) : Rat(0);
            const Rat b = branch == Branch::Generic ? rational(height) : rational(height, true);
            if (Rat(4 * a * a * a + 27 * b * b) != 0) return Curve(a, b);
        }
    }

   private:
    std::mt19937_64 rng_;
};

}  // namespace forge
