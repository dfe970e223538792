#pragma once

#include <random>
#include <vector>

#include "oscsym/rational.hpp"

namespace oscsym {

/// Deterministic rational sampler. Draws have |numerator| <= bound and
/// 1 <= denominator <= bound; mt19937_64 raw outputs are portable, so a seed
/// fully reproduces a run on any platform.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed, long bound = 100)
        : engine_(seed), bound_(bound), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    Rational next() {
        long num = static_cast<long>(engine_() % (2 * bound_ + 1)) - bound_;
        long den = static_cast<long>(engine_() % bound_) + 1;
        return rat(num, den);
    }

    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (r != 0) return r;
        }
    }

    /// Uniform integer in [lo, hi].
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::vector<Rational> vec(int k) {
        std::vector<Rational> v;
        v.reserve(k);
        for (int i = 0; i < k; ++i) v.push_back(next());
        return v;
    }

  private:
    std::mt19937_64 engine_;
    long bound_;
    std::uint64_t seed_;
};

}  // namespace oscsym
