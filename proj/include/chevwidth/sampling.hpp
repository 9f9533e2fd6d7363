#pragma once

#include <cstdint>
#include <random>

#include "chevwidth/ring.hpp"

namespace chevwidth {

/// The single seeded source of randomness; every sampler in the library and
/// the CLI draws from one of these.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  FieldCode field_code(const FiniteField& F) { return static_cast<FieldCode>(uniform(0, std::int64_t(F.order()) - 1)); }
  FieldCode nonzero_code(const FiniteField& F) { return static_cast<FieldCode>(uniform(1, std::int64_t(F.order()) - 1)); }

  /// Polynomial of degree <= max_degree with uniform coefficients.
  Poly poly(const FiniteField& F, int max_degree);

  /// Z: |n| <= bound; F_q: uniform; F_q[t]: degree <= bound; Laurent:
  /// exponents in [-bound, bound]; F_q(t): numerator and denominator of
  /// degree <= bound.
  Elem element(const Ring& ring, int bound);
  Elem nonzero(const Ring& ring, int bound);
  Elem unit(const Ring& ring, int bound);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace chevwidth
