#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chevwidth/sampling.hpp"
#include "chevwidth/steinberg.hpp"

namespace chevwidth {

/// An exact factorisation of `target` into root unipotents, read left to right.
struct Factorization {
  const Representation* rep = nullptr;
  Matrix target;
  std::vector<Letter> factors;

  int width() const { return static_cast<int>(factors.size()); }
  SteinbergWord word() const;
  /// Re-multiplies the factors and compares with the target.
  bool verify() const;
};

/// Euclidean reduction in SL_2. Over a field the width is at most 4.
/// Throws NotUnimodular, NotEuclidean, UnsupportedRepForType.
Factorization factor_sl2(const GroupElement& m);
/// Gaussian elimination with Euclidean pivots in SL_n (any n >= 2);
/// block-diagonal SL_2 embeddings are factored block by block.
Factorization factor_sln(const GroupElement& m);

struct WidthReferenceLines {
  int sl3_function_rings = 65;  // L(2) for SL_3 over function rings
  int l2_positive_roots = 0;    // L(2) |Phi^+|
};
WidthReferenceLines width_reference_lines(const RootSystem& system);

/// Product of `letters` random root unipotents with parameters from
/// Sampler::element(ring, degree).
SteinbergWord random_elementary_word(Sampler& s, const RootSystem& system, const Ring& ring, int letters,
                                     int degree);

/// Writes an element of U^+ (sign > 0) or U^- as x_{g1}(c1) x_{g2}(c2) ...
/// over increasing roots, by reading coefficients off the matrix. Throws InternalError if g is not of that form.
SteinbergWord decompose_unipotent(const GroupElement& g, int sign);

}  // namespace chevwidth
