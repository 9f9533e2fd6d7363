#pragma once

#include <compare>
#include <vector>

#include "chevwidth/ring.hpp"

namespace chevwidth {

/// A place of F_q(t): a monic irreducible pi, or the place at infinity.
struct Place {
  const Ring* field = nullptr;  // the RationalFunction ring
  bool infinite = false;
  Poly pi;  // unused for infinity

  static Place finite(const Ring& ring, Poly pi);
  static Place at_infinity(const Ring& ring);

  /// deg pi, or 1 at infinity.
  int degree() const { return infinite ? 1 : pi.degree(); }
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) { return a.infinite == b.infinite && a.pi == b.pi; }
  /// Finite places first, ordered by pi; infinity last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return a.infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.pi <=> b.pi;
  }
};

/// An element of the residue field kappa_v = F_q[t]/(pi) (F_q at infinity),
/// stored as its reduced representative of degree < deg pi.
struct ResidueFieldElement {
  Place place;
  Poly value;

  bool is_one() const { return value.is_one(); }
  ResidueFieldElement operator*(const ResidueFieldElement& o) const;
  ResidueFieldElement inverse() const;
  ResidueFieldElement pow(std::int64_t e) const;
  /// Norm from kappa_v down to F_q.
  FieldCode norm() const;
  std::string to_string() const;

  friend bool operator==(const ResidueFieldElement& a, const ResidueFieldElement& b) {
    return a.place == b.place && a.value == b.value;
  }
};

/// Order of vanishing of f at v; f may live in F_q, F_q[t], F_q[t,t^-1] or
/// F_q(t) over the place's base field. Throws ZeroElement.
std::int64_t valuation(const Place& v, const Elem& f);
/// Image of a valuation-zero f in kappa_v. Throws NonzeroValuation.
ResidueFieldElement residue(const Place& v, const Elem& f);
/// Reduction of a polynomial modulo pi (any polynomial, not only units).
ResidueFieldElement reduce(const Place& v, const Poly& p);
ResidueFieldElement residue_one(const Place& v);
ResidueFieldElement residue_constant(const Place& v, FieldCode c);

/// Finite places where f has nonzero valuation, ascending.
std::vector<Place> finite_support(const Elem& f);
/// All finite places of degree <= max_degree.
std::vector<Place> finite_places(const Ring& field, int max_degree);
/// A generator of kappa_v^*.
ResidueFieldElement residue_generator(const Place& v);

}  // namespace chevwidth
