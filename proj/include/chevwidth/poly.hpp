#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chevwidth/finite_field.hpp"

namespace chevwidth {

/// Dense univariate polynomial over a FiniteField; coeffs[i] is the
/// coefficient of t^i and the leading coefficient is nonzero (zero = empty).
struct Poly {
  std::vector<FieldCode> coeffs;

  Poly() = default;
  explicit Poly(std::vector<FieldCode> c) : coeffs(std::move(c)) { normalize(); }

  static Poly constant(FieldCode c) { return Poly(std::vector<FieldCode>{c}); }
  static Poly monomial(FieldCode c, int degree);

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  FieldCode lead() const { return coeffs.empty() ? 0 : coeffs.back(); }
  FieldCode coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0; }
  bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Degree first, then coefficients from the top; a total order for map keys.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);
};

/// Arithmetic on Poly, bound to one coefficient field.
namespace poly {

Poly add(const FiniteField& F, const Poly& a, const Poly& b);
Poly sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly neg(const FiniteField& F, const Poly& a);
Poly mul(const FiniteField& F, const Poly& a, const Poly& b);
Poly scale(const FiniteField& F, const Poly& a, FieldCode c);
Poly shift(const Poly& a, int k);  // a * t^k, k >= 0
Poly pow(const FiniteField& F, const Poly& a, std::uint64_t e);
/// a = q*b + r with deg r < deg b. Throws DivisionByZero.
std::pair<Poly, Poly> divmod(const FiniteField& F, const Poly& a, const Poly& b);
Poly mod(const FiniteField& F, const Poly& a, const Poly& m);
Poly monic(const FiniteField& F, const Poly& a);
/// Monic gcd (zero iff both are zero).
Poly gcd(const FiniteField& F, const Poly& a, const Poly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct Bezout {
  Poly g, s, t;
};
Bezout xgcd(const FiniteField& F, const Poly& a, const Poly& b);
FieldCode eval(const FiniteField& F, const Poly& a, FieldCode x);

/// Arithmetic in F[t]/(m).
Poly mulmod(const FiniteField& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const FiniteField& F, const Poly& a, std::uint64_t e, const Poly& m);
/// Throws NotAUnit if gcd(a, m) != 1.
Poly invmod(const FiniteField& F, const Poly& a, const Poly& m);

bool is_irreducible(const FiniteField& F, const Poly& a);
/// Monic irreducible factors with multiplicities, sorted by the Poly order.
/// The unit part (leading coefficient) is dropped.
std::vector<std::pair<Poly, int>> factor(const FiniteField& F, const Poly& a);
/// Multiplicity of the irreducible pi in a (a != 0).
int multiplicity(const FiniteField& F, Poly a, const Poly& pi);

/// All monic polynomials of exact degree d, in increasing code order.
std::vector<Poly> monics_of_degree(const FiniteField& F, int d);
/// All monic irreducible polynomials of degree d.
std::vector<Poly> irreducibles_of_degree(const FiniteField& F, int d);

std::string format(const FiniteField& F, const Poly& a, const std::string& var = "t");

}  // namespace poly
}  // namespace chevwidth
