#include "chevwidth/places.hpp"

#include <algorithm>

#include "chevwidth/errors.hpp"

namespace chevwidth {

namespace {

const Poly& modulus_of(const Place& v) {
  static const Poly t = Poly::monomial(1, 1);
  return v.infinite ? t : v.pi;
}

const FiniteField& field_of(const Place& v) { return v.field->field(); }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Fraction as_fraction(const Place& v, const Elem& f) {
  require(f.ring().kind() != RingKind::Integers, ErrorCode::DescriptorMismatch, "valuations need F_q(t) elements");
  const Ring& K = f.ring().fraction_field();
  require(&K == v.field, ErrorCode::DescriptorMismatch, f.ring().name() + " is not over " + v.field->name());
  Elem g = f.ring().to_fraction(f);
  require(!g.is_zero(), ErrorCode::ZeroElement, "valuation of zero");
  return g.fraction();
}

}  // namespace

Place Place::finite(const Ring& ring, Poly pi) {
  require(ring.kind() == RingKind::RationalFunction, ErrorCode::UnsupportedRing, "places live on F_q(t)");
  require(pi.lead() == 1 && poly::is_irreducible(ring.field(), pi), ErrorCode::InvalidType,
          poly::format(ring.field(), pi) + " is not monic irreducible");
  return {&ring, false, std::move(pi)};
}

Place Place::at_infinity(const Ring& ring) {
  require(ring.kind() == RingKind::RationalFunction, ErrorCode::UnsupportedRing, "places live on F_q(t)");
  return {&ring, true, {}};
}

std::string Place::to_string() const { return infinite ? "inf" : poly::format(field->field(), pi); }

ResidueFieldElement ResidueFieldElement::operator*(const ResidueFieldElement& o) const {
  return {place, poly::mulmod(field_of(place), value, o.value, modulus_of(place))};
}

ResidueFieldElement ResidueFieldElement::inverse() const {
  return {place, poly::invmod(field_of(place), value, modulus_of(place))};
}

ResidueFieldElement ResidueFieldElement::pow(std::int64_t e) const {
  const auto& F = field_of(place);
  Poly base = e < 0 ? poly::invmod(F, value, modulus_of(place)) : value;
  const std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  return {place, poly::powmod(F, base, n, modulus_of(place))};
}

FieldCode ResidueFieldElement::norm() const {
  const auto& F = field_of(place);
  const std::uint64_t q = F.order();
  const int d = place.degree();
  const std::uint64_t e = (ipow(q, d) - 1) / (q - 1);
  const Poly n = poly::powmod(F, value, e, modulus_of(place));
  require(n.degree() <= 0, ErrorCode::InternalError, "norm is not a constant");
  return n.coeff(0);
}

std::string ResidueFieldElement::to_string() const { return poly::format(field_of(place), value); }

std::int64_t valuation(const Place& v, const Elem& f) {
  const Fraction fr = as_fraction(v, f);
  if (v.infinite) return fr.den.degree() - fr.num.degree();
  const auto& F = field_of(v);
  return poly::multiplicity(F, fr.num, v.pi) - poly::multiplicity(F, fr.den, v.pi);
}

ResidueFieldElement reduce(const Place& v, const Poly& p) {
  return {v, poly::mod(field_of(v), p, modulus_of(v))};
}

ResidueFieldElement residue_one(const Place& v) { return {v, Poly::constant(1)}; }

ResidueFieldElement residue_constant(const Place& v, FieldCode c) { return {v, Poly::constant(c)}; }

ResidueFieldElement residue(const Place& v, const Elem& f) {
  const Fraction fr = as_fraction(v, f);
  const auto& F = field_of(v);
  if (v.infinite) {
    require(fr.num.degree() == fr.den.degree(), ErrorCode::NonzeroValuation, "nonzero valuation at infinity");
    return {v, Poly::constant(F.mul(fr.num.lead(), F.inv(fr.den.lead())))};
  }
  const Poly n = poly::mod(F, fr.num, v.pi), d = poly::mod(F, fr.den, v.pi);
  require(!n.is_zero() && !d.is_zero(), ErrorCode::NonzeroValuation,
          "nonzero valuation at " + v.to_string());
  return {v, poly::mulmod(F, n, poly::invmod(F, d, v.pi), v.pi)};
}

std::vector<Place> finite_support(const Elem& f) {
  const Ring& K = f.ring().fraction_field();
  const Fraction fr = f.ring().to_fraction(f).fraction();
  require(!fr.num.is_zero(), ErrorCode::ZeroElement, "support of zero");
  std::vector<Place> out;
  for (const Poly* p : {&fr.num, &fr.den})
    for (auto& [pi, m] : poly::factor(K.field(), *p)) out.push_back(Place{&K, false, pi});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Place> finite_places(const Ring& field, int max_degree) {
  require(field.kind() == RingKind::RationalFunction, ErrorCode::UnsupportedRing, "places live on F_q(t)");
  std::vector<Place> out;
  for (int d = 1; d <= max_degree; ++d)
    for (auto& pi : poly::irreducibles_of_degree(field.field(), d)) out.push_back(Place{&field, false, std::move(pi)});
  return out;
}

ResidueFieldElement residue_generator(const Place& v) {
  const auto& F = field_of(v);
  const int d = v.degree();
  const std::uint64_t order = ipow(F.order(), d) - 1;
  const auto primes = prime_factors(order);
  for (std::uint64_t code = 1; code <= order; ++code) {
    std::vector<FieldCode> c(d);
    std::uint64_t x = code;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<FieldCode>(x % F.order());
      x /= F.order();
    }
    const Poly cand(std::move(c));
    bool ok = true;
    for (auto ell : primes)
      if (poly::powmod(F, cand, order / ell, modulus_of(v)).is_one()) {
        ok = false;
        break;
      }
    if (ok) return {v, cand};
  }
  fail(ErrorCode::InternalError, "no generator of residue field");
}

}  // namespace chevwidth
