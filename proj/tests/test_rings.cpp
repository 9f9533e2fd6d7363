#include <set>

#include "chevwidth/errors.hpp"
#include "chevwidth/places.hpp"
#include "chevwidth/ring.hpp"
#include "chevwidth/sampling.hpp"
#include "doctest.h"

using namespace chevwidth;

namespace {

// Evaluates a fraction of F_p(t) at a point of a field containing F_p, using
// the fact that prime-subfield codes coincide.
FieldCode eval_fraction(const FiniteField& K, const Fraction& f, FieldCode x) {
  return K.mul(poly::eval(K, f.num, x), K.inv(poly::eval(K, f.den, x)));
}

}  // namespace

TEST_CASE("descriptor grammar") {
  CHECK(Ring::parse("Z").name() == "Z");
  CHECK(Ring::parse("F5").name() == "F5");
  CHECK(Ring::parse("F9").name() == "F9[x^2+1]");
  CHECK(Ring::parse("F9[x^2+1]").name() == "F9[x^2+1]");
  CHECK(Ring::parse("F4").name() == "F4[x^2+x+1]");
  CHECK(Ring::parse("F5[t]").name() == "F5[t]");
  CHECK(Ring::parse("F5[t,t^-1]").name() == "F5[t,t^-1]");
  CHECK(Ring::parse("F5(t)").name() == "F5(t)");
  CHECK(Ring::parse("F9[x^2+1][t]").name() == "F9[x^2+1][t]");
  CHECK(&Ring::parse("F5[t]") == &Ring::polynomials(Ring::prime_field(5)));
  CHECK_THROWS_AS(Ring::parse("F6"), Error);
  CHECK_THROWS_AS(Ring::parse("F9[x^2+2*x+1]"), Error);  // (x+1)^2
  CHECK_THROWS_AS(Ring::parse("Q"), Error);
}

TEST_CASE("ring_arith examples") {
  const Ring& L = Ring::parse("F2[t,t^-1]");
  CHECK((L.variable() * L.parse_elem("t^-1")).is_one());

  const Ring& P = Ring::parse("F2[t]");
  try {
    (void)P.variable().inverse();
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAUnit);
  }

  const Ring& K = Ring::parse("F3(t)");
  const Elem sum = K.parse_elem("(t+1)/t") + K.parse_elem("1/t");
  CHECK(sum == K.parse_elem("(t+2)/t"));
  // Cross-check by evaluation at three points of F9 (t = 1, 2, x).
  const FiniteField& F9 = Ring::parse("F9").field();
  const auto a = K.parse_elem("(t+1)/t").fraction(), b = K.parse_elem("1/t").fraction();
  for (FieldCode x : {FieldCode{1}, FieldCode{2}, FieldCode{3}})
    CHECK(eval_fraction(F9, sum.fraction(), x) == F9.add(eval_fraction(F9, a, x), eval_fraction(F9, b, x)));

  CHECK_THROWS_AS(Ring::parse("F5").one() + Ring::parse("F7").one(), Error);
}

TEST_CASE("field inverses and extension arithmetic") {
  for (const char* name : {"F2", "F3", "F4", "F5", "F7", "F8", "F9", "F25"}) {
    const Ring& R = Ring::parse(name);
    const auto& F = R.field();
    for (FieldCode a = 1; a < F.order(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    const FieldCode g = F.primitive_element();
    std::set<FieldCode> powers;
    for (std::uint64_t k = 0; k + 1 < F.order(); ++k) powers.insert(F.pow(g, std::int64_t(k)));
    CHECK(powers.size() == F.order() - 1);
  }
  const Ring& F9 = Ring::parse("F9");
  CHECK(F9.parse_elem("x^2") == F9.from_int(-1));
}

TEST_CASE("units_of") {
  SUBCASE("F5[t]: constants only") {
    const Ring& R = Ring::parse("F5[t]");
    auto u = R.units();
    CHECK_FALSE(u.infinite);
    REQUIRE(u.torsion.size() == 4);
    // Brute force: no polynomial of degree 1..2 has an inverse of degree <= 2,
    // and deg(pq) = deg p + deg q rules out higher degrees.
    const auto& F = R.field();
    std::vector<Poly> small;
    for (int d = 0; d <= 2; ++d)
      for (auto& m : poly::monics_of_degree(F, d))
        for (FieldCode c = 1; c < 5; ++c) small.push_back(poly::scale(F, m, c));
    for (const auto& p : small) {
      if (p.degree() < 1) continue;
      for (const auto& q : small) CHECK_FALSE(poly::mul(F, p, q).is_one());
    }
    for (const auto& p : small) {
      const Elem e = R.from_poly(p);
      CHECK(e.is_unit() == (p.degree() == 0));
    }
    for (int d = 3; d <= 4; ++d)
      for (auto& m : poly::monics_of_degree(F, d)) CHECK_FALSE(R.from_poly(m).is_unit());
  }
  SUBCASE("F2[t,t^-1]: monomials") {
    const Ring& R = Ring::parse("F2[t,t^-1]");
    auto u = R.units();
    CHECK(u.infinite);
    CHECK(u.torsion.size() == 1);
    REQUIRE(u.free_generator.has_value());
    CHECK(*u.free_generator == R.variable());
    std::vector<Elem> all;
    for (int low = -2; low <= 2; ++low)
      for (int d = 0; d <= 2; ++d)
        for (auto& m : poly::monics_of_degree(R.field(), d))
          if (m.coeff(0) != 0) all.push_back(R.from_laurent(low, m));
    for (const auto& a : all) {
      bool has_inverse = false;
      for (const auto& b : all) has_inverse = has_inverse || (a * b).is_one();
      const bool monomial = a.laurent().body.degree() == 0;
      CHECK(has_inverse == monomial);
      CHECK(a.is_unit() == monomial);
    }
  }
  SUBCASE("Z") {
    auto u = Ring::integers().units();
    CHECK_FALSE(u.infinite);
    CHECK(u.torsion.size() == 2);
  }
}

TEST_CASE("valuation and residue examples") {
  const Ring& K3 = Ring::parse("F3(t)");
  const Place t3 = Place::finite(K3, Poly({0, 1}));
  CHECK(valuation(t3, K3.parse_elem("t^2+t")) == 1);
  CHECK(valuation(Place::at_infinity(K3), K3.parse_elem("t")) == -1);
  const Ring& K2 = Ring::parse("F2(t)");
  CHECK(valuation(Place::finite(K2, Poly({1, 1})), K2.parse_elem("(t+1)^3/t")) == 3);
  // Polynomials and Laurent elements are valued through F_q(t).
  CHECK(valuation(t3, Ring::parse("F3[t,t^-1]").parse_elem("t^-2+t")) == -2);

  CHECK(residue(Place::finite(K2, Poly({0, 1})), K2.parse_elem("t+1")).is_one());
  const Place i3 = Place::finite(K3, Poly({1, 0, 1}));
  const auto r = residue(i3, K3.parse_elem("t"));
  CHECK(r.value == Poly({0, 1}));
  CHECK((r * r).value == Poly({2}));  // t^2 = -1 mod t^2+1
  CHECK(residue(Place::at_infinity(K2), K2.parse_elem("(t+1)/t")).is_one());
  CHECK_THROWS_AS(residue(t3, K3.parse_elem("t")), Error);
  CHECK_THROWS_AS(valuation(t3, K3.zero()), Error);
  CHECK_THROWS_AS(Place::finite(K3, Poly({1, 2, 1})), Error);
}

TEST_CASE("euclid_divmod examples") {
  const Ring& P = Ring::parse("F2[t]");
  auto [q, r] = P.divmod(P.parse_elem("t^2+1"), P.variable());
  CHECK(q == P.variable());
  CHECK(r.is_one());

  const Ring& Z = Ring::integers();
  auto [qz, rz] = Z.divmod(Z.from_int(7), Z.from_int(3));
  CHECK(qz.scalar() == 2);
  CHECK(rz.scalar() == 1);

  const Ring& L = Ring::parse("F3[t,t^-1]");
  const Elem a = L.parse_elem("t^2+t^-1"), b = L.parse_elem("t-1");
  auto [ql, rl] = L.divmod(a, b);
  CHECK(ql * b + rl == a);
  CHECK(L.euclid_size(rl) < L.euclid_size(b));

  CHECK_THROWS_AS(P.divmod(P.one(), P.zero()), Error);
  CHECK_THROWS_AS(Ring::parse("F3(t)").divmod(Ring::parse("F3(t)").one(), Ring::parse("F3(t)").one()), Error);
}

TEST_CASE("canonical forms are idempotent") {
  Sampler s(11);
  for (const char* name : {"F3[t,t^-1]", "F5(t)", "F4(t)", "F2[t,t^-1]"}) {
    const Ring& R = Ring::parse(name);
    for (int i = 0; i < 1000; ++i) {
      const Elem e = s.element(R, 4);
      if (R.kind() == RingKind::Laurent) {
        CHECK(R.from_laurent(e.laurent().low, e.laurent().body) == e);
        if (!e.is_zero()) CHECK(e.laurent().body.coeff(0) != 0);
      } else {
        CHECK(R.from_fraction(e.fraction().num, e.fraction().den) == e);
        CHECK(e.fraction().den.lead() == 1);
      }
      CHECK(R.parse_elem(e.to_string()) == e);
    }
  }
}

TEST_CASE("valuations are additive and satisfy the product formula") {
  Sampler s(12);
  for (const char* name : {"F2(t)", "F3(t)", "F5(t)"}) {
    const Ring& K = Ring::parse(name);
    for (int i = 0; i < 200; ++i) {
      const Elem f = s.nonzero(K, 4), g = s.nonzero(K, 4);
      std::int64_t total = valuation(Place::at_infinity(K), f);
      for (const auto& v : finite_support(f)) total += valuation(v, f) * v.degree();
      CHECK(total == 0);
      auto places = finite_support(f * g);
      places.push_back(Place::at_infinity(K));
      for (const auto& v : finite_support(f)) places.push_back(v);
      for (const auto& v : places) CHECK(valuation(v, f * g) == valuation(v, f) + valuation(v, g));
    }
  }
}

TEST_CASE("euclid_divmod round trip") {
  Sampler s(13);
  const char* names[] = {"Z", "F7", "F2[t]", "F3[t]", "F4[t]", "F2[t,t^-1]", "F3[t,t^-1]"};
  for (const char* name : names) {
    const Ring& R = Ring::parse(name);
    for (int i = 0; i < 1000; ++i) {
      const Elem a = s.element(R, R.kind() == RingKind::Integers ? 1000 : 6);
      const Elem b = s.nonzero(R, R.kind() == RingKind::Integers ? 50 : 3);
      auto [q, r] = R.divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(R.euclid_size(r) < R.euclid_size(b));
    }
  }
}
