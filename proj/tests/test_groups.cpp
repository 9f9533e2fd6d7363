#include <string>

#include "chevwidth/errors.hpp"
#include "chevwidth/groups.hpp"
#include "chevwidth/sampling.hpp"
#include "doctest.h"

using namespace chevwidth;

namespace {

Matrix mat(const Ring& R, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Elem>> e;
  for (const auto& r : rows) {
    e.emplace_back();
    for (auto v : r) e.back().push_back(R.from_int(v));
  }
  return Matrix::from_rows(R, e);
}

std::vector<Elem> units_of(const Ring& F) {
  std::vector<Elem> out;
  for (FieldCode c = 1; c < F.field().order(); ++c) out.push_back(F.field_elem(c));
  return out;
}

std::vector<Elem> elements_of(const Ring& F) {
  std::vector<Elem> out{F.zero()};
  for (const auto& u : units_of(F)) out.push_back(u);
  return out;
}

struct RepCase {
  const char* system;
  RepKind kind;
};

const RepCase kReps[] = {{"A1", RepKind::StandardSL}, {"A2", RepKind::StandardSL}, {"A3", RepKind::StandardSL},
                         {"A4", RepKind::StandardSL}, {"C2", RepKind::StandardSp}, {"C3", RepKind::StandardSp},
                         {"C4", RepKind::StandardSp}, {"G2", RepKind::Adjoint},    {"B3", RepKind::Adjoint},
                         {"C2", RepKind::Adjoint},    {"D4", RepKind::Adjoint},    {"A2", RepKind::Adjoint}};

}  // namespace

TEST_CASE("representations respect the structure constants") {
  for (const auto& c : kReps) {
    CAPTURE(std::string(c.system));
    const RootSystem& R = RootSystem::parse(c.system);
    const auto& L = ChevalleyBasis::get(R);
    const auto& rho = Representation::get(R, c.kind);
    for (RootId a = 0; a < R.num_roots(); ++a)
      for (RootId b = 0; b < R.num_roots(); ++b) {
        SparseIntMatrix expect{rho.dimension(), {}};
        for (auto [k, v] : L.bracket(a, b))
          expect = expect + scaled(k < R.num_roots() ? rho.root_matrix(k) : rho.cartan_matrix(k - R.num_roots()), v);
        CHECK(lie_bracket(rho.root_matrix(a), rho.root_matrix(b)) == expect);
      }
  }
}

TEST_CASE("unsupported representations") {
  CHECK_THROWS_AS(Representation::get(RootSystem::parse("G2"), RepKind::StandardSL), Error);
  CHECK_THROWS_AS(Representation::get(RootSystem::parse("B3"), RepKind::StandardSp), Error);
  try {
    Representation::get(RootSystem::parse("G2"), RepKind::StandardSL);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedRepForType);
  }
}

TEST_CASE("elementary matrices") {
  const Ring& F5 = Ring::parse("F5");
  const auto& sl3 = Representation::get(RootSystem::parse("A2"), RepKind::StandardSL);
  const Elem r = F5.from_int(3);
  CHECK(elementary(sl3, 0, r).matrix == mat(F5, {{1, 3, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(elementary(sl3, 1, r).matrix == mat(F5, {{1, 0, 0}, {0, 1, 3}, {0, 0, 1}}));
  CHECK(is_identity(elementary(sl3, 2, F5.zero())));

  const auto& sp4 = Representation::get(RootSystem::parse("C2"), RepKind::StandardSp);
  const Elem one = F5.one();
  // alpha_2 is the long root: a single transvection entry.
  CHECK(elementary(sp4, 1, one).matrix == mat(F5, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(symplectic_form(2) == std::vector<std::vector<int>>{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});

  Sampler S(11);
  for (const char* ring : {"F7", "F9", "F3[t]", "Z"}) {
    const Ring& K = Ring::parse(ring);
    for (const auto& c : kReps) {
      const auto& rho = Representation::get(RootSystem::parse(c.system), c.kind);
      const RootSystem& R = rho.system();
      const int trials = rho.dimension() > 10 ? 5 : 25;
      for (int t = 0; t < trials; ++t) {
        const RootId a = static_cast<RootId>(S.uniform(0, R.num_roots() - 1));
        const Elem x = S.element(K, 2), y = S.element(K, 2);
        CHECK(elementary(rho, a, x) * elementary(rho, a, y) == elementary(rho, a, x + y));
        const GroupElement g = elementary(rho, a, x);
        if (c.kind == RepKind::StandardSp) CHECK(preserves_symplectic_form(g.matrix));
        if (rho.dimension() <= 8) {
          CHECK(g.matrix.determinant() == K.one());
          CHECK(g.inverse() == elementary(rho, a, -x));
        }
      }
    }
  }
}

TEST_CASE("adjoint unipotents") {
  const Ring& F7 = Ring::parse("F7");
  const auto& L1 = ChevalleyBasis::get(RootSystem::parse("A1"));
  CHECK(is_identity(adjoint_unipotent(L1, 0, F7.zero())));
  const Ring& Z = Ring::integers();
  // Basis e, f, h: exp(ad e) sends f to f + h - e and h to h - 2e.
  CHECK(adjoint_unipotent(L1, 0, Z.one()).matrix == mat(Z, {{1, -1, -2}, {0, 1, 0}, {0, 1, 1}}));
  Sampler S(5);
  const auto& Lg = ChevalleyBasis::get(RootSystem::parse("G2"));
  for (int t = 0; t < 100; ++t) {
    const RootId a = static_cast<RootId>(S.uniform(0, 11));
    const Elem r = S.element(F7, 0), s = S.element(F7, 0);
    CHECK(adjoint_unipotent(Lg, a, r) * adjoint_unipotent(Lg, a, s) == adjoint_unipotent(Lg, a, r + s));
  }
}

TEST_CASE("w and h elements") {
  const Ring& F5 = Ring::parse("F5");
  const auto& sl2 = Representation::get(RootSystem::parse("A1"), RepKind::StandardSL);
  CHECK(w_element(sl2, 0, F5.one()).matrix == mat(F5, {{0, 1}, {-1, 0}}));
  CHECK(is_identity(w_element(sl2, 0, F5.one()) * w_element(sl2, 0, -F5.one())));
  for (const auto& u : units_of(F5)) CHECK(h_element(sl2, 0, u).matrix == Matrix::from_rows(F5, {{u, F5.zero()}, {F5.zero(), u.inverse()}}));
  CHECK(is_identity(h_element(sl2, 0, F5.one())));
  CHECK_THROWS_AS(w_element(sl2, 0, F5.zero()), Error);

  const auto& sl3 = Representation::get(RootSystem::parse("A2"), RepKind::StandardSL);
  for (const auto& u : units_of(F5))
    CHECK(h_element(sl3, 0, u).matrix == Matrix::from_rows(F5, {{u, F5.zero(), F5.zero()},
                                                                {F5.zero(), u.inverse(), F5.zero()},
                                                                {F5.zero(), F5.zero(), F5.one()}}));

  // w_a(u) x_b(s) w_a(u)^{-1} = x_{sigma_a b}(+-u^{-<b,a>} s).
  const Ring& F7 = Ring::parse("F7");
  for (const auto& c : {RepCase{"A2", RepKind::StandardSL}, RepCase{"C2", RepKind::StandardSp},
                        RepCase{"G2", RepKind::Adjoint}}) {
    const auto& rho = Representation::get(RootSystem::parse(c.system), c.kind);
    const RootSystem& R = rho.system();
    for (RootId a = 0; a < R.num_roots(); ++a)
      for (RootId b = 0; b < R.num_roots(); b += 2) {
        const Elem u = F7.from_int(3), s = F7.from_int(2);
        const GroupElement w = w_element(rho, a, u);
        const GroupElement lhs = w * elementary(rho, b, s) * w.inverse();
        const Elem mag = u.pow(-R.pairing(b, a)) * s;
        const RootId image = R.reflect(a, b);
        CHECK((lhs == elementary(rho, image, mag) || lhs == elementary(rho, image, -mag)));
      }
  }
}

TEST_CASE("A1 relation") {
  const auto& sl2 = Representation::get(RootSystem::parse("A1"), RepKind::StandardSL);
  for (const char* q : {"F2", "F3", "F4", "F5", "F7", "F8", "F9"}) {
    const Ring& F = Ring::parse(q);
    for (const auto& u : units_of(F)) {
      const GroupElement w = w_element(sl2, 0, u);
      const GroupElement winv = w.inverse();
      for (const auto& r : elements_of(F))
        CHECK(w * elementary(sl2, 0, r) * winv == elementary(sl2, 1, -(u.pow(-2) * r)));
    }
  }
}

TEST_CASE("commutator formula") {
  const Ring& F5 = Ring::parse("F5");
  const Ring& F7 = Ring::parse("F7");
  const auto& sl3 = Representation::get(RootSystem::parse("A2"), RepKind::StandardSL);
  CHECK(verify_commutator(sl3, 0, 1, F5.one(), F5.one()));
  const auto& sl4 = Representation::get(RootSystem::parse("A3"), RepKind::StandardSL);
  CHECK(verify_commutator(sl4, 0, 2, F5.from_int(2), F5.from_int(3)));
  CHECK(is_identity(commutator(elementary(sl4, 0, F5.one()), elementary(sl4, 2, F5.one()))));
  CHECK_THROWS_AS(verify_commutator(sl3, 0, 3, F5.one(), F5.one()), Error);

  // A wrong sign must be caught.
  const Elem one = F5.one();
  CHECK(commutator(elementary(sl3, 0, one), elementary(sl3, 1, one)) != elementary(sl3, 2, F5.from_int(-commutator_coefficients(ChevalleyBasis::get(sl3.system()), 0, 1)[0].coeff)));

  Sampler S(3);
  const auto& g2 = Representation::get(RootSystem::parse("G2"), RepKind::Adjoint);
  for (int t = 0; t < 10; ++t) CHECK(verify_commutator(g2, 0, 1, S.element(F7, 0), S.element(F7, 0)));

  for (const auto& c : kReps) {
    CAPTURE(std::string(c.system));
    const auto& rho = Representation::get(RootSystem::parse(c.system), c.kind);
    const RootSystem& R = rho.system();
    for (const char* ring : {"F7", "Z", "F2[t]"}) {
      const Ring& K = Ring::parse(ring);
      for (RootId a = 0; a < R.num_roots(); ++a)
        for (RootId b = 0; b < R.num_roots(); ++b) {
          if (b == R.negate(a)) continue;
          CHECK(verify_commutator(rho, a, b, S.element(K, 2), S.element(K, 2)));
        }
    }
  }
}

TEST_CASE("identity and centre") {
  const Ring& F5 = Ring::parse("F5");
  const auto& sl2 = Representation::get(RootSystem::parse("A1"), RepKind::StandardSL);
  const GroupElement e = identity_element(sl2, F5);
  CHECK(is_identity(e));
  CHECK(is_central(e));
  const GroupElement z = h_element(sl2, 0, -F5.one());
  CHECK(z.matrix == mat(F5, {{-1, 0}, {0, -1}}));
  CHECK(is_central(z));
  CHECK(!is_identity(z));
  CHECK(!is_central(elementary(sl2, 0, F5.one())));
}
