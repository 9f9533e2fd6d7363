#include <string>

#include "chevwidth/errors.hpp"
#include "chevwidth/factor.hpp"
#include "doctest.h"

using namespace chevwidth;

namespace {

const Representation& sl(int n) { return Representation::get(RootSystem::get('A', n - 1), RepKind::StandardSL); }

GroupElement from_rows(const Representation& rep, const Ring& R, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Elem>> e;
  for (const auto& r : rows) {
    e.emplace_back();
    for (const auto& s : r) e.back().push_back(R.parse_elem(s));
  }
  return {&rep, Matrix::from_rows(R, e)};
}

}  // namespace

TEST_CASE("factor_sl2 examples") {
  const Ring& F5 = Ring::parse("F5");
  CHECK(factor_sl2(identity_element(sl(2), F5)).width() == 0);
  auto w = factor_sl2(from_rows(sl(2), F5, {{"0", "1"}, {"-1", "0"}}));
  CHECK(w.width() == 3);
  CHECK(w.word() == w_word(RootSystem::get('A', 1), 0, F5.one()));

  const Ring& P2 = Ring::parse("F2[t]");
  auto f = factor_sl2(from_rows(sl(2), P2, {{"1+t^2", "t"}, {"t", "1"}}));
  CHECK(f.verify());

  CHECK_THROWS_AS(factor_sl2(from_rows(sl(2), F5, {{"2", "0"}, {"0", "1"}})), Error);
  CHECK_THROWS_AS(factor_sl2(from_rows(sl(2), Ring::parse("F5(t)"), {{"1", "t"}, {"0", "1"}})), Error);
  try {
    factor_sl2(from_rows(sl(2), F5, {{"2", "0"}, {"0", "1"}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnimodular);
  }
}

TEST_CASE("factor_sl2 over fields has width at most 4") {
  for (const char* q : {"F2", "F3", "F4", "F5", "F9"}) {
    const Ring& F = Ring::parse(q);
    const std::uint32_t n = F.field().order();
    int count = 0;
    for (FieldCode a = 0; a < n; ++a)
      for (FieldCode b = 0; b < n; ++b)
        for (FieldCode c = 0; c < n; ++c)
          for (FieldCode d = 0; d < n; ++d) {
            const Elem A = F.field_elem(a), B = F.field_elem(b), C = F.field_elem(c), D = F.field_elem(d);
            if (!(A * D - B * C).is_one()) continue;
            auto f = factor_sl2({&sl(2), Matrix::from_rows(F, {{A, B}, {C, D}})});
            CHECK(f.width() <= 4);
            ++count;
          }
    CHECK(count == static_cast<int>(n * (n * n - 1)));
  }
}

TEST_CASE("round trips over Euclidean rings") {
  Sampler S(17);
  for (const char* ring : {"Z", "F2[t]", "F3[t]", "F2[t,t^-1]", "F5[t,t^-1]", "F9[t]"}) {
    CAPTURE(std::string(ring));
    const Ring& R = Ring::parse(ring);
    for (int n : {2, 3, 4}) {
      const auto& rep = sl(n);
      for (int t = 0; t < 40; ++t) {
        auto w = random_elementary_word(S, rep.system(), R, 20, R.kind() == RingKind::Integers ? 1 : 2);
        auto g = word_eval(w, rep);
        auto f = factor_sln(g);
        CHECK(f.verify());
      }
    }
  }
}

TEST_CASE("factor_sln examples") {
  const Ring& F3 = Ring::parse("F3");
  CHECK(factor_sln(identity_element(sl(3), F3)).width() == 0);
  auto g = from_rows(sl(4), F3, {{"0", "1", "0", "0"}, {"-1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "-1", "0"}});
  auto f = factor_sln(g);
  CHECK(f.width() == 6);
  CHECK(f.verify());
  auto h = from_rows(sl(3), F3, {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "-1", "0"}});
  CHECK(factor_sln(h).width() == 3);

  const auto lines = width_reference_lines(RootSystem::parse("A2"));
  CHECK(lines.sl3_function_rings == 65);
  CHECK(lines.l2_positive_roots == 195);

  Sampler S(500);
  const Ring& P3 = Ring::parse("F3[t]");
  int ok = 0;
  for (int t = 0; t < 500; ++t) {
    auto m = word_eval(random_elementary_word(S, sl(3).system(), P3, 20, 2), sl(3));
    ok += factor_sln(m).verify();
  }
  CHECK(ok == 500);
}

TEST_CASE("unipotent decomposition agrees with collection") {
  Sampler S(8);
  struct Case {
    const char* sys;
    RepKind kind;
  };
  for (auto c : {Case{"A3", RepKind::StandardSL}, Case{"C3", RepKind::StandardSp}, Case{"G2", RepKind::Adjoint},
                 Case{"B3", RepKind::Adjoint}}) {
    const RootSystem& R = RootSystem::parse(c.sys);
    const auto& rep = Representation::get(R, c.kind);
    for (const char* ring : {"F7", "F2[t]", "Z"}) {
      const Ring& K = Ring::parse(ring);
      for (int t = 0; t < 10; ++t)
        for (int sign : {1, -1}) {
          SteinbergWord w(R, K);
          for (int i = 0; i < 8; ++i) {
            RootId a = static_cast<RootId>(S.uniform(0, R.num_positive() - 1));
            w.append(sign > 0 ? a : R.negate(a), S.element(K, 1));
          }
          CHECK(decompose_unipotent(word_eval(w, rep), sign) == collect_unipotent(w));
        }
    }
  }
  const Ring& F5 = Ring::parse("F5");
  CHECK_THROWS_AS(decompose_unipotent(elementary(sl(3), 3, F5.one()), 1), Error);
}
