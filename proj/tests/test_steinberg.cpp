#include <string>

#include "chevwidth/errors.hpp"
#include "chevwidth/sampling.hpp"
#include "chevwidth/steinberg.hpp"
#include "doctest.h"

using namespace chevwidth;

namespace {

std::vector<Elem> units_of(const Ring& F) {
  std::vector<Elem> out;
  for (FieldCode c = 1; c < F.field().order(); ++c) out.push_back(F.field_elem(c));
  return out;
}

SteinbergWord random_word(Sampler& S, const RootSystem& R, const Ring& K, int len, int sign = 0) {
  SteinbergWord w(R, K);
  for (int i = 0; i < len; ++i) {
    RootId a = static_cast<RootId>(S.uniform(0, R.num_positive() - 1));
    if (sign < 0 || (sign == 0 && S.uniform(0, 1))) a = R.negate(a);
    w.append(a, S.element(K, 2));
  }
  return w;
}

}  // namespace

TEST_CASE("word evaluation") {
  const Ring& F5 = Ring::parse("F5");
  const RootSystem& A1 = RootSystem::parse("A1");
  const auto& sl2 = Representation::get(A1, RepKind::StandardSL);
  CHECK(is_identity(word_eval(SteinbergWord(A1, F5), sl2)));
  CHECK(word_eval(w_word(A1, 0, F5.one()), sl2) == w_element(sl2, 0, F5.one()));
  CHECK_THROWS_AS(word_eval(SteinbergWord(RootSystem::parse("A2"), F5), sl2), Error);

  Sampler S(1);
  for (const char* ring : {"F5", "F2[t]", "Z"}) {
    const Ring& K = Ring::parse(ring);
    for (const char* sys : {"A2", "C2", "G2"}) {
      const RootSystem& R = RootSystem::parse(sys);
      const auto& rho = Representation::get(R, R.type() == 'A' ? RepKind::StandardSL
                                                : R.type() == 'C' ? RepKind::StandardSp
                                                                  : RepKind::Adjoint);
      for (int t = 0; t < 100; ++t) {
        auto w1 = random_word(S, R, K, 4), w2 = random_word(S, R, K, 4);
        CHECK(word_eval(w1 * w2, rho) == word_eval(w1, rho) * word_eval(w2, rho));
        if (t % 10 == 0) CHECK(is_identity(word_eval(w1 * w1.inverse(), rho)));
      }
    }
  }
}

TEST_CASE("symbols evaluate to the identity") {
  const RootSystem& A1 = RootSystem::parse("A1");
  const Ring& F5 = Ring::parse("F5");
  auto w = symbol_word(A1, {0, F5.one(), F5.from_int(3)});
  CHECK(w.size() == 12);
  CHECK(is_identity(word_eval(w, Representation::get(A1, RepKind::StandardSL))));
  CHECK_THROWS_AS(symbol_word(A1, {0, F5.zero(), F5.one()}), Error);

  int count = 0;
  for (const auto& u : units_of(F5))
    for (const auto& v : units_of(F5)) {
      CHECK(is_identity(word_eval(symbol_word(A1, {0, u, v}), Representation::get(A1, RepKind::StandardSL))));
      ++count;
    }
  CHECK(count == 16);

  const RootSystem& C2 = RootSystem::parse("C2");
  const Ring& F3 = Ring::parse("F3");
  count = 0;
  for (const auto& u : units_of(F3))
    for (const auto& v : units_of(F3)) {
      CHECK(is_identity(word_eval(symbol_word(C2, {1, u, v}), Representation::get(C2, RepKind::StandardSp))));
      ++count;
    }
  CHECK(count == 4);

  // h_a(u) is not the identity for u != 1, so the word itself is nontrivial.
  const auto& sl2 = Representation::get(A1, RepKind::StandardSL);
  CHECK(!is_identity(word_eval(h_word(A1, 0, F5.from_int(2)), sl2)));
}

TEST_CASE("symbols commute with words after evaluation") {
  Sampler S(9);
  const Ring& F7 = Ring::parse("F7");
  const RootSystem& A2 = RootSystem::parse("A2");
  const auto& sl3 = Representation::get(A2, RepKind::StandardSL);
  for (int t = 0; t < 30; ++t) {
    auto w = random_word(S, A2, F7, 6);
    auto s = symbol_word(A2, {static_cast<RootId>(S.uniform(0, 5)), S.unit(F7, 0), S.unit(F7, 0)});
    CHECK(word_eval(w * s, sl3) == word_eval(s * w, sl3));
    CHECK(word_eval(w * s, sl3) == word_eval(w, sl3));
  }
}

TEST_CASE("collection") {
  const Ring& F5 = Ring::parse("F5");
  const RootSystem& A2 = RootSystem::parse("A2");
  const Elem r = F5.from_int(2), s = F5.from_int(3);

  auto c1 = collect_unipotent(SteinbergWord(A2, F5, {{0, r}, {0, r}}));
  CHECK(c1 == SteinbergWord(A2, F5, {{0, r + r}}));
  CHECK(collect_unipotent(SteinbergWord(A2, F5, {{0, r}, {0, s}})).empty());

  const auto& adj = Representation::get(A2, RepKind::Adjoint);
  const auto& sl3 = Representation::get(A2, RepKind::StandardSL);
  SteinbergWord w(A2, F5, {{1, s}, {0, r}});
  auto c2 = collect_unipotent(w);
  REQUIRE(c2.size() == 3);
  CHECK(c2.letters[0] == Letter{0, r});
  CHECK(c2.letters[1] == Letter{1, s});
  CHECK(c2.letters[2].root == 2);
  const int n = ChevalleyBasis::get(A2).N(0, 1);
  CHECK((c2.letters[2].param == r * s * F5.from_int(-n)));
  CHECK(word_eval(c2, adj) == word_eval(w, adj));
  CHECK(word_eval(c2, sl3) == word_eval(w, sl3));

  CHECK_THROWS_AS(collect_unipotent(SteinbergWord(A2, F5, {{0, r}, {3, s}})), Error);

  Sampler S(4);
  for (const char* ring : {"F7", "F3[t]", "Z"}) {
    const Ring& K = Ring::parse(ring);
    for (const char* sys : {"G2", "A3", "C3", "B3"}) {
      const RootSystem& R = RootSystem::parse(sys);
      const auto& rho = Representation::get(R, RepKind::Adjoint);
      for (int t = 0; t < 10; ++t) {
        for (int sign : {1, -1}) {
          auto w0 = random_word(S, R, K, 10, sign);
          auto c = collect_unipotent(w0);
          CHECK(c.size() <= static_cast<std::size_t>(R.num_positive()));
          for (std::size_t k = 1; k < c.size(); ++k) CHECK(c.letters[k - 1].root < c.letters[k].root);
          CHECK(word_eval(c, rho) == word_eval(w0, rho));
        }
      }
    }
  }
}

TEST_CASE("K2 witness") {
  const Ring& F5 = Ring::parse("F5");
  const RootSystem& A2 = RootSystem::parse("A2");
  CHECK(k2_witness(symbol_word(A2, {0, F5.from_int(2), F5.from_int(3)})) == K2Verdict::InK2);
  CHECK(k2_witness(SteinbergWord(A2, F5, {{0, F5.one()}})) == K2Verdict::NotInK2);
  CHECK(k2_witness(symbol_word(RootSystem::parse("C3"), {2, F5.from_int(2), F5.from_int(4)})) == K2Verdict::InK2);
  CHECK(k2_witness(symbol_word(RootSystem::parse("G2"), {1, F5.from_int(2), F5.from_int(4)})) == K2Verdict::InK2);

  // h_{a1}(-1) h_{a3}(-1) is a nontrivial central element of Spin_8.
  const RootSystem& D4 = RootSystem::parse("D4");
  const Elem m1 = -F5.one();
  auto z = h_word(D4, 0, m1) * h_word(D4, 2, m1);
  CHECK(k2_witness(z) == K2Verdict::UnknownModuloCenter);
  CHECK(k2_witness(h_word(D4, 0, m1)) == K2Verdict::NotInK2);
  CHECK(verdict_name(K2Verdict::UnknownModuloCenter) == "UnknownModuloCenter");
}
