#include "chevwidth/errors.hpp"
#include "chevwidth/factor.hpp"
#include "chevwidth/sampling.hpp"
#include "chevwidth/tavgen.hpp"
#include "doctest.h"

using namespace chevwidth;

namespace {

const RootSystem& sys(const char* label) { return RootSystem::parse(label); }
const Representation& sl(const RootSystem& R) { return Representation::get(R, RepKind::StandardSL); }

// The SL3 block of an SL4 matrix spanned by rows and columns [o, o+3).
Matrix block3(const Matrix& m, int o) {
  Matrix b(m.ring(), 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = m.at(o + i, o + j);
  return b;
}

}  // namespace

TEST_CASE("basis signs make root elements agree on the embedded block") {
  const RootSystem& A2 = sys("A2");
  const RootSystem& A3 = sys("A3");
  const Ring& Z = Ring::integers();
  for (int o : {0, 1}) {
    const BasisEmbedding be = basis_embedding(simple_subset_embedding(A2, A3, {o, o + 1}));
    for (RootId a = 0; a < A2.num_roots(); ++a) {
      CAPTURE(o);
      CAPTURE(a);
      REQUIRE((be.sign[a] == 1 || be.sign[a] == -1));
      const Letter t = be.to_target({a, Z.from_int(5)});
      const Matrix big = elementary(sl(A3), t.root, t.param).matrix;
      CHECK(block3(big, o) == elementary(sl(A2), a, Z.from_int(5)).matrix);
      CHECK(be.to_source(t) == Letter{a, Z.from_int(5)});
    }
  }
  for (const char* label : {"D4", "E6", "A4"}) {
    const RootSystem& T = sys(label);
    for (int i = 0; i + 1 < T.rank(); ++i) {
      if (T.cartan()[i][i + 1] == 0) continue;
      CHECK_NOTHROW(basis_embedding(simple_subset_embedding(A2, T, {i, i + 1})));
    }
  }
  CHECK_NOTHROW(basis_embedding(make_embedding(EmbeddingKind::DlinDl1, sys("D5"))));
}

TEST_CASE("construction errors") {
  const RootSystem& A2 = sys("A2");
  const RootSystem& A3 = sys("A3");
  const Ring& F2 = Ring::parse("F2");
  const Representation& s2 = sl(A2);
  std::vector<Subsystem> one{{simple_subset_embedding(A2, A3, {0, 1}), &s2, product_set_oracle(s2, F2, 4)}};
  try {
    TavgenLift lift(sl(A3), F2, one, 4);
    FAIL("expected CoverageGap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CoverageGap);
  }
  const RootSystem& G2 = sys("G2");
  std::vector<Subsystem> longs{{make_embedding(EmbeddingKind::A2LongRoots, G2), &s2, product_set_oracle(s2, F2, 4)}};
  try {
    TavgenLift lift(Representation::get(G2, RepKind::Adjoint), F2, longs, 4);
    FAIL("expected InvalidType");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidType);
  }
  CHECK_THROWS_AS(a2_edge_subsystems(sys("B3"), F2, 4), Error);
}

TEST_CASE("a single subsystem covering everything passes through") {
  const RootSystem& A2 = sys("A2");
  const Ring& F3 = Ring::parse("F3");
  const Representation& rep = sl(A2);
  TavgenLift lift(rep, F3, {{simple_subset_embedding(A2, A2, {0, 1}), &rep, product_set_oracle(rep, F3, 4)}}, 4);
  const LiftSweep s = tavgen_random_walk(lift, 200, 7);
  CHECK(s.failures == 0);
  CHECK(s.lifts == 200);
}

TEST_CASE("SL4(F2) from two A2 subsystems, every element") {
  const RootSystem& A3 = sys("A3");
  const Ring& F2 = Ring::parse("F2");
  TavgenLift lift(sl(A3), F2, a2_edge_subsystems(A3, F2, 4), 4);
  const LiftSweep s = tavgen_exhaustive(lift);
  CHECK(s.elements == 20160);
  CHECK(s.lifts == 20159);
  CHECK(s.failures == 0);
  CHECK(s.max_width <= 4 * 6);
  // Independent count: every element already lies in U+ U- U+ U-.
  CHECK(product_sets(sl(A3), F2, 4).size(4) == 20160);
}

TEST_CASE("D4(F2) adjoint random walk through three A2 subsystems") {
  const RootSystem& D4 = sys("D4");
  const Ring& F2 = Ring::parse("F2");
  const auto subs = a2_edge_subsystems(D4, F2, 4);
  CHECK(subs.size() == 3);
  TavgenLift lift(Representation::get(D4, RepKind::Adjoint), F2, subs, 4);
  const LiftSweep s = tavgen_random_walk(lift, 1000, 2024);
  CHECK(s.lifts == 1000);
  CHECK(s.failures == 0);
}

TEST_CASE("words with arbitrary root letters and factored matrices") {
  const RootSystem& A3 = sys("A3");
  const Ring& F3 = Ring::parse("F3");
  TavgenLift lift(sl(A3), F3, a2_edge_subsystems(A3, F3, 4), 4);
  Sampler rng(11);
  for (RootId g = 0; g < A3.num_roots(); ++g) {
    SteinbergWord one(A3, F3, {{g, F3.from_int(2)}});
    SteinbergWord expanded(A3, F3, lift.simple_letters(g, F3.from_int(2)));
    CHECK(word_eval(expanded, sl(A3)) == word_eval(one, sl(A3)));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const SteinbergWord w = random_elementary_word(rng, A3, F3, 8, 0);
    const UnitriangularForm f = lift.lift_word(w);
    CHECK(verify_form(f, word_eval(w, sl(A3))));
    const GroupElement g = word_eval(w, sl(A3));
    CHECK(verify_form(lift.lift(g), g));
  }
}
