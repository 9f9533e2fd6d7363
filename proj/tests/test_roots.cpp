#include <deque>
#include <set>

#include "chevwidth/errors.hpp"
#include "chevwidth/roots.hpp"
#include "doctest.h"

using namespace chevwidth;

namespace {

struct Case {
  char type;
  int rank;
  int positives;
  std::uint64_t weyl;
};

const Case kCases[] = {
    {'A', 1, 1, 2},        {'A', 2, 3, 6},        {'A', 3, 6, 24},         {'A', 4, 10, 120},
    {'B', 2, 4, 8},        {'B', 3, 9, 48},       {'B', 4, 16, 384},       {'C', 2, 4, 8},
    {'C', 3, 9, 48},       {'C', 4, 16, 384},     {'D', 4, 12, 192},       {'D', 5, 20, 1920},
    {'E', 6, 36, 51840},   {'E', 7, 63, 2903040}, {'E', 8, 120, 696729600}, {'F', 4, 24, 1152},
    {'G', 2, 6, 12},
};

// Independent oracle: close the simple roots under the simple reflections,
// computed directly from the Gram matrix.
std::set<std::vector<int>> reflection_closure(const RootSystem& R) {
  const int l = R.rank();
  const auto& g = R.gram();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<int> c(l, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      int ip = 0;
      for (int j = 0; j < l; ++j) ip += v[j] * g[j][i];
      const int k = 2 * ip / g[i][i];
      auto w = v;
      w[i] -= k;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("root counts, closure oracle and Weyl orders") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    CAPTURE(c.rank);
    const RootSystem& R = RootSystem::get(c.type, c.rank);
    CHECK(R.num_positive() == c.positives);
    const auto closure = reflection_closure(R);
    CHECK(static_cast<int>(closure.size()) == R.num_roots());
    for (RootId r = 0; r < R.num_roots(); ++r) CHECK(closure.count(R.root(r).coords) == 1);
    CHECK(R.weyl_order() == c.weyl);
  }
}

TEST_CASE("build_root_system examples") {
  const RootSystem& a2 = RootSystem::parse("A2");
  CHECK(a2.num_roots() == 6);
  CHECK(a2.num_positive() == 3);
  const RootSystem& g2 = RootSystem::parse("G2");
  CHECK(g2.num_roots() == 12);
  int longs = 0;
  for (const auto& r : g2.roots()) longs += r.is_long;
  CHECK(longs == 6);
  const RootSystem& e8 = RootSystem::parse("E8");
  CHECK(e8.num_roots() == 240);
  CHECK(e8.num_positive() == 120);
  CHECK_THROWS_AS(RootSystem::get('G', 3), Error);
  CHECK_THROWS_AS(RootSystem::get('B', 1), Error);
  CHECK_THROWS_AS(RootSystem::parse("X2"), Error);
}

TEST_CASE("structural invariants") {
  for (const auto& c : kCases) {
    const RootSystem& R = RootSystem::get(c.type, c.rank);
    // Sign-uniform coordinates, negation layout, order by height.
    for (RootId r = 0; r < R.num_positive(); ++r) {
      for (int x : R.root(r).coords) CHECK(x >= 0);
      for (int k = 0; k < R.rank(); ++k) CHECK(R.root(R.negate(r)).coords[k] == -R.root(r).coords[k]);
      if (r > 0) CHECK(R.height(r - 1) <= R.height(r));
    }
    for (int i = 0; i < R.rank(); ++i) CHECK(R.height(R.simple(i)) == 1);
    for (int i = 0; i < R.rank(); ++i)
      for (int j = 0; j < R.rank(); ++j) {
        const int a = R.cartan()[i][j];
        if (i == j) CHECK(a == 2);
        else CHECK((a == 0 || a == -1 || a == -2 || a == -3));
      }
  }
}

TEST_CASE("root strings") {
  const RootSystem& a2 = RootSystem::parse("A2");
  CHECK(a2.root_string(0, 1) == std::pair{0, 1});
  const RootSystem& g2 = RootSystem::parse("G2");
  CHECK(g2.root_string(0, 1) == std::pair{0, 3});  // alpha_1 short, alpha_2 long
  const RootSystem& a3 = RootSystem::parse("A3");
  CHECK(a3.root_string(0, 2) == std::pair{0, 0});
  CHECK_THROWS_AS(a3.root_string(0, a3.negate(0)), Error);

  for (const auto& c : kCases) {
    const RootSystem& R = RootSystem::get(c.type, c.rank);
    for (RootId a = 0; a < R.num_roots(); ++a)
      for (RootId b = 0; b < R.num_roots(); ++b) {
        if (b == a || b == R.negate(a)) continue;
        auto [p, q] = R.root_string(a, b);
        CHECK(p - q == R.pairing(b, a));
        CHECK(p + q <= 3);
        if (p + q == 3) CHECK(c.type == 'G');
      }
  }
}

TEST_CASE("reflections") {
  const RootSystem& a2 = RootSystem::parse("A2");
  CHECK(a2.reflect(0, 0) == a2.negate(0));
  CHECK(a2.root(a2.reflect(0, 1)).coords == std::vector<int>{1, 1});
  std::set<RootId> orbit{0, 1};
  bool grew = true;
  while (grew) {
    grew = false;
    for (RootId r : std::set<RootId>(orbit))
      for (int i = 0; i < 2; ++i) grew |= orbit.insert(a2.reflect(i, r)).second;
  }
  CHECK(orbit.size() == 6);
  for (const auto& c : kCases) {
    const RootSystem& R = RootSystem::get(c.type, c.rank);
    for (RootId a = 0; a < R.num_roots(); a += 3)
      for (RootId b = 0; b < R.num_roots(); ++b) CHECK(R.reflect(a, R.reflect(a, b)) == b);
  }
}

TEST_CASE("embeddings") {
  const RootSystem& g2 = RootSystem::parse("G2");
  auto e = make_embedding(EmbeddingKind::A2LongRoots, g2);
  std::set<RootId> image(e.root_map.begin(), e.root_map.end());
  CHECK(image.size() == 6);
  for (RootId r : image) CHECK(g2.root(r).is_long);

  const RootSystem& e6 = RootSystem::parse("E6");
  auto d5 = make_embedding(EmbeddingKind::D5inE6, e6);
  // Image is the subsystem generated by alpha_1..alpha_5 (no alpha_6 component).
  CHECK(d5.root_map.size() == 40);
  for (RootId r : d5.root_map) CHECK(e6.root(r).coords[5] == 0);
  CHECK(d5.is_standard_levi());

  const RootSystem& d4 = RootSystem::parse("D4");
  auto a3 = make_embedding(EmbeddingKind::A3Standard, d4);
  CHECK(a3(0) == 0);  // outer node
  CHECK(a3(1) == 1);  // branch node
  CHECK(a3(2) == 2);  // outer node

  CHECK_THROWS_AS(make_embedding(EmbeddingKind::A2LongRoots, RootSystem::parse("C2")), Error);
  CHECK_THROWS_AS(make_embedding(EmbeddingKind::A2LongRoots, RootSystem::parse("C3")), Error);
  CHECK_NOTHROW(make_embedding(EmbeddingKind::A2LongRoots, RootSystem::parse("F4")));
  CHECK_NOTHROW(make_embedding(EmbeddingKind::A3Standard, RootSystem::parse("B3")));
  CHECK_NOTHROW(make_embedding(EmbeddingKind::DlinDl1, RootSystem::parse("D5")));
  CHECK_NOTHROW(make_embedding(EmbeddingKind::ElinEl1, RootSystem::parse("E7")));
  CHECK_NOTHROW(make_embedding(EmbeddingKind::ElinEl1, RootSystem::parse("E8")));

  // Every embedding preserves root strings.
  std::vector<SystemEmbedding> all = {e, d5, a3,
                                      make_embedding(EmbeddingKind::A2LongRoots, RootSystem::parse("F4")),
                                      make_embedding(EmbeddingKind::A3Standard, RootSystem::parse("B3")),
                                      make_embedding(EmbeddingKind::DlinDl1, RootSystem::parse("D5")),
                                      make_embedding(EmbeddingKind::ElinEl1, RootSystem::parse("E7"))};
  for (const auto& emb : all) {
    const auto& S = *emb.source;
    const auto& T = *emb.target;
    for (RootId a = 0; a < S.num_roots(); ++a)
      for (RootId b = 0; b < S.num_roots(); ++b) {
        if (b == a || b == S.negate(a)) continue;
        CHECK(S.root_string(a, b) == T.root_string(emb(a), emb(b)));
      }
  }
}
