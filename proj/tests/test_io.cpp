#include "chevwidth/errors.hpp"
#include "chevwidth/io.hpp"
#include "chevwidth/sampling.hpp"
#include "doctest.h"

using namespace chevwidth;
using io::json;

TEST_CASE("element encoding") {
  const Ring& P = Ring::parse("F5[t]");
  const Elem e = P.parse_elem("1+2*t^2");
  const json j = io::to_json(e);
  CHECK(j["ring"] == "F5[t]");
  CHECK(j["coeffs"] == json::array({1, 0, 2}));
  CHECK(io::elem_from_json(P, json::parse(R"({"ring":"F5[t]","coeffs":[1,0,2]})")) == e);
  CHECK(io::elem_from_json(P, json("t^2*2+1")) == e);
  CHECK(io::elem_from_json(P, json(7)) == P.from_int(2));

  const Ring& L = Ring::parse("F5[t,t^-1]");
  const json jl = json::parse(R"({"ring":"F5[t,t^-1]","low":-1,"coeffs":[1,1]})");
  CHECK(io::elem_from_json(L, jl) == L.parse_elem("t^-1+1"));
  CHECK_THROWS_AS(io::elem_from_json(P, jl), Error);

  Sampler s(3);
  for (const char* d : {"Z", "F7", "F9", "F4[t]", "F3[t,t^-1]", "F5(t)", "F9[t]"}) {
    const Ring& R = Ring::parse(d);
    for (int i = 0; i < 30; ++i) {
      const Elem x = s.element(R, 3);
      CAPTURE(d);
      CHECK(io::elem_from_json(R, io::to_json(x)) == x);
      CHECK(io::elem_from_json(R, json::parse(io::to_json(x).dump())) == x);
    }
  }
}

TEST_CASE("matrices and words") {
  const Ring& R = Ring::parse("F3[t]");
  const RootSystem& A2 = RootSystem::parse("A2");
  Sampler s(5);
  const SteinbergWord w = random_elementary_word(s, A2, R, 6, 2);
  CHECK(io::word_from_json(A2, R, io::to_json(w)) == w);
  const Matrix m = word_eval(w, Representation::get(A2, RepKind::StandardSL)).matrix;
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK_THROWS_AS(io::word_from_json(A2, R, json::parse(R"([{"root":9,"param":1}])")), Error);
  CHECK_THROWS_AS(io::matrix_from_json(R, json::parse(R"([[1,0],[0]])")), Error);
}

TEST_CASE("report shapes") {
  const json r = io::to_json(RootSystem::parse("A3"));
  CHECK(r["num_roots"] == 12);
  CHECK(r["num_positive"] == 6);
  CHECK(r["weyl_order"] == 24);
  CHECK(r["roots"].size() == 12);
  const json k = io::to_json(k2_of_ring(Ring::parse("F5[t,t^-1]")));
  CHECK(k["order"] == 4);
  CHECK(k["verified"] == true);
  const Ring& F = Ring::parse("F3(t)");
  const json c = io::to_json(k2_class(F.parse_elem("t^2+1"), F.parse_elem("t")));
  CHECK(c.is_object());
  CHECK(io::dump(c).back() == '\n');
}
