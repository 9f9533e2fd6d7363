#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chevwidth/acceptance.hpp"
#include "chevwidth/constants_table.hpp"
#include "chevwidth/errors.hpp"
#include "chevwidth/io.hpp"

namespace py = pybind11;
using namespace chevwidth;
using io::json;

namespace {

const Representation& rep_for(const RootSystem& R, const std::string& kind) {
  if (!kind.empty()) return Representation::get(R, parse_rep_kind(kind));
  if (R.type() == 'A') return Representation::get(R, RepKind::StandardSL);
  if (R.type() == 'C') return Representation::get(R, RepKind::StandardSp);
  return Representation::get(R, RepKind::Adjoint);
}

std::string roots_info(const std::string& label) { return io::to_json(RootSystem::parse(label)).dump(); }

std::string constants(const std::string& label) {
  json t = constants_table(RootSystem::parse(label));
  t["hash"] = table_hash(t["entries"]);
  return t.dump();
}

std::string verify_commutator_json(const std::string& system, const std::string& ring, const std::string& rep_kind,
                                   int trials, std::uint64_t seed) {
  const RootSystem& R = RootSystem::parse(system);
  const Representation& rep = rep_for(R, rep_kind);
  const Ring& K = Ring::parse(ring);
  Sampler S(seed);
  json failures = json::array();
  std::uint64_t pairs = 0;
  for (RootId a = 0; a < R.num_roots(); ++a)
    for (RootId b = 0; b < R.num_roots(); ++b) {
      if (b == a || b == R.negate(a)) continue;
      ++pairs;
      for (int t = 0; t < trials; ++t) {
        const Elem r = S.element(K, K.kind() == RingKind::Integers ? 3 : 1);
        const Elem s = S.element(K, K.kind() == RingKind::Integers ? 3 : 1);
        if (!verify_commutator(rep, a, b, r, s)) {
          failures.push_back(json{{"pair", {a, b}}, {"r", r.to_string()}, {"s", s.to_string()}});
          break;
        }
      }
    }
  return json{{"system", R.label()}, {"rep", rep_kind_name(rep.kind())}, {"ring", K.name()}, {"pairs", pairs},
              {"failures", failures}}
      .dump();
}

std::string eval_word(const std::string& system, const std::string& rep_kind, const std::string& ring,
                      const std::string& word) {
  const RootSystem& R = RootSystem::parse(system);
  const Ring& K = Ring::parse(ring);
  const GroupElement g = word_eval(io::word_from_json(R, K, json::parse(word)), rep_for(R, rep_kind));
  return json{{"matrix", io::to_json(g.matrix)}, {"identity", is_identity(g)}}.dump();
}

std::string collect_word(const std::string& system, const std::string& ring, const std::string& word) {
  const RootSystem& R = RootSystem::parse(system);
  const Ring& K = Ring::parse(ring);
  return io::to_json(collect_unipotent(io::word_from_json(R, K, json::parse(word)))).dump();
}

std::string k2_witness_json(const std::string& system, const std::string& ring, const std::string& word) {
  const RootSystem& R = RootSystem::parse(system);
  const Ring& K = Ring::parse(ring);
  return verdict_name(k2_witness(io::word_from_json(R, K, json::parse(word))));
}

std::string k2_class_json(const std::string& ring, const std::string& f, const std::string& g) {
  const Ring& K = Ring::parse(ring);
  return io::to_json(k2_class(K.parse_elem(f), K.parse_elem(g))).dump();
}

std::string factor_json(const std::string& ring, const std::string& system, const std::string& matrix) {
  const Ring& K = Ring::parse(ring);
  const Representation& rep = Representation::get(RootSystem::parse(system), RepKind::StandardSL);
  return io::to_json(factor_sln(GroupElement{&rep, io::matrix_from_json(K, json::parse(matrix))})).dump();
}

std::string unitriangular_json(const std::string& system, const std::string& field, const std::string& matrix,
                               int N) {
  const RootSystem& R = RootSystem::parse(system);
  const Ring& F = Ring::parse(field);
  const GroupElement g{&rep_for(R, ""), io::matrix_from_json(F, json::parse(matrix))};
  const auto f = unitriangular_membership(g, N);
  return f ? io::to_json(*f).dump() : "null";
}

std::string tavgen_json(const std::string& target, std::uint32_t q, int N, bool exhaustive, int walk,
                        std::uint64_t seed) {
  const RootSystem& R = RootSystem::parse(target);
  const Ring& F = Ring::parse("F" + std::to_string(q));
  TavgenLift lift(rep_for(R, ""), F, a2_edge_subsystems(R, F, N), N);
  return io::to_json(exhaustive ? tavgen_exhaustive(lift) : tavgen_random_walk(lift, walk, seed)).dump();
}

std::string acceptance_json(int criterion, std::uint64_t seed, bool expensive) {
  const AcceptanceOptions opt{seed, expensive};
  json out = json::array();
  if (criterion > 0)
    out.push_back(to_json(run_criterion(criterion, opt), false));
  else
    for (const auto& r : run_acceptance(opt)) out.push_back(to_json(r, false));
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_chevwidth, m) {
  m.doc() = "Chevalley groups over finite fields and function rings: roots, relations, K2, widths";
  py::register_exception<Error>(m, "ChevwidthError");

  m.def("roots_info", &roots_info, py::arg("system"));
  m.def("constants", &constants, py::arg("system"));
  m.def("verify_commutator", &verify_commutator_json, py::arg("system"), py::arg("ring"), py::arg("rep") = "",
        py::arg("trials") = 25, py::arg("seed") = 7);
  m.def("symplectic_form", &symplectic_form, py::arg("rank"));
  m.def("eval_word", &eval_word, py::arg("system"), py::arg("rep"), py::arg("ring"), py::arg("word"));
  m.def("collect", &collect_word, py::arg("system"), py::arg("ring"), py::arg("word"));
  m.def("k2_witness", &k2_witness_json, py::arg("system"), py::arg("ring"), py::arg("word"));
  m.def("k2_class", &k2_class_json, py::arg("ring"), py::arg("f"), py::arg("g"));
  m.def("k2_ring", [](const std::string& ring) { return io::to_json(k2_of_ring(Ring::parse(ring))).dump(); },
        py::arg("ring"));
  m.def("factor", &factor_json, py::arg("ring"), py::arg("system"), py::arg("matrix"));
  m.def("unitriangular", &unitriangular_json, py::arg("system"), py::arg("field"), py::arg("matrix"), py::arg("N"));
  m.def("tavgen", &tavgen_json, py::arg("target"), py::arg("field"), py::arg("N") = 4, py::arg("exhaustive") = false,
        py::arg("walk") = 1000, py::arg("seed") = 7);
  m.def("acceptance", &acceptance_json, py::arg("criterion") = 0, py::arg("seed") = 7, py::arg("expensive") = false);
}
