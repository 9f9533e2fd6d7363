#include "chevwidth/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>

#include "chevwidth/errors.hpp"
#include "chevwidth/sampling.hpp"

namespace chevwidth {

namespace {

class Tally {
 public:
  explicit Tally(CriterionResult& r) : r_(r) {}

  void check(bool ok, const std::function<io::json()>& describe) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.failure_samples.size() < 10) r_.failure_samples.push_back(describe());
  }

 private:
  CriterionResult& r_;
};

std::vector<Elem> field_elements(const Ring& F, bool units_only) {
  std::vector<Elem> out;
  for (FieldCode c = units_only ? 1 : 0; c < F.field().order(); ++c) out.push_back(F.field_elem(c));
  return out;
}

void commutator_suite(CriterionResult& res, const AcceptanceOptions& opt) {
  struct Case {
    const char* system;
    RepKind kind;
  };
  std::vector<Case> cases{{"A2", RepKind::StandardSL}, {"A3", RepKind::StandardSL}, {"C2", RepKind::StandardSp},
                          {"C3", RepKind::StandardSp}, {"D4", RepKind::Adjoint},    {"G2", RepKind::Adjoint}};
  if (opt.expensive) cases.push_back({"F4", RepKind::Adjoint});
  Tally t(res);
  Sampler S(opt.seed);
  io::json pairs = io::json::object();
  for (const auto& c : cases) {
    const Representation& rep = Representation::get(RootSystem::parse(c.system), c.kind);
    const RootSystem& R = rep.system();
    std::uint64_t npairs = 0;
    for (const char* rn : {"F5", "F7", "Z"}) {
      const Ring& K = Ring::parse(rn);
      for (RootId a = 0; a < R.num_roots(); ++a)
        for (RootId b = 0; b < R.num_roots(); ++b) {
          if (a == b || b == R.negate(a)) continue;
          ++npairs;
          for (int trial = 0; trial < 25; ++trial) {
            const Elem r = K.is_finite_field() ? S.element(K, 0) : K.from_int(S.uniform(-3, 3));
            const Elem s = K.is_finite_field() ? S.element(K, 0) : K.from_int(S.uniform(-3, 3));
            t.check(verify_commutator(rep, a, b, r, s), [&] {
              return io::json{{"invariant", "commutator formula"}, {"rep", rep.name()}, {"ring", K.name()},
                              {"pair", {a, b}}, {"r", r.to_string()}, {"s", s.to_string()}};
            });
          }
        }
    }
    pairs[rep.name()] = npairs;
  }
  res.details["ordered_pairs"] = pairs;
  res.details["trials_per_pair"] = 25;
  res.details["expensive"] = opt.expensive;
}

void a1_relation(CriterionResult& res) {
  Tally t(res);
  const Representation& sl2 = Representation::get(RootSystem::parse("A1"), RepKind::StandardSL);
  for (const char* q : {"F2", "F3", "F4", "F5", "F7", "F9"}) {
    const Ring& F = Ring::parse(q);
    for (const auto& u : field_elements(F, true)) {
      const GroupElement w = w_element(sl2, 0, u);
      const GroupElement winv = w.inverse();
      for (const auto& r : field_elements(F, false))
        t.check(w * elementary(sl2, 0, r) * winv == elementary(sl2, 1, -(u.pow(-2) * r)), [&] {
          return io::json{{"invariant", "w_a(u) x_a(r) w_a(u)^-1 = x_-a(-u^-2 r)"}, {"ring", q},
                          {"u", u.to_string()}, {"r", r.to_string()}};
        });
    }
  }
}

void symbol_triviality(CriterionResult& res) {
  Tally t(res);
  const std::vector<std::pair<const char*, RepKind>> groups{
      {"A1", RepKind::StandardSL}, {"A2", RepKind::StandardSL}, {"C2", RepKind::StandardSp}};
  for (const auto& [sys, kind] : groups) {
    const Representation& rep = Representation::get(RootSystem::parse(sys), kind);
    const RootSystem& R = rep.system();
    for (const char* q : {"F2", "F3", "F5", "F7", "F9"}) {
      const Ring& F = Ring::parse(q);
      const auto units = field_elements(F, true);
      for (RootId a = 0; a < R.num_roots(); ++a)
        for (const auto& u : units)
          for (const auto& v : units)
            t.check(is_identity(word_eval(symbol_word(R, {a, u, v}), rep)), [&] {
              return io::json{{"invariant", "symbol evaluates to the identity"}, {"rep", rep.name()}, {"ring", q},
                              {"root", a}, {"u", u.to_string()}, {"v", v.to_string()}};
            });
    }
  }
}

void unitriangular(CriterionResult& res) {
  Tally t(res);
  const Representation& sl3 = Representation::get(RootSystem::parse("A2"), RepKind::StandardSL);
  const Ring& F3 = Ring::parse("F3");
  const std::uint64_t order3 = generated_group_order(sl3, F3);
  const ProductSets& ps = product_sets(sl3, F3, 4);
  t.check(order3 == 5616 && ps.size(4) == order3, [&] {
    return io::json{{"invariant", "U+U-U+U- = SL3(F3)"}, {"group_order", order3}, {"product_set", ps.size(4)}};
  });
  for (int k = 1; k < 4; ++k)
    t.check(ps.size(k) <= ps.size(k + 1), [&] { return io::json{{"invariant", "product sets grow with N"}, {"k", k}}; });
  std::uint64_t covered = 0;
  for (const auto& g : ps.elements(4)) {
    const auto f = ps.find(g);
    const bool ok = f && verify_form(*f, g);
    covered += ok;
    t.check(ok, [&] { return io::json{{"invariant", "form re-evaluates"}, {"matrix", io::to_json(g.matrix)}}; });
  }
  res.details["SL3(F3)"] = {{"group_order", order3}, {"covered", covered}};

  const RootSystem& A3 = RootSystem::parse("A3");
  const Representation& sl4 = Representation::get(A3, RepKind::StandardSL);
  const Ring& F2 = Ring::parse("F2");
  TavgenLift lift(sl4, F2, a2_edge_subsystems(A3, F2, 4), 4);
  const LiftSweep sweep = tavgen_exhaustive(lift);
  const std::uint64_t ps4 = product_sets(sl4, F2, 4).size(4);
  t.check(sweep.elements == 20160 && sweep.failures == 0 && ps4 == 20160, [&] {
    return io::json{{"invariant", "every SL4(F2) element has a lifted length-4 form"},
                    {"sweep", io::to_json(sweep)}, {"product_set", ps4}};
  });
  res.details["SL4(F2)"] = {{"lift", io::to_json(sweep)}, {"product_set", ps4}};
}

void k2_model(CriterionResult& res, const AcceptanceOptions& opt) {
  Tally t(res);
  Sampler S(opt.seed);
  for (const char* name : {"F2(t)", "F3(t)", "F5(t)"}) {
    const Ring& K = Ring::parse(name);
    for (int i = 0; i < 200; ++i) {
      const Elem f1 = S.nonzero(K, 3), f2 = S.nonzero(K, 3), g = S.nonzero(K, 3);
      auto desc = [&](const char* inv) {
        return [&, inv] {
          return io::json{{"invariant", inv}, {"field", name}, {"f1", f1.to_string()}, {"f2", f2.to_string()},
                          {"g", g.to_string()}};
        };
      };
      t.check(k2_class(f1 * f2, g) == k2_class(f1, g) + k2_class(f2, g), desc("bimultiplicativity"));
      t.check((k2_class(f1, g) + k2_class(g, f1)).is_zero(), desc("antisymmetry"));
      if (!f1.is_one()) t.check(k2_class(f1, K.one() - f1).is_zero(), desc("{f, 1-f} = 0"));
      t.check(reciprocity_product(f1, g) == 1, desc("norm reciprocity"));
    }
  }
  res.details["samples_per_field"] = 200;
}

void k2_rings(CriterionResult& res) {
  Tally t(res);
  for (int q : {2, 3, 5}) {
    const std::string p = "F" + std::to_string(q);
    const K2GroupReport poly = k2_of_ring(Ring::parse(p + "[t]"));
    t.check(poly.order == 1 && poly.verified && !poly.certificates.empty(),
            [&] { return io::json{{"invariant", "K2(Fq[t]) trivial"}, {"report", io::to_json(poly)}}; });
    const K2GroupReport lau = k2_of_ring(Ring::parse(p + "[t,t^-1]"));
    bool split = false, distinct = false;
    for (const auto& c : lau.certificates) {
      split |= c.kind == "splitting-roundtrip" && c.ok;
      distinct |= c.kind == "pairwise-distinct" && c.ok;
    }
    t.check(lau.order == std::uint64_t(q - 1) && lau.verified && split && distinct,
            [&] { return io::json{{"invariant", "K2(Fq[t,t^-1]) of order q-1"}, {"report", io::to_json(lau)}}; });
    res.details[p] = {{"polynomial_order", poly.order}, {"laurent_order", lau.order}};
  }
}

void factor_roundtrips(CriterionResult& res, const AcceptanceOptions& opt) {
  Tally t(res);
  Sampler S(opt.seed);
  io::json hist = io::json::object();
  for (const char* sys : {"A1", "A2"}) {
    const RootSystem& R = RootSystem::parse(sys);
    const Representation& rep = Representation::get(R, RepKind::StandardSL);
    const WidthReferenceLines lines = width_reference_lines(R);
    for (const char* rn : {"F2[t]", "F3[t]", "F2[t,t^-1]"}) {
      const Ring& K = Ring::parse(rn);
      std::map<int, int> widths;
      for (int i = 0; i < 500; ++i) {
        const SteinbergWord w = random_elementary_word(S, R, K, 20, 2);
        const GroupElement g = word_eval(w, rep);
        const Factorization f = factor_sln(g);
        ++widths[f.width()];
        t.check(f.verify() && f.target == g.matrix, [&] {
          return io::json{{"invariant", "factorization re-multiplies to its target"}, {"rep", rep.name()},
                          {"ring", rn}, {"word", io::to_json(w)}};
        });
      }
      io::json h = io::json::object();
      for (const auto& [wd, n] : widths) h[std::to_string(wd)] = n;
      hist[std::string("SL") + std::to_string(R.rank() + 1) + "/" + rn] = {
          {"histogram", h},
          {"max_width", widths.rbegin()->first},
          {"reference_sl3_function_rings", lines.sl3_function_rings},
          {"reference_l2_positive_roots", lines.l2_positive_roots}};
    }
  }
  res.details["widths"] = hist;
}

void structure_constants(CriterionResult& res) {
  Tally t(res);
  std::vector<std::string> systems;
  for (int l = 1; l <= 7; ++l) systems.push_back("A" + std::to_string(l));
  for (int l = 2; l <= 6; ++l) systems.push_back("B" + std::to_string(l));
  for (int l = 2; l <= 6; ++l) systems.push_back("C" + std::to_string(l));
  for (int l = 4; l <= 7; ++l) systems.push_back("D" + std::to_string(l));
  for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) systems.emplace_back(s);
  io::json maxima = io::json::object();
  for (const auto& label : systems) {
    const RootSystem& R = RootSystem::parse(label);
    const ChevalleyBasis& B = ChevalleyBasis::get(R);
    int max_abs = 0;
    for (RootId a = 0; a < R.num_roots(); ++a)
      for (RootId b = 0; b < R.num_roots(); ++b) {
        if (!R.sum(a, b)) continue;
        const int n = B.N(a, b);
        const int p = R.root_string(a, b).first;
        max_abs = std::max(max_abs, std::abs(n));
        t.check(std::abs(n) == p + 1 && (!R.simply_laced() || std::abs(n) == 1), [&] {
          return io::json{{"invariant", "|N_ab| = p + 1"}, {"system", label}, {"pair", {a, b}}, {"N", n}, {"p", p}};
        });
      }
    maxima[label] = max_abs;
  }
  t.check(maxima["G2"] == 3, [] { return io::json{{"invariant", "G2 has |N| = 3"}}; });
  t.check(maxima["F4"] == 2, [] { return io::json{{"invariant", "F4 has |N| = 2"}}; });
  res.details["max_abs_N"] = maxima;
}

const char* title_of(int id) {
  switch (id) {
    case 1: return "commutator formula";
    case 2: return "A1 relation";
    case 3: return "symbol triviality";
    case 4: return "unitriangular factorisation";
    case 5: return "K2 residue model";
    case 6: return "K2 of Fq[t] and Fq[t,t^-1]";
    case 7: return "factorization round-trips";
    case 8: return "structure constants";
    default: fail(ErrorCode::InvalidType, "criteria are numbered 1 to 8");
  }
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = id;
  r.title = title_of(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: commutator_suite(r, opt); break;
      case 2: a1_relation(r); break;
      case 3: symbol_triviality(r); break;
      case 4: unitriangular(r); break;
      case 5: k2_model(r, opt); break;
      case 6: k2_rings(r); break;
      case 7: factor_roundtrips(r, opt); break;
      case 8: structure_constants(r); break;
    }
  } catch (const Error& e) {
    ++r.failures;
    r.failure_samples.push_back(io::json{{"invariant", "no library error"}, {"error", e.what()}});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.failures == 0 && r.checks > 0;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "criterion %d: %s %s (%llu checks, %llu failures, %.2f s)", r.id,
                r.passed ? "PASS" : "FAIL", r.title.c_str(), static_cast<unsigned long long>(r.checks),
                static_cast<unsigned long long>(r.failures), r.seconds);
  return buf;
}

io::json to_json(const CriterionResult& r, bool with_timing) {
  io::json j{{"id", r.id},
             {"title", r.title},
             {"passed", r.passed},
             {"checks", r.checks},
             {"failures", r.failures},
             {"failure_samples", r.failure_samples},
             {"details", r.details}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace chevwidth
