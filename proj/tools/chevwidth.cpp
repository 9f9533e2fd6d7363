#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chevwidth/acceptance.hpp"
#include "chevwidth/constants_table.hpp"
#include "chevwidth/errors.hpp"
#include "chevwidth/io.hpp"

using namespace chevwidth;
using io::json;

namespace {

constexpr int kUsage = 1;
constexpr int kVerification = 2;

struct RunConfig {
  std::uint64_t seed = 7;
  std::string cache_dir;
  bool expensive = false;
  std::string format = "json";
  std::string out;
  std::string config;
};

// Text to emit and the exit code.
struct Outcome {
  std::string text;
  int code = 0;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Flat key = value pairs; strings may be quoted, '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open config " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorCode::ParseError, path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    kv[key] = value;
  }
  return kv;
}

void apply_config(RunConfig& cfg, const CLI::App& app) {
  std::string path = cfg.config;
  if (path.empty()) {
    if (!std::filesystem::exists("chevwidth.toml")) return;
    path = "chevwidth.toml";
  }
  for (const auto& [key, value] : read_config(path)) {
    auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
    if (key == "seed") {
      if (unset("--seed")) cfg.seed = std::stoull(value);
    } else if (key == "cache_dir" || key == "cache-dir") {
      if (unset("--cache-dir")) cfg.cache_dir = value;
    } else if (key == "expensive") {
      require(value == "true" || value == "false", ErrorCode::ParseError, "expensive must be true or false");
      if (unset("--expensive")) cfg.expensive = value == "true";
    } else if (key == "format") {
      require(value == "json" || value == "csv", ErrorCode::ParseError, "format must be json or csv");
      if (unset("--format")) cfg.format = value;
    } else {
      fail(ErrorCode::ParseError, "unknown config key " + key);
    }
  }
}

RepKind default_rep(const RootSystem& R) {
  if (R.type() == 'A') return RepKind::StandardSL;
  if (R.type() == 'C') return RepKind::StandardSp;
  return RepKind::Adjoint;
}

const Representation& pick_rep(const RootSystem& R, const std::string& name) {
  return Representation::get(R, name.empty() ? default_rep(R) : parse_rep_kind(name));
}

void need_json(const RunConfig& cfg, const char* what) {
  require(cfg.format == "json", ErrorCode::ParseError, std::string(what) + " has no CSV form");
}

std::string csv_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "," : "") << r[j];
    out << '\n';
  }
  return out.str();
}

Outcome roots_info(const RunConfig& cfg, const std::string& label) {
  const RootSystem& R = RootSystem::parse(label);
  if (cfg.format == "json") return {io::dump(io::to_json(R))};
  std::ostringstream out;
  out << "index,name,coords,height,long\n";
  for (RootId r = 0; r < R.num_roots(); ++r) {
    out << r << ',' << R.format_root(r) << ',';
    for (std::size_t i = 0; i < R.root(r).coords.size(); ++i) out << (i ? " " : "") << R.root(r).coords[i];
    out << ',' << R.height(r) << ',' << (R.root(r).is_long ? "true" : "false") << '\n';
  }
  return {out.str()};
}

Outcome constants(const RunConfig& cfg, const std::string& label) {
  const RootSystem& R = RootSystem::parse(label);
  const CachedConstants cached = load_constants(R, cfg.cache_dir);
  std::cerr << "constants cache: " << cached.status << "\n";
  if (cfg.format == "csv") return {constants_csv(R)};
  json t = constants_table(R);
  t["hash"] = table_hash(t["entries"]);
  return {io::dump(t)};
}

Outcome verify_commutator_cmd(const RunConfig& cfg, const std::string& system, const std::string& rep_name,
                              const std::string& ring_name, int trials) {
  need_json(cfg, "verify");
  const RootSystem& R = RootSystem::parse(system);
  const Representation& rep = pick_rep(R, rep_name);
  const Ring& K = Ring::parse(ring_name);
  const CachedConstants cached = load_constants(R, cfg.cache_dir);
  std::cerr << "constants cache: " << cached.status << "\n";
  Sampler S(cfg.seed);
  json failures = json::array();
  std::uint64_t pairs = 0, checks = 0;
  for (RootId a = 0; a < R.num_roots(); ++a)
    for (RootId b = 0; b < R.num_roots(); ++b) {
      if (b == a || b == R.negate(a)) continue;
      ++pairs;
      const auto it = cached.table.find({a, b});
      const std::vector<CommutatorTerm> none;
      const auto& terms = it == cached.table.end() ? none : it->second;
      for (int t = 0; t < trials; ++t) {
        const Elem r = S.element(K, K.kind() == RingKind::Integers ? 3 : 1);
        const Elem s = S.element(K, K.kind() == RingKind::Integers ? 3 : 1);
        ++checks;
        if (verify_commutator(rep, a, b, terms, r, s)) continue;
        failures.push_back(json{{"invariant", "commutator formula"},
                                {"pair", {a, b}},
                                {"roots", {R.format_root(a), R.format_root(b)}},
                                {"r", r.to_string()},
                                {"s", s.to_string()}});
        break;
      }
    }
  json report{{"system", R.label()}, {"rep", rep_kind_name(rep.kind())}, {"ring", K.name()}, {"trials", trials},
              {"seed", cfg.seed},    {"pairs", pairs},                   {"checks", checks}, {"failures", failures}};
  return {io::dump(report), failures.empty() ? 0 : kVerification};
}

Outcome groups_form(const RunConfig& cfg, const std::string& system) {
  const RootSystem& R = RootSystem::parse(system);
  require(R.type() == 'C', ErrorCode::UnsupportedRepForType, "the symplectic form belongs to type C");
  const auto J = symplectic_form(R.rank());
  if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : J) {
      rows.emplace_back();
      for (int x : r) rows.back().push_back(std::to_string(x));
    }
    return {csv_matrix(rows)};
  }
  return {io::dump(json{{"system", R.label()}, {"dimension", 2 * R.rank()}, {"form", J}})};
}

SteinbergWord read_word(const RootSystem& R, const Ring& K, const std::string& file) {
  return io::word_from_json(R, K, io::load_file(file));
}

Outcome steinberg_cmd(const RunConfig& cfg, const std::string& action, const std::string& system,
                      const std::string& rep_name, const std::string& ring_name, const std::string& file) {
  need_json(cfg, "steinberg");
  const RootSystem& R = RootSystem::parse(system);
  const Ring& K = Ring::parse(ring_name);
  const SteinbergWord w = read_word(R, K, file);
  if (action == "eval") {
    const Representation& rep = pick_rep(R, rep_name);
    const GroupElement g = word_eval(w, rep);
    return {io::dump(json{{"system", R.label()}, {"rep", rep_kind_name(rep.kind())}, {"ring", K.name()},
                          {"letters", w.size()}, {"matrix", io::to_json(g.matrix)}, {"identity", is_identity(g)}})};
  }
  if (action == "collect") {
    const SteinbergWord c = collect_unipotent(w);
    return {io::dump(json{{"system", R.label()}, {"ring", K.name()}, {"word", io::to_json(c)}})};
  }
  return {io::dump(json{{"system", R.label()}, {"ring", K.name()}, {"verdict", verdict_name(k2_witness(w))}})};
}

Outcome k2_cmd(const RunConfig& cfg, const std::string& action, const std::string& ring_name, const std::string& f,
               const std::string& g, int degree, int budget) {
  need_json(cfg, "k2");
  const Ring& K = Ring::parse(ring_name);
  if (action == "class") {
    require(!f.empty() && !g.empty(), ErrorCode::ParseError, "k2 class needs --f and --g");
    const K2Class c = k2_class(K.parse_elem(f), K.parse_elem(g));
    return {io::dump(io::to_json(c))};
  }
  if (action == "ring") {
    const K2GroupReport r = k2_of_ring(K);
    return {io::dump(io::to_json(r)), r.verified ? 0 : kVerification};
  }
  const ExactSequenceReport r = verify_exact_sequence(K, degree, budget, cfg.seed);
  return {io::dump(io::to_json(r)), r.ok ? 0 : kVerification};
}

Outcome factor_cmd(const RunConfig& cfg, const std::string& ring_name, const std::string& system,
                   const std::string& matrix_file, int random, int letters, int degree) {
  const Ring& K = Ring::parse(ring_name);
  const RootSystem& R = RootSystem::parse(system);
  const Representation& rep = Representation::get(R, RepKind::StandardSL);
  if (!matrix_file.empty()) {
    need_json(cfg, "factor --matrix");
    const Matrix m = io::matrix_from_json(K, io::load_file(matrix_file));
    require(m.rows() == rep.dimension() && m.cols() == rep.dimension(), ErrorCode::RepMismatch,
            "matrix size does not match " + R.label());
    const Factorization f = factor_sln(GroupElement{&rep, m});
    json j = io::to_json(f);
    if (!f.verify()) {
      j["failures"] = json::array({json{{"invariant", "factorization re-multiplies to its target"}}});
      return {io::dump(j), kVerification};
    }
    return {io::dump(j)};
  }
  require(random > 0, ErrorCode::ParseError, "factor needs --matrix or --random");
  Sampler S(cfg.seed);
  std::map<int, int> hist;
  json failures = json::array();
  for (int i = 0; i < random; ++i) {
    const SteinbergWord w = random_elementary_word(S, R, K, letters, degree);
    const GroupElement g = word_eval(w, rep);
    const Factorization f = factor_sln(g);
    ++hist[f.width()];
    if (!f.verify())
      failures.push_back(json{{"invariant", "factorization re-multiplies to its target"}, {"sample", i},
                              {"word", io::to_json(w)}});
  }
  const WidthReferenceLines lines = width_reference_lines(R);
  const int code = failures.empty() ? 0 : kVerification;
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "width,count,reference_sl3_function_rings,reference_l2_positive_roots\n";
    for (const auto& [w, n] : hist) out << w << ',' << n << ',' << lines.sl3_function_rings << ',' << lines.l2_positive_roots << '\n';
    return {out.str(), code};
  }
  json h = json::object();
  for (const auto& [w, n] : hist) h[std::to_string(w)] = n;
  return {io::dump(json{{"system", R.label()},
                        {"ring", K.name()},
                        {"samples", random},
                        {"letters", letters},
                        {"degree", degree},
                        {"seed", cfg.seed},
                        {"histogram", h},
                        {"reference_sl3_function_rings", lines.sl3_function_rings},
                        {"reference_l2_positive_roots", lines.l2_positive_roots},
                        {"failures", failures}}),
          code};
}

Outcome tavgen_cmd(const RunConfig& cfg, const std::string& target, std::uint32_t q, const std::string& subs,
                   int N, bool exhaustive, int walk) {
  need_json(cfg, "tavgen");
  const RootSystem& R = RootSystem::parse(target);
  const Ring& F = Ring::parse("F" + std::to_string(q));
  const Representation& rep = Representation::get(R, default_rep(R));
  std::vector<std::string> labels;
  std::stringstream ss(subs);
  for (std::string item; std::getline(ss, item, ',');) labels.push_back(trim(item));
  std::vector<Subsystem> list;
  if (labels.size() == 1 && labels[0] == R.label()) {
    std::vector<int> all;
    for (int i = 0; i < R.rank(); ++i) all.push_back(i);
    list.push_back({simple_subset_embedding(R, R, all), &rep, product_set_oracle(rep, F, N)});
  } else {
    for (const auto& l : labels)
      require(l == "A2", ErrorCode::InvalidType, "subsystems must be A2 or the whole target, got " + l);
    list = a2_edge_subsystems(R, F, N);
    require(list.size() == labels.size(), ErrorCode::CoverageGap,
            R.label() + " has " + std::to_string(list.size()) + " Dynkin edges but " + std::to_string(labels.size()) +
                " A2 subsystems were given");
  }
  TavgenLift lift(rep, F, std::move(list), N);
  const LiftSweep s = exhaustive ? tavgen_exhaustive(lift) : tavgen_random_walk(lift, walk, cfg.seed);
  json j{{"target", R.label()}, {"rep", rep_kind_name(rep.kind())}, {"field", F.name()}, {"subsystems", labels},
         {"N", N}, {"mode", exhaustive ? "exhaustive" : "walk"}, {"sweep", io::to_json(s)}};
  if (!exhaustive) j["seed"] = cfg.seed;
  return {io::dump(j), s.failures == 0 ? 0 : kVerification};
}

Outcome suite_cmd(const RunConfig& cfg, int only) {
  AcceptanceOptions opt{cfg.seed, cfg.expensive};
  std::vector<CriterionResult> results;
  if (only > 0)
    results.push_back(run_criterion(only, opt));
  else
    results = run_acceptance(opt);
  bool ok = true;
  json arr = json::array();
  std::ostringstream csv;
  csv << "id,title,passed,checks,failures\n";
  for (const auto& r : results) {
    std::cerr << summary_line(r) << "\n";
    ok &= r.passed;
    arr.push_back(to_json(r, false));
    csv << r.id << ',' << r.title << ',' << (r.passed ? "true" : "false") << ',' << r.checks << ',' << r.failures
        << '\n';
  }
  const std::string text =
      cfg.format == "csv" ? csv.str() : io::dump(json{{"seed", cfg.seed}, {"expensive", cfg.expensive}, {"criteria", arr}});
  return {text, ok ? 0 : kVerification};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chevalley group widths, Steinberg relations and K2 computations"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for every random choice");
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached structure-constant tables");
  app.add_flag("--expensive", cfg.expensive, "Include the expensive suites");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Write the artifact to a file instead of stdout");
  app.add_option("--config", cfg.config, "Config file (default: ./chevwidth.toml when present)");

  std::function<Outcome()> action;

  auto* roots = app.add_subcommand("roots", "Root systems")->require_subcommand(1)->fallthrough();
  std::string label;
  roots->add_subcommand("info", "Roots, Cartan matrix and Weyl group order")
      ->fallthrough()
      ->callback([&] { action = [&] { return roots_info(cfg, label); }; })
      ->add_option("system", label, "Type and rank, e.g. A3")
      ->required();

  auto* cons = app.add_subcommand("constants", "Structure-constant table")->fallthrough();
  cons->add_option("system", label)->required();
  cons->callback([&] { action = [&] { return constants(cfg, label); }; });

  std::string system, rep_name, ring_name = "F7", file;
  int trials = 25;
  auto* verify = app.add_subcommand("verify", "Relation checks")->require_subcommand(1)->fallthrough();
  auto* vc = verify->add_subcommand("commutator", "Commutator formula on every ordered root pair")->fallthrough();
  vc->add_option("--system", system)->required();
  vc->add_option("--rep", rep_name)->check(CLI::IsMember({"sl", "sp", "adjoint"}));
  vc->add_option("--ring", ring_name);
  vc->add_option("--trials", trials)->check(CLI::PositiveNumber);
  vc->callback([&] { action = [&] { return verify_commutator_cmd(cfg, system, rep_name, ring_name, trials); }; });

  auto* groups = app.add_subcommand("groups", "Group data")->require_subcommand(1)->fallthrough();
  auto* gf = groups->add_subcommand("form", "The symplectic form J")->fallthrough();
  gf->add_option("--system", system)->required();
  gf->callback([&] { action = [&] { return groups_form(cfg, system); }; });

  auto* st = app.add_subcommand("steinberg", "Steinberg words")->require_subcommand(1)->fallthrough();
  for (const char* name : {"eval", "collect", "k2"}) {
    auto* sub = st->add_subcommand(name, std::string(name) == "eval"      ? "Evaluate a word in a representation"
                                         : std::string(name) == "collect" ? "Normal form of a unipotent word"
                                                                          : "K2 membership witness")
                    ->fallthrough();
    sub->add_option("--system", system)->required();
    sub->add_option("--ring", ring_name);
    sub->add_option("--file", file, "JSON word file")->required();
    if (std::string(name) == "eval") sub->add_option("--rep", rep_name)->check(CLI::IsMember({"sl", "sp", "adjoint"}));
    const std::string act = name;
    sub->callback([&, act] { action = [&, act] { return steinberg_cmd(cfg, act, system, rep_name, ring_name, file); }; });
  }

  std::string f, g;
  int degree = 2, budget = 64;
  auto* k2 = app.add_subcommand("k2", "K2 computations")->require_subcommand(1)->fallthrough();
  auto* k2c = k2->add_subcommand("class", "Residues of the symbol {f, g}")->fallthrough();
  k2c->add_option("--ring", ring_name)->required();
  k2c->add_option("--f", f)->required();
  k2c->add_option("--g", g)->required();
  k2c->callback([&] { action = [&] { return k2_cmd(cfg, "class", ring_name, f, g, degree, budget); }; });
  auto* k2r = k2->add_subcommand("ring", "K2 of F_q[t] or F_q[t,t^-1]")->fallthrough();
  k2r->add_option("--ring", ring_name)->required();
  k2r->callback([&] { action = [&] { return k2_cmd(cfg, "ring", ring_name, f, g, degree, budget); }; });
  auto* k2e = k2->add_subcommand("exact", "Localisation sequence evidence for F_q[t]")->fallthrough();
  k2e->add_option("--ring", ring_name)->required();
  k2e->add_option("--degree", degree)->check(CLI::Range(1, 6));
  k2e->add_option("--budget", budget)->check(CLI::PositiveNumber);
  k2e->callback([&] { action = [&] { return k2_cmd(cfg, "exact", ring_name, f, g, degree, budget); }; });

  std::string matrix_file;
  int random = 0, letters = 20;
  auto* fac = app.add_subcommand("factor", "Elementary factorisation in SL_n")->fallthrough();
  fac->add_option("--ring", ring_name)->required();
  fac->add_option("--system", system)->required();
  fac->add_option("--matrix", matrix_file, "JSON matrix file");
  fac->add_option("--random", random, "Factor this many sampled elements and report widths");
  fac->add_option("--letters", letters)->check(CLI::PositiveNumber);
  fac->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  fac->callback([&] {
    action = [&] { return factor_cmd(cfg, ring_name, system, matrix_file, random, letters, degree); };
  });

  std::string target, subs;
  std::uint32_t q = 2;
  int N = 4, walk = 1000;
  bool exhaustive = false;
  auto* tav = app.add_subcommand("tavgen", "Lift unitriangular forms from subsystems")->fallthrough();
  tav->add_option("--target", target)->required();
  tav->add_option("--field", q, "Field order")->required();
  tav->add_option("--subsystems", subs)->required();
  tav->add_option("--N", N)->check(CLI::Range(1, 5));
  tav->add_flag("--exhaustive", exhaustive, "Every element of the group");
  tav->add_option("--walk", walk, "Random-walk length when not exhaustive")->check(CLI::PositiveNumber);
  tav->callback([&] { action = [&] { return tavgen_cmd(cfg, target, q, subs, N, exhaustive, walk); }; });

  int criterion = 0;
  auto* suite = app.add_subcommand("suite", "Test batteries")->require_subcommand(1)->fallthrough();
  auto* acc = suite->add_subcommand("acceptance", "Acceptance criteria 1 to 8")->fallthrough();
  acc->add_option("--criterion", criterion)->check(CLI::Range(1, 8));
  acc->callback([&] { action = [&] { return suite_cmd(cfg, criterion); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  Outcome result;
  try {
    apply_config(cfg, app);
    result = action();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalError) {
      std::cout << io::dump(json{{"failures", {json{{"invariant", e.what()}}}}});
      return kVerification;
    }
    std::cerr << json{{"error", std::string(error_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  if (cfg.out.empty())
    std::cout << result.text;
  else
    io::write_file(cfg.out, result.text);
  return result.code;
}
