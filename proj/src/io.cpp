#include "chevwidth/io.hpp"

#include <fstream>
#include <sstream>

#include "chevwidth/errors.hpp"

namespace chevwidth::io {

namespace {

json codes(const Poly& p) {
  json a = json::array();
  for (FieldCode c : p.coeffs) a.push_back(c);
  return a;
}

Poly poly_from(const Ring& ring, const json& a) {
  require(a.is_array(), ErrorCode::ParseError, "coefficient list expected");
  const FiniteField& F = ring.field();
  std::vector<FieldCode> c;
  for (const auto& x : a) {
    require(x.is_number_integer(), ErrorCode::ParseError, "coefficients must be integers");
    const auto v = x.get<std::int64_t>();
    if (F.degree() == 1)
      c.push_back(F.from_int(v));
    else {
      require(v >= 0 && static_cast<std::uint64_t>(v) < F.order(), ErrorCode::ParseError, "field code out of range");
      c.push_back(static_cast<FieldCode>(v));
    }
  }
  return Poly(std::move(c));
}

}  // namespace

json to_json(const Elem& e) {
  const Ring& R = e.ring();
  json j;
  j["ring"] = R.name();
  switch (R.kind()) {
    case RingKind::Integers:
      j["coeffs"] = json::array({e.scalar()});
      break;
    case RingKind::Field:
      j["coeffs"] = json::array({e.scalar()});
      break;
    case RingKind::Poly:
      j["coeffs"] = codes(e.poly());
      break;
    case RingKind::Laurent:
      j["low"] = e.laurent().low;
      j["coeffs"] = codes(e.laurent().body);
      break;
    case RingKind::RationalFunction:
      j["num"] = codes(e.fraction().num);
      j["den"] = codes(e.fraction().den);
      break;
  }
  j["text"] = R.format(e);
  return j;
}

Elem elem_from_json(const Ring& ring, const json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
  if (j.is_string()) return ring.parse_elem(j.get<std::string>());
  require(j.is_object(), ErrorCode::ParseError, "element must be an object, integer or string");
  if (j.contains("ring"))
    require(j["ring"].get<std::string>() == ring.name(), ErrorCode::DescriptorMismatch,
            "element of " + j["ring"].get<std::string>() + " where " + ring.name() + " was expected");
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Field: {
      const auto& c = j.at("coeffs");
      require(c.is_array() && c.size() <= 1, ErrorCode::ParseError, "constant expected");
      if (c.empty()) return ring.zero();
      if (ring.kind() == RingKind::Integers) return ring.from_int(c[0].get<std::int64_t>());
      const Poly p = poly_from(ring, c);
      return ring.field_elem(p.coeff(0));
    }
    case RingKind::Poly:
      return ring.from_poly(poly_from(ring, j.at("coeffs")));
    case RingKind::Laurent:
      return ring.from_laurent(j.value("low", std::int64_t{0}), poly_from(ring, j.at("coeffs")));
    case RingKind::RationalFunction:
      return ring.from_fraction(poly_from(ring, j.at("num")), poly_from(ring, j.value("den", json::array({1}))));
  }
  fail(ErrorCode::ParseError, "unknown ring kind");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.ring().format(m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return json{{"ring", m.ring().name()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Ring& ring, const json& j) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  require(rows.is_array() && !rows.empty(), ErrorCode::ParseError, "matrix rows expected");
  std::vector<std::vector<Elem>> out;
  for (const auto& r : rows) {
    require(r.is_array() && r.size() == rows[0].size(), ErrorCode::ParseError, "ragged matrix");
    std::vector<Elem> row;
    for (const auto& x : r) row.push_back(elem_from_json(ring, x));
    out.push_back(std::move(row));
  }
  return Matrix::from_rows(ring, out);
}

Matrix matrix_from_json(const json& j) {
  require(j.is_object() && j.contains("ring"), ErrorCode::ParseError, "matrix file needs a ring descriptor");
  return matrix_from_json(Ring::parse(j["ring"].get<std::string>()), j);
}

json to_json(const SteinbergWord& w) {
  json a = json::array();
  for (const auto& l : w.letters) a.push_back(json{{"root", l.root}, {"param", to_json(l.param)}});
  return a;
}

SteinbergWord word_from_json(const RootSystem& system, const Ring& ring, const json& j) {
  const json& letters = j.is_object() ? j.at("letters") : j;
  require(letters.is_array(), ErrorCode::ParseError, "word must be an array of letters");
  SteinbergWord w(system, ring);
  for (const auto& l : letters) {
    require(l.is_object() && l.contains("root") && l.contains("param"), ErrorCode::ParseError,
            "letter needs root and param");
    const int root = l["root"].get<int>();
    require(root >= 0 && root < system.num_roots(), ErrorCode::ParseError, "root index out of range");
    w.append(root, elem_from_json(ring, l["param"]));
  }
  return w;
}

json to_json(const RootSystem& R) {
  json roots = json::array();
  for (RootId r = 0; r < R.num_roots(); ++r)
    roots.push_back(json{{"index", r},
                         {"coords", R.root(r).coords},
                         {"height", R.height(r)},
                         {"long", R.root(r).is_long},
                         {"name", R.format_root(r)}});
  return json{{"system", R.label()},
              {"rank", R.rank()},
              {"num_roots", R.num_roots()},
              {"num_positive", R.num_positive()},
              {"weyl_order", R.weyl_order()},
              {"cartan", R.cartan()},
              {"roots", std::move(roots)}};
}

json to_json(const UnitriangularForm& f) {
  json blocks = json::array();
  for (int k = 0; k < f.length(); ++k)
    blocks.push_back(json{{"sign", f.sign_of(k) > 0 ? "+" : "-"}, {"letters", to_json(f.blocks[k])}});
  return json{{"system", f.system->label()}, {"ring", f.ring->name()}, {"length", f.length()},
              {"width", f.width()}, {"blocks", std::move(blocks)}};
}

json to_json(const Factorization& f) {
  return json{{"system", f.rep->system().label()},
              {"rep", rep_kind_name(f.rep->kind())},
              {"ring", f.target.ring().name()},
              {"target", to_json(f.target)},
              {"width", f.width()},
              {"factors", to_json(f.word())},
              {"verified", f.verify()}};
}

json to_json(const Place& v) { return json(v.to_string()); }

json to_json(const K2Class& c) {
  json m = json::object();
  for (const auto& [v, r] : c.residues) m[v.to_string()] = r.to_string();
  return m;
}

json to_json(const K2GroupReport& r) {
  json gens = json::array();
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    json g{{"f", r.generators[i].f}, {"g", r.generators[i].g}};
    if (i < r.generator_classes.size()) g["class"] = to_json(r.generator_classes[i]);
    gens.push_back(std::move(g));
  }
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(json{{"kind", c.kind}, {"detail", c.detail}, {"ok", c.ok}});
  return json{{"ring", r.ring}, {"order", r.order}, {"structure", r.structure}, {"generators", std::move(gens)},
              {"certificates", std::move(certs)}, {"verified", r.verified}};
}

json to_json(const ExactSequenceReport& r) {
  json wit = json::array();
  for (const auto& w : r.surjectivity) {
    json syms = json::array();
    for (const auto& [f, g] : w.symbols) syms.push_back(json{{"f", f.to_string()}, {"g", g.to_string()}});
    wit.push_back(json{{"place", w.place.to_string()}, {"target", w.target.to_string()},
                       {"symbols", std::move(syms)}, {"verified", w.verified}});
  }
  return json{{"ring", r.ring},
              {"max_degree", r.max_degree},
              {"surjectivity", std::move(wit)},
              {"kernel_samples", r.kernel_samples},
              {"kernel_failures", r.kernel_failures},
              {"ok", r.ok}};
}

json to_json(const LiftSweep& s) {
  return json{{"elements", s.elements}, {"lifts", s.lifts}, {"failures", s.failures}, {"max_width", s.max_width}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace chevwidth::io
