#include "chevwidth/ktheory.hpp"

#include <set>
#include <sstream>

#include "chevwidth/errors.hpp"
#include "chevwidth/sampling.hpp"

namespace chevwidth {

namespace {

Elem to_rf(const Elem& f) { return f.ring().to_fraction(f); }

const Ring& rf_of(const Ring& r) { return r.fraction_field(); }

Elem poly_in(const Ring& K, const Poly& p) { return K.from_poly(p); }

std::vector<FieldCode> nonzero_codes(const FiniteField& F) {
  std::vector<FieldCode> out;
  for (FieldCode c = 1; c < F.order(); ++c) out.push_back(c);
  return out;
}

}  // namespace

ResidueFieldElement tame_symbol(const Place& v, const Elem& f, const Elem& g) {
  require(!f.is_zero() && !g.is_zero(), ErrorCode::ZeroElement, "tame symbol of zero");
  const Elem F = to_rf(f), G = to_rf(g);
  const std::int64_t a = valuation(v, F), b = valuation(v, G);
  Elem h = G.pow(a) * F.pow(-b);
  if ((a * b) % 2 != 0) h = -h;
  return residue(v, h);
}

ResidueFieldElement K2Class::at(const Place& v) const {
  auto it = residues.find(v);
  return it == residues.end() ? residue_one(v) : it->second;
}

std::vector<Place> K2Class::support() const {
  std::vector<Place> out;
  for (const auto& [p, r] : residues) out.push_back(p);
  return out;
}

K2Class K2Class::operator+(const K2Class& o) const {
  require(field == o.field, ErrorCode::DescriptorMismatch, "K2 classes over different fields");
  K2Class r = *this;
  for (const auto& [p, x] : o.residues) {
    auto it = r.residues.find(p);
    if (it == r.residues.end()) {
      r.residues.emplace(p, x);
      continue;
    }
    it->second = it->second * x;
    if (it->second.is_one()) r.residues.erase(it);
  }
  return r;
}

K2Class K2Class::operator-() const {
  K2Class r = *this;
  for (auto& [p, x] : r.residues) x = x.inverse();
  return r;
}

std::string K2Class::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, x] : residues) {
    os << (first ? "" : ", ") << p.to_string() << ": " << x.to_string();
    first = false;
  }
  os << '}';
  return os.str();
}

K2Class k2_class(const Elem& f, const Elem& g) {
  require(!f.is_zero() && !g.is_zero(), ErrorCode::ZeroElement, "symbol with a zero entry");
  const Elem F = to_rf(f), G = to_rf(g);
  require(F.ring_ptr() == G.ring_ptr(), ErrorCode::DescriptorMismatch, "symbol entries over different fields");
  K2Class c = K2Class::zero(F.ring());
  std::set<Place> places;
  for (const auto& p : finite_support(F)) places.insert(p);
  for (const auto& p : finite_support(G)) places.insert(p);
  for (const auto& p : places) {
    auto r = tame_symbol(p, F, G);
    if (!r.is_one()) c.residues.emplace(p, r);
  }
  return c;
}

FieldCode reciprocity_product(const Elem& f, const Elem& g) {
  const Elem F = to_rf(f), G = to_rf(g);
  const FiniteField& Fq = F.ring().field();
  FieldCode prod = 1;
  for (const auto& [p, r] : k2_class(F, G).residues) prod = Fq.mul(prod, r.norm());
  return Fq.mul(prod, tame_symbol(Place::at_infinity(F.ring()), F, G).norm());
}

K2Class splitting_map(const Ring& ring, const Elem& u) {
  const Ring& K = rf_of(ring);
  const Elem U = to_rf(u);
  require(U.ring_ptr() == &K, ErrorCode::DescriptorMismatch, "unit over a different field");
  const Fraction& fr = U.fraction();
  require(!fr.num.is_zero() && fr.num.degree() == 0 && fr.den.degree() == 0, ErrorCode::NotAUnit,
          u.to_string() + " is not in F_q^*");
  return k2_class(K.variable(), U);
}

std::vector<std::pair<Elem, Elem>> symbols_for_residue(const ResidueFieldElement& target, int budget) {
  const Place& v = target.place;
  require(!v.infinite, ErrorCode::InvalidType, "targets live at finite places");
  const Ring& K = *v.field;
  const Elem pi = poly_in(K, v.pi);
  if (target.is_one()) return {{pi, K.one()}};
  require(budget >= 1, ErrorCode::BudgetExceeded, "symbol budget exhausted");
  const Elem h = poly_in(K, target.value);
  std::vector<std::pair<Elem, Elem>> out{{pi, h}};
  // {pi, h} leaves residues pi^{-v_rho(h)} at the places rho dividing h,
  // all of smaller degree; cancel each one recursively.
  const K2Class c = k2_class(pi, h);
  for (const auto& [rho, r] : c.residues) {
    if (rho == v) continue;
    auto more = symbols_for_residue(r.inverse(), budget - static_cast<int>(out.size()));
    out.insert(out.end(), more.begin(), more.end());
    require(static_cast<int>(out.size()) <= budget, ErrorCode::BudgetExceeded, "symbol budget exhausted");
  }
  return out;
}

ExactSequenceReport verify_exact_sequence(const Ring& ring, int max_degree, int budget, std::uint64_t seed) {
  require(ring.kind() == RingKind::Poly, ErrorCode::UnsupportedRing, "the exact sequence is checked for F_q[t]");
  const Ring& K = rf_of(ring);
  ExactSequenceReport rep;
  rep.ring = ring.name();
  rep.max_degree = max_degree;
  bool ok = true;
  for (const auto& p : finite_places(K, max_degree)) {
    SurjectivityWitness w{p, residue_generator(p), symbols_for_residue(residue_generator(p), budget), false};
    K2Class sum = K2Class::zero(K);
    for (const auto& [f, g] : w.symbols) sum = sum + k2_class(f, g);
    K2Class expect = K2Class::zero(K);
    if (!w.target.is_one()) expect.residues.emplace(p, w.target);
    w.verified = (sum == expect);
    ok &= w.verified;
    rep.surjectivity.push_back(std::move(w));
  }
  // Kernel samples: constant symbols and Steinberg relations have no finite
  // residues and are the zero class.
  Sampler S(seed);
  const FiniteField& F = K.field();
  for (int i = 0; i < 50; ++i) {
    const Elem c = K.constant(S.nonzero_code(F)), d = K.constant(S.nonzero_code(F));
    ++rep.kernel_samples;
    if (!k2_class(c, d).is_zero()) ++rep.kernel_failures;
    const Elem f = K.from_poly(S.poly(F, 3));
    if (f.is_zero() || f.is_one()) continue;
    ++rep.kernel_samples;
    if (!k2_class(f, K.one() - f).is_zero()) ++rep.kernel_failures;
  }
  rep.ok = ok && rep.kernel_failures == 0;
  return rep;
}

K2GroupReport k2_of_ring(const Ring& ring) {
  require(ring.kind() == RingKind::Poly || ring.kind() == RingKind::Laurent, ErrorCode::UnsupportedRing,
          "K2 reports cover F_q[t] and F_q[t,t^-1], not " + ring.name());
  const Ring& K = rf_of(ring);
  const FiniteField& F = K.field();
  const auto units = nonzero_codes(F);
  K2GroupReport rep;
  rep.ring = ring.name();
  auto certify = [&](std::string kind, std::string detail, bool ok) {
    rep.certificates.push_back({std::move(kind), std::move(detail), ok});
    rep.verified &= ok;
  };

  if (ring.kind() == RingKind::Poly) {
    rep.order = 1;
    rep.structure = "trivial";
    int checked = 0;
    bool ok = true;
    for (FieldCode c : units)
      for (FieldCode d : units) {
        if (checked >= 1024) break;
        ok &= k2_class(K.constant(c), K.constant(d)).is_zero();
        ++checked;
      }
    certify("unit-symbols", std::to_string(checked) + " symbols {c, d} of units are zero", ok);
    const auto seq = verify_exact_sequence(ring, 2, 64, 0);
    certify("localisation", std::to_string(seq.surjectivity.size()) + " residue generators hit, " +
                                std::to_string(seq.kernel_samples) + " kernel samples",
            seq.ok);
    return rep;
  }

  rep.order = F.order() - 1;
  rep.structure = rep.order == 1 ? "trivial" : "cyclic of order " + std::to_string(rep.order) + ", u -> {t, u}";
  const Place t0 = Place::finite(K, Poly::monomial(1, 1));
  const Elem t = K.variable();
  if (rep.order > 1) {
    const FieldCode g = F.primitive_element();
    rep.generators.push_back({"t", F.format(g)});
    rep.generator_classes.push_back(splitting_map(ring, K.constant(g)));
  }
  bool roundtrip = true, distinct = true;
  std::vector<K2Class> seen;
  for (FieldCode u : units) {
    K2Class c = splitting_map(ring, K.constant(u));
    roundtrip &= (c.at(t0) == residue_constant(t0, u));
    roundtrip &= c.support().size() <= 1;
    for (const auto& s : seen) distinct &= !(s == c);
    seen.push_back(std::move(c));
  }
  certify("splitting-roundtrip", "residue at (t) of {t, u} is u for all " + std::to_string(units.size()) + " units",
          roundtrip);
  certify("pairwise-distinct", "the classes {t, u} are pairwise distinct", distinct);
  bool support = true;
  int checked = 0;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j)
      for (std::size_t k = 0; k < units.size() && k < 8; ++k) {
        const FieldCode c = units[k], d = units[(k * 3 + 1) % units.size()];
        const K2Class cls = k2_class(K.constant(c) * t.pow(i), K.constant(d) * t.pow(j));
        for (const auto& p : cls.support()) support &= (p == t0);
        ++checked;
      }
  certify("unit-symbol-support", std::to_string(checked) + " symbols of units c t^i, d t^j supported at (t)",
          support);
  return rep;
}

}  // namespace chevwidth
