#include "chevwidth/tavgen.hpp"

#include <deque>
#include <unordered_map>

#include "chevwidth/errors.hpp"
#include "chevwidth/factor.hpp"
#include "chevwidth/sampling.hpp"

namespace chevwidth {

Letter BasisEmbedding::to_target(const Letter& l) const {
  const Elem p = sign.at(l.root) > 0 ? l.param : -l.param;
  return {map(l.root), p};
}

Letter BasisEmbedding::to_source(const Letter& l) const {
  const auto pre = map.preimage(l.root);
  require(pre.has_value(), ErrorCode::NoSuchEmbedding, "root outside the embedded subsystem");
  const Elem p = sign.at(*pre) > 0 ? l.param : -l.param;
  return {*pre, p};
}

BasisEmbedding basis_embedding(const SystemEmbedding& e) {
  const RootSystem& S = *e.source;
  const ChevalleyBasis& BS = ChevalleyBasis::get(S);
  const ChevalleyBasis& BT = ChevalleyBasis::get(*e.target);
  BasisEmbedding out{e, std::vector<int>(S.num_roots(), 0)};
  auto& c = out.sign;
  for (int i = 0; i < S.rank(); ++i) c[S.simple(i)] = c[S.negate(S.simple(i))] = 1;
  auto ratio = [&](RootId a, RootId b) {
    const int ns = BS.N(a, b);
    const int nt = BT.N(e(a), e(b));
    require(ns != 0 && (nt == ns || nt == -ns), ErrorCode::NoSuchEmbedding,
            "structure constants differ in magnitude under the embedding");
    return nt / ns;
  };
  for (RootId xi = S.rank(); xi < S.num_positive(); ++xi) {
    const auto [a, b] = BS.extraspecial_pair(xi);
    c[xi] = c[a] * c[b] * ratio(a, b);
    const RootId na = S.negate(a), nb = S.negate(b);
    c[S.negate(xi)] = c[na] * c[nb] * ratio(na, nb);
  }
  for (RootId a = 0; a < S.num_roots(); ++a)
    for (RootId b = 0; b < S.num_roots(); ++b) {
      const auto s = S.sum(a, b);
      if (!s) continue;
      require(BS.N(a, b) * c[*s] == c[a] * c[b] * BT.N(e(a), e(b)), ErrorCode::NoSuchEmbedding,
              "no consistent basis signs for the embedding");
    }
  return out;
}

FormOracle product_set_oracle(const Representation& rep, const Ring& field, int N) {
  const ProductSets* sets = &product_sets(rep, field, N, true);
  return [sets](const GroupElement& g) { return sets->find(g); };
}

namespace {

SteinbergWord concat(const RootSystem& R, const Ring& K, const std::vector<const SteinbergWord*>& parts) {
  SteinbergWord w(R, K);
  for (const auto* p : parts) w.letters.insert(w.letters.end(), p->letters.begin(), p->letters.end());
  return w;
}

}  // namespace

TavgenLift::TavgenLift(const Representation& target, const Ring& ring, std::vector<Subsystem> subsystems, int N)
    : target_(&target), ring_(&ring), N_(N), subs_(std::move(subsystems)) {
  const RootSystem& R = target.system();
  require(N >= 1, ErrorCode::InvalidType, "length must be positive");
  std::vector<bool> covered(R.rank(), false);
  for (const auto& s : subs_) {
    require(s.embedding.target == &R, ErrorCode::NoSuchEmbedding, "subsystem targets a different root system");
    require(s.embedding.is_standard_levi(), ErrorCode::InvalidType,
            "subsystem " + s.embedding.source->label() + " is not spanned by simple roots");
    require(s.source_rep != nullptr && &s.source_rep->system() == s.embedding.source && s.oracle,
            ErrorCode::RepMismatch, "subsystem needs a source representation and an oracle");
    maps_.push_back(basis_embedding(s.embedding));
    for (int i = 0; i < s.embedding.source->rank(); ++i) covered[s.embedding(s.embedding.source->simple(i))] = true;
  }
  for (int i = 0; i < R.rank(); ++i)
    require(covered[i], ErrorCode::CoverageGap, "simple root " + std::to_string(i) + " lies in no subsystem");

  const Representation& zrep = target;
  const Ring& Z = Ring::integers();
  steps_.resize(R.num_roots());
  for (RootId g = 0; g < R.num_roots(); ++g) {
    if (R.height(g) == 1 || R.height(g) == -1) continue;
    const int dir = R.is_positive(g) ? 1 : -1;
    for (int i = 0; i < R.rank(); ++i) {
      if (R.pairing(g, R.simple(i)) * dir <= 0) continue;
      Step st{i, R.reflect(R.simple(i), g), 1};
      const GroupElement w = w_element(zrep, R.simple(i), Z.one());
      const GroupElement conj = w * elementary(zrep, st.beta, Z.one()) * w.inverse();
      if (conj == elementary(zrep, g, Z.from_int(-1)))
        st.eps = -1;
      else
        require(conj == elementary(zrep, g, Z.one()), ErrorCode::InternalError, "Weyl conjugation mismatch");
      steps_[g] = st;
      break;
    }
    require(steps_[g].simple >= 0, ErrorCode::InternalError, "no lowering reflection");
  }
}

UnitriangularForm TavgenLift::identity_form() const {
  UnitriangularForm f{&target_->system(), ring_, true, {}};
  for (int k = 0; k < N_; ++k) f.blocks.emplace_back(target_->system(), *ring_);
  return f;
}

std::vector<Letter> TavgenLift::simple_letters(RootId gamma, const Elem& r) const {
  const RootSystem& R = target_->system();
  if (R.height(gamma) == 1 || R.height(gamma) == -1) return {{gamma, r}};
  const Step& st = steps_.at(gamma);
  const RootId a = R.simple(st.simple), na = R.negate(a);
  const Elem one = ring_->one();
  std::vector<Letter> out{{a, one}, {na, -one}, {a, one}};
  for (auto& l : simple_letters(st.beta, st.eps > 0 ? r : -r)) out.push_back(l);
  for (const Letter& l : std::vector<Letter>{{a, -one}, {na, one}, {a, -one}}) out.push_back(l);
  return out;
}

UnitriangularForm TavgenLift::left_multiply(const UnitriangularForm& f, RootId a, const Elem& r) const {
  const RootSystem& R = target_->system();
  require(f.length() == N_ && f.first_positive && f.system == &R, ErrorCode::RepMismatch, "form shape mismatch");
  require(R.height(a) == 1 || R.height(a) == -1, ErrorCode::InvalidType, "left factor must be a simple root letter");
  std::size_t d = 0;
  while (d < subs_.size() && !subs_[d].embedding.preimage(a)) ++d;
  require(d < subs_.size(), ErrorCode::CoverageGap, "no subsystem contains the root");
  const Subsystem& sub = subs_[d];
  const BasisEmbedding& map = maps_[d];
  const RootSystem& S = *sub.embedding.source;

  std::vector<bool> in_levi(R.num_roots(), false);
  for (RootId x = 0; x < S.num_roots(); ++x) in_levi[sub.embedding(x)] = true;
  const auto rank = [&](RootId x) { return (in_levi[x] ? 0 : 4 * R.num_roots()) + x; };

  std::vector<SteinbergWord> u, v;
  SteinbergWord src(S, *ring_);
  src.letters.push_back(map.to_source({a, r}));
  for (const auto& block : f.blocks) {
    const SteinbergWord c = collect(block, rank);
    SteinbergWord ui(R, *ring_), vi(R, *ring_);
    for (const auto& l : c.letters) (in_levi[l.root] ? ui : vi).letters.push_back(l);
    for (const auto& l : ui.letters) src.letters.push_back(map.to_source(l));
    u.push_back(std::move(ui));
    v.push_back(std::move(vi));
  }

  const auto found = sub.oracle(word_eval(src, *sub.source_rep));
  require(found.has_value(), ErrorCode::InternalError, "subsystem oracle found no form of length " + std::to_string(N_));
  require(found->length() == N_ && found->first_positive, ErrorCode::InternalError, "oracle returned a different shape");
  std::vector<SteinbergWord> u2;
  for (const auto& block : found->blocks) {
    SteinbergWord w(R, *ring_);
    for (const auto& l : block.letters) w.letters.push_back(map.to_target(l));
    u2.push_back(std::move(w));
  }

  UnitriangularForm out = identity_form();
  SteinbergWord P(R, *ring_), P2(R, *ring_);  // u_{k+1}...u_N and u'_{k+1}...u'_N
  for (int k = N_ - 1; k >= 0; --k) {
    SteinbergWord block = u2[k];
    if (!v[k].empty()) {
      const SteinbergWord Pi = P.inverse(), P2i = P2.inverse();
      const SteinbergWord conj = concat(R, *ring_, {&P2, &Pi, &v[k], &P, &P2i});
      const SteinbergWord w = decompose_unipotent(word_eval(conj, *target_), f.sign_of(k));
      block = block * w;
    }
    out.blocks[k] = collect_unipotent(block);
    P = u[k] * P;
    P2 = u2[k] * P2;
  }
  return out;
}

UnitriangularForm TavgenLift::lift_word(const SteinbergWord& w) const {
  require(w.system == &target_->system() && w.ring == ring_, ErrorCode::RepMismatch, "word over a different group");
  UnitriangularForm f = identity_form();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto ls = simple_letters(it->root, it->param);
    for (auto jt = ls.rbegin(); jt != ls.rend(); ++jt)
      if (!jt->param.is_zero()) f = left_multiply(f, jt->root, jt->param);
  }
  return f;
}

UnitriangularForm TavgenLift::lift(const GroupElement& g) const {
  require(g.rep == target_, ErrorCode::RepMismatch, "element lives in another representation");
  return lift_word(factor_sln(g).word());
}

namespace {

std::vector<std::pair<RootId, Elem>> generators(const TavgenLift& lift) {
  const RootSystem& R = lift.target().system();
  const FiniteField& F = lift.ring().field();
  std::vector<std::pair<RootId, Elem>> gens;
  for (int i = 0; i < R.rank(); ++i)
    for (RootId a : {R.simple(i), R.negate(R.simple(i))})
      for (FieldCode c = 1; c < F.order(); ++c) gens.emplace_back(a, lift.ring().field_elem(c));
  return gens;
}

void record(LiftSweep& s, const UnitriangularForm& f, const GroupElement& g) {
  ++s.lifts;
  if (!verify_form(f, g)) ++s.failures;
  s.max_width = std::max<std::uint64_t>(s.max_width, f.width());
}

}  // namespace

LiftSweep tavgen_exhaustive(const TavgenLift& lift, std::uint64_t limit) {
  require(lift.ring().is_finite_field(), ErrorCode::UnsupportedRing, "exhaustive lift needs a finite field");
  const auto gens = generators(lift);
  LiftSweep s;
  const GroupElement id = identity_element(lift.target(), lift.ring());
  std::unordered_map<std::string, bool> seen{{code_key(to_codes(id.matrix)), true}};
  std::deque<std::pair<GroupElement, UnitriangularForm>> queue;
  queue.emplace_back(id, lift.identity_form());
  while (!queue.empty()) {
    auto [x, f] = std::move(queue.front());
    queue.pop_front();
    for (const auto& [a, c] : gens) {
      GroupElement y = elementary(lift.target(), a, c) * x;
      if (!seen.emplace(code_key(to_codes(y.matrix)), true).second) continue;
      require(seen.size() <= limit, ErrorCode::TooLargeForExhaustive, "group exceeds the enumeration limit");
      UnitriangularForm fy = lift.left_multiply(f, a, c);
      record(s, fy, y);
      queue.emplace_back(std::move(y), std::move(fy));
    }
  }
  s.elements = seen.size();
  return s;
}

LiftSweep tavgen_random_walk(const TavgenLift& lift, int steps, std::uint64_t seed) {
  const RootSystem& R = lift.target().system();
  Sampler rng(seed);
  LiftSweep s;
  GroupElement g = identity_element(lift.target(), lift.ring());
  UnitriangularForm f = lift.identity_form();
  for (int i = 0; i < steps; ++i) {
    const int j = static_cast<int>(rng.uniform(0, R.rank() - 1));
    const RootId a = rng.uniform(0, 1) ? R.simple(j) : R.negate(R.simple(j));
    const Elem c = rng.nonzero(lift.ring(), 1);
    g = elementary(lift.target(), a, c) * g;
    f = lift.left_multiply(f, a, c);
    record(s, f, g);
  }
  s.elements = static_cast<std::uint64_t>(steps);
  return s;
}

std::vector<Subsystem> a2_edge_subsystems(const RootSystem& target, const Ring& field, int N) {
  require(target.simply_laced(), ErrorCode::InvalidType, "A2 edge subsystems need a simply-laced system");
  const RootSystem& A2 = RootSystem::get('A', 2);
  const Representation& rep = Representation::get(A2, RepKind::StandardSL);
  std::vector<Subsystem> out;
  for (int i = 0; i < target.rank(); ++i)
    for (int j = i + 1; j < target.rank(); ++j)
      if (target.cartan()[i][j] != 0)
        out.push_back({simple_subset_embedding(A2, target, {i, j}), &rep, product_set_oracle(rep, field, N)});
  return out;
}

}  // namespace chevwidth
