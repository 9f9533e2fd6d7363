#include "chevwidth/groups.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "chevwidth/errors.hpp"

namespace chevwidth {

namespace {

SparseIntMatrix unit(int n, int i, int j, std::int64_t v = 1) { return SparseIntMatrix{n, {{i, j, v}}}; }

SparseIntMatrix transpose(const SparseIntMatrix& m) {
  SparseIntMatrix t{m.n, {}};
  for (const auto& e : m.entries) t.entries.push_back({e.col, e.row, e.value});
  return t;
}

SparseIntMatrix divide(SparseIntMatrix m, std::int64_t d) {
  for (auto& e : m.entries) {
    require(e.value % d == 0, ErrorCode::InternalError, "representation is not integral");
    e.value /= d;
  }
  return m;
}

SparseIntMatrix form_matrix(int l) {
  SparseIntMatrix j{2 * l, {}};
  for (int i = 0; i < 2 * l; ++i) j.entries.push_back({i, 2 * l - 1 - i, i < l ? 1 : -1});
  return j;
}

}  // namespace

std::string rep_kind_name(RepKind kind) {
  switch (kind) {
    case RepKind::StandardSL: return "sl";
    case RepKind::StandardSp: return "sp";
    case RepKind::Adjoint: return "adjoint";
  }
  return "?";
}

RepKind parse_rep_kind(const std::string& name) {
  if (name == "sl" || name == "SL" || name == "standard") return RepKind::StandardSL;
  if (name == "sp" || name == "Sp") return RepKind::StandardSp;
  if (name == "adjoint" || name == "ad") return RepKind::Adjoint;
  fail(ErrorCode::ParseError, "unknown representation '" + name + "'");
}

Representation::Representation(const RootSystem& R, RepKind kind) : system_(&R), kind_(kind) {
  const auto& L = ChevalleyBasis::get(R);
  const int l = R.rank();
  const int np = R.num_positive();
  e_.resize(R.num_roots());
  if (kind == RepKind::Adjoint) {
    dim_ = L.dimension();
    for (RootId a = 0; a < R.num_roots(); ++a) e_[a] = L.ad(a);
  } else {
    if (kind == RepKind::StandardSL) {
      require(R.type() == 'A', ErrorCode::UnsupportedRepForType, "the standard SL representation needs type A, not " + R.label());
      dim_ = l + 1;
      for (int i = 0; i < l; ++i) e_[i] = unit(dim_, i, i + 1);
    } else {
      require(R.type() == 'C', ErrorCode::UnsupportedRepForType, "the standard Sp representation needs type C, not " + R.label());
      dim_ = 2 * l;
      const SparseIntMatrix J = form_matrix(l);
      auto prime = [&](int i) { return dim_ - 1 - i; };
      for (int i = 0; i + 1 < l; ++i) {
        SparseIntMatrix chosen;
        for (int s : {1, -1}) {
          SparseIntMatrix x = unit(dim_, i, i + 1) + unit(dim_, prime(i + 1), prime(i), s);
          if ((transpose(x) * J + J * x).empty()) chosen = x;
        }
        require(!chosen.empty(), ErrorCode::InternalError, "no symplectic root element");
        e_[i] = chosen;
      }
      e_[l - 1] = unit(dim_, l - 1, l);
    }
    for (int i = 0; i < l; ++i) e_[R.negate(i)] = transpose(e_[i]);
    for (RootId xi = l; xi < np; ++xi) {
      auto [a, b] = L.extraspecial_pair(xi);
      e_[xi] = divide(lie_bracket(e_[a], e_[b]), L.N(a, b));
      e_[R.negate(xi)] = divide(lie_bracket(e_[R.negate(a)], e_[R.negate(b)]), L.N(R.negate(a), R.negate(b)));
    }
  }
  for (int i = 0; i < l; ++i) h_.push_back(lie_bracket(e_[i], e_[R.negate(i)]));
  for (RootId a = 0; a < R.num_roots(); ++a) dp_.push_back(chevwidth::divided_powers(e_[a]));
}

const Representation& Representation::get(const RootSystem& system, RepKind kind) {
  static std::mutex mu;
  static std::map<std::pair<const RootSystem*, RepKind>, std::unique_ptr<Representation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{&system, kind}];
  if (!slot) slot.reset(new Representation(system, kind));
  return *slot;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  require(rep == o.rep, ErrorCode::RepMismatch, "product of elements in different representations");
  return {rep, matrix * o.matrix};
}

GroupElement GroupElement::inverse() const { return {rep, matrix.inverse()}; }

GroupElement& GroupElement::times_elementary(RootId a, const Elem& r) {
  require(r.ring_ptr() == &matrix.ring(), ErrorCode::DescriptorMismatch,
          "parameter from " + r.ring().name() + " used over " + matrix.ring().name());
  matrix.multiply_unipotent_right(rep->divided_powers(a), r);
  return *this;
}

GroupElement identity_element(const Representation& rep, const Ring& ring) {
  return {&rep, Matrix::identity(ring, rep.dimension())};
}

GroupElement elementary(const Representation& rep, RootId a, const Elem& r) {
  GroupElement g = identity_element(rep, r.ring());
  return g.times_elementary(a, r);
}

GroupElement w_element(const Representation& rep, RootId a, const Elem& u) {
  require(u.is_unit(), ErrorCode::NotAUnit, u.to_string() + " is not a unit");
  GroupElement g = identity_element(rep, u.ring());
  g.times_elementary(a, u).times_elementary(rep.system().negate(a), -u.inverse()).times_elementary(a, u);
  return g;
}

GroupElement h_element(const Representation& rep, RootId a, const Elem& u) {
  return w_element(rep, a, u) * w_element(rep, a, -u.ring().one());
}

GroupElement adjoint_unipotent(const ChevalleyBasis& basis, RootId a, const Elem& r) {
  return elementary(Representation::get(basis.system(), RepKind::Adjoint), a, r);
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) { return g * h * g.inverse() * h.inverse(); }

GroupElement commutator_product(const Representation& rep, RootId a, RootId b, const Elem& r, const Elem& s) {
  return commutator_product(rep, ChevalleyBasis::get(rep.system()).commutator(a, b), r, s);
}

GroupElement commutator_product(const Representation& rep, const std::vector<CommutatorTerm>& terms, const Elem& r,
                                const Elem& s) {
  GroupElement g = identity_element(rep, r.ring());
  for (const auto& t : terms) g.times_elementary(t.root, r.pow(t.i) * s.pow(t.j) * r.ring().from_int(t.coeff));
  return g;
}

bool verify_commutator(const Representation& rep, RootId a, RootId b, const Elem& r, const Elem& s) {
  require(b != rep.system().negate(a), ErrorCode::OppositeRoots, "commutator formula for opposite roots");
  return verify_commutator(rep, a, b, ChevalleyBasis::get(rep.system()).commutator(a, b), r, s);
}

bool verify_commutator(const Representation& rep, RootId a, RootId b, const std::vector<CommutatorTerm>& terms,
                       const Elem& r, const Elem& s) {
  require(b != rep.system().negate(a), ErrorCode::OppositeRoots, "commutator formula for opposite roots");
  GroupElement lhs = identity_element(rep, r.ring());
  lhs.times_elementary(a, r).times_elementary(b, s).times_elementary(a, -r).times_elementary(b, -s);
  return lhs == commutator_product(rep, terms, r, s);
}

bool is_identity(const GroupElement& g) { return g.matrix.is_identity(); }

bool is_central(const GroupElement& g) {
  const RootSystem& R = g.rep->system();
  const Elem one = g.ring().one();
  for (int i = 0; i < R.rank(); ++i)
    for (RootId a : {R.simple(i), R.negate(R.simple(i))}) {
      const GroupElement x = elementary(*g.rep, a, one);
      if (g * x != x * g) return false;
    }
  return true;
}

std::vector<std::vector<int>> symplectic_form(int l) {
  std::vector<std::vector<int>> j(2 * l, std::vector<int>(2 * l, 0));
  for (const auto& e : form_matrix(l).entries) j[e.row][e.col] = static_cast<int>(e.value);
  return j;
}

bool preserves_symplectic_form(const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() % 2) return false;
  const Matrix J = Matrix::from_int(g.ring(), form_matrix(g.rows() / 2));
  return g.transpose() * J * g == J;
}

}  // namespace chevwidth
