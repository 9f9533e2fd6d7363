#include "chevwidth/factor.hpp"

#include <algorithm>
#include <map>

#include "chevwidth/errors.hpp"

namespace chevwidth {

namespace {

// Position (i, j) and sign s with rho(e_a) = s E_ij in the standard representation.
struct Slot {
  RootId root;
  int sign;
};

std::map<std::pair<int, int>, Slot> slots(const Representation& rep) {
  std::map<std::pair<int, int>, Slot> out;
  for (RootId a = 0; a < rep.system().num_roots(); ++a) {
    const auto& m = rep.root_matrix(a);
    require(m.entries.size() == 1, ErrorCode::InternalError, "root element is not a matrix unit");
    const auto& e = m.entries[0];
    out[{e.row, e.col}] = {a, static_cast<int>(e.value)};
  }
  return out;
}

void check_sl(const GroupElement& m) {
  require(m.rep && m.rep->kind() == RepKind::StandardSL, ErrorCode::UnsupportedRepForType,
          "factorisation needs the standard SL representation");
  const Ring& R = m.ring();
  require(R.kind() != RingKind::RationalFunction, ErrorCode::NotEuclidean, R.name() + " is not handled as Euclidean");
  require(m.matrix.determinant().is_one(), ErrorCode::NotUnimodular, "determinant is not 1");
}

// Row operations recorded as x_ij(q) applied on the left.
class RowReducer {
 public:
  explicit RowReducer(const GroupElement& g) : m_(g.matrix), slot_(slots(*g.rep)) {}

  Matrix& m() { return m_; }
  const Ring& ring() const { return m_.ring(); }

  // row_i += q row_j
  void add_row(int i, int j, const Elem& q) {
    if (q.is_zero()) return;
    for (int k = 0; k < m_.cols(); ++k)
      if (!m_.at(j, k).is_zero()) m_.at(i, k) = m_.at(i, k) + q * m_.at(j, k);
    applied_.push_back(letter(i, j, q));
  }

  Letter letter(int i, int j, const Elem& q) const {
    const Slot s = slot_.at({i, j});
    return {s.root, s.sign > 0 ? q : -q};
  }

  // m_original = (inverses of applied ops, in order) * m_current
  std::vector<Letter> undo() const {
    std::vector<Letter> out;
    for (const auto& l : applied_) out.push_back({l.root, -l.param});
    return out;
  }

 private:
  Matrix m_;
  std::map<std::pair<int, int>, Slot> slot_;
  std::vector<Letter> applied_;
};

void push(std::vector<Letter>& out, const Letter& l) {
  if (l.param.is_zero()) return;
  if (!out.empty() && out.back().root == l.root) {
    out.back().param = out.back().param + l.param;
    if (out.back().param.is_zero()) out.pop_back();
    return;
  }
  out.push_back(l);
}

// Width <= 4 factorisation of [[a, b], [c, d]] when c is a unit or zero.
// `up`/`down` produce the letters of x_12(r) and x_21(r).
template <class Up, class Down>
bool direct_sl2(const Elem& a, const Elem& b, const Elem& c, const Elem& d, Up up, Down down, std::vector<Letter>& out) {
  const Ring& R = a.ring();
  if (c.is_unit()) {
    const Elem ci = c.inverse();
    push(out, up((a - R.one()) * ci));
    push(out, down(c));
    push(out, up((d - R.one()) * ci));
    return true;
  }
  if (!c.is_zero()) return false;
  if (a.is_one()) {
    push(out, up(b));
    return true;
  }
  // m = x_21(1) x_21(-1) m, and x_21(-1) m has lower-left entry -a, a unit.
  push(out, down(R.one()));
  return direct_sl2(a, b, -a, d - b, up, down, out);
}

// Diagonal diag(u_1, ..., u_n) with product 1 as h-letters on simple roots.
void diagonal_letters(const Matrix& d, const RowReducer& red, std::vector<Letter>& out) {
  const Ring& R = d.ring();
  Elem prefix = R.one();
  for (int k = 0; k + 1 < d.rows(); ++k) {
    prefix = prefix * d.at(k, k);
    if (prefix.is_one()) continue;
    // h(v) = w(v) w(-1) = x(v) x_-(-v^-1) x(v - 1) x_-(1) x(-1)
    const Elem v = prefix;
    push(out, red.letter(k, k + 1, v));
    push(out, red.letter(k + 1, k, -v.inverse()));
    push(out, red.letter(k, k + 1, v - R.one()));
    push(out, red.letter(k + 1, k, R.one()));
    push(out, red.letter(k, k + 1, -R.one()));
  }
}

}  // namespace

SteinbergWord Factorization::word() const { return SteinbergWord(rep->system(), target.ring(), factors); }

bool Factorization::verify() const { return word_eval(word(), *rep).matrix == target; }

Factorization factor_sl2(const GroupElement& g) {
  check_sl(g);
  require(g.matrix.rows() == 2, ErrorCode::UnsupportedRepForType, "factor_sl2 needs a 2x2 matrix");
  RowReducer red(g);
  const Ring& R = red.ring();
  auto size = [&](const Elem& x) { return R.euclid_size(x); };
  Matrix& m = red.m();
  // Euclid on the first column until the lower-left entry is a unit or zero.
  for (int steps = 0; !m.at(1, 0).is_zero() && !m.at(1, 0).is_unit(); ++steps) {
    require(steps < 100000, ErrorCode::InternalError, "Euclidean reduction does not terminate");
    if (!m.at(0, 0).is_zero() && size(m.at(0, 0)) >= size(m.at(1, 0))) {
      auto [q, r] = R.divmod(m.at(0, 0), m.at(1, 0));
      red.add_row(0, 1, -q);
    } else {
      if (m.at(0, 0).is_zero()) break;
      auto [q, r] = R.divmod(m.at(1, 0), m.at(0, 0));
      red.add_row(1, 0, -q);
    }
  }
  Factorization f{g.rep, g.matrix, {}};
  for (const auto& l : red.undo()) push(f.factors, l);
  auto up = [&](const Elem& r) { return red.letter(0, 1, r); };
  auto down = [&](const Elem& r) { return red.letter(1, 0, r); };
  const bool ok = direct_sl2(m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1), up, down, f.factors);
  require(ok, ErrorCode::InternalError, "Euclidean reduction stalled");
  require(f.verify(), ErrorCode::InternalError, "factorisation does not re-multiply to its target");
  return f;
}

Factorization factor_sln(const GroupElement& g) {
  check_sl(g);
  const int n = g.matrix.rows();
  const Ring& R = g.ring();
  if (n == 2) return factor_sl2(g);

  // Block-diagonal SL_2 embeddings.
  {
    bool blocks = true;
    std::vector<int> starts;
    for (int i = 0; i < n && blocks;) {
      const bool two = i + 1 < n && (!g.matrix.at(i, i + 1).is_zero() || !g.matrix.at(i + 1, i).is_zero());
      const int w = two ? 2 : 1;
      for (int r = i; r < i + w; ++r)
        for (int c = 0; c < n; ++c)
          if ((c < i || c >= i + w) && !g.matrix.at(r, c).is_zero()) blocks = false;
      if (w == 1 && !g.matrix.at(i, i).is_one()) blocks = false;
      if (w == 2) starts.push_back(i);
      i += w;
    }
    if (blocks && !starts.empty()) {
      const auto& sl2 = Representation::get(RootSystem::get('A', 1), RepKind::StandardSL);
      const auto sl = slots(*g.rep);
      Factorization f{g.rep, g.matrix, {}};
      for (int s : starts) {
        Matrix b(R, 2, 2);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) b.at(r, c) = g.matrix.at(s + r, s + c);
        if (!b.determinant().is_one()) {
          f.factors.clear();
          break;
        }
        for (const auto& l : factor_sl2({&sl2, b}).factors) {
          const auto [i, j] = l.root == 0 ? std::pair{s, s + 1} : std::pair{s + 1, s};
          const Slot slot = sl.at({i, j});
          f.factors.push_back({slot.root, slot.sign > 0 ? l.param : -l.param});
        }
      }
      if (!f.factors.empty() && f.verify()) return f;
    }
  }

  RowReducer red(g);
  Matrix& m = red.m();
  auto size = [&](const Elem& x) { return R.euclid_size(x); };
  for (int k = 0; k < n; ++k) {
    // Reduce column k below the diagonal to a single nonzero entry.
    for (int steps = 0;; ++steps) {
      require(steps < 100000, ErrorCode::InternalError, "Euclidean reduction does not terminate");
      int p = -1;
      for (int i = k; i < n; ++i)
        if (!m.at(i, k).is_zero() && (p < 0 || size(m.at(i, k)) < size(m.at(p, k)))) p = i;
      require(p >= 0, ErrorCode::NotUnimodular, "singular matrix");
      bool changed = false;
      for (int i = k; i < n; ++i) {
        if (i == p || m.at(i, k).is_zero()) continue;
        auto [q, r] = R.divmod(m.at(i, k), m.at(p, k));
        red.add_row(i, p, -q);
        changed = true;
      }
      if (!changed) {
        if (p != k) {
          red.add_row(k, p, R.one());
          red.add_row(p, k, -R.one());
        }
        break;
      }
    }
    require(m.at(k, k).is_unit(), ErrorCode::NotUnimodular, "pivot is not a unit");
  }
  // Clear above the diagonal.
  for (int j = n - 1; j > 0; --j)
    for (int i = j - 1; i >= 0; --i)
      if (!m.at(i, j).is_zero()) red.add_row(i, j, -(m.at(i, j) * m.at(j, j).inverse()));

  Factorization f{g.rep, g.matrix, {}};
  for (const auto& l : red.undo()) push(f.factors, l);
  diagonal_letters(m, red, f.factors);
  require(f.verify(), ErrorCode::InternalError, "factorisation does not re-multiply to its target");
  return f;
}

WidthReferenceLines width_reference_lines(const RootSystem& system) {
  WidthReferenceLines w;
  w.l2_positive_roots = w.sl3_function_rings * system.num_positive();
  return w;
}

SteinbergWord random_elementary_word(Sampler& s, const RootSystem& system, const Ring& ring, int letters,
                                     int degree) {
  SteinbergWord w(system, ring);
  for (int i = 0; i < letters; ++i) {
    const RootId a = static_cast<RootId>(s.uniform(0, system.num_roots() - 1));
    w.append(a, s.element(ring, degree));
  }
  return w;
}

SteinbergWord decompose_unipotent(const GroupElement& g, int sign) {
  const Representation& rep = *g.rep;
  const RootSystem& R = rep.system();
  const Ring& K = g.ring();
  SteinbergWord out(R, K);
  GroupElement rest = g;
  const RootId first = sign > 0 ? 0 : R.num_positive();
  for (RootId a = first; a < first + R.num_positive(); ++a) {
    const IntEntry* pick = nullptr;
    for (const auto& e : rep.root_matrix(a).entries)
      if (K.from_int(e.value).is_unit()) {
        pick = &e;
        break;
      }
    require(pick != nullptr, ErrorCode::InternalError, "no invertible coordinate for a root element");
    const Elem c = rest.matrix.at(pick->row, pick->col) * K.from_int(pick->value).inverse();
    if (c.is_zero()) continue;
    out.append(a, c);
    // rest <- x_a(-c) rest
    rest = elementary(rep, a, -c) * rest;
  }
  require(is_identity(rest), ErrorCode::InternalError, "element is not in the unipotent subgroup");
  return out;
}

}  // namespace chevwidth
