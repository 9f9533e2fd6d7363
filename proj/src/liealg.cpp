#include "chevwidth/liealg.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "chevwidth/errors.hpp"
#include "chevwidth/ring.hpp"

namespace chevwidth {

namespace {

// A simply-laced parent together with the node orbits of a diagram
// automorphism; target node k corresponds to the parent nodes nodes[k].
struct Folding {
  char type;
  int rank;
  std::vector<std::vector<int>> nodes;
  int bfs_root;
};

Folding folding_for(const RootSystem& R) {
  const int l = R.rank();
  Folding f{R.type(), l, {}, 0};
  switch (R.type()) {
    case 'C':
      f = {'A', 2 * l - 1, {}, l - 1};
      for (int i = 0; i + 1 < l; ++i) f.nodes.push_back({i, 2 * l - 2 - i});
      f.nodes.push_back({l - 1});
      return f;
    case 'B':
      f = {'D', l + 1, {}, 0};
      for (int i = 0; i + 1 < l; ++i) f.nodes.push_back({i});
      f.nodes.push_back({l - 1, l});
      return f;
    case 'F': return {'E', 6, {{1}, {3}, {2, 4}, {0, 5}}, 1};
    case 'G': return {'D', 4, {{0, 2, 3}, {1}}, 1};
    default:
      for (int i = 0; i < l; ++i) f.nodes.push_back({i});
      return f;
  }
}

// Structure constants of the simply-laced algebra with basis e_a = s_a E^a,
// where [E^a, E^b] = eps(a, b) E^{a+b} for a bimultiplicative sign eps built
// from an orientation of the Dynkin diagram.
class SimplyLacedConstants {
 public:
  SimplyLacedConstants(const RootSystem& P, int bfs_root) : P_(P) {
    const int l = P.rank();
    std::vector<int> dist(l, -1);
    std::deque<int> q{bfs_root};
    dist[bfs_root] = 0;
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < l; ++j)
        if (P.gram()[i][j] < 0 && dist[j] < 0) {
          dist[j] = dist[i] + 1;
          q.push_back(j);
        }
    }
    m_.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) {
      m_[i][i] = 1;
      for (int j = 0; j < l; ++j)
        if (P.gram()[i][j] < 0 && dist[i] < dist[j]) m_[i][j] = 1;
    }
  }

  int operator()(RootId a, RootId b) const {
    auto c = P_.sum(a, b);
    if (!c) return 0;
    const auto& x = P_.root(a).coords;
    const auto& y = P_.root(b).coords;
    int e = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) e += x[i] * m_[i][j] * y[j];
    int sign = (e % 2 == 0) ? 1 : -1;
    for (RootId r : {a, b, *c})
      if (!P_.is_positive(r)) sign = -sign;
    return sign;
  }

 private:
  const RootSystem& P_;
  std::vector<std::vector<int>> m_;
};

std::vector<std::int64_t> identity(int n) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 1;
  return d;
}

// m <- exp(c X) m, with X given by its divided powers.
void left_multiply(std::vector<std::int64_t>& m, int n, const std::vector<SparseIntMatrix>& dp, std::int64_t c) {
  std::vector<std::int64_t> out = m;
  std::int64_t ck = 1;
  for (const auto& xk : dp) {
    ck = checked_mul(ck, c);
    for (const auto& e : xk.entries) {
      const std::int64_t f = checked_mul(ck, e.value);
      for (int j = 0; j < n; ++j) {
        const std::size_t src = static_cast<std::size_t>(e.col) * n + j;
        if (m[src] != 0) {
          auto& dst = out[static_cast<std::size_t>(e.row) * n + j];
          dst = checked_add(dst, checked_mul(f, m[src]));
        }
      }
    }
  }
  m = std::move(out);
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& R) : system_(&R), nroots_(R.num_roots()) {
  const int l = R.rank();
  const Folding fold = folding_for(R);
  const RootSystem& P = RootSystem::get(fold.type, fold.rank);
  const SimplyLacedConstants np(P, fold.bfs_root);

  // Parent root orbits, indexed by the target root they restrict to.
  std::vector<std::vector<RootId>> orbit(nroots_);
  for (RootId b = 0; b < P.num_roots(); ++b) {
    std::vector<int> t(l, 0);
    for (int k = 0; k < l; ++k)
      for (int i : fold.nodes[k]) t[k] += P.root(b).coords[i];
    auto r = R.find(t);
    require(r.has_value(), ErrorCode::InternalError, "folding produced a non-root");
    orbit[*r].push_back(b);
  }
  for (const auto& o : orbit) require(!o.empty(), ErrorCode::InternalError, "folding missed a root");

  // Coroots h_a = sum_i c_i (a_i, a_i) / (a, a) h_i.
  coroots_.resize(nroots_);
  for (RootId a = 0; a < nroots_; ++a) {
    const int aa = R.inner(a, a);
    for (int i = 0; i < l; ++i) {
      const int num = R.root(a).coords[i] * R.gram()[i][i];
      require(num % aa == 0, ErrorCode::InternalError, "non-integral coroot");
      coroots_[a].push_back(num / aa);
    }
    // The orbit sum of parent coroots must restrict to h_a.
    std::vector<int> parent(P.rank(), 0);
    for (RootId b : orbit[a])
      for (int i = 0; i < P.rank(); ++i) parent[i] += P.root(b).coords[i];
    for (int k = 0; k < l; ++k)
      for (int i : fold.nodes[k])
        require(parent[i] == coroots_[a][k], ErrorCode::InternalError, "folded coroot mismatch");
  }

  // Orbit-sum structure constants, read off at each member of the sum orbit.
  n_.assign(static_cast<std::size_t>(nroots_) * nroots_, 0);
  for (RootId a = 0; a < nroots_; ++a)
    for (RootId b = 0; b < nroots_; ++b) {
      auto c = R.sum(a, b);
      if (!c) continue;
      std::map<RootId, int> coeff;
      for (RootId x : orbit[a])
        for (RootId y : orbit[b])
          if (int v = np(x, y)) coeff[*P.sum(x, y)] += v;
      int value = coeff[orbit[*c].front()];
      for (RootId g : orbit[*c]) require(coeff[g] == value, ErrorCode::InternalError, "folded bracket not invariant");
      require(value != 0, ErrorCode::InternalError, "vanishing structure constant");
      n_[static_cast<std::size_t>(a) * nroots_ + b] = value;
    }

  // Make N positive on extraspecial pairs.
  std::vector<int> sign(nroots_, 1);
  for (RootId xi = l; xi < R.num_positive(); ++xi) {
    auto [a, b] = extraspecial_pair(xi);
    sign[xi] = (sign[a] * sign[b] * N(a, b) > 0) ? 1 : -1;
    sign[R.negate(xi)] = sign[xi];
  }
  for (RootId a = 0; a < nroots_; ++a)
    for (RootId b = 0; b < nroots_; ++b)
      if (auto c = R.sum(a, b)) n_[static_cast<std::size_t>(a) * nroots_ + b] *= sign[a] * sign[b] * sign[*c];

  ad_.resize(nroots_);
  for (RootId a = 0; a < nroots_; ++a) {
    SparseIntMatrix m{dimension(), {}};
    for (int y = 0; y < dimension(); ++y)
      for (auto [row, v] : bracket(a, y)) m.entries.push_back({row, y, v});
    ad_[a] = std::move(m);
  }
}

const ChevalleyBasis& ChevalleyBasis::get(const RootSystem& system) {
  static std::mutex mu;
  static std::map<const RootSystem*, std::unique_ptr<ChevalleyBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[&system];
  if (!slot) slot.reset(new ChevalleyBasis(system));
  return *slot;
}

std::pair<RootId, RootId> ChevalleyBasis::extraspecial_pair(RootId xi) const {
  const RootSystem& R = *system_;
  require(R.is_positive(xi) && xi >= R.rank(), ErrorCode::InvalidType, "extraspecial pairs need a non-simple positive root");
  for (RootId a = 0; a < xi; ++a) {
    auto b = R.combination(1, xi, -1, a);
    if (b && R.is_positive(*b)) return {a, *b};
  }
  fail(ErrorCode::InternalError, "no extraspecial pair");
}

BasisVector ChevalleyBasis::bracket(int x, int y) const {
  const RootSystem& R = *system_;
  const bool xr = x < nroots_, yr = y < nroots_;
  if (xr && yr) {
    if (y == R.negate(x)) {
      BasisVector out;
      for (int i = 0; i < R.rank(); ++i)
        if (coroots_[x][i]) out.push_back({cartan_index(i), coroots_[x][i]});
      return out;
    }
    if (int n = N(x, y)) return {{*R.sum(x, y), n}};
    return {};
  }
  if (xr && !yr) {
    const int v = -R.pairing(x, R.simple(y - nroots_));
    return v ? BasisVector{{x, v}} : BasisVector{};
  }
  if (!xr && yr) {
    const int v = R.pairing(y, R.simple(x - nroots_));
    return v ? BasisVector{{y, v}} : BasisVector{};
  }
  return {};
}

BasisVector ChevalleyBasis::bracket(const BasisVector& x, const BasisVector& y) const {
  std::map<int, std::int64_t> acc;
  for (auto [i, a] : x)
    for (auto [j, b] : y)
      for (auto [k, c] : bracket(i, j)) acc[k] = checked_add(acc[k], checked_mul(checked_mul(a, b), c));
  BasisVector out;
  for (auto [k, v] : acc)
    if (v) out.push_back({k, v});
  return out;
}

SparseIntMatrix ChevalleyBasis::ad_cartan(int i) const {
  SparseIntMatrix m{dimension(), {}};
  for (int y = 0; y < dimension(); ++y)
    for (auto [row, v] : bracket(cartan_index(i), y)) m.entries.push_back({row, y, v});
  return m;
}

std::vector<CommutatorTerm> ChevalleyBasis::commutator_shape(RootId a, RootId b) const {
  const RootSystem& R = *system_;
  require(b != R.negate(a), ErrorCode::OppositeRoots, "commutator of opposite roots");
  std::vector<CommutatorTerm> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (auto c = R.combination(i, a, j, b)) out.push_back({i, j, *c, 0});
  std::sort(out.begin(), out.end(), [](const CommutatorTerm& x, const CommutatorTerm& y) {
    return std::pair(x.i + x.j, x.i) < std::pair(y.i + y.j, y.i);
  });
  return out;
}

std::vector<CommutatorTerm> ChevalleyBasis::commutator_from_adjoint(RootId a, RootId b) const {
  auto terms = commutator_shape(a, b);
  const int n = dimension();
  auto m = identity(n);
  const auto da = divided_powers(ad_[a]);
  const auto db = divided_powers(ad_[b]);
  // m = x_a(1) x_b(1) x_a(-1) x_b(-1), built right to left.
  left_multiply(m, n, db, -1);
  left_multiply(m, n, da, -1);
  left_multiply(m, n, db, 1);
  left_multiply(m, n, da, 1);
  for (auto& t : terms) {
    const auto& x = ad_[t.root];
    const IntEntry* pick = nullptr;
    for (const auto& e : x.entries)
      if (!pick || std::abs(e.value) < std::abs(pick->value)) pick = &e;
    const std::int64_t got = m[static_cast<std::size_t>(pick->row) * n + pick->col];
    require(got % pick->value == 0, ErrorCode::InternalError, "commutator coefficient is not integral");
    t.coeff = got / pick->value;
    left_multiply(m, n, divided_powers(x), -t.coeff);
  }
  require(m == identity(n), ErrorCode::InternalError, "commutator does not factor in the fixed order");
  return terms;
}

const std::vector<CommutatorTerm>& ChevalleyBasis::commutator(RootId a, RootId b) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = comm_cache_.find({a, b});
  if (it != comm_cache_.end()) return it->second;
  std::vector<CommutatorTerm> terms;
  if (system_->simply_laced()) {
    terms = commutator_shape(a, b);
    for (auto& t : terms) t.coeff = N(a, b);
  } else {
    terms = commutator_from_adjoint(a, b);
  }
  return comm_cache_.emplace(std::pair{a, b}, std::move(terms)).first->second;
}

const std::vector<CommutatorTerm>& commutator_coefficients(const ChevalleyBasis& basis, RootId a, RootId b) {
  return basis.commutator(a, b);
}

}  // namespace chevwidth
