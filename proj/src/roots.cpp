#include "chevwidth/roots.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <set>

#include "chevwidth/errors.hpp"

namespace chevwidth {

namespace {

bool valid_type(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::vector<std::vector<int>> gram_matrix(char type, int l) {
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  auto edge = [&](int i, int j, int v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
  auto diag = [&](int i, int v) { g[i - 1][i - 1] = v; };
  switch (type) {
    case 'A':
      for (int i = 1; i <= l; ++i) diag(i, 2);
      for (int i = 1; i < l; ++i) edge(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < l; ++i) diag(i, 4);
      diag(l, 2);
      for (int i = 1; i < l; ++i) edge(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 1; i < l; ++i) diag(i, 2);
      diag(l, 4);
      for (int i = 1; i + 1 < l; ++i) edge(i, i + 1, -1);
      edge(l - 1, l, -2);
      break;
    case 'D':
      for (int i = 1; i <= l; ++i) diag(i, 2);
      for (int i = 1; i + 1 < l; ++i) edge(i, i + 1, -1);
      edge(l - 2, l, -1);
      break;
    case 'E':
      for (int i = 1; i <= l; ++i) diag(i, 2);
      edge(1, 3, -1);
      edge(3, 4, -1);
      edge(2, 4, -1);
      for (int i = 4; i < l; ++i) edge(i, i + 1, -1);
      break;
    case 'F':
      diag(1, 4);
      diag(2, 4);
      diag(3, 2);
      diag(4, 2);
      edge(1, 2, -2);
      edge(2, 3, -2);
      edge(3, 4, -1);
      break;
    case 'G':
      diag(1, 2);
      diag(2, 6);
      edge(1, 2, -3);
      break;
  }
  return g;
}

}  // namespace

const RootSystem& RootSystem::get(char type, int rank) {
  require(valid_type(type, rank), ErrorCode::InvalidType,
          std::string("no root system ") + type + std::to_string(rank));
  static std::mutex m;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[{type, rank}];
  if (!slot) slot.reset(new RootSystem(type, rank));
  return *slot;
}

const RootSystem& RootSystem::parse(const std::string& label) {
  require(label.size() >= 2, ErrorCode::InvalidType, "bad root system label '" + label + "'");
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    require(std::isdigit(static_cast<unsigned char>(label[i])), ErrorCode::InvalidType,
            "bad root system label '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
  }
  return get(type, rank);
}

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank), gram_(gram_matrix(type, rank)) {
  cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];

  // Positive roots, layer by layer in height, via root strings through the
  // simple roots.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    layer.push_back(c);
    known.insert(c);
  }
  std::vector<std::vector<int>> positives;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      positives.push_back(beta);
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < rank; ++j) pair += beta[j] * gram_[j][i];
        pair = 2 * pair / gram_[i][i];
        if (p - pair > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
  }
  auto height_of = [](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(positives.begin(), positives.end(), [&](const auto& a, const auto& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;  // alpha_1 before alpha_2 within a height
  });
  npos_ = static_cast<int>(positives.size());
  int long_norm = 0;
  for (int i = 0; i < rank; ++i) long_norm = std::max(long_norm, gram_[i][i]);
  roots_.resize(2 * npos_);
  for (int i = 0; i < npos_; ++i) {
    roots_[i].coords = positives[i];
    std::vector<int> neg = positives[i];
    for (auto& x : neg) x = -x;
    roots_[i + npos_].coords = neg;
  }
  for (int i = 0; i < 2 * npos_; ++i) {
    roots_[i].is_long = inner(roots_[i].coords, roots_[i].coords) == long_norm;
    index_[roots_[i].coords] = i;
  }
}

int RootSystem::height(RootId r) const {
  int h = 0;
  for (int x : roots_.at(r).coords) h += x;
  return h;
}

std::optional<RootId> RootSystem::find(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<RootId> RootSystem::sum(RootId a, RootId b) const { return combination(1, a, 1, b); }

std::optional<RootId> RootSystem::combination(int i, RootId a, int j, RootId b) const {
  std::vector<int> c(rank_);
  for (int k = 0; k < rank_; ++k) c[k] = i * roots_[a].coords[k] + j * roots_[b].coords[k];
  return find(c);
}

int RootSystem::inner(const std::vector<int>& x, const std::vector<int>& y) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

int RootSystem::pairing(RootId beta, RootId alpha) const { return 2 * inner(beta, alpha) / inner(alpha, alpha); }

RootId RootSystem::reflect(RootId alpha, RootId beta) const {
  const int k = pairing(beta, alpha);
  auto r = combination(1, beta, -k, alpha);
  require(r.has_value(), ErrorCode::InternalError, "reflection left the root system");
  return *r;
}

std::pair<int, int> RootSystem::root_string(RootId alpha, RootId beta) const {
  require(beta != alpha && beta != negate(alpha), ErrorCode::OppositeRoots,
          "root string of " + format_root(beta) + " through " + format_root(alpha));
  int p = 0, q = 0;
  while (combination(-(p + 1), alpha, 1, beta)) ++p;
  while (combination(q + 1, alpha, 1, beta)) ++q;
  return {p, q};
}

std::uint64_t RootSystem::weyl_order() const {
  std::vector<int> nodes(rank_);
  for (int i = 0; i < rank_; ++i) nodes[i] = i;
  std::uint64_t order = 1;
  while (!nodes.empty()) {
    const int i = nodes.back();
    std::vector<int> start(rank_, 0);
    start[i] = 1;
    std::set<std::vector<int>> orbit{start};
    std::deque<std::vector<int>> queue{start};
    while (!queue.empty()) {
      auto lam = queue.front();
      queue.pop_front();
      for (int j : nodes) {
        if (lam[j] == 0) continue;
        auto mu = lam;
        for (int k = 0; k < rank_; ++k) mu[k] -= lam[j] * cartan_[j][k];
        if (orbit.insert(mu).second) queue.push_back(mu);
      }
    }
    order *= orbit.size();
    nodes.pop_back();
  }
  return order;
}

std::string RootSystem::format_root(RootId r) const {
  const auto& c = roots_.at(r).coords;
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    if (c[i] == 0) continue;
    if (c[i] < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c[i]) != 1) out += std::to_string(std::abs(c[i]));
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

// ---------------------------------------------------------------- embeddings

std::optional<RootId> SystemEmbedding::preimage(RootId target_root) const {
  for (RootId r = 0; r < static_cast<RootId>(root_map.size()); ++r)
    if (root_map[r] == target_root) return r;
  return std::nullopt;
}

bool SystemEmbedding::is_standard_levi() const {
  for (int i = 0; i < source->rank(); ++i)
    if (root_map[source->simple(i)] >= target->rank()) return false;
  return true;
}

SystemEmbedding embedding_from_simple_images(const RootSystem& source, const RootSystem& target,
                                             const std::vector<RootId>& simple_images, EmbeddingKind kind) {
  require(static_cast<int>(simple_images.size()) == source.rank(), ErrorCode::NoSuchEmbedding,
          "need one image per simple root");
  SystemEmbedding e{&source, &target, {}, kind};
  e.root_map.resize(source.num_roots());
  std::set<RootId> used;
  for (RootId r = 0; r < source.num_roots(); ++r) {
    std::vector<int> c(target.rank(), 0);
    for (int i = 0; i < source.rank(); ++i)
      for (int k = 0; k < target.rank(); ++k) c[k] += source.root(r).coords[i] * target.root(simple_images[i]).coords[k];
    auto img = target.find(c);
    require(img.has_value(), ErrorCode::NoSuchEmbedding,
            source.format_root(r) + " of " + source.label() + " has no image root in " + target.label());
    require(used.insert(*img).second, ErrorCode::NoSuchEmbedding, "map is not injective");
    e.root_map[r] = *img;
  }
  // Sums must be preserved and the image must be closed.
  for (RootId a = 0; a < source.num_roots(); ++a)
    for (RootId b = 0; b < source.num_roots(); ++b) {
      if (b == source.negate(a)) continue;
      auto s = source.sum(a, b);
      auto t = target.sum(e.root_map[a], e.root_map[b]);
      require(s.has_value() == t.has_value(), ErrorCode::NoSuchEmbedding, "image is not a closed subsystem");
      if (s) require(e.root_map[*s] == *t, ErrorCode::NoSuchEmbedding, "sums are not preserved");
    }
  // Lengths must scale uniformly.
  for (RootId a = 0; a < source.num_roots(); ++a)
    for (RootId b = 0; b < source.num_roots(); ++b)
      require(source.inner(a, b) * target.inner(e.root_map[0], e.root_map[0]) ==
                  target.inner(e.root_map[a], e.root_map[b]) * source.inner(0, 0),
              ErrorCode::NoSuchEmbedding, "map does not preserve the form up to scale");
  return e;
}

SystemEmbedding simple_subset_embedding(const RootSystem& source, const RootSystem& target,
                                        const std::vector<int>& target_simple_indices) {
  std::vector<RootId> images;
  for (int i : target_simple_indices) {
    require(i >= 0 && i < target.rank(), ErrorCode::NoSuchEmbedding, "simple root index out of range");
    images.push_back(target.simple(i));
  }
  return embedding_from_simple_images(source, target, images, EmbeddingKind::SimpleSubset);
}

namespace {

SystemEmbedding a2_long(const RootSystem& target) {
  const RootSystem& a2 = RootSystem::get('A', 2);
  for (RootId a = 0; a < target.num_positive(); ++a) {
    if (!target.root(a).is_long) continue;
    for (RootId b = a + 1; b < target.num_positive(); ++b) {
      if (!target.root(b).is_long || target.pairing(a, b) != -1) continue;
      try {
        return embedding_from_simple_images(a2, target, {a, b}, EmbeddingKind::A2LongRoots);
      } catch (const Error&) {
      }
    }
  }
  fail(ErrorCode::NoSuchEmbedding, "no A2 on long roots of " + target.label());
}

SystemEmbedding a3_standard(const RootSystem& target) {
  const RootSystem& a3 = RootSystem::get('A', 3);
  const auto& A = target.cartan();
  const int l = target.rank();
  auto single = [&](int i, int j) { return A[i][j] == -1 && A[j][i] == -1; };
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = i + 1; k < l; ++k) {
        if (j == i || j == k || !single(i, j) || !single(j, k) || A[i][k] != 0) continue;
        return embedding_from_simple_images(a3, target, {i, j, k}, EmbeddingKind::A3Standard);
      }
  // No simply laced chain of simple roots: look among long positive roots.
  for (RootId a = 0; a < target.num_positive(); ++a)
    for (RootId b = 0; b < target.num_positive(); ++b)
      for (RootId c = a + 1; c < target.num_positive(); ++c) {
        if (!target.root(a).is_long || !target.root(b).is_long || !target.root(c).is_long) continue;
        if (target.pairing(a, b) != -1 || target.pairing(b, c) != -1 || target.inner(a, c) != 0) continue;
        try {
          return embedding_from_simple_images(a3, target, {a, b, c}, EmbeddingKind::A3Standard);
        } catch (const Error&) {
        }
      }
  fail(ErrorCode::NoSuchEmbedding, "no A3 in " + target.label());
}

}  // namespace

SystemEmbedding make_embedding(EmbeddingKind kind, const RootSystem& target) {
  switch (kind) {
    case EmbeddingKind::A2LongRoots: return a2_long(target);
    case EmbeddingKind::A3Standard: return a3_standard(target);
    case EmbeddingKind::D5inE6:
      require(target.type() == 'E' && target.rank() == 6, ErrorCode::NoSuchEmbedding, "D5inE6 needs target E6");
      return embedding_from_simple_images(RootSystem::get('D', 5), target, {0, 2, 3, 1, 4}, kind);
    case EmbeddingKind::DlinDl1: {
      require(target.type() == 'D' && target.rank() >= 4, ErrorCode::NoSuchEmbedding, "DlinDl1 needs target D_{l+1}, l >= 3");
      const int l = target.rank() - 1;
      std::vector<RootId> images;
      for (int i = 0; i < l; ++i) images.push_back(i + 1);
      return embedding_from_simple_images(RootSystem::get('D', l), target, images, kind);
    }
    case EmbeddingKind::ElinEl1: {
      require(target.type() == 'E' && target.rank() >= 7, ErrorCode::NoSuchEmbedding, "ElinEl1 needs target E7 or E8");
      const int l = target.rank() - 1;
      std::vector<RootId> images;
      for (int i = 0; i < l; ++i) images.push_back(i);
      return embedding_from_simple_images(RootSystem::get('E', l), target, images, kind);
    }
    case EmbeddingKind::SimpleSubset: break;
  }
  fail(ErrorCode::NoSuchEmbedding, "use simple_subset_embedding for SimpleSubset");
}

}  // namespace chevwidth
