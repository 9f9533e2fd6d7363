#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chevwidth {

/// Index into RootSystem::roots(). Positive roots occupy [0, N) in the fixed
/// total order; root N + i is the negative of root i.
using RootId = int;

struct Root {
  std::vector<int> coords;  // in the simple-root basis
  bool is_long = true;
};

/// A reduced irreducible root system in Bourbaki numbering, stored in exact
/// simple-root coordinates. The Gram matrix is scaled so that short roots
/// have squared length 2.
class RootSystem {
 public:
  /// Interned; valid (type, rank): A_l (l>=1), B_l (l>=2), C_l (l>=2),
  /// D_l (l>=3), E_6..8, F_4, G_2. Throws InvalidType.
  static const RootSystem& get(char type, int rank);
  /// "A2", "G2", "E8", ...
  static const RootSystem& parse(const std::string& label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  bool simply_laced() const { return type_ == 'A' || type_ == 'D' || type_ == 'E'; }

  int num_positive() const { return npos_; }
  int num_roots() const { return 2 * npos_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(RootId r) const { return roots_.at(r); }
  RootId simple(int i) const { return i; }  // simple roots are the first `rank` positive roots
  bool is_positive(RootId r) const { return r < npos_; }
  RootId negate(RootId r) const { return r < npos_ ? r + npos_ : r - npos_; }
  int height(RootId r) const;

  std::optional<RootId> find(const std::vector<int>& coords) const;
  std::optional<RootId> sum(RootId a, RootId b) const;
  /// Integer combination i*a + j*b, if it is a root.
  std::optional<RootId> combination(int i, RootId a, int j, RootId b) const;

  /// Symmetric bilinear form (scaled as above).
  int inner(const std::vector<int>& x, const std::vector<int>& y) const;
  int inner(RootId a, RootId b) const { return inner(roots_[a].coords, roots_[b].coords); }
  /// <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha).
  int pairing(RootId beta, RootId alpha) const;
  /// Cartan matrix A[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  /// sigma_alpha(beta) = beta - <beta, alpha^vee> alpha.
  RootId reflect(RootId alpha, RootId beta) const;
  /// Maximal (p, q) with beta - p alpha, ..., beta + q alpha all roots.
  /// Throws OppositeRoots when beta = +-alpha.
  std::pair<int, int> root_string(RootId alpha, RootId beta) const;

  /// |W| by the orbit-stabiliser chain on fundamental weights.
  std::uint64_t weyl_order() const;

  std::string format_root(RootId r) const;

 private:
  RootSystem(char type, int rank);

  char type_;
  int rank_;
  int npos_ = 0;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, RootId> index_;
};

enum class EmbeddingKind { A2LongRoots, A3Standard, D5inE6, DlinDl1, ElinEl1, SimpleSubset };

/// An injective, sum-preserving map of root systems whose image is a closed
/// subsystem of the target.
struct SystemEmbedding {
  const RootSystem* source = nullptr;
  const RootSystem* target = nullptr;
  std::vector<RootId> root_map;  // source root -> target root
  EmbeddingKind kind = EmbeddingKind::SimpleSubset;

  RootId operator()(RootId r) const { return root_map.at(r); }
  /// Inverse image, if the target root lies in the image.
  std::optional<RootId> preimage(RootId target_root) const;
  /// True when every source simple root maps to a target simple root.
  bool is_standard_levi() const;
};

/// A2LongRoots(target), A3Standard(target), D5inE6 (target E6),
/// DlinDl1 (target D_{l+1}), ElinEl1 (target E7 or E8).
/// Throws NoSuchEmbedding.
SystemEmbedding make_embedding(EmbeddingKind kind, const RootSystem& target);
/// Extends images of the source simple roots linearly and validates the
/// result. Throws NoSuchEmbedding.
SystemEmbedding embedding_from_simple_images(const RootSystem& source, const RootSystem& target,
                                             const std::vector<RootId>& simple_images,
                                             EmbeddingKind kind = EmbeddingKind::SimpleSubset);
/// Embedding of the subsystem spanned by the given target simple roots, with
/// `source` as its abstract type.
SystemEmbedding simple_subset_embedding(const RootSystem& source, const RootSystem& target,
                                        const std::vector<int>& target_simple_indices);

}  // namespace chevwidth
