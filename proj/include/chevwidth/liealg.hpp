#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "chevwidth/intmatrix.hpp"
#include "chevwidth/roots.hpp"

namespace chevwidth {

/// Sparse vector in the Chevalley basis: (basis index, coefficient).
using BasisVector = std::vector<std::pair<int, std::int64_t>>;

/// One factor x_{i a + j b}(N r^i s^j) of the commutator [x_a(r), x_b(s)].
struct CommutatorTerm {
  int i;
  int j;
  RootId root;
  std::int64_t coeff;
  friend bool operator==(const CommutatorTerm&, const CommutatorTerm&) = default;
};

/// Chevalley basis of the simple Lie algebra over Z attached to a root
/// system. Basis index r < 2N is e_r for RootId r; index 2N + i is h_i.
///
/// Signs are normalised so that N_{a,b} > 0 for every extraspecial pair.
class ChevalleyBasis {
 public:
  /// Cached per root system; safe to call concurrently.
  static const ChevalleyBasis& get(const RootSystem& system);

  const RootSystem& system() const { return *system_; }
  int dimension() const { return system_->num_roots() + system_->rank(); }
  int cartan_index(int i) const { return system_->num_roots() + i; }

  /// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; 0 when a+b is not a root.
  int N(RootId a, RootId b) const { return n_[static_cast<std::size_t>(a) * nroots_ + b]; }
  /// h_a = [e_a, e_{-a}] in the basis h_1..h_l.
  const std::vector<int>& coroot(RootId a) const { return coroots_.at(a); }

  BasisVector bracket(int x, int y) const;
  BasisVector bracket(const BasisVector& x, const BasisVector& y) const;

  /// ad e_a as an integer matrix (column y holds [e_a, y]).
  const SparseIntMatrix& ad(RootId a) const { return ad_.at(a); }
  SparseIntMatrix ad_cartan(int i) const;

  /// Coefficients N_{a b i j}, ordered by increasing i + j and then i.
  /// Throws OppositeRoots when b = -a.
  const std::vector<CommutatorTerm>& commutator(RootId a, RootId b) const;
  /// Independent derivation by decomposing [x_a(1), x_b(1)] in the adjoint
  /// representation over Z.
  std::vector<CommutatorTerm> commutator_from_adjoint(RootId a, RootId b) const;

  /// Sorted (i, j, root) with i a + j b a root, i, j >= 1.
  std::vector<CommutatorTerm> commutator_shape(RootId a, RootId b) const;

  /// The extraspecial pair (a, b) of a non-simple positive root.
  std::pair<RootId, RootId> extraspecial_pair(RootId xi) const;

 private:
  explicit ChevalleyBasis(const RootSystem& system);

  const RootSystem* system_;
  int nroots_;
  std::vector<int> n_;
  std::vector<std::vector<int>> coroots_;
  std::vector<SparseIntMatrix> ad_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<RootId, RootId>, std::vector<CommutatorTerm>> comm_cache_;
};

/// Convenience wrapper over ChevalleyBasis::commutator.
const std::vector<CommutatorTerm>& commutator_coefficients(const ChevalleyBasis& basis, RootId a, RootId b);

}  // namespace chevwidth
