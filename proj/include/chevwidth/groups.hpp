#pragma once

#include <string>
#include <vector>

#include "chevwidth/liealg.hpp"
#include "chevwidth/matrix.hpp"

namespace chevwidth {

enum class RepKind { StandardSL, StandardSp, Adjoint };

std::string rep_kind_name(RepKind kind);  // "sl", "sp", "adjoint"
RepKind parse_rep_kind(const std::string& name);

/// A representation of the Chevalley group given by integer matrices rho(e_a)
/// of the Chevalley basis, compatible with the ChevalleyBasis structure
/// constants. StandardSL needs type A, StandardSp type C.
class Representation {
 public:
  /// Cached. Throws UnsupportedRepForType.
  static const Representation& get(const RootSystem& system, RepKind kind);

  const RootSystem& system() const { return *system_; }
  RepKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  /// Faithful for the simply connected group.
  bool faithful() const { return kind_ != RepKind::Adjoint; }
  std::string name() const { return system_->label() + "/" + rep_kind_name(kind_); }

  const SparseIntMatrix& root_matrix(RootId a) const { return e_.at(a); }
  /// rho(e_a)^k / k!, k = 1, 2, ...
  const std::vector<SparseIntMatrix>& divided_powers(RootId a) const { return dp_.at(a); }
  const SparseIntMatrix& cartan_matrix(int i) const { return h_.at(i); }

 private:
  Representation(const RootSystem& system, RepKind kind);

  const RootSystem* system_;
  RepKind kind_;
  int dim_ = 0;
  std::vector<SparseIntMatrix> e_;
  std::vector<SparseIntMatrix> h_;
  std::vector<std::vector<SparseIntMatrix>> dp_;
};

/// An element of the Chevalley group realised in a representation.
struct GroupElement {
  const Representation* rep = nullptr;
  Matrix matrix;

  const Ring& ring() const { return matrix.ring(); }
  GroupElement operator*(const GroupElement& o) const;
  bool operator==(const GroupElement& o) const { return rep == o.rep && matrix == o.matrix; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  GroupElement inverse() const;
  /// Right multiplication by x_a(r) in place.
  GroupElement& times_elementary(RootId a, const Elem& r);
};

GroupElement identity_element(const Representation& rep, const Ring& ring);
/// x_a(r) = exp(r rho(e_a)).
GroupElement elementary(const Representation& rep, RootId a, const Elem& r);
/// w_a(u) = x_a(u) x_{-a}(-u^{-1}) x_a(u). Throws NotAUnit.
GroupElement w_element(const Representation& rep, RootId a, const Elem& u);
/// h_a(u) = w_a(u) w_a(-1). Throws NotAUnit.
GroupElement h_element(const Representation& rep, RootId a, const Elem& u);
/// exp(r ad e_a) on the Chevalley basis.
GroupElement adjoint_unipotent(const ChevalleyBasis& basis, RootId a, const Elem& r);

/// [g, h] = g h g^{-1} h^{-1}.
GroupElement commutator(const GroupElement& g, const GroupElement& h);
/// The right side of the commutator formula in the fixed product order.
GroupElement commutator_product(const Representation& rep, RootId a, RootId b, const Elem& r, const Elem& s);
/// The same product for an explicitly supplied coefficient list.
GroupElement commutator_product(const Representation& rep, const std::vector<CommutatorTerm>& terms, const Elem& r,
                                const Elem& s);
/// [x_a(r), x_b(s)] equals the commutator product. Throws OppositeRoots.
bool verify_commutator(const Representation& rep, RootId a, RootId b, const Elem& r, const Elem& s);
bool verify_commutator(const Representation& rep, RootId a, RootId b, const std::vector<CommutatorTerm>& terms,
                       const Elem& r, const Elem& s);

bool is_identity(const GroupElement& g);
/// g commutes with x_a(1) for every simple and negative simple root a.
bool is_central(const GroupElement& g);

/// The symplectic form J of Sp_{2l}: J[i][2l-1-i] = +1 for i < l and -1 for i >= l.
std::vector<std::vector<int>> symplectic_form(int l);
/// g^T J g = J.
bool preserves_symplectic_form(const Matrix& g);

}  // namespace chevwidth
