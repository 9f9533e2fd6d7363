#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chevwidth/places.hpp"

namespace chevwidth {

/// (-1)^{v(f) v(g)} g^{v(f)} / f^{v(g)} reduced into kappa_v. Throws ZeroElement.
ResidueFieldElement tame_symbol(const Place& v, const Elem& f, const Elem& g);

/// A class in K_2(F_q(t)), recorded by its nontrivial residues at finite
/// places. The group law is written additively.
struct K2Class {
  const Ring* field = nullptr;
  std::map<Place, ResidueFieldElement> residues;

  static K2Class zero(const Ring& field) { return K2Class{&field, {}}; }
  bool is_zero() const { return residues.empty(); }
  /// The residue at a finite place (1 off the support).
  ResidueFieldElement at(const Place& v) const;
  std::vector<Place> support() const;

  K2Class operator+(const K2Class& o) const;
  K2Class operator-() const;
  K2Class operator-(const K2Class& o) const { return *this + (-o); }
  friend bool operator==(const K2Class& a, const K2Class& b) { return a.residues == b.residues; }
  std::string to_string() const;
};

/// Class of the symbol {f, g}; f and g may come from F_q(t) or any of its
/// subrings. Throws ZeroElement.
K2Class k2_class(const Elem& f, const Elem& g);

/// Product over every place, infinity included, of the norms of the tame
/// symbols of {f, g}; equals 1 by Weil reciprocity.
FieldCode reciprocity_product(const Elem& f, const Elem& g);

struct SymbolPairText {
  std::string f;
  std::string g;
};

struct Certificate {
  std::string kind;
  std::string detail;
  bool ok = true;
};

struct K2GroupReport {
  std::string ring;
  std::uint64_t order = 1;
  std::string structure;
  std::vector<SymbolPairText> generators;
  std::vector<K2Class> generator_classes;
  std::vector<Certificate> certificates;
  bool verified = true;
};

/// K_2 of F_q[t] (trivial) or F_q[t, t^-1] (isomorphic to F_q^* through
/// u -> {t, u}), with certificates. Throws UnsupportedRing.
K2GroupReport k2_of_ring(const Ring& ring);

/// The class {t, u} for u in F_q^*. `u` may lie in F_q or be a constant of
/// a polynomial-type ring over it. Throws NotAUnit.
K2Class splitting_map(const Ring& laurent, const Elem& u);

struct SurjectivityWitness {
  Place place;
  ResidueFieldElement target;
  std::vector<std::pair<Elem, Elem>> symbols;  // the sum of their classes
  bool verified = false;
};

struct ExactSequenceReport {
  std::string ring;
  int max_degree = 0;
  std::vector<SurjectivityWitness> surjectivity;
  int kernel_samples = 0;
  int kernel_failures = 0;
  /// Kernel evidence holds by construction of the residue model.
  bool kernel_is_model_identity = true;
  bool ok = false;
};

/// Evidence for the localisation sequence of F_q[t] with S = {inf}: a
/// symbol combination hitting a generator of kappa_pi^* for every place of
/// degree <= max_degree, and sampled classes of the kernel. Throws
/// BudgetExceeded when a witness needs more than `budget` symbols.
ExactSequenceReport verify_exact_sequence(const Ring& ring, int max_degree, int budget, std::uint64_t seed);

/// Symbols {f_k, g_k} whose classes sum to the class with the single
/// residue `target` at its place. Throws BudgetExceeded.
std::vector<std::pair<Elem, Elem>> symbols_for_residue(const ResidueFieldElement& target, int budget);

}  // namespace chevwidth
