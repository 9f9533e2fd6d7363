#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chevwidth/unitriangular.hpp"

namespace chevwidth {

/// An embedding of root systems together with the signs c relating the
/// two Chevalley bases: e_a (source) corresponds to c_a e_{f(a)} (target).
struct BasisEmbedding {
  SystemEmbedding map;
  std::vector<int> sign;

  /// x_a(r) in the source as a target letter, and back.
  Letter to_target(const Letter& l) const;
  Letter to_source(const Letter& l) const;
};

/// Throws NoSuchEmbedding if no consistent signs exist.
BasisEmbedding basis_embedding(const SystemEmbedding& e);

using FormOracle = std::function<std::optional<UnitriangularForm>(const GroupElement&)>;

/// Oracle backed by exhaustive product sets.
FormOracle product_set_oracle(const Representation& rep, const Ring& field, int N);

struct Subsystem {
  SystemEmbedding embedding;
  const Representation* source_rep = nullptr;
  FormOracle oracle;
};

/// Lifts length-N unitriangular factorisations from standard Levi
/// subsystems to the whole group: for a generator x_a(r) with a in a
/// subsystem D, the D-parts of the blocks are refactored by the oracle and
/// the unipotent-radical parts are conjugated into place.
class TavgenLift {
 public:
  /// Throws CoverageGap when a simple root lies in no subsystem and
  /// InvalidType for subsystems that are not standard Levi subsystems.
  TavgenLift(const Representation& target, const Ring& ring, std::vector<Subsystem> subsystems, int N);

  const Representation& target() const { return *target_; }
  const Ring& ring() const { return *ring_; }
  int length() const { return N_; }

  UnitriangularForm identity_form() const;
  /// A form of x_a(r) eval(f) for a simple or negative simple root a.
  UnitriangularForm left_multiply(const UnitriangularForm& f, RootId a, const Elem& r) const;
  /// A form of eval(w); other root letters are rewritten as conjugates by w_i(1).
  UnitriangularForm lift_word(const SteinbergWord& w) const;
  /// SL targets: factor_sln followed by lift_word.
  UnitriangularForm lift(const GroupElement& g) const;

  /// x_gamma(r) as a word in simple and negative simple letters.
  std::vector<Letter> simple_letters(RootId gamma, const Elem& r) const;

 private:
  const Representation* target_;
  const Ring* ring_;
  int N_;
  std::vector<Subsystem> subs_;
  std::vector<BasisEmbedding> maps_;
  // Reflection data: gamma = s_i(beta) and w_i(1) x_beta(s) w_i(1)^-1 = x_gamma(eps s).
  struct Step {
    int simple = -1;
    RootId beta = -1;
    int eps = 1;
  };
  std::vector<Step> steps_;
};

struct LiftSweep {
  std::uint64_t elements = 0;
  std::uint64_t lifts = 0;
  std::uint64_t failures = 0;
  std::uint64_t max_width = 0;
};

/// Breadth-first search over x_{+-a_i}(c) from the identity, lifting a form
/// for each new element and re-evaluating it. Throws TooLargeForExhaustive
/// beyond `limit` elements.
LiftSweep tavgen_exhaustive(const TavgenLift& lift, std::uint64_t limit = 2000000);
/// Random walk of `steps` generator multiplications with a re-evaluated form
/// at every step.
LiftSweep tavgen_random_walk(const TavgenLift& lift, int steps, std::uint64_t seed);

/// Standard A2 subsystems of a simply-laced target, one per edge of the
/// Dynkin diagram, with product-set oracles over `field`.
std::vector<Subsystem> a2_edge_subsystems(const RootSystem& target, const Ring& field, int N);

}  // namespace chevwidth
