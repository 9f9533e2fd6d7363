#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chevwidth/groups.hpp"

namespace chevwidth {

struct Letter {
  RootId root;
  Elem param;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the generators x_a(r) of the Steinberg group St(system, ring).
struct SteinbergWord {
  const RootSystem* system = nullptr;
  const Ring* ring = nullptr;
  std::vector<Letter> letters;

  SteinbergWord() = default;
  SteinbergWord(const RootSystem& s, const Ring& r, std::vector<Letter> l = {});

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  void append(RootId root, const Elem& param);
  SteinbergWord operator*(const SteinbergWord& o) const;
  SteinbergWord inverse() const;
  friend bool operator==(const SteinbergWord&, const SteinbergWord&) = default;
};

/// Product of the letters' matrices in order. Throws RepMismatch.
GroupElement word_eval(const SteinbergWord& w, const Representation& rep);

/// x_a(u) x_{-a}(-u^{-1}) x_a(u).
SteinbergWord w_word(const RootSystem& system, RootId a, const Elem& u);
/// w_a(u) w_a(-1).
SteinbergWord h_word(const RootSystem& system, RootId a, const Elem& u);

/// The Steinberg symbol {u, v}_a = h_a(uv) h_a(u)^{-1} h_a(v)^{-1}.
struct SymbolExpr {
  RootId root;
  Elem u;
  Elem v;
};

/// w_a(uv) w_a(-u) w_a(1) w_a(-v): twelve letters. Throws NotAUnit.
SteinbergWord symbol_word(const RootSystem& system, const SymbolExpr& s);

/// Merges adjacent letters on the same root and drops zero parameters.
SteinbergWord reduce(const SteinbergWord& w);

/// Normal form of a word whose letters all lie in a set of roots closed
/// under positive combinations, using the commutator formula. `rank` must
/// strictly increase from a, b to every root i a + j b. The result lists each
/// root at most once, in increasing rank.
SteinbergWord collect(const SteinbergWord& w, const std::function<int(RootId)>& rank);
/// collect() with the root order, for words that are entirely positive or
/// entirely negative. Throws MixedSigns.
SteinbergWord collect_unipotent(const SteinbergWord& w);

enum class K2Verdict { InK2, NotInK2, UnknownModuloCenter };
std::string verdict_name(K2Verdict v);

/// Decides membership in K_2 through evaluation: faithful standard
/// representations for types A and C, the adjoint representation for types
/// with trivial centre, and adjoint-modulo-centre otherwise.
K2Verdict k2_witness(const SteinbergWord& w);

}  // namespace chevwidth
