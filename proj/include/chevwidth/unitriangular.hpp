#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "chevwidth/steinberg.hpp"

namespace chevwidth {

/// g = B_1 B_2 ... B_N with B_k in U^+ and U^- alternately, each block a
/// collected word.
struct UnitriangularForm {
  const RootSystem* system = nullptr;
  const Ring* ring = nullptr;
  bool first_positive = true;
  std::vector<SteinbergWord> blocks;

  int length() const { return static_cast<int>(blocks.size()); }
  int sign_of(int k) const { return (k % 2 == 0) == first_positive ? 1 : -1; }
  SteinbergWord flatten() const;
  int width() const { return static_cast<int>(flatten().size()); }
};

/// Checks strict alternation, block signs and normal form, then compares
/// the evaluation with g.
bool verify_form(const UnitriangularForm& f, const GroupElement& g);

/// Dense matrix over a finite field stored as field codes.
struct CodeMatrix {
  int n = 0;
  std::vector<std::uint16_t> a;
  bool operator==(const CodeMatrix& o) const { return a == o.a; }
};

/// Exhaustive product sets S_1 = U^{e_1}, S_{k+1} = S_k U^{e_{k+1}} over a
/// finite field, with one witness per element.
class ProductSets {
 public:
  /// Limits: rank <= 3, N <= 5, |U^+| <= 4096. Throws TooLargeForExhaustive.
  ProductSets(const Representation& rep, const Ring& field, int N, bool first_positive = true);

  const Representation& rep() const { return *rep_; }
  const Ring& field() const { return *field_; }
  int length() const { return N_; }
  /// |S_k| for k = 1..N.
  std::size_t size(int k) const { return layers_.at(k - 1).index.size(); }
  std::uint64_t unipotent_order() const { return units_[0].size(); }

  /// The form of g of length N (fewer blocks are padded with empty words),
  /// or nullopt when g is not in S_N.
  std::optional<UnitriangularForm> find(const GroupElement& g) const;
  /// Elements of S_k as matrices.
  std::vector<GroupElement> elements(int k) const;

 private:
  struct Layer {
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::uint32_t> parent;  // element index in the previous layer
    std::vector<std::uint32_t> factor;  // index into units_ of that sign
    std::vector<CodeMatrix> mats;
  };

  const Representation* rep_;
  const Ring* field_;
  int N_;
  bool first_positive_;
  std::vector<CodeMatrix> units_[2];  // [0]: U^+, [1]: U^-
  std::vector<SteinbergWord> unit_words_[2];
  std::vector<Layer> layers_;
};

/// Shared, lazily built product sets.
const ProductSets& product_sets(const Representation& rep, const Ring& field, int N, bool first_positive = true);

/// A length-N unitriangular form of g, or nullopt if none exists.
std::optional<UnitriangularForm> unitriangular_membership(const GroupElement& g, int N, bool first_positive = true);

/// |G| for the group generated by x_{+-a_i}(c), breadth-first over matrices.
/// Throws TooLargeForExhaustive beyond `limit` elements.
std::uint64_t generated_group_order(const Representation& rep, const Ring& field, std::uint64_t limit = 2000000);

CodeMatrix to_codes(const Matrix& m);
Matrix from_codes(const Ring& field, const CodeMatrix& c);
CodeMatrix multiply(const FiniteField& F, const CodeMatrix& x, const CodeMatrix& y);
std::string code_key(const CodeMatrix& c);

}  // namespace chevwidth
