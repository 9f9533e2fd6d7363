#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chevwidth {

/// Element of F_q stored as the integer whose base-p digits are the
/// coefficients of its residue polynomial (constant term least significant).
/// Prime-subfield elements therefore have code n mod p.
using FieldCode = std::uint32_t;

/// F_p or F_{p^k} = F_p[x]/(m). Extension fields keep full add/mul tables, so
/// q is capped at 1024 for k > 1.
class FiniteField {
 public:
  /// Prime field F_p.
  explicit FiniteField(std::uint32_t p);
  /// F_p[x]/(modulus); modulus is monic with coefficients listed constant term
  /// first and must be irreducible.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// Lexicographically least monic irreducible of degree k over F_p, where
  /// lower coefficients are ordered by sum c_i p^i.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, int k);
  static bool is_prime(std::uint64_t n);
  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldCode zero() const { return 0; }
  FieldCode one() const { return 1; }
  FieldCode from_int(std::int64_t n) const;
  bool is_zero(FieldCode a) const { return a == 0; }

  FieldCode add(FieldCode a, FieldCode b) const;
  FieldCode sub(FieldCode a, FieldCode b) const;
  FieldCode neg(FieldCode a) const;
  FieldCode mul(FieldCode a, FieldCode b) const;
  /// Throws NotAUnit on zero.
  FieldCode inv(FieldCode a) const;
  FieldCode pow(FieldCode a, std::int64_t e) const;

  std::vector<std::uint32_t> digits(FieldCode a) const;
  FieldCode from_digits(const std::vector<std::uint32_t>& d) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(FieldCode a) const;
  /// Least code generating F_q^*.
  FieldCode primitive_element() const;

  /// "3" for prime fields, polynomial in x ("x+2") for extensions.
  std::string format(FieldCode a) const;

 private:
  FieldCode mul_slow(FieldCode a, FieldCode b) const;

  std::uint32_t p_;
  int k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldCode> add_table_;
  std::vector<FieldCode> mul_table_;
  std::vector<FieldCode> inv_table_;
};

}  // namespace chevwidth
