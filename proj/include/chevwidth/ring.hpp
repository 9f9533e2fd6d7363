#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chevwidth/finite_field.hpp"
#include "chevwidth/poly.hpp"

namespace chevwidth {

/// Laurent polynomial t^low * body with body(0) != 0 (zero: low = 0, body = 0).
struct Laurent {
  std::int64_t low = 0;
  Poly body;
  friend bool operator==(const Laurent&, const Laurent&) = default;
};

/// num/den in lowest terms with den monic (zero: 0/1).
struct Fraction {
  Poly num;
  Poly den = Poly::constant(1);
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

class Ring;

/// An exact element tagged with its ring. Integers and finite-field codes use
/// the int64 alternative.
class Elem {
 public:
  using Payload = std::variant<std::int64_t, Poly, Laurent, Fraction>;

  Elem() = default;
  Elem(const Ring* ring, Payload payload) : ring_(ring), v_(std::move(payload)) {}

  const Ring& ring() const { return *ring_; }
  const Ring* ring_ptr() const { return ring_; }
  const Payload& payload() const { return v_; }

  std::int64_t scalar() const { return std::get<std::int64_t>(v_); }
  const Poly& poly() const { return std::get<Poly>(v_); }
  const Laurent& laurent() const { return std::get<Laurent>(v_); }
  const Fraction& fraction() const { return std::get<Fraction>(v_); }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const;
  Elem inverse() const;
  Elem pow(std::int64_t e) const;

  /// Same ring and same canonical payload.
  friend bool operator==(const Elem& a, const Elem& b) { return a.ring_ == b.ring_ && a.v_ == b.v_; }

  std::string to_string() const;

 private:
  const Ring* ring_ = nullptr;
  Payload v_ = std::int64_t{0};
};

enum class RingKind { Integers, Field, Poly, Laurent, RationalFunction };

/// Description of R^* used by unit enumeration and the K_2 reports.
struct UnitGroupDescription {
  bool infinite = false;
  /// Full list when finite; the torsion part (constants) otherwise.
  std::vector<Elem> torsion;
  /// Free generator (t) for Laurent rings.
  std::optional<Elem> free_generator;
  std::string description;
};

/// Interned, immutable ring descriptor. Obtain rings through the static
/// factories; references stay valid for the lifetime of the process.
class Ring {
 public:
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  static const Ring& integers();
  static const Ring& prime_field(std::uint32_t p);
  /// F_{p^k} with the default (least irreducible) modulus.
  static const Ring& finite_field(std::uint32_t p, int k);
  static const Ring& extension_field(std::uint32_t p, std::vector<std::uint32_t> modulus);
  static const Ring& polynomials(const Ring& base);
  static const Ring& laurent(const Ring& base);
  static const Ring& rational_functions(const Ring& base);
  /// Canonical grammar: Z, F5, F9, F9[x^2+1], F5[t], F5[t,t^-1], F5(t),
  /// F9[x^2+1][t], ...
  static const Ring& parse(const std::string& descriptor);

  RingKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_field() const { return kind_ == RingKind::Field || kind_ == RingKind::RationalFunction; }
  bool is_finite_field() const { return kind_ == RingKind::Field; }
  bool is_euclidean() const { return kind_ != RingKind::RationalFunction; }
  /// Coefficient field of Poly/Laurent/RationalFunction rings, or the field itself.
  const FiniteField& field() const;
  const Ring& base() const;
  std::uint32_t characteristic() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(std::int64_t n) const;
  Elem constant(FieldCode c) const;
  /// The variable t (Poly/Laurent/RationalFunction).
  Elem variable() const;
  /// Finite fields: the element with the given code.
  Elem field_elem(FieldCode c) const;
  Elem from_poly(Poly p) const;
  Elem from_laurent(std::int64_t low, Poly body) const;
  Elem from_fraction(Poly num, Poly den) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  bool is_unit(const Elem& a) const;
  bool is_zero(const Elem& a) const;

  /// Euclidean size: |n| on Z, degree on F_q[t], Newton span on Laurent,
  /// 0 on fields; -1 for zero.
  std::int64_t euclid_size(const Elem& a) const;
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;

  /// Field of fractions F_q(t) for the polynomial-type rings.
  const Ring& fraction_field() const;
  /// Image in F_q(t) (Field, Poly, Laurent and RationalFunction inputs).
  Elem to_fraction(const Elem& a) const;

  UnitGroupDescription units() const;

  std::string format(const Elem& a) const;
  /// Parses an expression such as "t^2+2*t-1", "(t+1)/t", "t^-3", "x+1".
  Elem parse_elem(const std::string& text) const;

 private:
  Ring(RingKind kind, std::string name, std::shared_ptr<const FiniteField> field, const Ring* base);
  static const Ring& intern(RingKind kind, std::shared_ptr<const FiniteField> field, const Ring* base);

  void check(const Elem& a) const;
  Fraction make_fraction(Poly num, Poly den) const;
  Laurent make_laurent(std::int64_t low, Poly body) const;

  RingKind kind_;
  std::string name_;
  std::shared_ptr<const FiniteField> field_;
  const Ring* base_;
};

/// The ring Z must not overflow silently; these throw Overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace chevwidth
