#include "chevwidth/ring.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "chevwidth/errors.hpp"

namespace chevwidth {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

// ---------------------------------------------------------------- registry

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<Ring>>& registry() {
  static std::map<std::string, std::unique_ptr<Ring>> r;
  return r;
}

std::string field_name(const FiniteField& F) {
  std::string name = "F" + std::to_string(F.order());
  if (F.degree() > 1) {
    Poly m;
    m.coeffs.assign(F.modulus().begin(), F.modulus().end());
    name += "[" + poly::format(FiniteField(F.characteristic()), m, "x") + "]";
  }
  return name;
}

}  // namespace

Ring::Ring(RingKind kind, std::string name, std::shared_ptr<const FiniteField> field, const Ring* base)
    : kind_(kind), name_(std::move(name)), field_(std::move(field)), base_(base) {}

const Ring& Ring::intern(RingKind kind, std::shared_ptr<const FiniteField> field, const Ring* base) {
  std::string name;
  switch (kind) {
    case RingKind::Integers: name = "Z"; break;
    case RingKind::Field: name = field_name(*field); break;
    case RingKind::Poly: name = base->name() + "[t]"; break;
    case RingKind::Laurent: name = base->name() + "[t,t^-1]"; break;
    case RingKind::RationalFunction: name = base->name() + "(t)"; break;
  }
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[name];
  if (!slot) slot.reset(new Ring(kind, name, std::move(field), base));
  return *slot;
}

const Ring& Ring::integers() { return intern(RingKind::Integers, nullptr, nullptr); }

const Ring& Ring::prime_field(std::uint32_t p) {
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find("F" + std::to_string(p));
    if (it != registry().end()) return *it->second;
  }
  return intern(RingKind::Field, std::make_shared<const FiniteField>(p), nullptr);
}

const Ring& Ring::finite_field(std::uint32_t p, int k) {
  if (k == 1) return prime_field(p);
  return extension_field(p, FiniteField::default_modulus(p, k));
}

const Ring& Ring::extension_field(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() == 2) return prime_field(p);
  {
    // Table construction is costly; look the name up before building the field.
    require(FiniteField::is_prime(p), ErrorCode::InvalidType, std::to_string(p) + " is not prime");
    Poly m;
    for (auto c : modulus) m.coeffs.push_back(c % p);
    m.normalize();
    std::uint64_t q = 1;
    for (int i = 0; i < m.degree(); ++i) q *= p;
    const std::string name = "F" + std::to_string(q) + "[" + poly::format(FiniteField(p), m, "x") + "]";
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(name);
    if (it != registry().end()) return *it->second;
  }
  return intern(RingKind::Field, std::make_shared<const FiniteField>(p, std::move(modulus)), nullptr);
}

const Ring& Ring::polynomials(const Ring& base) {
  require(base.kind() == RingKind::Field, ErrorCode::UnsupportedRing, "polynomial rings need a finite base field");
  return intern(RingKind::Poly, base.field_, &base);
}

const Ring& Ring::laurent(const Ring& base) {
  require(base.kind() == RingKind::Field, ErrorCode::UnsupportedRing, "Laurent rings need a finite base field");
  return intern(RingKind::Laurent, base.field_, &base);
}

const Ring& Ring::rational_functions(const Ring& base) {
  require(base.kind() == RingKind::Field, ErrorCode::UnsupportedRing, "function fields need a finite base field");
  return intern(RingKind::RationalFunction, base.field_, &base);
}

const Ring& Ring::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Z") return integers();
  require(!s.empty() && s[0] == 'F', ErrorCode::ParseError, "unknown ring descriptor '" + text + "'");
  std::size_t pos = 1;
  std::uint64_t q = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) q = q * 10 + (s[pos++] - '0');
  require(q >= 2, ErrorCode::ParseError, "missing field order in '" + text + "'");
  std::uint32_t p = 0;
  int k = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d) continue;
    p = static_cast<std::uint32_t>(d);
    std::uint64_t x = q;
    while (x % d == 0) {
      x /= d;
      ++k;
    }
    require(x == 1, ErrorCode::InvalidType, std::to_string(q) + " is not a prime power");
    break;
  }
  const Ring* field = nullptr;
  std::string rest = s.substr(pos);
  if (!rest.empty() && rest[0] == '[' && rest.rfind("[t", 0) != 0) {
    const auto close = rest.find(']');
    require(close != std::string::npos, ErrorCode::ParseError, "unterminated modulus in '" + text + "'");
    const std::string mod_text = rest.substr(1, close - 1);
    const Ring& fp_poly = polynomials(prime_field(p));
    // The modulus is written in x; reuse the t-parser after renaming.
    std::string renamed = mod_text;
    for (auto& c : renamed)
      if (c == 'x') c = 't';
    const Poly m = fp_poly.parse_elem(renamed).poly();
    require(m.degree() == k, ErrorCode::InvalidType, "modulus degree does not match field order " + std::to_string(q));
    field = &extension_field(p, std::vector<std::uint32_t>(m.coeffs.begin(), m.coeffs.end()));
    rest = rest.substr(close + 1);
  } else {
    field = &finite_field(p, k);
  }
  if (rest.empty()) return *field;
  if (rest == "[t]") return polynomials(*field);
  if (rest == "[t,t^-1]" || rest == "[t,1/t]") return laurent(*field);
  if (rest == "(t)") return rational_functions(*field);
  fail(ErrorCode::ParseError, "unknown ring suffix '" + rest + "' in '" + text + "'");
}

// ---------------------------------------------------------------- basics

const FiniteField& Ring::field() const {
  require(field_ != nullptr, ErrorCode::UnsupportedRing, name_ + " has no coefficient field");
  return *field_;
}

const Ring& Ring::base() const {
  if (kind_ == RingKind::Field || kind_ == RingKind::Integers) return *this;
  return *base_;
}

std::uint32_t Ring::characteristic() const { return kind_ == RingKind::Integers ? 0 : field_->characteristic(); }

void Ring::check(const Elem& a) const {
  if (a.ring_ptr() != this)
    fail(ErrorCode::DescriptorMismatch,
         "element of " + (a.ring_ptr() ? a.ring().name() : std::string("<none>")) + " used in " + name_);
}

Laurent Ring::make_laurent(std::int64_t low, Poly body) const {
  body.normalize();
  if (body.is_zero()) return {};
  std::size_t z = 0;
  while (body.coeffs[z] == 0) ++z;
  if (z) body.coeffs.erase(body.coeffs.begin(), body.coeffs.begin() + static_cast<std::ptrdiff_t>(z));
  return {low + static_cast<std::int64_t>(z), std::move(body)};
}

Fraction Ring::make_fraction(Poly num, Poly den) const {
  const auto& F = *field_;
  require(!den.is_zero(), ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) return {};
  Poly g = poly::gcd(F, num, den);
  if (!g.is_one()) {
    num = poly::divmod(F, num, g).first;
    den = poly::divmod(F, den, g).first;
  }
  const FieldCode c = F.inv(den.lead());
  return {poly::scale(F, num, c), poly::scale(F, den, c)};
}

Elem Ring::zero() const { return from_int(0); }
Elem Ring::one() const { return from_int(1); }

Elem Ring::from_int(std::int64_t n) const {
  switch (kind_) {
    case RingKind::Integers: return Elem(this, n);
    case RingKind::Field: return Elem(this, std::int64_t{field_->from_int(n)});
    default: return constant(field_->from_int(n));
  }
}

Elem Ring::constant(FieldCode c) const {
  switch (kind_) {
    case RingKind::Integers: fail(ErrorCode::UnsupportedRing, "Z has no field constants");
    case RingKind::Field: return Elem(this, std::int64_t{c});
    case RingKind::Poly: return Elem(this, Poly::constant(c));
    case RingKind::Laurent: return Elem(this, make_laurent(0, Poly::constant(c)));
    case RingKind::RationalFunction: return Elem(this, make_fraction(Poly::constant(c), Poly::constant(1)));
  }
  fail(ErrorCode::InternalError, "bad ring kind");
}

Elem Ring::field_elem(FieldCode c) const {
  require(c < field().order(), ErrorCode::ParseError, "field code out of range");
  return constant(c);
}

Elem Ring::variable() const {
  const Poly t = Poly::monomial(1, 1);
  switch (kind_) {
    case RingKind::Poly: return Elem(this, t);
    case RingKind::Laurent: return Elem(this, Laurent{1, Poly::constant(1)});
    case RingKind::RationalFunction: return Elem(this, Fraction{t, Poly::constant(1)});
    default: fail(ErrorCode::UnsupportedRing, name_ + " has no variable t");
  }
}

Elem Ring::from_poly(Poly p) const {
  p.normalize();
  switch (kind_) {
    case RingKind::Poly: return Elem(this, std::move(p));
    case RingKind::Laurent: return Elem(this, make_laurent(0, std::move(p)));
    case RingKind::RationalFunction: return Elem(this, make_fraction(std::move(p), Poly::constant(1)));
    case RingKind::Field:
      require(p.degree() <= 0, ErrorCode::DescriptorMismatch, "non-constant polynomial in a field");
      return Elem(this, std::int64_t{p.coeff(0)});
    default: fail(ErrorCode::UnsupportedRing, "polynomial in " + name_);
  }
}

Elem Ring::from_laurent(std::int64_t low, Poly body) const {
  require(kind_ == RingKind::Laurent, ErrorCode::UnsupportedRing, "Laurent payload in " + name_);
  return Elem(this, make_laurent(low, std::move(body)));
}

Elem Ring::from_fraction(Poly num, Poly den) const {
  require(kind_ == RingKind::RationalFunction, ErrorCode::UnsupportedRing, "fraction payload in " + name_);
  return Elem(this, make_fraction(std::move(num), std::move(den)));
}

bool Ring::is_zero(const Elem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Field: return a.scalar() == 0;
    case RingKind::Poly: return a.poly().is_zero();
    case RingKind::Laurent: return a.laurent().body.is_zero();
    case RingKind::RationalFunction: return a.fraction().num.is_zero();
  }
  return false;
}

// ---------------------------------------------------------------- arithmetic

Elem Ring::add(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  const auto& F = *field_;
  switch (kind_) {
    case RingKind::Integers: return Elem(this, checked_add(a.scalar(), b.scalar()));
    case RingKind::Field:
      return Elem(this, std::int64_t{F.add(static_cast<FieldCode>(a.scalar()), static_cast<FieldCode>(b.scalar()))});
    case RingKind::Poly: return Elem(this, poly::add(F, a.poly(), b.poly()));
    case RingKind::Laurent: {
      const auto &x = a.laurent(), &y = b.laurent();
      if (x.body.is_zero()) return b;
      if (y.body.is_zero()) return a;
      const std::int64_t low = std::min(x.low, y.low);
      Poly s = poly::add(F, poly::shift(x.body, int(x.low - low)), poly::shift(y.body, int(y.low - low)));
      return Elem(this, make_laurent(low, std::move(s)));
    }
    case RingKind::RationalFunction: {
      const auto &x = a.fraction(), &y = b.fraction();
      if (x.den == y.den) return Elem(this, make_fraction(poly::add(F, x.num, y.num), x.den));
      Poly num = poly::add(F, poly::mul(F, x.num, y.den), poly::mul(F, y.num, x.den));
      return Elem(this, make_fraction(std::move(num), poly::mul(F, x.den, y.den)));
    }
  }
  fail(ErrorCode::InternalError, "bad ring kind");
}

Elem Ring::neg(const Elem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Integers: return Elem(this, checked_mul(a.scalar(), -1));
    case RingKind::Field: return Elem(this, std::int64_t{field_->neg(static_cast<FieldCode>(a.scalar()))});
    case RingKind::Poly: return Elem(this, poly::neg(*field_, a.poly()));
    case RingKind::Laurent: return Elem(this, Laurent{a.laurent().low, poly::neg(*field_, a.laurent().body)});
    case RingKind::RationalFunction:
      return Elem(this, Fraction{poly::neg(*field_, a.fraction().num), a.fraction().den});
  }
  fail(ErrorCode::InternalError, "bad ring kind");
}

Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  const auto& F = *field_;
  switch (kind_) {
    case RingKind::Integers: return Elem(this, checked_mul(a.scalar(), b.scalar()));
    case RingKind::Field:
      return Elem(this, std::int64_t{F.mul(static_cast<FieldCode>(a.scalar()), static_cast<FieldCode>(b.scalar()))});
    case RingKind::Poly: return Elem(this, poly::mul(F, a.poly(), b.poly()));
    case RingKind::Laurent: {
      const auto &x = a.laurent(), &y = b.laurent();
      if (x.body.is_zero() || y.body.is_zero()) return zero();
      return Elem(this, Laurent{x.low + y.low, poly::mul(F, x.body, y.body)});
    }
    case RingKind::RationalFunction: {
      const auto &x = a.fraction(), &y = b.fraction();
      return Elem(this, make_fraction(poly::mul(F, x.num, y.num), poly::mul(F, x.den, y.den)));
    }
  }
  fail(ErrorCode::InternalError, "bad ring kind");
}

bool Ring::is_unit(const Elem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Integers: return a.scalar() == 1 || a.scalar() == -1;
    case RingKind::Field: return a.scalar() != 0;
    case RingKind::Poly: return a.poly().degree() == 0;
    case RingKind::Laurent: return a.laurent().body.degree() == 0;
    case RingKind::RationalFunction: return !a.fraction().num.is_zero();
  }
  return false;
}

Elem Ring::inv(const Elem& a) const {
  check(a);
  require(is_unit(a), ErrorCode::NotAUnit, format(a) + " is not a unit in " + name_);
  const auto& F = *field_;
  switch (kind_) {
    case RingKind::Integers: return a;
    case RingKind::Field: return Elem(this, std::int64_t{F.inv(static_cast<FieldCode>(a.scalar()))});
    case RingKind::Poly: return Elem(this, Poly::constant(F.inv(a.poly().lead())));
    case RingKind::Laurent: return Elem(this, Laurent{-a.laurent().low, Poly::constant(F.inv(a.laurent().body.lead()))});
    case RingKind::RationalFunction: return Elem(this, make_fraction(a.fraction().den, a.fraction().num));
  }
  fail(ErrorCode::InternalError, "bad ring kind");
}

std::int64_t Ring::euclid_size(const Elem& a) const {
  check(a);
  if (is_zero(a)) return -1;
  switch (kind_) {
    case RingKind::Integers: return a.scalar() < 0 ? -a.scalar() : a.scalar();
    case RingKind::Field: return 0;
    case RingKind::Poly: return a.poly().degree();
    case RingKind::Laurent: return a.laurent().body.degree();
    case RingKind::RationalFunction: break;
  }
  fail(ErrorCode::NotEuclidean, name_ + " is not Euclidean");
}

std::pair<Elem, Elem> Ring::divmod(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  require(is_euclidean(), ErrorCode::NotEuclidean, name_ + " is not Euclidean");
  require(!is_zero(b), ErrorCode::DivisionByZero, "division by zero in " + name_);
  const auto& F = *field_;
  switch (kind_) {
    case RingKind::Integers: {
      const std::int64_t x = a.scalar(), y = b.scalar();
      std::int64_t q = x / y;
      if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
      return {Elem(this, q), Elem(this, x - q * y)};
    }
    case RingKind::Field: return {mul(a, inv(b)), zero()};
    case RingKind::Poly: {
      auto [q, r] = poly::divmod(F, a.poly(), b.poly());
      return {Elem(this, std::move(q)), Elem(this, std::move(r))};
    }
    case RingKind::Laurent: {
      const auto &x = a.laurent(), &y = b.laurent();
      if (x.body.is_zero()) return {zero(), zero()};
      auto [q, r] = poly::divmod(F, x.body, y.body);
      return {Elem(this, make_laurent(x.low - y.low, std::move(q))), Elem(this, make_laurent(x.low, std::move(r)))};
    }
    case RingKind::RationalFunction: break;
  }
  fail(ErrorCode::NotEuclidean, name_ + " is not Euclidean");
}

const Ring& Ring::fraction_field() const {
  require(kind_ != RingKind::Integers, ErrorCode::UnsupportedRing, "fractions of Z (Q) are not supported");
  return rational_functions(kind_ == RingKind::Field ? *this : *base_);
}

Elem Ring::to_fraction(const Elem& a) const {
  check(a);
  const Ring& K = fraction_field();
  switch (kind_) {
    case RingKind::Field: return K.constant(static_cast<FieldCode>(a.scalar()));
    case RingKind::Poly: return K.from_poly(a.poly());
    case RingKind::Laurent: {
      const auto& l = a.laurent();
      if (l.low >= 0) return K.from_poly(poly::shift(l.body, int(l.low)));
      return K.from_fraction(l.body, Poly::monomial(1, int(-l.low)));
    }
    case RingKind::RationalFunction: return a;
    default: fail(ErrorCode::UnsupportedRing, "no fraction field");
  }
}

UnitGroupDescription Ring::units() const {
  UnitGroupDescription d;
  switch (kind_) {
    case RingKind::Integers:
      d.torsion = {from_int(1), from_int(-1)};
      d.description = "{1,-1}";
      return d;
    case RingKind::Field:
    case RingKind::Poly:
    case RingKind::Laurent:
      for (FieldCode c = 1; c < field_->order(); ++c) d.torsion.push_back(constant(c));
      if (kind_ == RingKind::Laurent) {
        d.infinite = true;
        d.free_generator = variable();
        d.description = "{c*t^k : c in " + base_->name() + "^*, k in Z}";
      } else {
        d.description = "constants " + (kind_ == RingKind::Field ? name_ : base_->name()) + "^*";
      }
      return d;
    case RingKind::RationalFunction:
      d.infinite = true;
      d.description = "all nonzero elements";
      return d;
  }
  return d;
}

// ---------------------------------------------------------------- text

namespace {

std::string format_laurent(const FiniteField& F, const Laurent& l) {
  if (l.body.is_zero()) return "0";
  std::string out;
  for (int i = l.body.degree(); i >= 0; --i) {
    const FieldCode c = l.body.coeffs[i];
    if (c == 0) continue;
    const std::int64_t e = l.low + i;
    std::string cs = F.format(c);
    if (F.degree() > 1 && cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += cs + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Recursive-descent parser for ring expressions.
class ExprParser {
 public:
  ExprParser(const Ring& ring, const std::string& text) : ring_(ring), text_(text) {}

  Elem parse() {
    Elem e = expr();
    skip();
    require(pos_ == text_.size(), ErrorCode::ParseError, "trailing input in '" + text_ + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Elem expr() {
    Elem acc = ring_.zero();
    bool first = true;
    while (true) {
      bool negate = false;
      if (eat('-')) negate = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      Elem t = term();
      acc = negate ? ring_.sub(acc, t) : ring_.add(acc, t);
      first = false;
      skip();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Elem term() {
    Elem acc = power();
    while (true) {
      if (eat('*')) acc = ring_.mul(acc, power());
      else if (eat('/')) acc = ring_.mul(acc, ring_.inv(power()));
      else break;
    }
    return acc;
  }

  Elem power() {
    Elem base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::int64_t e = 0;
      require(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])), ErrorCode::ParseError,
              "expected exponent in '" + text_ + "'");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) e = e * 10 + (text_[pos_++] - '0');
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  Elem atom() {
    skip();
    require(pos_ < text_.size(), ErrorCode::ParseError, "unexpected end of '" + text_ + "'");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Elem e = expr();
      require(eat(')'), ErrorCode::ParseError, "missing ')' in '" + text_ + "'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        n = checked_add(checked_mul(n, 10), text_[pos_++] - '0');
      return ring_.from_int(n);
    }
    if (c == 't') {
      ++pos_;
      return ring_.variable();
    }
    if (c == 'x') {
      ++pos_;
      require(ring_.kind() != RingKind::Integers && ring_.field().degree() > 1, ErrorCode::ParseError,
              "'x' only denotes the generator of an extension field");
      return ring_.constant(ring_.field().characteristic());
    }
    fail(ErrorCode::ParseError, std::string("unexpected '") + c + "' in '" + text_ + "'");
  }

  const Ring& ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Ring::format(const Elem& a) const {
  check(a);
  switch (kind_) {
    case RingKind::Integers: return std::to_string(a.scalar());
    case RingKind::Field: return field_->format(static_cast<FieldCode>(a.scalar()));
    case RingKind::Poly: return poly::format(*field_, a.poly());
    case RingKind::Laurent: return format_laurent(*field_, a.laurent());
    case RingKind::RationalFunction: {
      const auto& f = a.fraction();
      if (f.den.is_one()) return poly::format(*field_, f.num);
      return "(" + poly::format(*field_, f.num) + ")/(" + poly::format(*field_, f.den) + ")";
    }
  }
  return "?";
}

Elem Ring::parse_elem(const std::string& text) const { return ExprParser(*this, text).parse(); }

// ---------------------------------------------------------------- Elem

bool Elem::is_zero() const { return ring_->is_zero(*this); }
bool Elem::is_one() const { return *this == ring_->one(); }
bool Elem::is_unit() const { return ring_->is_unit(*this); }
Elem Elem::operator+(const Elem& o) const { return ring_->add(*this, o); }
Elem Elem::operator-(const Elem& o) const { return ring_->sub(*this, o); }
Elem Elem::operator*(const Elem& o) const { return ring_->mul(*this, o); }
Elem Elem::operator-() const { return ring_->neg(*this); }
Elem Elem::inverse() const { return ring_->inv(*this); }

Elem Elem::pow(std::int64_t e) const {
  Elem base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Elem r = ring_->one();
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

std::string Elem::to_string() const { return ring_ ? ring_->format(*this) : "<null>"; }

}  // namespace chevwidth
