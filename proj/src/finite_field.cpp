#include "chevwidth/finite_field.hpp"

#include <numeric>

#include "chevwidth/errors.hpp"

namespace chevwidth {

namespace {

constexpr std::uint64_t kMaxExtensionOrder = 1024;

// Dense polynomial helpers over F_p (constant term first, no normalization).
void trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                      std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t inv_lead = 1;
  {
    // m need not be monic in the irreducibility test.
    std::uint64_t base = m.back() % p, e = p - 2;
    while (e) {
      if (e & 1) inv_lead = inv_lead * base % p;
      base = base * base % p;
      e >>= 1;
    }
  }
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool FiniteField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool FiniteField::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  std::vector<std::uint32_t> f = poly;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint64_t x = c;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (poly_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> FiniteField::default_modulus(std::uint32_t p, int k) {
  require(is_prime(p), ErrorCode::InvalidType, "characteristic " + std::to_string(p) + " is not prime");
  require(k >= 1, ErrorCode::InvalidType, "extension degree must be positive");
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::uint32_t> m(k + 1);
    std::uint64_t x = c;
    for (int i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    m[k] = 1;
    if (is_irreducible(p, m)) return m;
  }
  fail(ErrorCode::InternalError, "no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t p) : p_(p), k_(1), q_(p), modulus_{0, 1} {
  require(is_prime(p), ErrorCode::InvalidType, "characteristic " + std::to_string(p) + " is not prime");
  require(p < (1u << 31), ErrorCode::InvalidType, "characteristic too large");
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
  require(is_prime(p), ErrorCode::InvalidType, "characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus_) c %= p;
  trim(modulus_);
  require(modulus_.size() >= 2 && modulus_.back() == 1, ErrorCode::InvalidType, "modulus must be monic of degree >= 1");
  k_ = static_cast<int>(modulus_.size()) - 1;
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= p;
  if (k_ == 1) return;
  require(q_ <= kMaxExtensionOrder, ErrorCode::InvalidType, "extension fields are limited to q <= 1024");
  require(is_irreducible(p, modulus_), ErrorCode::InvalidType, "modulus is not irreducible");
  add_table_.resize(q_ * q_);
  mul_table_.resize(q_ * q_);
  inv_table_.assign(q_, 0);
  for (FieldCode a = 0; a < q_; ++a) {
    const auto da = digits(a);
    for (FieldCode b = 0; b < q_; ++b) {
      const auto db = digits(b);
      std::vector<std::uint32_t> s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_table_[a * q_ + b] = from_digits(s);
      mul_table_[a * q_ + b] = mul_slow(a, b);
    }
  }
  for (FieldCode a = 1; a < q_; ++a)
    for (FieldCode b = 1; b < q_; ++b)
      if (mul_table_[a * q_ + b] == 1) {
        inv_table_[a] = b;
        break;
      }
}

FieldCode FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<FieldCode>(r);
}

std::vector<std::uint32_t> FiniteField::digits(FieldCode a) const {
  std::vector<std::uint32_t> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FieldCode FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  FieldCode a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p_ + d[i] % p_;
  return a;
}

FieldCode FiniteField::mul_slow(FieldCode a, FieldCode b) const {
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint32_t> prod(2 * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
  auto r = poly_mod_p(prod, modulus_, p_);
  r.resize(k_, 0);
  return from_digits(r);
}

FieldCode FiniteField::add(FieldCode a, FieldCode b) const {
  if (k_ == 1) {
    const std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<FieldCode>(s >= p_ ? s - p_ : s);
  }
  return add_table_[a * q_ + b];
}

FieldCode FiniteField::neg(FieldCode a) const {
  if (a == 0) return 0;
  if (k_ == 1) return p_ - a;
  auto d = digits(a);
  for (auto& x : d) x = (p_ - x) % p_;
  return from_digits(d);
}

FieldCode FiniteField::sub(FieldCode a, FieldCode b) const { return add(a, neg(b)); }

FieldCode FiniteField::mul(FieldCode a, FieldCode b) const {
  if (k_ == 1) return static_cast<FieldCode>(std::uint64_t(a) * b % p_);
  return mul_table_[a * q_ + b];
}

FieldCode FiniteField::inv(FieldCode a) const {
  require(a != 0, ErrorCode::NotAUnit, "zero has no inverse in F_" + std::to_string(q_));
  if (k_ == 1) return pow(a, static_cast<std::int64_t>(p_) - 2);
  return inv_table_[a];
}

FieldCode FiniteField::pow(FieldCode a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  FieldCode r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FiniteField::mult_order(FieldCode a) const {
  require(a != 0, ErrorCode::NotAUnit, "zero has no multiplicative order");
  const std::uint64_t n = q_ - 1;
  std::uint64_t order = n;
  std::vector<std::uint64_t> primes;
  std::uint64_t m = n;
  for (std::uint64_t ell = 2; ell * ell <= m; ++ell) {
    if (m % ell != 0) continue;
    primes.push_back(ell);
    while (m % ell == 0) m /= ell;
  }
  if (m > 1) primes.push_back(m);
  for (const auto ell : primes)
    while (order % ell == 0 && pow(a, static_cast<std::int64_t>(order / ell)) == 1) order /= ell;
  return order;
}

FieldCode FiniteField::primitive_element() const {
  for (FieldCode a = 1; a < q_; ++a)
    if (mult_order(a) == q_ - 1) return a;
  fail(ErrorCode::InternalError, "no primitive element");
}

std::string FiniteField::format(FieldCode a) const {
  if (k_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace chevwidth
