#include "chevwidth/poly.hpp"

#include <algorithm>

#include "chevwidth/errors.hpp"

namespace chevwidth {

Poly Poly::monomial(FieldCode c, int degree) {
  std::vector<FieldCode> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i)
    if (auto c = a.coeffs[i] <=> b.coeffs[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace poly {

Poly add(const FiniteField& F, const Poly& a, const Poly& b) {
  std::vector<FieldCode> r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(int(i)), b.coeff(int(i)));
  return Poly(std::move(r));
}

Poly neg(const FiniteField& F, const Poly& a) {
  Poly r = a;
  for (auto& c : r.coeffs) c = F.neg(c);
  return r;
}

Poly sub(const FiniteField& F, const Poly& a, const Poly& b) {
  std::vector<FieldCode> r(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(int(i)), b.coeff(int(i)));
  return Poly(std::move(r));
}

Poly mul(const FiniteField& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldCode> r(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  }
  return Poly(std::move(r));
}

Poly scale(const FiniteField& F, const Poly& a, FieldCode c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r.coeffs) x = F.mul(x, c);
  return r;
}

Poly shift(const Poly& a, int k) {
  if (a.is_zero()) return {};
  std::vector<FieldCode> r(k, 0);
  r.insert(r.end(), a.coeffs.begin(), a.coeffs.end());
  return Poly(std::move(r));
}

Poly pow(const FiniteField& F, const Poly& a, std::uint64_t e) {
  Poly r = Poly::constant(1), b = a;
  while (e) {
    if (e & 1) r = mul(F, r, b);
    e >>= 1;
    if (e) b = mul(F, b, b);
  }
  return r;
}

std::pair<Poly, Poly> divmod(const FiniteField& F, const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<FieldCode> r = a.coeffs;
  std::vector<FieldCode> q(a.degree() - b.degree() + 1, 0);
  const FieldCode inv_lead = F.inv(b.lead());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const FieldCode c = F.mul(r[i], inv_lead);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs[j]));
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly mod(const FiniteField& F, const Poly& a, const Poly& m) {
  if (a.degree() < m.degree()) return a;
  return divmod(F, a, m).second;
}

Poly monic(const FiniteField& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = mod(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

Bezout xgcd(const FiniteField& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldCode c = F.inv(r0.lead());
  return {scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)};
}

FieldCode eval(const FiniteField& F, const Poly& a, FieldCode x) {
  FieldCode r = 0;
  for (int i = a.degree(); i >= 0; --i) r = F.add(F.mul(r, x), a.coeffs[i]);
  return r;
}

Poly mulmod(const FiniteField& F, const Poly& a, const Poly& b, const Poly& m) { return mod(F, mul(F, a, b), m); }

Poly powmod(const FiniteField& F, const Poly& a, std::uint64_t e, const Poly& m) {
  Poly r = mod(F, Poly::constant(1), m), b = mod(F, a, m);
  while (e) {
    if (e & 1) r = mulmod(F, r, b, m);
    e >>= 1;
    if (e) b = mulmod(F, b, b, m);
  }
  return r;
}

Poly invmod(const FiniteField& F, const Poly& a, const Poly& m) {
  const auto bz = xgcd(F, mod(F, a, m), m);
  require(bz.g.is_one(), ErrorCode::NotAUnit, "element is not invertible modulo " + format(F, m));
  return mod(F, bz.s, m);
}

std::vector<Poly> monics_of_degree(const FiniteField& F, int d) {
  const std::uint64_t q = F.order();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<FieldCode> v(d + 1);
    std::uint64_t x = c;
    for (int i = 0; i < d; ++i) {
      v[i] = static_cast<FieldCode>(x % q);
      x /= q;
    }
    v[d] = 1;
    out.emplace_back(std::move(v));
  }
  return out;
}

namespace {

// Smallest-degree monic divisor of a (of degree >= 1); it is irreducible.
Poly least_factor(const FiniteField& F, const Poly& a) {
  for (int d = 1; 2 * d <= a.degree(); ++d) {
    const std::uint64_t q = F.order();
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    std::vector<FieldCode> v(d + 1);
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t x = c;
      for (int i = 0; i < d; ++i) {
        v[i] = static_cast<FieldCode>(x % q);
        x /= q;
      }
      v[d] = 1;
      Poly g(v);
      if (mod(F, a, g).is_zero()) return g;
    }
  }
  return monic(F, a);
}

}  // namespace

bool is_irreducible(const FiniteField& F, const Poly& a) {
  if (a.degree() < 1) return false;
  return least_factor(F, a).degree() == a.degree();
}

int multiplicity(const FiniteField& F, Poly a, const Poly& pi) {
  require(!a.is_zero(), ErrorCode::ZeroElement, "multiplicity of zero");
  int m = 0;
  while (true) {
    auto [q, r] = divmod(F, a, pi);
    if (!r.is_zero()) return m;
    a = std::move(q);
    ++m;
  }
}

std::vector<std::pair<Poly, int>> factor(const FiniteField& F, const Poly& a) {
  require(!a.is_zero(), ErrorCode::ZeroElement, "cannot factor zero");
  std::vector<std::pair<Poly, int>> out;
  Poly rest = monic(F, a);
  while (rest.degree() >= 1) {
    Poly g = least_factor(F, rest);
    int m = 0;
    while (true) {
      auto [q, r] = divmod(F, rest, g);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++m;
    }
    out.emplace_back(std::move(g), m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> irreducibles_of_degree(const FiniteField& F, int d) {
  std::vector<Poly> out;
  for (auto& m : monics_of_degree(F, d))
    if (is_irreducible(F, m)) out.push_back(std::move(m));
  return out;
}

std::string format(const FiniteField& F, const Poly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const FieldCode c = a.coeffs[i];
    if (c == 0) continue;
    std::string cs = F.format(c);
    const bool compound = F.degree() > 1 && cs.find('+') != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += cs + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace poly
}  // namespace chevwidth
