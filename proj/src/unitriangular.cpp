#include "chevwidth/unitriangular.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

#include "chevwidth/errors.hpp"

namespace chevwidth {

SteinbergWord UnitriangularForm::flatten() const {
  SteinbergWord w(*system, *ring);
  for (const auto& b : blocks) w = w * b;
  return w;
}

bool verify_form(const UnitriangularForm& f, const GroupElement& g) {
  const RootSystem& R = *f.system;
  for (int k = 0; k < f.length(); ++k) {
    const auto& b = f.blocks[k];
    if (b.system != f.system || b.ring != f.ring) return false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (R.is_positive(b.letters[i].root) != (f.sign_of(k) > 0)) return false;
      if (i > 0 && b.letters[i - 1].root >= b.letters[i].root) return false;
      if (b.letters[i].param.is_zero()) return false;
    }
  }
  return word_eval(f.flatten(), *g.rep) == g;
}

CodeMatrix to_codes(const Matrix& m) {
  require(m.ring().is_finite_field(), ErrorCode::UnsupportedRing, "exhaustive methods need a finite field");
  CodeMatrix c{m.rows(), {}};
  c.a.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c.a.push_back(static_cast<std::uint16_t>(m.at(i, j).scalar()));
  return c;
}

Matrix from_codes(const Ring& field, const CodeMatrix& c) {
  Matrix m(field, c.n, c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) m.at(i, j) = field.field_elem(c.a[static_cast<std::size_t>(i) * c.n + j]);
  return m;
}

CodeMatrix multiply(const FiniteField& F, const CodeMatrix& x, const CodeMatrix& y) {
  const int n = x.n;
  CodeMatrix r{n, std::vector<std::uint16_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const FieldCode a = x.a[static_cast<std::size_t>(i) * n + k];
      if (!a) continue;
      for (int j = 0; j < n; ++j) {
        const FieldCode b = y.a[static_cast<std::size_t>(k) * n + j];
        if (!b) continue;
        auto& dst = r.a[static_cast<std::size_t>(i) * n + j];
        dst = static_cast<std::uint16_t>(F.add(dst, F.mul(a, b)));
      }
    }
  return r;
}

std::string code_key(const CodeMatrix& c) {
  return std::string(reinterpret_cast<const char*>(c.a.data()), c.a.size() * sizeof(std::uint16_t));
}

ProductSets::ProductSets(const Representation& rep, const Ring& field, int N, bool first_positive)
    : rep_(&rep), field_(&field), N_(N), first_positive_(first_positive) {
  const RootSystem& R = rep.system();
  require(field.is_finite_field(), ErrorCode::UnsupportedRing, "product sets need a finite field");
  require(N >= 1 && N <= 5, ErrorCode::TooLargeForExhaustive, "alternation length must be between 1 and 5");
  require(R.rank() <= 3, ErrorCode::TooLargeForExhaustive, "exhaustive enumeration is limited to rank <= 3");
  const double usize = std::pow(static_cast<double>(field.field().order()), R.num_positive());
  require(usize <= 4096, ErrorCode::TooLargeForExhaustive, "|U| exceeds 4096");
  const FiniteField& F = field.field();
  const std::uint32_t q = F.order();

  for (int s = 0; s < 2; ++s) {
    const RootId base = s == 0 ? 0 : R.num_positive();
    std::vector<FieldCode> digits(R.num_positive(), 0);
    for (;;) {
      SteinbergWord w(R, field);
      for (int k = 0; k < R.num_positive(); ++k)
        if (digits[k]) w.append(base + k, field.field_elem(digits[k]));
      units_[s].push_back(to_codes(word_eval(w, rep).matrix));
      unit_words_[s].push_back(std::move(w));
      int k = 0;
      while (k < R.num_positive() && ++digits[k] == q) digits[k++] = 0;
      if (k == R.num_positive()) break;
    }
  }

  layers_.resize(N);
  for (int k = 0; k < N; ++k) {
    const int s = ((k % 2 == 0) == first_positive) ? 0 : 1;
    Layer& L = layers_[k];
    auto add = [&](CodeMatrix m, std::uint32_t parent, std::uint32_t factor) {
      auto [it, fresh] = L.index.emplace(code_key(m), static_cast<std::uint32_t>(L.mats.size()));
      if (!fresh) return;
      L.mats.push_back(std::move(m));
      L.parent.push_back(parent);
      L.factor.push_back(factor);
    };
    if (k == 0) {
      for (std::uint32_t u = 0; u < units_[s].size(); ++u) add(units_[s][u], 0, u);
      continue;
    }
    const Layer& P = layers_[k - 1];
    for (std::uint32_t x = 0; x < P.mats.size(); ++x)
      for (std::uint32_t u = 0; u < units_[s].size(); ++u) add(multiply(F, P.mats[x], units_[s][u]), x, u);
  }
}

std::optional<UnitriangularForm> ProductSets::find(const GroupElement& g) const {
  require(g.rep == rep_ && &g.ring() == field_, ErrorCode::RepMismatch, "element outside the enumerated group");
  const CodeMatrix c = to_codes(g.matrix);
  auto it = layers_.back().index.find(code_key(c));
  if (it == layers_.back().index.end()) return std::nullopt;
  UnitriangularForm f{&rep_->system(), field_, first_positive_, std::vector<SteinbergWord>(N_)};
  std::uint32_t idx = it->second;
  for (int k = N_ - 1; k >= 0; --k) {
    const Layer& L = layers_[k];
    const int s = f.sign_of(k) > 0 ? 0 : 1;
    f.blocks[k] = unit_words_[s][L.factor[idx]];
    idx = L.parent[idx];
  }
  return f;
}

std::vector<GroupElement> ProductSets::elements(int k) const {
  std::vector<GroupElement> out;
  for (const auto& m : layers_.at(k - 1).mats) out.push_back({rep_, from_codes(*field_, m)});
  return out;
}

const ProductSets& product_sets(const Representation& rep, const Ring& field, int N, bool first_positive) {
  static std::mutex mu;
  static std::map<std::tuple<const Representation*, const Ring*, int, bool>, std::unique_ptr<ProductSets>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{&rep, &field, N, first_positive}];
  if (!slot) slot = std::make_unique<ProductSets>(rep, field, N, first_positive);
  return *slot;
}

std::optional<UnitriangularForm> unitriangular_membership(const GroupElement& g, int N, bool first_positive) {
  return product_sets(*g.rep, g.ring(), N, first_positive).find(g);
}

std::uint64_t generated_group_order(const Representation& rep, const Ring& field, std::uint64_t limit) {
  const RootSystem& R = rep.system();
  const FiniteField& F = field.field();
  std::vector<CodeMatrix> gens;
  for (int i = 0; i < R.rank(); ++i)
    for (RootId a : {R.simple(i), R.negate(R.simple(i))})
      for (FieldCode c = 1; c < F.order(); ++c) gens.push_back(to_codes(elementary(rep, a, field.field_elem(c)).matrix));
  const CodeMatrix id = to_codes(Matrix::identity(field, rep.dimension()));
  std::unordered_set<std::string> seen{code_key(id)};
  std::deque<CodeMatrix> queue{id};
  while (!queue.empty()) {
    CodeMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      CodeMatrix y = multiply(F, g, x);
      if (seen.insert(code_key(y)).second) {
        require(seen.size() <= limit, ErrorCode::TooLargeForExhaustive, "group exceeds the enumeration limit");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

}  // namespace chevwidth
