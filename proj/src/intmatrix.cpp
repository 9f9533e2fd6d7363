#include "chevwidth/intmatrix.hpp"

#include <algorithm>
#include <map>

#include "chevwidth/errors.hpp"
#include "chevwidth/ring.hpp"

namespace chevwidth {

namespace {

SparseIntMatrix from_map(int n, const std::map<std::pair<int, int>, std::int64_t>& m) {
  SparseIntMatrix r{n, {}};
  for (const auto& [k, v] : m)
    if (v != 0) r.entries.push_back({k.first, k.second, v});
  return r;
}

}  // namespace

std::vector<std::int64_t> SparseIntMatrix::dense() const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : entries) d[static_cast<std::size_t>(e.row) * n + e.col] += e.value;
  return d;
}

SparseIntMatrix SparseIntMatrix::from_dense(int n, const std::vector<std::int64_t>& d) {
  SparseIntMatrix r{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (auto v = d[static_cast<std::size_t>(i) * n + j]) r.entries.push_back({i, j, v});
  return r;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  std::vector<std::vector<const IntEntry*>> rows(b.n);
  for (const auto& e : b.entries) rows[e.row].push_back(&e);
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (const auto& x : a.entries)
    for (const IntEntry* y : rows[x.col]) {
      auto& slot = acc[{x.row, y->col}];
      slot = checked_add(slot, checked_mul(x.value, y->value));
    }
  return from_map(a.n, acc);
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (const auto& e : a.entries) acc[{e.row, e.col}] += e.value;
  for (const auto& e : b.entries) acc[{e.row, e.col}] += e.value;
  return from_map(a.n, acc);
}

SparseIntMatrix scaled(const SparseIntMatrix& a, std::int64_t c) {
  SparseIntMatrix r{a.n, {}};
  if (c == 0) return r;
  for (const auto& e : a.entries) r.entries.push_back({e.row, e.col, checked_mul(e.value, c)});
  return r;
}

SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) { return a + scaled(b, -1); }

SparseIntMatrix lie_bracket(const SparseIntMatrix& a, const SparseIntMatrix& b) { return a * b - b * a; }

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  return a.n == b.n && (a - b).entries.empty();
}

std::vector<SparseIntMatrix> divided_powers(const SparseIntMatrix& x) {
  std::vector<SparseIntMatrix> out;
  SparseIntMatrix power = x;
  for (int k = 1; !power.empty(); ++k) {
    require(k <= x.n + 1, ErrorCode::InternalError, "matrix is not nilpotent");
    if (k > 1) {
      power = out.back() * x;
      if (power.empty()) break;
      for (auto& e : power.entries) {
        require(e.value % k == 0, ErrorCode::InternalError, "divided power is not integral");
        e.value /= k;
      }
    }
    out.push_back(power);
  }
  return out;
}

}  // namespace chevwidth
