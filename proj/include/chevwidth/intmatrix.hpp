#pragma once

#include <cstdint>
#include <vector>

namespace chevwidth {

struct IntEntry {
  int row;
  int col;
  std::int64_t value;
};

/// Square integer matrix stored as a list of nonzero entries.
struct SparseIntMatrix {
  int n = 0;
  std::vector<IntEntry> entries;

  bool empty() const { return entries.empty(); }
  std::vector<std::int64_t> dense() const;
  static SparseIntMatrix from_dense(int n, const std::vector<std::int64_t>& d);
};

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix scaled(const SparseIntMatrix& a, std::int64_t c);
/// [a, b] = ab - ba.
SparseIntMatrix lie_bracket(const SparseIntMatrix& a, const SparseIntMatrix& b);
bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// X^k / k! for k = 1, 2, ... until the power vanishes. Throws InternalError
/// when X is not nilpotent or a divided power is not integral.
std::vector<SparseIntMatrix> divided_powers(const SparseIntMatrix& x);

}  // namespace chevwidth
