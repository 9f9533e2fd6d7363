#pragma once

#include <string>
#include <vector>

#include "chevwidth/intmatrix.hpp"
#include "chevwidth/ring.hpp"

namespace chevwidth {

/// Dense matrix with entries in one ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Ring& ring, int rows, int cols);
  static Matrix identity(const Ring& ring, int n);
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Elem>>& rows);
  static Matrix from_int(const Ring& ring, const SparseIntMatrix& m);

  const Ring& ring() const { return *ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// this * (I + sum_k c^k X_k), using the sparsity of the X_k.
  void multiply_unipotent_right(const std::vector<SparseIntMatrix>& divided_powers, const Elem& c);

  bool is_identity() const;
  Matrix transpose() const;
  /// Fraction-free elimination; exact in every supported ring.
  Elem determinant() const;
  /// Throws NotAUnit when the determinant is not a unit.
  Matrix inverse() const;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  const Ring* ring_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

/// a / b when b divides a exactly; throws NotAUnit otherwise.
Elem exact_divide(const Elem& a, const Elem& b);

}  // namespace chevwidth
