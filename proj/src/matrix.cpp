#include "chevwidth/matrix.hpp"

#include <sstream>

#include "chevwidth/errors.hpp"

namespace chevwidth {

Matrix::Matrix(const Ring& ring, int rows, int cols)
    : ring_(&ring), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, ring.zero()) {}

Matrix Matrix::identity(const Ring& ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Elem>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, ErrorCode::ParseError, "ragged matrix");
    for (int j = 0; j < c; ++j) {
      require(rows[i][j].ring_ptr() == &ring, ErrorCode::DescriptorMismatch, "matrix entry from another ring");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_int(const Ring& ring, const SparseIntMatrix& s) {
  Matrix m(ring, s.n, s.n);
  for (const auto& e : s.entries) m.at(e.row, e.col) = m.at(e.row, e.col) + ring.from_int(e.value);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_ && ring_ == o.ring_, ErrorCode::DescriptorMismatch, "incompatible matrices");
  Matrix r(*ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Elem& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Elem& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DescriptorMismatch, "incompatible matrices");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DescriptorMismatch, "incompatible matrices");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void Matrix::multiply_unipotent_right(const std::vector<SparseIntMatrix>& dps, const Elem& c) {
  if (c.is_zero()) return;
  Matrix out = *this;
  Elem ck = ring_->one();
  for (const auto& xk : dps) {
    ck = ck * c;
    for (const auto& e : xk.entries) {
      const Elem f = ck * ring_->from_int(e.value);
      for (int i = 0; i < rows_; ++i) {
        const Elem& src = at(i, e.row);
        if (!src.is_zero()) out.at(i, e.col) = out.at(i, e.col) + src * f;
      }
    }
  }
  *this = std::move(out);
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(*ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Elem exact_divide(const Elem& a, const Elem& b) {
  const Ring& R = a.ring();
  if (R.is_field()) return a * b.inverse();
  auto [q, rem] = R.divmod(a, b);
  require(rem.is_zero(), ErrorCode::NotAUnit, b.to_string() + " does not divide " + a.to_string());
  return q;
}

Elem Matrix::determinant() const {
  require(rows_ == cols_, ErrorCode::DescriptorMismatch, "determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return ring_->one();
  Matrix m = *this;
  Elem sign = ring_->one();
  Elem prev = ring_->one();
  for (int k = 0; k + 1 < n; ++k) {
    int p = k;
    while (p < n && m.at(p, k).is_zero()) ++p;
    if (p == n) return ring_->zero();
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = exact_divide(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

Matrix Matrix::inverse() const {
  require(rows_ == cols_, ErrorCode::DescriptorMismatch, "inverse of a non-square matrix");
  const int n = rows_;
  const Elem det = determinant();
  require(det.is_unit(), ErrorCode::NotAUnit, "matrix is not invertible over " + ring_->name());
  if (ring_->is_field()) {
    Matrix a = *this;
    Matrix inv = identity(*ring_, n);
    for (int k = 0; k < n; ++k) {
      int p = k;
      while (a.at(p, k).is_zero()) ++p;
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(k, j));
        std::swap(inv.at(p, j), inv.at(k, j));
      }
      const Elem s = a.at(k, k).inverse();
      for (int j = 0; j < n; ++j) {
        a.at(k, j) = a.at(k, j) * s;
        inv.at(k, j) = inv.at(k, j) * s;
      }
      for (int i = 0; i < n; ++i) {
        if (i == k || a.at(i, k).is_zero()) continue;
        const Elem f = a.at(i, k);
        for (int j = 0; j < n; ++j) {
          a.at(i, j) = a.at(i, j) - f * a.at(k, j);
          inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
        }
      }
    }
    return inv;
  }
  // Adjugate over the ring.
  const Elem dinv = det.inverse();
  Matrix inv(*ring_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix minor(*ring_, n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc++) = at(r, c);
        }
        ++mr;
      }
      Elem cof = minor.determinant();
      if ((i + j) % 2) cof = -cof;
      inv.at(j, i) = cof * dinv;
    }
  return inv;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace chevwidth
