#include "duocat/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace duocat {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!check_int(s)) throw Error("malformed rational: " + s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den) || den[0] == '-')
    throw Error("malformed rational: " + s);
  Integer d(den);
  if (d == 0) throw Error("zero denominator in rational: " + s);
  return Rational(Integer(num), d);
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  if (a_.size() != static_cast<size_t>(rows) * cols)
    throw Error("entry count does not match matrix shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::permutation(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(p[i], i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& y = o(k, j);
        if (y != 0) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix sum shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix difference shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& r) const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * r;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
    throw Error("block out of range");
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::block(int r0, int c0, int rows, int cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw Error("block out of range");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " [";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j)
      os << (j ? "," : "") << to_string((*this)(i, j));
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (x == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) {
          const Rational& y = b(p, q);
          if (y != 0) r(i * b.rows() + p, j * b.cols() + q) = x * y;
        }
    }
  return r;
}

Matrix kron(const std::vector<Matrix>& ms) {
  Matrix r = Matrix::identity(1);
  for (const auto& m : ms) r = kron(r, m);
  return r;
}

Matrix factor_reorder(const std::vector<int>& dims,
                      const std::vector<int>& tau) {
  int f = static_cast<int>(dims.size());
  if (static_cast<int>(tau.size()) != f) throw Error("factor count mismatch");
  long total = 1;
  for (int d : dims) total *= d;
  Matrix r(static_cast<int>(total), static_cast<int>(total));
  if (total == 0) return Matrix(0, 0);
  std::vector<int> idx(f, 0);
  for (long col = 0; col < total; ++col) {
    long row = 0;
    for (int t = 0; t < f; ++t) row = row * dims[tau[t]] + idx[tau[t]];
    r(static_cast<int>(row), static_cast<int>(col)) = 1;
    for (int p = f - 1; p >= 0; --p) {
      if (++idx[p] < dims[p]) break;
      idx[p] = 0;
    }
  }
  return r;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix r(rows, cols);
  int r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

Matrix hcat(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix(0, 0);
  int rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error("hcat row mismatch");
    cols += b.cols();
  }
  Matrix r(rows, cols);
  int c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(0, c0, b);
    c0 += b.cols();
  }
  return r;
}

Matrix vcat(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix(0, 0);
  int cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error("vcat col mismatch");
    rows += b.rows();
  }
  Matrix r(rows, cols);
  int r0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, 0, b);
    r0 += b.rows();
  }
  return r;
}

namespace {

// Row echelon reduction in place; returns pivot column indices in order.
std::vector<int> row_echelon(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = Rational(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix column_space_basis(const Matrix& m) {
  Matrix e = m;
  std::vector<int> pivots = row_echelon(e);
  Matrix r(m.rows(), static_cast<int>(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < m.rows(); ++i) r(i, static_cast<int>(j)) = m(i, pivots[j]);
  return r;
}

int rank(const Matrix& m) {
  Matrix e = m;
  return static_cast<int>(row_echelon(e).size());
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("solve shape mismatch");
  Matrix aug = hcat({a, b});
  std::vector<int> pivots = row_echelon(aug);
  // Any pivot in the b part means inconsistency.
  for (int p : pivots)
    if (p >= a.cols()) throw Error("inconsistent linear system");
  Matrix x(a.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[r], j) = aug(static_cast<int>(r), a.cols() + j);
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("matrix not invertible");
  if (rank(m) != m.rows()) throw Error("matrix not invertible");
  return solve(m, Matrix::identity(m.rows()));
}

}  // namespace duocat
