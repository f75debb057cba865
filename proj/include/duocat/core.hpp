#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace duocat {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Error raised by any precondition or input failure.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical string form: "p/q" with q > 0 and gcd(p,q)=1, plain "p" for
/// integers, "0" for zero.
std::string to_string(const Rational& r);

/// Parses the canonical form. Rejects zero denominators and malformed input.
Rational parse_rational(const std::string& s);

/// Dense exact matrix over Rational, row-major. 0xN and Nx0 shapes are legal
/// and represent maps to/from the zero space.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(checked_size(rows, cols)) {}
  Matrix(int rows, int cols, std::vector<Rational> entries);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  /// P * e_i = e_{p[i]}; composition of matrices matches composition of maps.
  static Matrix permutation(const std::vector<int>& p);
  static Matrix scalar(const Rational& r) { return Matrix(1, 1, {r}); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  Rational& operator()(int i, int j) {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  const std::vector<Rational>& entries() const { return a_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& r) const;
  Matrix transpose() const;

  /// Copies `m` into this matrix with upper-left corner at (r0, c0).
  void set_block(int r0, int c0, const Matrix& m);
  Matrix block(int r0, int c0, int rows, int cols) const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  static size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    return static_cast<size_t>(rows) * cols;
  }

  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Row-major Kronecker product: (a (x) b)[(i*rb+p),(j*cb+q)] = a[i,j]*b[p,q].
/// This is the single global tensor-basis convention.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& ms);

/// Canonical isomorphism permuting tensor factors. `dims` are the source
/// factor dimensions; target slot t holds source factor tau[t]. Returns the
/// 0/1 matrix routing each Kronecker basis vector accordingly.
Matrix factor_reorder(const std::vector<int>& dims,
                      const std::vector<int>& tau);

/// Block-diagonal matrix in list order; empty list gives the 0x0 matrix.
Matrix direct_sum(const std::vector<Matrix>& blocks);

/// Horizontal / vertical concatenation (equal rows resp. cols).
Matrix hcat(const std::vector<Matrix>& blocks);
Matrix vcat(const std::vector<Matrix>& blocks);

/// Basis of the column space: the pivot columns of the echelon reduction,
/// scanned left to right, returned as original columns of m.
Matrix column_space_basis(const Matrix& m);

/// Solves a * x = b exactly; throws Error("inconsistent linear system") if no
/// solution exists. When the solution is underdetermined an arbitrary one with
/// free variables set to zero is returned.
Matrix solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws Error("matrix not invertible").
Matrix inverse(const Matrix& m);

int rank(const Matrix& m);

}  // namespace duocat
