#pragma once

#include <cstddef>
#include <vector>

namespace walkohm {

/// Dense row-major matrix of doubles. Everything in this project runs at desk
/// scale (a few thousand rows at most), so a plain dense kernel with partial
/// pivoting is used throughout; it keeps results bit-reproducible and lets
/// fundamental matrices be materialized explicitly.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

  std::vector<double> apply(const std::vector<double>& x) const;        // A x
  std::vector<double> apply_left(const std::vector<double>& x) const;   // x^T A

  double max_abs_diff(const Matrix& other) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// LU factorization with partial pivoting, PA = LU. Shared by the exact
/// Dirichlet solver, the fundamental-matrix computation and everything that
/// needs an inverse.
class LuDecomposition {
public:
  explicit LuDecomposition(Matrix a);

  bool singular() const { return singular_; }

  /// Solve A x = b. Throws Error(SingularSystem) when the factorization broke
  /// down.
  std::vector<double> solve(std::vector<double> b) const;

  /// Solve A X = B column by column.
  Matrix solve(const Matrix& b) const;

  Matrix inverse() const;

private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
  bool singular_ = false;
};

/// P^n by repeated squaring; n = 0 gives the identity.
Matrix matrix_power(const Matrix& p, unsigned long long n);

}  // namespace walkohm
