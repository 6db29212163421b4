#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sl2kit {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms.
inline Rational make_rational(long num, long den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise integer literal, e.g. Matrix{{0, 1}, {0, 0}}.
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> diag);
  /// n x 1 column vector.
  static Matrix column(std::span<const Rational> values);
  /// The matrix unit E_{ij} (0-based).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;
  Matrix pow(unsigned exponent) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// a*b - b*a.
Matrix bracket(const Matrix& a, const Matrix& b);

/// Rank over Q, by Bareiss fraction-free elimination.
std::size_t rank(const Matrix& a);

/// Determinant over Q, by Bareiss fraction-free elimination.
Rational determinant(const Matrix& a);

/// Basis of the right kernel, each entry an n x 1 column. Empty iff the kernel is zero.
std::vector<Matrix> solve_homogeneous(const Matrix& a);

/// Some X with a*X = b, or nullopt if any column of b is outside the image.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(const Matrix& a);

struct NilpotencyData {
  bool is_nilpotent = false;
  std::optional<std::size_t> index;  // least m with a^m = 0
  bool single_block = false;         // one Jordan block: index == size
};

NilpotencyData nilpotency_data(const Matrix& a);

/// log(u) = sum_{i>=1} (-1)^{i+1} (u-1)^i / i for unipotent u.
Matrix log_unipotent(const Matrix& u);

/// exp(x) = sum_{i>=0} x^i / i! for nilpotent x.
Matrix exp_nilpotent(const Matrix& x);

}  // namespace sl2kit
