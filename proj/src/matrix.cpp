#include "sl2kit/matrix.hpp"

#include "sl2kit/errors.hpp"
#include "sl2kit/linear_system.hpp"

#include <sstream>
#include <utility>

namespace sl2kit {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DimensionError("entry count does not match rows x cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::column(std::span<const Rational> values) {
  return Matrix(values.size(), 1, std::vector<Rational>(values.begin(), values.end()));
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : entries_)
    if (v != 0) return false;
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw DimensionError("power of a non-square matrix");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("sum of differently shaped matrices");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("difference of differently shaped matrices");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& v : entries_) v *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("product of incompatible matrices");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(l, j) != 0) c(i, j) += ail * b(l, j);
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

Matrix bracket(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("bracket needs square matrices of equal size");
  return a * b - b * a;
}

namespace {

struct BareissResult {
  std::size_t rank = 0;
  Integer last_pivot = 1;
  int sign = 1;
  Rational row_scale = 1;  // product of the factors used to clear denominators
};

// Fraction-free echelon reduction. Each row is first scaled to integers; the
// division by the previous pivot is exact (entries stay minors of the input).
BareissResult bareiss(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  BareissResult res;
  std::vector<std::vector<Integer>> w(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a(i, j) * lcm).get_num();
    res.row_scale *= lcm;
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && w[p][c] == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(w[p], w[r]);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer v = w[r][c] * w[i][j] - w[i][c] * w[r][j];
        mpz_divexact(w[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][c] = 0;
    }
    prev = w[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rank(const Matrix& a) { return bareiss(a).rank; }

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  const auto res = bareiss(a);
  if (res.rank < a.rows()) return 0;
  return Rational(res.last_pivot * res.sign) / res.row_scale;
}

std::vector<Matrix> solve_homogeneous(const Matrix& a) {
  LinearSystem system(a.cols());
  system.add_rows(a);
  std::vector<Matrix> basis;
  for (const auto& v : system.kernel()) basis.push_back(Matrix::column(v));
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("right-hand side height does not match");
  Matrix x(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    LinearSystem system(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::vector<LinearSystem::Term> terms;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != 0) terms.emplace_back(j, a(i, j));
      system.add_equation(std::move(terms), b(i, col));
    }
    auto sol = system.particular_solution();
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < a.cols(); ++j) x(j, col) = (*sol)[j];
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  if (rank(a) < a.rows()) throw DomainError("matrix is singular");
  return *solve(a, Matrix::identity(a.rows()));
}

NilpotencyData nilpotency_data(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("nilpotency of a non-square matrix");
  const std::size_t k = a.rows();
  NilpotencyData data;
  if (k == 0) return data;
  Matrix power = a;
  for (std::size_t m = 1; m <= k; ++m) {
    if (power.is_zero()) {
      data.is_nilpotent = true;
      data.index = m;
      data.single_block = (m == k);
      return data;
    }
    power = power * a;
  }
  return data;
}

Matrix log_unipotent(const Matrix& u) {
  if (!u.is_square()) throw DimensionError("logarithm of a non-square matrix");
  const std::size_t k = u.rows();
  const Matrix n = u - Matrix::identity(k);
  if (!nilpotency_data(n).is_nilpotent) throw DomainError("matrix is not unipotent");
  Matrix result(k, k);
  Matrix power = n;
  for (std::size_t i = 1; i < k && !power.is_zero(); ++i) {
    result += make_rational(i % 2 == 1 ? 1 : -1, static_cast<long>(i)) * power;
    power = power * n;
  }
  return result;
}

Matrix exp_nilpotent(const Matrix& x) {
  if (!x.is_square()) throw DimensionError("exponential of a non-square matrix");
  if (!nilpotency_data(x).is_nilpotent) throw DomainError("matrix is not nilpotent");
  const std::size_t k = x.rows();
  Matrix result = Matrix::identity(k);
  Matrix term = Matrix::identity(k);
  for (std::size_t i = 1; i < k; ++i) {
    term = term * x;
    term *= make_rational(1, static_cast<long>(i));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

}  // namespace sl2kit
