#pragma once

#include "sl2kit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace sl2kit {

/// Sparse homogeneous-or-inhomogeneous linear system over Q, reduced by
/// fraction-free row elimination. Rows are kept primitive (content 1) so
/// structured systems with a handful of terms per equation stay small.
class LinearSystem {
 public:
  using Term = std::pair<std::size_t, Rational>;

  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }

  /// Adds the equation sum(coeff * x[col]) = rhs. Zero terms are ignored;
  /// repeated columns are summed.
  void add_equation(std::vector<Term> terms, const Rational& rhs = 0);

  /// Adds every row of a * x = 0.
  void add_rows(const Matrix& a);

  std::size_t rank() const;

  /// Kernel basis of the homogeneous part, one dense vector per free unknown.
  std::vector<std::vector<Rational>> kernel() const;

  /// A particular solution (free unknowns set to zero), or nullopt if inconsistent.
  std::optional<std::vector<Rational>> particular_solution() const;

 private:
  struct IntRow {
    std::vector<std::pair<std::size_t, Integer>> terms;  // sorted by column, nonzero
    Integer rhs;
  };
  struct Echelon {
    std::vector<IntRow> pivots;  // pivots[i] leads at pivot_cols[i], increasing
    std::vector<std::size_t> pivot_cols;
    bool consistent = true;
  };

  Echelon reduce() const;
  static std::vector<Rational> back_substitute(const Echelon& e, std::size_t unknowns,
                                               std::optional<std::size_t> free_col,
                                               bool with_rhs);

  std::size_t unknowns_;
  std::vector<IntRow> rows_;
};

}  // namespace sl2kit
