#include "sl2kit/linear_system.hpp"

#include "sl2kit/errors.hpp"

#include <algorithm>
#include <map>

namespace sl2kit {

namespace {

// Divides out the content of a row and fixes the sign of the leading term.
template <typename Row>
void make_primitive(Row& row) {
  Integer g = 0;
  for (const auto& [col, coeff] : row.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeff.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.rhs.get_mpz_t());
  if (g == 0) return;
  if (!row.terms.empty() && sgn(row.terms.front().second) < 0) g = -g;
  if (g == 1) return;
  for (auto& term : row.terms) mpz_divexact(term.second.get_mpz_t(), term.second.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(row.rhs.get_mpz_t(), row.rhs.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

void LinearSystem::add_equation(std::vector<Term> terms, const Rational& rhs) {
  std::map<std::size_t, Rational> merged;
  for (auto& [col, coeff] : terms) {
    if (col >= unknowns_) throw DimensionError("equation references unknown out of range");
    merged[col] += coeff;
  }
  Integer lcm = rhs.get_den();
  for (const auto& [col, coeff] : merged) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), coeff.get_den_mpz_t());

  IntRow row;
  for (const auto& [col, coeff] : merged) {
    if (coeff == 0) continue;
    Rational scaled = coeff * lcm;
    row.terms.emplace_back(col, scaled.get_num());
  }
  row.rhs = Rational(rhs * lcm).get_num();
  if (row.terms.empty() && row.rhs == 0) return;
  make_primitive(row);
  rows_.push_back(std::move(row));
}

void LinearSystem::add_rows(const Matrix& a) {
  if (a.cols() != unknowns_) throw DimensionError("matrix width does not match unknown count");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) terms.emplace_back(j, a(i, j));
    add_equation(std::move(terms));
  }
}

LinearSystem::Echelon LinearSystem::reduce() const {
  Echelon out;
  // buckets[c] holds rows whose leading column is c.
  std::vector<std::vector<IntRow>> buckets(unknowns_);
  for (const auto& row : rows_) {
    if (row.terms.empty()) {
      out.consistent = false;
      continue;
    }
    buckets[row.terms.front().first].push_back(row);
  }

  for (std::size_t c = 0; c < unknowns_; ++c) {
    auto bucket = std::move(buckets[c]);
    if (bucket.empty()) continue;
    auto pivot_it = std::min_element(bucket.begin(), bucket.end(), [](const IntRow& a, const IntRow& b) {
      return a.terms.size() < b.terms.size();
    });
    IntRow pivot = std::move(*pivot_it);
    bucket.erase(pivot_it);
    const Integer& lead = pivot.terms.front().second;

    for (auto& row : bucket) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), row.terms.front().second.get_mpz_t());
      Integer row_scale = lead / g;
      Integer pivot_scale = row.terms.front().second / g;

      // row <- row_scale * row - pivot_scale * pivot, merging sorted term lists.
      IntRow next;
      next.rhs = row_scale * row.rhs - pivot_scale * pivot.rhs;
      std::size_t i = 1, j = 1;
      while (i < row.terms.size() || j < pivot.terms.size()) {
        if (j >= pivot.terms.size() || (i < row.terms.size() && row.terms[i].first < pivot.terms[j].first)) {
          next.terms.emplace_back(row.terms[i].first, row_scale * row.terms[i].second);
          ++i;
        } else if (i >= row.terms.size() || pivot.terms[j].first < row.terms[i].first) {
          next.terms.emplace_back(pivot.terms[j].first, -pivot_scale * pivot.terms[j].second);
          ++j;
        } else {
          Integer v = row_scale * row.terms[i].second - pivot_scale * pivot.terms[j].second;
          if (v != 0) next.terms.emplace_back(row.terms[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      if (next.terms.empty()) {
        if (next.rhs != 0) out.consistent = false;
        continue;
      }
      make_primitive(next);
      buckets[next.terms.front().first].push_back(std::move(next));
    }
    out.pivot_cols.push_back(c);
    out.pivots.push_back(std::move(pivot));
  }
  return out;
}

std::vector<Rational> LinearSystem::back_substitute(const Echelon& e, std::size_t unknowns,
                                                    std::optional<std::size_t> free_col, bool with_rhs) {
  std::vector<Rational> x(unknowns, Rational(0));
  if (free_col) x[*free_col] = 1;
  for (std::size_t i = e.pivots.size(); i-- > 0;) {
    const auto& row = e.pivots[i];
    Rational sum = with_rhs ? Rational(row.rhs) : Rational(0);
    for (std::size_t t = 1; t < row.terms.size(); ++t) {
      const auto& [col, coeff] = row.terms[t];
      if (x[col] != 0) sum -= Rational(coeff) * x[col];
    }
    x[e.pivot_cols[i]] = sum / Rational(row.terms.front().second);
  }
  return x;
}

std::size_t LinearSystem::rank() const { return reduce().pivots.size(); }

std::vector<std::vector<Rational>> LinearSystem::kernel() const {
  const Echelon e = reduce();
  std::vector<bool> is_pivot(unknowns_, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t c = 0; c < unknowns_; ++c)
    if (!is_pivot[c]) basis.push_back(back_substitute(e, unknowns_, c, false));
  return basis;
}

std::optional<std::vector<Rational>> LinearSystem::particular_solution() const {
  const Echelon e = reduce();
  if (!e.consistent) return std::nullopt;
  return back_substitute(e, unknowns_, std::nullopt, true);
}

}  // namespace sl2kit
