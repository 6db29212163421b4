#include "sl2kit/principal_sl2.hpp"

#include "sl2kit/errors.hpp"
#include "sl2kit/linear_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sl2kit {

namespace {

void require_dimension(std::size_t k) {
  if (k < 2) throw DomainError("sl2-triple needs dimension k >= 2, got " + std::to_string(k));
}

bool has_standard_h(const Sl2Triple& t) {
  const auto k = static_cast<long>(t.k);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      if (t.h(i, j) != (i == j ? Rational(k - 1 - 2 * i) : Rational(0))) return false;
  return true;
}

std::size_t diagonal_length(std::size_t k, long offset) {
  return offset == 0 ? k - 1 : k - static_cast<std::size_t>(std::labs(offset));
}

// Coordinates of m restricted to the diagonal at the given offset. The main
// diagonal uses partial sums, i.e. the H_i coordinates of a traceless matrix.
std::vector<Rational> diagonal_vector(const Matrix& m, long offset) {
  const std::size_t k = m.rows();
  const std::size_t n = diagonal_length(k, offset);
  std::vector<Rational> v(n);
  if (offset == 0) {
    Rational running = 0;
    for (std::size_t j = 0; j < n; ++j) v[j] = running += m(j, j);
  } else if (offset > 0) {
    for (std::size_t j = 0; j < n; ++j) v[j] = m(j, j + static_cast<std::size_t>(offset));
  } else {
    for (std::size_t j = 0; j < n; ++j) v[j] = m(j + static_cast<std::size_t>(-offset), j);
  }
  return v;
}

unsigned first_block_on_diagonal(long offset) { return offset == 0 ? 1u : static_cast<unsigned>(std::labs(offset)); }

}  // namespace

bool is_principal_triple(const Sl2Triple& t) {
  const std::size_t k = t.k;
  for (const Matrix* m : {&t.x, &t.h, &t.y})
    if (m->rows() != k || m->cols() != k || m->trace() != 0) return false;
  if (bracket(t.h, t.x) != Rational(2) * t.x) return false;
  if (bracket(t.h, t.y) != Rational(-2) * t.y) return false;
  if (bracket(t.x, t.y) != t.h) return false;
  return nilpotency_data(t.x).single_block;
}

Sl2Triple principal_triple(std::size_t k) {
  require_dimension(k);
  Sl2Triple t{k, Matrix(k, k), Matrix(k, k), Matrix(k, k)};
  const auto kl = static_cast<long>(k);
  for (long i = 0; i < kl; ++i) t.h(i, i) = kl - 1 - 2 * i;
  for (long i = 0; i + 1 < kl; ++i) {
    t.x(i, i + 1) = 1;
    t.y(i + 1, i) = (i + 1) * (kl - 1 - i);
  }
  return t;
}

SymPowerRep sym_power_rep(std::size_t k) {
  require_dimension(k);
  SymPowerRep rep{Sl2Triple{k, Matrix(k, k), Matrix(k, k), Matrix(k, k)}, Matrix(k, k)};
  const auto kl = static_cast<long>(k);
  auto& t = rep.triple;
  // e = X d/dY, f = Y d/dX, h = X d/dX - Y d/dY on X^{k-1-j} Y^j.
  for (long j = 0; j < kl; ++j) t.h(j, j) = kl - 1 - 2 * j;
  for (long j = 1; j < kl; ++j) t.x(j - 1, j) = j;
  for (long j = 0; j + 1 < kl; ++j) t.y(j + 1, j) = kl - 1 - j;
  Integer factorial = 1;
  for (long j = 0; j < kl; ++j) {
    if (j > 0) factorial *= j;
    rep.witness(j, j) = factorial;
  }
  return rep;
}

std::vector<Rational> sl_coordinates(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("sl coordinates of a non-square matrix");
  if (m.trace() != 0) throw DomainError("matrix is not traceless");
  const std::size_t k = m.rows();
  std::vector<Rational> coords;
  coords.reserve(k * k - 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) coords.push_back(m(i, j));
  Rational running = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) coords.push_back(running += m(i, i));
  return coords;
}

AdjointDecomposition::AdjointDecomposition(const Sl2Triple& t) : k_(t.k) {
  require_dimension(k_);
  if (!is_principal_triple(t)) throw DomainError("not a principal sl2-triple");
  if (!has_standard_h(t)) throw DomainError("triple is not in standard diagonal form");

  for (unsigned r = 1; r < k_; ++r) {
    IrrepBlock block{r, {}};
    Matrix v = t.x.pow(r);
    for (unsigned i = 0; i <= 2 * r; ++i) {
      block.basis.push_back(v);
      v = bracket(t.y, v);
    }
    if (!v.is_zero()) throw ConsistencyError("ad(y)^{2r+1} x^r does not vanish for r = " + std::to_string(r));
    blocks_.push_back(std::move(block));
  }

  const std::size_t dim = k_ * k_ - 1;
  change_of_basis_ = Matrix(dim, dim);
  std::size_t col = 0;
  for (const auto& block : blocks_)
    for (const auto& v : block.basis) {
      const auto coords = sl_coordinates(v);
      for (std::size_t row = 0; row < dim; ++row) change_of_basis_(row, col) = coords[row];
      ++col;
    }
  if (col != dim) throw ConsistencyError("block dimensions do not sum to k^2 - 1");

  const auto kl = static_cast<long>(k_);
  for (long offset = -(kl - 1); offset <= kl - 1; ++offset) {
    const std::size_t n = diagonal_length(k_, offset);
    const unsigned r0 = first_block_on_diagonal(offset);
    Matrix piece(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      const unsigned r = r0 + static_cast<unsigned>(c);
      const auto v = diagonal_vector(block(r).basis[static_cast<std::size_t>(static_cast<long>(r) - offset)], offset);
      for (std::size_t row = 0; row < n; ++row) piece(row, c) = v[row];
    }
    try {
      diagonal_inverse_.push_back(inverse(piece));
    } catch (const DomainError&) {
      throw ConsistencyError("blocks are not independent on diagonal " + std::to_string(offset));
    }
  }
}

std::vector<std::vector<Rational>> AdjointDecomposition::block_coordinates(const Matrix& m) const {
  if (!m.is_square() || m.rows() != k_) throw DimensionError("matrix size does not match the decomposition");
  if (m.trace() != 0) throw DomainError("matrix is not traceless");
  std::vector<std::vector<Rational>> coords(k_);
  for (unsigned r = 1; r < k_; ++r) coords[r].assign(2 * r + 1, Rational(0));

  const auto kl = static_cast<long>(k_);
  for (long offset = -(kl - 1); offset <= kl - 1; ++offset) {
    const auto v = diagonal_vector(m, offset);
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) continue;
    const Matrix& inv = diagonal_inverse_[static_cast<std::size_t>(offset + kl - 1)];
    const unsigned r0 = first_block_on_diagonal(offset);
    for (std::size_t c = 0; c < v.size(); ++c) {
      Rational sum = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) sum += inv(c, j) * v[j];
      const unsigned r = r0 + static_cast<unsigned>(c);
      coords[r][static_cast<std::size_t>(static_cast<long>(r) - offset)] = sum;
    }
  }
  return coords;
}

AdjointDecomposition decompose_adjoint(const Sl2Triple& t) { return AdjointDecomposition(t); }

std::map<unsigned, Matrix> project_to_blocks(const AdjointDecomposition& d, const Matrix& m) {
  const auto coords = d.block_coordinates(m);
  std::map<unsigned, Matrix> components;
  for (unsigned r = 1; r < d.k(); ++r) {
    Matrix component(d.k(), d.k());
    bool nonzero = false;
    for (std::size_t i = 0; i < coords[r].size(); ++i) {
      if (coords[r][i] == 0) continue;
      component += coords[r][i] * d.block(r).basis[i];
      nonzero = true;
    }
    if (nonzero) components.emplace(r, std::move(component));
  }
  return components;
}

std::set<unsigned> bracket_support(const AdjointDecomposition& d, unsigned r, unsigned s) {
  if (s < 1 || s > r || r + 1 > d.k())
    throw DomainError("bracket_support needs 1 <= s <= r <= k-1, got r=" + std::to_string(r) +
                      ", s=" + std::to_string(s));
  std::set<unsigned> support;
  for (const auto& a : d.block(r).basis)
    for (const auto& b : d.block(s).basis) {
      const auto coords = d.block_coordinates(bracket(a, b));
      for (unsigned t = 1; t < d.k(); ++t)
        if (std::any_of(coords[t].begin(), coords[t].end(), [](const Rational& q) { return q != 0; }))
          support.insert(t);
    }
  return support;
}

bool verify_bracket_identity(const Sl2Triple& t, unsigned r, unsigned s) {
  if (r < 1 || s < 1 || r + s > t.k)
    throw DomainError("bracket identity needs r, s >= 1 and r + s <= k, got r=" + std::to_string(r) +
                      ", s=" + std::to_string(s));
  const Matrix lhs = bracket(t.x.pow(r), bracket(t.y, t.x.pow(s)));
  const Matrix rhs = Rational(2 * static_cast<long>(r) * static_cast<long>(s)) * t.x.pow(r + s - 1);
  return lhs == rhs;
}

std::vector<Matrix> invariant_forms(std::span<const Matrix> generators) {
  if (generators.empty()) throw DomainError("need at least one generator");
  const std::size_t k = generators.front().rows();
  LinearSystem system(k * k);
  for (const auto& m : generators) {
    if (!m.is_square() || m.rows() != k) throw DimensionError("generators must be square of equal size");
    // column_terms[q] lists (r, m_{rq}) with m_{rq} != 0.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> column_terms(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t q = 0; q < k; ++q)
        if (m(r, q) != 0) column_terms[q].emplace_back(r, m(r, q));
    // (m^T B + B m)_{pq} = sum_r m_{rp} B_{rq} + sum_r B_{pr} m_{rq}.
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        std::vector<LinearSystem::Term> terms;
        for (const auto& [r, v] : column_terms[p]) terms.emplace_back(r * k + q, v);
        for (const auto& [r, v] : column_terms[q]) terms.emplace_back(p * k + r, v);
        if (!terms.empty()) system.add_equation(std::move(terms));
      }
  }
  std::vector<Matrix> forms;
  for (auto& v : system.kernel()) forms.emplace_back(k, k, std::move(v));
  return forms;
}

InvariantForm invariant_bilinear_form(const Sl2Triple& t) {
  const Matrix generators[] = {t.x, t.h, t.y};
  auto forms = invariant_forms(generators);
  if (forms.size() != 1)
    throw ConsistencyError("invariant form space has dimension " + std::to_string(forms.size()) + ", expected 1");
  Matrix form = std::move(forms.front());
  for (const auto& v : form.entries())
    if (v != 0) {
      form *= Rational(1) / v;
      break;
    }
  const bool symmetric = form.transpose() == form;
  return {std::move(form), symmetric};
}

std::vector<unsigned> clebsch_gordan(unsigned a, unsigned b) {
  std::vector<unsigned> weights;
  const unsigned low = a > b ? a - b : b - a;
  for (unsigned w = a + b;; w -= 2) {
    weights.push_back(w);
    if (w == low) break;
  }
  return weights;
}

}  // namespace sl2kit
