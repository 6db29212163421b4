#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2kit/errors.hpp"
#include "sl2kit/principal_sl2.hpp"

#include <map>
#include <random>

using namespace sl2kit;

namespace {

bool sl2_relations(const Matrix& x, const Matrix& h, const Matrix& y) {
  return bracket(h, x) == 2 * x && bracket(h, y) == -2 * y && bracket(x, y) == h;
}

// Casimir h^2/2 + xy + yx acting by the adjoint action; on U_r it is 2r(r+1).
Matrix casimir(const Sl2Triple& t, const Matrix& m) {
  auto ad = [](const Matrix& a, const Matrix& b) { return bracket(a, b); };
  return make_rational(1, 2) * ad(t.h, ad(t.h, m)) + ad(t.x, ad(t.y, m)) + ad(t.y, ad(t.x, m));
}

Matrix random_traceless(std::mt19937& rng, std::size_t k) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = entry(rng);
  m(k - 1, k - 1) -= m.trace();
  return m;
}

// Peels highest weights off the weight multiset of Sym^a (x) Sym^b.
std::vector<unsigned> clebsch_gordan_by_characters(unsigned a, unsigned b) {
  std::map<int, int> mult;
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j <= b; ++j) ++mult[static_cast<int>(a + b) - 2 * static_cast<int>(i + j)];
  std::vector<unsigned> out;
  while (!mult.empty()) {
    const int top = mult.rbegin()->first;
    out.push_back(static_cast<unsigned>(top));
    for (int w = top; w >= -top; w -= 2)
      if (--mult[w] == 0) mult.erase(w);
  }
  return out;
}

}  // namespace

TEST_CASE("principal triple entries and relations") {
  const auto t = principal_triple(3);
  CHECK(t.x == Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(t.h == Matrix{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
  CHECK(t.y == Matrix{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}});
  for (std::size_t k = 2; k <= 14; ++k) {
    const auto p = principal_triple(k);
    CHECK(sl2_relations(p.x, p.h, p.y));
    CHECK(nilpotency_data(p.x).single_block);
    CHECK(is_principal_triple(p));
  }
  CHECK_THROWS_AS(principal_triple(1), DomainError);
  CHECK_THROWS_AS(principal_triple(0), DomainError);
}

TEST_CASE("is_principal_triple rejects broken triples") {
  auto t = principal_triple(4);
  auto flipped = t;
  flipped.y = -t.y;
  CHECK_FALSE(is_principal_triple(flipped));
  auto reducible = t;
  reducible.x(1, 2) = 0;
  CHECK_FALSE(is_principal_triple(reducible));
}

TEST_CASE("symmetric power model is conjugate to the principal triple") {
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto rep = sym_power_rep(k);
    const auto p = principal_triple(k);
    const auto& d = rep.witness;
    const Matrix d_inv = inverse(d);
    CHECK(sl2_relations(rep.triple.x, rep.triple.h, rep.triple.y));
    CHECK(d * rep.triple.x * d_inv == p.x);
    CHECK(d * rep.triple.h * d_inv == p.h);
    CHECK(d * rep.triple.y * d_inv == p.y);
  }
  // X d/dY and Y d/dX on X^2, XY, Y^2.
  const auto rep = sym_power_rep(3);
  CHECK(rep.triple.x == Matrix{{0, 1, 0}, {0, 0, 2}, {0, 0, 0}});
  CHECK(rep.triple.y == Matrix{{0, 0, 0}, {2, 0, 0}, {0, 1, 0}});
}

TEST_CASE("adjoint decomposition block dimensions and change of basis") {
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto t = principal_triple(k);
    const auto d = decompose_adjoint(t);
    REQUIRE(d.blocks().size() == k - 1);
    std::size_t total = 0;
    for (unsigned r = 1; r < k; ++r) {
      const auto& block = d.block(r);
      CHECK(block.r == r);
      CHECK(block.dimension() == 2 * r + 1);
      total += block.dimension();
      CHECK(bracket(t.x, block.basis.front()).is_zero());
      CHECK(bracket(t.y, block.basis.back()).is_zero());
      for (std::size_t i = 0; i < block.basis.size(); ++i)
        CHECK(bracket(t.h, block.basis[i]) == Rational(2 * static_cast<long>(r) - 2 * static_cast<long>(i)) * block.basis[i]);
    }
    CHECK(total == k * k - 1);
    CHECK(d.change_of_basis().rows() == k * k - 1);
    CHECK(rank(d.change_of_basis()) == k * k - 1);
  }
  const auto d6 = decompose_adjoint(principal_triple(6));
  std::vector<std::size_t> dims;
  for (const auto& b : d6.blocks()) dims.push_back(b.dimension());
  CHECK(dims == std::vector<std::size_t>{3, 5, 7, 9, 11});
}

TEST_CASE("decomposition rejects nonstandard input") {
  auto t = principal_triple(3);
  t.y = -t.y;
  CHECK_THROWS_AS(decompose_adjoint(t), DomainError);
  const auto rep = sym_power_rep(4);
  CHECK_NOTHROW(decompose_adjoint(rep.triple));
}

TEST_CASE("projections sum to the matrix and lie in the Casimir eigenspaces") {
  std::mt19937 rng(23);
  for (std::size_t k = 2; k <= 7; ++k) {
    const auto t = principal_triple(k);
    const auto d = decompose_adjoint(t);
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix m = random_traceless(rng, k);
      const auto parts = project_to_blocks(d, m);
      Matrix sum(k, k);
      for (const auto& [r, part] : parts) {
        CHECK_FALSE(part.is_zero());
        CHECK(casimir(t, part) == Rational(2 * static_cast<long>(r) * (r + 1)) * part);
        sum += part;
      }
      CHECK(sum == m);
    }
  }
  const auto d = decompose_adjoint(principal_triple(3));
  CHECK_THROWS_AS(project_to_blocks(d, Matrix::identity(3)), DomainError);
  CHECK_THROWS_AS(project_to_blocks(d, Matrix(2, 2)), DimensionError);
  const auto parts = project_to_blocks(d, principal_triple(3).x);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == 1);
}

TEST_CASE("sl coordinates") {
  const Matrix m{{1, 2}, {3, -1}};
  CHECK(sl_coordinates(m) == std::vector<Rational>{2, 3, 1});
  CHECK_THROWS_AS(sl_coordinates(Matrix::identity(2)), DomainError);
}

TEST_CASE("bracket identity holds for all admissible r, s") {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto t = principal_triple(k);
    for (unsigned r = 1; r < k; ++r)
      for (unsigned s = 1; r + s <= k; ++s) CHECK(verify_bracket_identity(t, r, s));
  }
  const auto t = principal_triple(4);
  CHECK_THROWS_AS(verify_bracket_identity(t, 3, 2), DomainError);
  CHECK_THROWS_AS(verify_bracket_identity(t, 0, 1), DomainError);
}

TEST_CASE("bracket support lies in the Clebsch-Gordan range and has the right parity") {
  for (std::size_t k = 2; k <= 7; ++k) {
    const auto d = decompose_adjoint(principal_triple(k));
    for (unsigned r = 1; r < k; ++r)
      for (unsigned s = 1; s <= r; ++s) {
        const auto support = bracket_support(d, r, s);
        for (unsigned t : support) {
          CHECK(t + s >= r);
          CHECK(t + 1 <= r + s);
          CHECK((r + s - 1 - t) % 2 == 0);
        }
        if (r + s <= k) {
          CHECK(support.count(r + s - 1) == 1);
          CHECK(support.count(r + s) == 0);
        }
      }
  }
  const auto d = decompose_adjoint(principal_triple(4));
  CHECK(bracket_support(d, 1, 1) == std::set<unsigned>{1});
  CHECK_THROWS_AS(bracket_support(d, 1, 2), DomainError);
  CHECK_THROWS_AS(bracket_support(d, 4, 1), DomainError);
}

TEST_CASE("invariant form parity alternates with k") {
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto t = principal_triple(k);
    const auto form = invariant_bilinear_form(t);
    const Matrix& b = form.form;
    for (const Matrix* m : {&t.x, &t.h, &t.y}) CHECK((m->transpose() * b + b * *m).is_zero());
    CHECK(determinant(b) != 0);
    if (k % 2 == 0) {
      CHECK(b.transpose() == -b);
      CHECK_FALSE(form.symmetric);
    } else {
      CHECK(b.transpose() == b);
      CHECK(form.symmetric);
    }
  }
  CHECK(invariant_bilinear_form(principal_triple(7)).symmetric);
}

TEST_CASE("invariant forms of larger generator sets") {
  std::vector<Matrix> sl3;
  for (std::size_t i = 0; i + 1 < 3; ++i) {
    sl3.push_back(Matrix::unit(3, i, i + 1));
    sl3.push_back(Matrix::unit(3, i + 1, i));
  }
  CHECK(invariant_forms(sl3).empty());
  const std::vector<Matrix> nothing_nonzero{Matrix(3, 3)};
  CHECK(invariant_forms(nothing_nonzero).size() == 9);
  CHECK_THROWS_AS(invariant_forms(std::vector<Matrix>{}), DomainError);
  CHECK_THROWS_AS(invariant_forms(std::vector<Matrix>{Matrix(2, 2), Matrix(3, 3)}), DimensionError);
}

TEST_CASE("Clebsch-Gordan agrees with characters and dimensions add up") {
  CHECK(clebsch_gordan(2, 3) == std::vector<unsigned>{5, 3, 1});
  CHECK(clebsch_gordan(0, 4) == std::vector<unsigned>{4});
  for (unsigned a = 0; a <= 8; ++a)
    for (unsigned b = 0; b <= 8; ++b) {
      const auto weights = clebsch_gordan(a, b);
      CHECK(weights == clebsch_gordan_by_characters(a, b));
      CHECK(weights == clebsch_gordan(b, a));
      unsigned total = 0;
      for (unsigned w : weights) total += w + 1;
      CHECK(total == (a + 1) * (b + 1));
    }
}
