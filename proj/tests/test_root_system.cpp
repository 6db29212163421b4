#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2kit/errors.hpp"
#include "sl2kit/root_system.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

using namespace sl2kit;

namespace {

struct Type {
  LieType type;
  unsigned rank;
};

std::vector<Type> all_types_up_to(unsigned max_rank) {
  std::vector<Type> out;
  for (unsigned n = 1; n <= max_rank; ++n)
    for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E, LieType::F, LieType::G})
      if (is_valid_type(t, n)) out.push_back({t, n});
  return out;
}

std::size_t expected_positive_roots(LieType t, unsigned n) {
  switch (t) {
    case LieType::A: return n * (n + 1) / 2;
    case LieType::B:
    case LieType::C: return n * n;
    case LieType::D: return n * (n - 1);
    case LieType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case LieType::F: return 24;
    case LieType::G: return 6;
  }
  return 0;
}

long expected_cartan_determinant(LieType t, unsigned n) {
  switch (t) {
    case LieType::A: return n + 1;
    case LieType::B:
    case LieType::C: return 2;
    case LieType::D: return 4;
    case LieType::E: return 9 - n;
    case LieType::F:
    case LieType::G: return 1;
  }
  return 0;
}

// Closure of the simple roots under simple reflections; keeps the positive ones.
std::set<RootVector> positive_roots_by_reflection(const RootSystem& rs) {
  std::set<RootVector> roots;
  std::deque<RootVector> queue;
  for (unsigned i = 0; i < rs.rank; ++i) {
    RootVector a(rs.rank, 0);
    a[i] = 1;
    roots.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    const RootVector beta = queue.front();
    queue.pop_front();
    for (unsigned i = 0; i < rs.rank; ++i) {
      int pairing = 0;
      for (unsigned j = 0; j < rs.rank; ++j) pairing += beta[j] * rs.cartan[j][i];
      RootVector image = beta;
      image[i] -= pairing;
      if (roots.insert(image).second) queue.push_back(image);
    }
  }
  std::set<RootVector> positive;
  for (const auto& r : roots)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.insert(r);
  return positive;
}

// Dimension of the GL_{n+1} irrep with these Dynkin labels, by the hook content style product.
Integer type_a_dimension(const DominantWeight& w) {
  const std::size_t n = w.size() + 1;
  std::vector<long> lambda(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) lambda[i] = lambda[i + 1] + w[i];
  Rational product = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      product *= make_rational(lambda[i] - lambda[j] + static_cast<long>(j - i), static_cast<long>(j - i));
  return product.get_num();
}

}  // namespace

TEST_CASE("type validity and parsing") {
  CHECK(is_valid_type(LieType::A, 1));
  CHECK_FALSE(is_valid_type(LieType::B, 1));
  CHECK_FALSE(is_valid_type(LieType::D, 2));
  CHECK_FALSE(is_valid_type(LieType::E, 9));
  CHECK_FALSE(is_valid_type(LieType::F, 3));
  CHECK_FALSE(is_valid_type(LieType::G, 3));
  CHECK(parse_lie_type('e') == LieType::E);
  CHECK_THROWS_AS(parse_lie_type('H'), DomainError);
  CHECK_THROWS_AS(build_root_system(LieType::E, 5), DomainError);
  CHECK_THROWS_AS(root_system(LieType::A, 0), DomainError);
  CHECK(root_system(LieType::D, 3).note == "isomorphic to A3");
}

TEST_CASE("Cartan matrices and positive roots for every type up to rank 8") {
  for (const auto& [type, n] : all_types_up_to(8)) {
    const RootSystem& rs = root_system(type, n);
    CAPTURE(rs.name());
    Matrix cartan(n, n);
    for (unsigned i = 0; i < n; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (unsigned j = 0; j < n; ++j) {
        cartan(i, j) = rs.cartan[i][j];
        if (i != j) CHECK(rs.cartan[i][j] <= 0);
        CHECK((rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0));
      }
    }
    CHECK(determinant(cartan) == expected_cartan_determinant(type, n));
    CHECK(rs.positive_roots.size() == expected_positive_roots(type, n));
    const std::set<RootVector> computed(rs.positive_roots.begin(), rs.positive_roots.end());
    CHECK(computed == positive_roots_by_reflection(rs));
    CHECK(std::is_sorted(rs.positive_roots.begin(), rs.positive_roots.end(), [](const auto& a, const auto& b) {
      return height(a) < height(b);
    }));
  }
}

TEST_CASE("exponents") {
  CHECK(exponents(root_system(LieType::G, 2)) == ExponentList{1, 5});
  CHECK(exponents(root_system(LieType::D, 4)) == ExponentList{1, 3, 3, 5});
  CHECK(exponents(root_system(LieType::E, 8)) == ExponentList{1, 7, 11, 13, 17, 19, 23, 29});
  for (const auto& [type, n] : all_types_up_to(8)) {
    const RootSystem& rs = root_system(type, n);
    const auto e = exponents(rs);
    CAPTURE(rs.name());
    CHECK(e.size() == n);
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(e.front() == 1);
    CHECK(e.back() + 1 == height(rs.positive_roots.back()) + 1);
    std::size_t sum = 0, dim = 0;
    for (unsigned r : e) {
      sum += r;
      dim += 2 * r + 1;
    }
    CHECK(sum == rs.positive_roots.size());
    CHECK(dim == algebra_dimension(rs));
    // Exponents are symmetric: r_i + r_{n+1-i} = h.
    for (std::size_t i = 0; i < n; ++i) CHECK(e[i] + e[n - 1 - i] == e.back() + 1);
  }
}

TEST_CASE("Weyl dimension: special weights") {
  for (const auto& [type, n] : all_types_up_to(8)) {
    const RootSystem& rs = root_system(type, n);
    CAPTURE(rs.name());
    CHECK(weyl_dimension(rs, DominantWeight(n, 0)) == 1);
    CHECK(weyl_dimension(rs, adjoint_weight(rs)) == algebra_dimension(rs));
  }
  CHECK(weyl_dimension(root_system(LieType::E, 6), fundamental_weight(root_system(LieType::E, 6), 1)) == 27);
  CHECK(weyl_dimension(root_system(LieType::E, 7), fundamental_weight(root_system(LieType::E, 7), 7)) == 56);
  CHECK(weyl_dimension(root_system(LieType::F, 4), fundamental_weight(root_system(LieType::F, 4), 4)) == 26);
  CHECK(weyl_dimension(root_system(LieType::G, 2), fundamental_weight(root_system(LieType::G, 2), 1)) == 7);
  CHECK(weyl_dimension(root_system(LieType::B, 4), fundamental_weight(root_system(LieType::B, 4), 4)) == 16);
  CHECK(weyl_dimension(root_system(LieType::D, 5), fundamental_weight(root_system(LieType::D, 5), 5)) == 16);
  CHECK_THROWS_AS(weyl_dimension(root_system(LieType::A, 2), DominantWeight{1}), DimensionError);
  CHECK_THROWS_AS(fundamental_weight(root_system(LieType::A, 2), 3), DomainError);
}

TEST_CASE("Weyl dimension agrees with the type A product formula") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<unsigned> label(0, 4);
  for (unsigned n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      DominantWeight w(n);
      for (auto& c : w) c = label(rng);
      CHECK(weyl_dimension(root_system(LieType::A, n), w) == type_a_dimension(w));
      DominantWeight dual(w.rbegin(), w.rend());
      CHECK(weyl_dimension(root_system(LieType::A, n), dual) == type_a_dimension(w));
    }
}

TEST_CASE("Weyl dimension is strictly increasing in each label") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<unsigned> label(0, 3);
  for (const auto& [type, n] : all_types_up_to(5)) {
    const RootSystem& rs = root_system(type, n);
    for (int trial = 0; trial < 10; ++trial) {
      DominantWeight w(n);
      for (auto& c : w) c = label(rng);
      const Integer base = weyl_dimension(rs, w);
      for (unsigned i = 0; i < n; ++i) {
        auto up = w;
        ++up[i];
        CHECK(weyl_dimension(rs, up) > base);
      }
      const auto capped = weyl_dimension_capped(rs, w, base);
      REQUIRE(capped.has_value());
      CHECK(*capped == base);
      CHECK_FALSE(weyl_dimension_capped(rs, w, base - 1).has_value());
    }
  }
}

TEST_CASE("B2 and C2 have the same dimensions with labels swapped") {
  const RootSystem& b2 = root_system(LieType::B, 2);
  const RootSystem& c2 = root_system(LieType::C, 2);
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; b <= 5; ++b) CHECK(weyl_dimension(b2, {a, b}) == weyl_dimension(c2, {b, a}));
}

TEST_CASE("irreps of a given dimension match a brute force search") {
  for (const auto& [type, n] : all_types_up_to(4)) {
    const RootSystem& rs = root_system(type, n);
    for (unsigned k = 1; k <= 30; ++k) {
      std::vector<DominantWeight> brute;
      DominantWeight w(n, 0);
      // Dimension <= 30 bounds every label by 29, and by 8 from rank 3 on.
      for (;;) {
        if (weyl_dimension(rs, w) == k) brute.push_back(w);
        unsigned i = 0;
        while (i < n && ++w[i] > (n <= 2 ? 29u : 8u)) w[i++] = 0;
        if (i == n) break;
      }
      std::sort(brute.begin(), brute.end());
      CAPTURE(rs.name());
      CAPTURE(k);
      CHECK(irreps_of_dimension(rs, Integer(k)) == brute);
    }
  }
  CHECK(irreps_of_dimension(root_system(LieType::G, 2), Integer(7)) == std::vector<DominantWeight>{{1, 0}});
  CHECK(irreps_of_dimension(root_system(LieType::A, 1), Integer(0)).empty());
}

TEST_CASE("least dimensions") {
  auto least = [](LieType t, unsigned n) { return least_dimensions(root_system(t, n), 2); };
  CHECK(least(LieType::G, 2) == std::vector<Integer>{7, 14});
  CHECK(least(LieType::F, 4) == std::vector<Integer>{26, 52});
  CHECK(least(LieType::E, 6) == std::vector<Integer>{27, 78});
  CHECK(least(LieType::E, 7) == std::vector<Integer>{56, 133});
  CHECK(least(LieType::A, 1) == std::vector<Integer>{2, 3});
  CHECK(least(LieType::B, 2) == std::vector<Integer>{4, 5});
  CHECK(dimensions_up_to(root_system(LieType::A, 1), Integer(1)).empty());
}
