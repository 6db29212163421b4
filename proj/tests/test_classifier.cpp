#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2kit/classifier.hpp"
#include "sl2kit/errors.hpp"
#include "sl2kit/principal_sl2.hpp"

#include <algorithm>
#include <map>

using namespace sl2kit;

namespace {

std::map<std::string, CaseLabel> labelled(const std::vector<ClassificationCase>& cases) {
  std::map<std::string, CaseLabel> out;
  for (const auto& c : cases) out[c.candidate.name()] = c.label;
  return out;
}

std::map<std::string, CaseLabel> expected_cases(std::size_t k) {
  const auto n = [](std::size_t v) { return std::to_string(v); };
  std::map<std::string, CaseLabel> out{{"A1", CaseLabel::sym_power_sl2}};
  if (k == 2) return out;
  out["A" + n(k - 1)] = CaseLabel::full_sl;
  if (k % 2 == 0) out["C" + n(k / 2)] = CaseLabel::symplectic;
  if (k % 2 == 1 && k >= 5) out["B" + n((k - 1) / 2)] = CaseLabel::orthogonal;
  if (k == 7) out["G2"] = CaseLabel::g2;
  return out;
}

// Worked out by hand from the exponent lists: which (type, rank) satisfy all three conditions.
bool passes_by_hand(LieType type, unsigned n, std::size_t k) {
  switch (type) {
    case LieType::A: return n == 1 || n + 1 == k;
    case LieType::B:
    case LieType::C: return k == 2 * n || k == 2 * n + 1;
    case LieType::D: return n == 3 && k == 4;  // D3 = A3
    case LieType::G: return k >= 6 && k <= 9;
    default: return false;
  }
}

// Dimension of the Lie algebra generated by the matrices, keeping an echelon
// form of the flattened span so each membership test is one reduction.
std::size_t generated_dimension(const std::vector<Matrix>& gens) {
  std::vector<Matrix> basis;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> echelon;  // (pivot, row with 1 at pivot)
  auto try_add = [&](const Matrix& m) {
    std::vector<Rational> v = m.entries();
    for (const auto& [pivot, row] : echelon)
      if (v[pivot] != 0) {
        const Rational f = v[pivot];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
      }
    const auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (it == v.end()) return;
    const Rational lead = *it;
    for (auto& q : v) q /= lead;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    for (auto& [p, row] : echelon)
      if (row[pivot] != 0) {
        const Rational f = row[pivot];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * v[j];
      }
    echelon.emplace_back(pivot, std::move(v));
    basis.push_back(m);
  };
  for (const auto& g : gens) try_add(g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) try_add(bracket(basis[i], basis[j]));
  return basis.size();
}

Matrix antidiagonal_form(std::size_t k, bool alternating) {
  Matrix j(k, k);
  for (std::size_t i = 0; i < k; ++i) j(i, k - 1 - i) = (alternating && i >= k / 2) ? -1 : 1;
  return j;
}

ClassificationCase find_case(const std::vector<ClassificationCase>& cases, CaseLabel label) {
  const auto it = std::find_if(cases.begin(), cases.end(), [&](const auto& c) { return c.label == label; });
  REQUIRE(it != cases.end());
  return *it;
}

}  // namespace

TEST_CASE("lemma6 flags") {
  const std::vector<unsigned> g2{1, 5};
  CHECK(lemma6_check(g2, 7).all());
  CHECK_FALSE(lemma6_check(g2, 5).bounded);
  CHECK_FALSE(lemma6_check(g2, 10).closed);
  const std::vector<unsigned> d4{1, 3, 3, 5};
  CHECK_FALSE(lemma6_check(d4, 8).distinct);
  CHECK_THROWS_AS(lemma6_check(std::vector<unsigned>{}, 3), DomainError);
}

TEST_CASE("exhaustive lemma6 scan matches the hand analysis") {
  for (std::size_t k = 2; k <= 30; ++k)
    for (unsigned n = 1; n + 1 <= k; ++n)
      for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::E, LieType::F, LieType::G}) {
        if (!is_valid_type(t, n)) continue;
        CAPTURE(k);
        CAPTURE(type_letter(t));
        CAPTURE(n);
        const auto e = exponents(root_system(t, n));
        CHECK(lemma6_check(e, k).all() == passes_by_hand(t, n, k));
      }
}

TEST_CASE("classify lists exactly the expected cases for k = 2..30") {
  for (std::size_t k = 2; k <= 30; ++k) {
    CAPTURE(k);
    const auto cases = classify(k);
    CHECK(labelled(cases) == expected_cases(k));
    for (const auto& c : cases) {
      CHECK_FALSE(c.candidate.realizing_weights.empty());
      for (const auto& w : c.candidate.realizing_weights)
        CHECK(weyl_dimension(root_system(c.candidate.type, c.candidate.rank), w) == static_cast<unsigned long>(k));
    }
  }
  CHECK_THROWS_AS(classify(1), DomainError);
  CHECK_THROWS_AS(classify(0), DomainError);
}

TEST_CASE("classify at k = 7 includes G2 with the 7-dimensional representation") {
  const auto cases = classify(7);
  CHECK(cases.size() == 4);
  const auto g2 = find_case(cases, CaseLabel::g2);
  CHECK(g2.candidate.realizing_weights == std::vector<DominantWeight>{{1, 0}});
  CHECK(g2.candidate.exponents == ExponentList{1, 5});
}

TEST_CASE("B2 = C2 is reported once, under the name matching k") {
  CHECK(labelled(classify(4)).count("C2") == 1);
  CHECK(labelled(classify(4)).count("B2") == 0);
  CHECK(labelled(classify(5)).count("B2") == 1);
  CHECK(labelled(classify(5)).count("C2") == 0);
}

TEST_CASE("the large-rank shortcut for sl_k agrees with the search") {
  for (std::size_t k = 11; k <= 15; ++k) {
    const RootSystem& rs = root_system(LieType::A, static_cast<unsigned>(k - 1));
    auto shortcut = realizing_weights(rs, k);
    std::sort(shortcut.begin(), shortcut.end());
    CHECK(shortcut == irreps_of_dimension(rs, Integer(static_cast<unsigned long>(k))));
  }
}

TEST_CASE("Hodge-Tate filter") {
  for (std::size_t k = 2; k <= 12; ++k) CHECK(sym_power_eigenvalue_count(k) == k);
  const HodgeTateData two{{0, -5}};
  CHECK(labelled(ht_filter(classify(2), 2, two)).count("A1") == 1);
  for (std::size_t k = 3; k <= 10; ++k) {
    const auto kept = labelled(ht_filter(classify(k), k, two));
    CHECK(kept.count("A1") == 0);
    CHECK(kept.size() + 1 == classify(k).size());
  }
  const HodgeTateData three{{0, 1, 2}};
  CHECK(ht_filter(classify(6), 6, three).size() == classify(6).size());
  CHECK_THROWS_AS(ht_filter(classify(4), 4, HodgeTateData{}), DomainError);
}

TEST_CASE("matrix models generate the expected algebras and preserve the expected forms") {
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto cases = classify(k);
    CAPTURE(k);
    if (k >= 3) {
      const auto gens = case_generators(find_case(cases, CaseLabel::full_sl), k);
      CHECK(generated_dimension(gens) == k * k - 1);
    }
    if (k % 2 == 0 && k >= 4) {
      const auto gens = case_generators(find_case(cases, CaseLabel::symplectic), k);
      const Matrix j = antidiagonal_form(k, true);
      for (const auto& m : gens) CHECK((m.transpose() * j + j * m).is_zero());
      CHECK(generated_dimension(gens) == k * (k + 1) / 2);
    }
    if (k % 2 == 1 && k >= 5) {
      const auto gens = case_generators(find_case(cases, CaseLabel::orthogonal), k);
      const Matrix j = antidiagonal_form(k, false);
      for (const auto& m : gens) CHECK((m.transpose() * j + j * m).is_zero());
      CHECK(generated_dimension(gens) == k * (k - 1) / 2);
    }
  }
  CHECK_THROWS_AS(case_generators(find_case(classify(7), CaseLabel::g2), 7), DomainError);
}

TEST_CASE("form filter keeps only the symplectic case") {
  const HodgeTateData two{{0, 1}};
  for (std::size_t k = 2; k <= 12; k += 2) {
    const auto result = form_filter(ht_filter(classify(k), k, two), k);
    REQUIRE(result.cases.size() == 1);
    CHECK(result.cases.front().label == (k == 2 ? CaseLabel::sym_power_sl2 : CaseLabel::symplectic));
    CHECK(result.conclusion == "GSp_" + std::to_string(k));
  }
  // Without the Hodge-Tate filter, Sym^{k-1} also carries an alternating form.
  const auto unfiltered = form_filter(classify(4), 4);
  CHECK(unfiltered.cases.size() == 2);
  CHECK_FALSE(unfiltered.conclusion.has_value());
  CHECK_THROWS_AS(form_filter(classify(5), 5), DomainError);
}

TEST_CASE("classification report") {
  const auto report = classification_report(4, HodgeTateData{{0, -5}}, true);
  CHECK(report.raw_cases.size() == 3);
  CHECK(report.after_ht_filter.size() == 2);
  CHECK(report.after_form_filter.size() == 1);
  CHECK(report.conclusion == "GSp_4");
  const auto plain = classification_report(7, std::nullopt, false);
  CHECK(plain.after_form_filter.size() == 4);
  CHECK_FALSE(plain.conclusion.has_value());
  CHECK_THROWS_AS(classification_report(7, std::nullopt, true), DomainError);
}

TEST_CASE("Frobenius exponent forces k' = k") {
  for (std::size_t k = 1; k <= 30; ++k) {
    const auto check = frobenius_dimension_check(static_cast<long>(k) + 1, k);
    CHECK(check.alpha_exponent == 1);
    CHECK(check.dimensions == std::vector<std::size_t>{k});
  }
  CHECK(frobenius_dimension_check(6, 4).alpha_exponent == make_rational(3, 2));
  CHECK_THROWS_AS(frobenius_dimension_check(1, 0), DomainError);
}
