#include "sl2kit/classifier.hpp"

#include "sl2kit/errors.hpp"
#include "sl2kit/principal_sl2.hpp"

#include <algorithm>

namespace sl2kit {

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::sym_power_sl2: return "sym_power_sl2";
    case CaseLabel::full_sl: return "full_sl";
    case CaseLabel::symplectic: return "symplectic";
    case CaseLabel::orthogonal: return "orthogonal";
    case CaseLabel::g2: return "g2";
    case CaseLabel::other: return "other";
  }
  return "other";
}

Lemma6Flags lemma6_check(std::span<const unsigned> exponents, std::size_t k) {
  if (exponents.empty()) throw DomainError("exponent list is empty");
  const std::set<unsigned> present(exponents.begin(), exponents.end());
  Lemma6Flags flags;
  flags.distinct = present.size() == exponents.size();
  flags.bounded = *present.rbegin() + 1 <= k;
  flags.closed = true;
  for (unsigned r : present)
    for (unsigned s : present)
      if (r + s <= k && !present.count(r + s - 1)) flags.closed = false;
  return flags;
}

CaseLabel label_for(LieType type, unsigned rank, std::size_t k) {
  if (type == LieType::A && rank == 1) return CaseLabel::sym_power_sl2;
  if (type == LieType::A && rank + 1 == k) return CaseLabel::full_sl;
  if (type == LieType::C && 2 * rank == k) return CaseLabel::symplectic;
  if (type == LieType::B && 2 * rank + 1 == k) return CaseLabel::orthogonal;
  if (type == LieType::G && k == 7) return CaseLabel::g2;
  return CaseLabel::other;
}

std::vector<DominantWeight> realizing_weights(const RootSystem& rs, std::size_t k) {
  constexpr unsigned kShortCircuitRank = 10;
  if (rs.type == LieType::A && rs.rank + 1 == k && rs.rank >= kShortCircuitRank) {
    // sl_k: only the defining representation and its dual have dimension k.
    return {fundamental_weight(rs, rs.rank), fundamental_weight(rs, 1)};
  }
  return irreps_of_dimension(rs, Integer(static_cast<unsigned long>(k)));
}

std::vector<ClassificationCase> classify(std::size_t k) {
  if (k < 2) throw DomainError("classification needs k >= 2");
  const auto max_rank = static_cast<unsigned>(k - 1);
  std::vector<std::pair<LieType, unsigned>> types;
  for (unsigned n = 1; n <= max_rank; ++n) types.emplace_back(LieType::A, n);
  for (unsigned n = 2; n <= max_rank; ++n) types.emplace_back(LieType::B, n);
  for (unsigned n = 2; n <= max_rank; ++n) types.emplace_back(LieType::C, n);
  // D3 = A3.
  for (unsigned n = 4; n <= max_rank; ++n) types.emplace_back(LieType::D, n);
  for (unsigned n = 6; n <= std::min(8u, max_rank); ++n) types.emplace_back(LieType::E, n);
  if (max_rank >= 4) types.emplace_back(LieType::F, 4);
  if (max_rank >= 2) types.emplace_back(LieType::G, 2);

  std::vector<ClassificationCase> cases;
  for (const auto& [type, rank] : types) {
    const RootSystem& rs = root_system(type, rank);
    CandidateAlgebra candidate{type, rank, exponents(rs), {}};
    if (!lemma6_check(candidate.exponents, k).all()) continue;
    candidate.realizing_weights = realizing_weights(rs, k);
    if (candidate.realizing_weights.empty()) continue;
    cases.push_back({label_for(type, rank, k), std::move(candidate)});
  }

  // B2 = C2: keep the one whose name matches the parity of k.
  auto find = [&](LieType type, unsigned rank) {
    return std::find_if(cases.begin(), cases.end(), [&](const ClassificationCase& c) {
      return c.candidate.type == type && c.candidate.rank == rank;
    });
  };
  const auto b2 = find(LieType::B, 2);
  const auto c2 = find(LieType::C, 2);
  if (b2 != cases.end() && c2 != cases.end()) cases.erase(b2->label == CaseLabel::other ? b2 : c2);
  return cases;
}

std::size_t sym_power_eigenvalue_count(std::size_t k) {
  const Matrix h = sym_power_rep(k).triple.h;
  std::set<Rational> eigenvalues;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && h(i, j) != 0) throw ConsistencyError("h is not diagonal");
    eigenvalues.insert(h(i, i));
  }
  return eigenvalues.size();
}

std::vector<ClassificationCase> ht_filter(const std::vector<ClassificationCase>& cases, std::size_t k,
                                          const HodgeTateData& ht) {
  if (ht.weight_count() < 1) throw DomainError("Hodge-Tate data needs at least one weight");
  if (ht.weight_count() != 2) return cases;
  if (sym_power_eigenvalue_count(k) == 2) return cases;
  std::vector<ClassificationCase> kept;
  std::copy_if(cases.begin(), cases.end(), std::back_inserter(kept),
               [](const ClassificationCase& c) { return c.label != CaseLabel::sym_power_sl2; });
  return kept;
}

std::vector<Matrix> case_generators(const ClassificationCase& c, std::size_t k) {
  std::vector<Matrix> gens;
  switch (c.label) {
    case CaseLabel::sym_power_sl2: {
      auto t = sym_power_rep(k).triple;
      return {t.x, t.h, t.y};
    }
    case CaseLabel::full_sl:
      for (std::size_t i = 0; i + 1 < k; ++i) {
        gens.push_back(Matrix::unit(k, i, i + 1));
        gens.push_back(Matrix::unit(k, i + 1, i));
      }
      return gens;
    case CaseLabel::symplectic:
    case CaseLabel::orthogonal: {
      // Chevalley generators for the form with antidiagonal (1, ..., 1, -1, ..., -1)
      // (symplectic, k = 2n) or all ones (orthogonal, k = 2n + 1).
      const bool symplectic = c.label == CaseLabel::symplectic;
      const std::size_t n = symplectic ? k / 2 : (k - 1) / 2;
      for (std::size_t i = 0; i < n; ++i) {
        Matrix e = Matrix::unit(k, i, i + 1);
        if (!(symplectic && i + 1 == n)) e -= Matrix::unit(k, k - 2 - i, k - 1 - i);
        gens.push_back(e.transpose());
        gens.push_back(std::move(e));
      }
      return gens;
    }
    case CaseLabel::g2:
    case CaseLabel::other: break;
  }
  throw DomainError("no matrix model for case " + c.candidate.name());
}

FormFilterResult form_filter(const std::vector<ClassificationCase>& cases, std::size_t k) {
  if (k % 2 != 0) throw DomainError("form filter applies to even k only");
  FormFilterResult result;
  std::vector<std::vector<Matrix>> surviving_forms;
  for (const auto& c : cases) {
    const auto gens = case_generators(c, k);
    auto forms = invariant_forms(gens);
    // Alternating invariant forms are spanned by the B - B^T.
    const bool has_alternating =
        std::any_of(forms.begin(), forms.end(), [](const Matrix& b) { return b.transpose() != b; });
    if (!has_alternating) continue;
    result.cases.push_back(c);
    surviving_forms.push_back(std::move(forms));
  }
  if (result.cases.size() != 1) return result;

  const auto& forms = surviving_forms.front();
  const auto& survivor = result.cases.front().candidate;
  const bool unique_alternating = forms.size() == 1 && forms.front().transpose() == -forms.front();
  const bool nondegenerate = unique_alternating && determinant(forms.front()) != 0;
  const bool full_dimension = algebra_dimension(root_system(survivor.type, survivor.rank)) == k * (k + 1) / 2;
  if (unique_alternating && nondegenerate && full_dimension) result.conclusion = "GSp_" + std::to_string(k);
  return result;
}

FrobeniusCheck frobenius_dimension_check(long w, std::size_t k) {
  if (k < 1) throw DomainError("frobenius_dimension_check needs k >= 1");
  FrobeniusCheck check;
  const auto half_exponent = [w](std::size_t dim) { return make_rational(w - static_cast<long>(dim) + 1, 2); };
  check.alpha_exponent = half_exponent(k);
  for (std::size_t sub = 1; sub <= k; ++sub)
    if (half_exponent(sub) == check.alpha_exponent) check.dimensions.push_back(sub);
  return check;
}

ClassificationReport classification_report(std::size_t k, const std::optional<HodgeTateData>& ht,
                                           bool symplectic) {
  ClassificationReport report;
  report.k = k;
  report.raw_cases = classify(k);
  report.after_ht_filter = ht ? ht_filter(report.raw_cases, k, *ht) : report.raw_cases;
  if (symplectic) {
    auto filtered = form_filter(report.after_ht_filter, k);
    report.after_form_filter = std::move(filtered.cases);
    report.conclusion = std::move(filtered.conclusion);
  } else {
    report.after_form_filter = report.after_ht_filter;
  }
  return report;
}

}  // namespace sl2kit
