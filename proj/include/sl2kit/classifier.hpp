#pragma once

#include "sl2kit/matrix.hpp"
#include "sl2kit/root_system.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace sl2kit {

/// Simple Lie algebra with a k-dimensional irreducible representation.
struct CandidateAlgebra {
  LieType type = LieType::A;
  unsigned rank = 0;
  ExponentList exponents;
  std::vector<DominantWeight> realizing_weights;

  std::string name() const { return type_letter(type) + std::to_string(rank); }
};

enum class CaseLabel { sym_power_sl2, full_sl, symplectic, orthogonal, g2, other };

std::string to_string(CaseLabel label);

struct ClassificationCase {
  CaseLabel label = CaseLabel::other;
  CandidateAlgebra candidate;
};

struct Lemma6Flags {
  bool distinct = false;  // exponents pairwise distinct
  bool bounded = false;   // every exponent <= k-1
  bool closed = false;    // r + s <= k implies r + s - 1 is an exponent

  bool all() const { return distinct && bounded && closed; }
};

Lemma6Flags lemma6_check(std::span<const unsigned> exponents, std::size_t k);

/// The expected label for a (type, rank) at dimension k, or CaseLabel::other.
CaseLabel label_for(LieType type, unsigned rank, std::size_t k);

/// Irreducible representations of dimension k, short-circuiting A_{k-1} at
/// large rank to its defining representation and its dual.
std::vector<DominantWeight> realizing_weights(const RootSystem& rs, std::size_t k);

/// Simple algebras of rank <= k-1 that pass lemma6_check and have a
/// k-dimensional irrep, one per isomorphism class (B2 = C2 and D3 = A3 are
/// reported under the name matching k).
std::vector<ClassificationCase> classify(std::size_t k);

struct HodgeTateData {
  std::set<long> weights;

  std::size_t weight_count() const { return weights.size(); }
};

/// Number of distinct eigenvalues of the semisimple element h of Sym^{k-1}.
std::size_t sym_power_eigenvalue_count(std::size_t k);

/// With exactly two Hodge-Tate weights, drops the Sym^{k-1} case whenever
/// its semisimple elements have more than two eigenvalues (k > 2).
std::vector<ClassificationCase> ht_filter(const std::vector<ClassificationCase>& cases, std::size_t k,
                                          const HodgeTateData& ht);

/// Matrices generating the Lie algebra of a case inside gl_k.
std::vector<Matrix> case_generators(const ClassificationCase& c, std::size_t k);

struct FormFilterResult {
  std::vector<ClassificationCase> cases;
  std::optional<std::string> conclusion;  // e.g. "GSp_4"
};

/// Keeps the cases whose generators preserve a nonzero alternating form.
/// If exactly one survives, its invariant form is unique, alternating and
/// nondegenerate, and its dimension is k(k+1)/2, the conclusion is GSp_k.
FormFilterResult form_filter(const std::vector<ClassificationCase>& cases, std::size_t k);

struct FrobeniusCheck {
  Rational alpha_exponent;                 // (w - k + 1) / 2
  std::vector<std::size_t> dimensions;     // k' in 1..k with the same exponent
};

FrobeniusCheck frobenius_dimension_check(long w, std::size_t k);

struct ClassificationReport {
  std::size_t k = 0;
  std::vector<ClassificationCase> raw_cases;
  std::vector<ClassificationCase> after_ht_filter;
  std::vector<ClassificationCase> after_form_filter;
  std::optional<std::string> conclusion;
};

/// classify, then ht_filter when weights are given, then form_filter when
/// symplectic is set (k must then be even).
ClassificationReport classification_report(std::size_t k, const std::optional<HodgeTateData>& ht,
                                           bool symplectic);

}  // namespace sl2kit
