#pragma once

#include "sl2kit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sl2kit {

enum class LieType { A, B, C, D, E, F, G };

char type_letter(LieType type);
LieType parse_lie_type(char letter);

/// Integer root coordinates in the basis of simple roots.
using RootVector = std::vector<int>;

/// Fundamental-weight coordinates of a dominant weight.
using DominantWeight = std::vector<unsigned>;

/// Exponents r_1 <= ... <= r_n.
using ExponentList = std::vector<unsigned>;

struct RootSystem {
  LieType type = LieType::A;
  unsigned rank = 0;
  /// cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  std::vector<std::vector<int>> cartan;
  /// Squared lengths (alpha_i, alpha_i), scaled so all pairings are integers.
  std::vector<int> squared_lengths;
  /// Sorted by height, then lexicographically.
  std::vector<RootVector> positive_roots;
  /// Set for exceptional isomorphisms, e.g. D3 = A3.
  std::string note;

  std::string name() const;
};

/// Positive roots are generated from the simple roots by root-string closure.
/// Valid inputs: A n>=1, B n>=2, C n>=2, D n>=3, E 6..8, F 4, G 2.
RootSystem build_root_system(LieType type, unsigned rank);

/// Shared immutable copy of build_root_system(type, rank); thread-safe.
const RootSystem& root_system(LieType type, unsigned rank);

bool is_valid_type(LieType type, unsigned rank);

unsigned height(const RootVector& root);

/// Dual partition of the height distribution of positive roots.
ExponentList exponents(const RootSystem& rs);

/// 2 * #positive roots + rank.
std::size_t algebra_dimension(const RootSystem& rs);

/// Weyl dimension formula, exact.
Integer weyl_dimension(const RootSystem& rs, const DominantWeight& weight);

/// As weyl_dimension, but gives up (nullopt) as soon as the value must exceed cap.
std::optional<Integer> weyl_dimension_capped(const RootSystem& rs, const DominantWeight& weight,
                                             const Integer& cap);

/// All dominant weights with Weyl dimension exactly k, in lexicographic order.
std::vector<DominantWeight> irreps_of_dimension(const RootSystem& rs, const Integer& k);

/// Distinct dimensions of irreducible representations in (1, cap], ascending.
std::vector<Integer> dimensions_up_to(const RootSystem& rs, const Integer& cap);

/// The `count` least dimensions of nontrivial irreducible representations.
std::vector<Integer> least_dimensions(const RootSystem& rs, std::size_t count);

/// Fundamental weight omega_i (1-based).
DominantWeight fundamental_weight(const RootSystem& rs, unsigned i);

/// Highest root, in fundamental-weight coordinates.
DominantWeight adjoint_weight(const RootSystem& rs);

}  // namespace sl2kit
