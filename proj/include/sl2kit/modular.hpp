#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sl2kit {

/// 2x2 integer matrix (a b; c d).
struct SL2Matrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  SL2Matrix operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

inline constexpr SL2Matrix kMatrixS{0, -1, 1, 0};
inline constexpr SL2Matrix kMatrixT{1, 1, 0, 1};

/// Equal as elements of PSL2(Z).
bool equal_up_to_sign(const SL2Matrix& x, const SL2Matrix& y);

struct GeneratorSet {
  std::string name;
  std::vector<SL2Matrix> generators;
};

enum class Letter { S, T, TInverse };
using Word = std::vector<Letter>;

std::string to_string(const Word& w);
SL2Matrix evaluate(const Word& w);

/// Euclidean rewriting in S and T; evaluate(result) == +-m. Throws DomainError if det(m) != 1.
Word matrix_to_word(const SL2Matrix& m);

/// Right action of PSL2(Z) on the cosets of a subgroup; coset 0 is the subgroup.
/// Cosets are numbered in breadth-first order over the columns s, u, u^-1.
struct CosetTable {
  std::size_t index = 0;
  std::vector<std::size_t> perm_S;
  std::vector<std::size_t> perm_T;
};

/// S^2 = 1, (ST)^3 = 1 and transitivity.
bool is_valid_table(const CosetTable& t);

/// Capacity from SL2KIT_COSET_CAP if set and positive, else 100000.
std::size_t default_coset_capacity();

/// Todd-Coxeter (HLT) over <s, u | s^2, u^3> with s = S, u = ST.
/// Throws IndexBoundExceeded once more than `capacity` cosets have been defined.
CosetTable coset_enumerate(const GeneratorSet& g, std::size_t capacity = default_coset_capacity());

struct SubgroupInvariants {
  std::size_t index = 0;
  std::vector<std::size_t> cusp_widths;  // nonincreasing
  std::size_t nu2 = 0;
  std::size_t nu3 = 0;
  std::size_t genus = 0;
  std::size_t level = 1;
  bool congruence = false;

  std::size_t cusps() const { return cusp_widths.size(); }
};

SubgroupInvariants invariants(const CosetTable& t);

/// True iff the subgroup contains Gamma(N) for N = lcm of the cusp widths
/// (by Wohlfahrt's theorem, iff it is congruence). Decided by checking that
/// S -> perm_S, T -> perm_T descends to a homomorphism on PSL2(Z/N).
bool congruence_test(const CosetTable& t);

/// Dimension of S_w(Gamma) for even w >= 2.
long dim_cusp_forms(const SubgroupInvariants& inv, long weight);

/// 2 (dim S_{k+2}(Gamma) - dim S_{k+2}(PSL2(Z))) for the three built-in groups,
/// whose congruence closure is the full modular group.
/// Throws CongruenceClosureUnknown for any other generator set.
long dim_rho_prim(const GeneratorSet& g, long k);

GeneratorSet full_modular_group();

/// "gamma43", "gamma52", "gamma711".
std::vector<std::string> preset_names();
const GeneratorSet& preset(std::string_view name);

/// True if g has exactly the generators of one of the presets (up to sign, in order).
bool is_preset(const GeneratorSet& g);

/// Reads {"name": ..., "generators": [[a, b, c, d], ...]}.
GeneratorSet load_generator_set(const std::string& path);
GeneratorSet parse_generator_set(const std::string& json_text);

}  // namespace sl2kit
