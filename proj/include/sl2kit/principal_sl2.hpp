#pragma once

#include "sl2kit/matrix.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace sl2kit {

/// An sl2-triple in gl_k with [h,x] = 2x, [h,y] = -2y, [x,y] = +h.
struct Sl2Triple {
  std::size_t k = 0;
  Matrix x;  // raising, nilpotent
  Matrix h;  // semisimple, diagonal
  Matrix y;  // lowering
};

/// True when the three bracket relations hold, x is a single Jordan block and
/// all three matrices are traceless.
bool is_principal_triple(const Sl2Triple& t);

/// x = superdiagonal ones, h = diag(k-1, k-3, ..., 1-k), y_{i+1,i} = i(k-i) (1-based).
Sl2Triple principal_triple(std::size_t k);

/// The standard sl2 basis acting on Sym^{k-1} of the plane, in the monomial
/// basis X^{k-1-j} Y^j, together with the diagonal witness D such that
/// D m D^{-1} is the matching member of principal_triple(k).
struct SymPowerRep {
  Sl2Triple triple;
  Matrix witness;
};

SymPowerRep sym_power_rep(std::size_t k);

/// U_r: basis[i] = ad(y)^i x^r, i = 0..2r; ad(h)-weight of basis[i] is 2r - 2i.
struct IrrepBlock {
  unsigned r = 0;
  std::vector<Matrix> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// sl(V) = U_1 + ... + U_{k-1} for a principal triple in standard diagonal form.
///
/// Elementary coordinates on sl(V) are the off-diagonal units E_{ij} (row-major)
/// followed by H_i = E_{ii} - E_{i+1,i+1}. change_of_basis has one column per
/// block basis vector, ordered by r and then i.
///
/// Every block vector of weight 2d sits on the d-th diagonal, so change_of_basis
/// is block diagonal up to permutation; coordinates are recovered one diagonal
/// at a time from the precomputed inverse of each square piece.
class AdjointDecomposition {
 public:
  explicit AdjointDecomposition(const Sl2Triple& t);

  std::size_t k() const { return k_; }
  const std::vector<IrrepBlock>& blocks() const { return blocks_; }
  const IrrepBlock& block(unsigned r) const { return blocks_.at(r - 1); }
  const Matrix& change_of_basis() const { return change_of_basis_; }

  /// coords[r] has 2r+1 entries: m = sum_r sum_i coords[r][i] * block(r).basis[i].
  /// Index 0 of the outer vector is unused.
  std::vector<std::vector<Rational>> block_coordinates(const Matrix& m) const;

 private:
  std::size_t k_;
  std::vector<IrrepBlock> blocks_;
  Matrix change_of_basis_;
  std::vector<Matrix> diagonal_inverse_;  // indexed by offset + (k-1)
};

/// Coordinates of a traceless matrix in the elementary basis of sl(V).
std::vector<Rational> sl_coordinates(const Matrix& m);

AdjointDecomposition decompose_adjoint(const Sl2Triple& t);

/// Nonzero components of a traceless m along the blocks U_r; they sum to m.
std::map<unsigned, Matrix> project_to_blocks(const AdjointDecomposition& d, const Matrix& m);

/// The set T of t with [U_r, U_s] meeting U_t, found by bracketing every pair of basis vectors.
std::set<unsigned> bracket_support(const AdjointDecomposition& d, unsigned r, unsigned s);

/// Checks [x^r, [y, x^s]] == 2rs x^{r+s-1} exactly.
bool verify_bracket_identity(const Sl2Triple& t, unsigned r, unsigned s);

/// Basis of { B : m^T B + B m = 0 for every generator m }.
std::vector<Matrix> invariant_forms(std::span<const Matrix> generators);

struct InvariantForm {
  Matrix form;
  bool symmetric = false;
};

/// The unique (up to scale) bilinear form preserved by the triple, scaled so
/// its first nonzero entry in row-major order is 1.
InvariantForm invariant_bilinear_form(const Sl2Triple& t);

/// Highest weights of Sym^a (x) Sym^b: a+b, a+b-2, ..., |a-b|.
std::vector<unsigned> clebsch_gordan(unsigned a, unsigned b);

}  // namespace sl2kit
