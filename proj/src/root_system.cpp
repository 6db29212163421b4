#include "sl2kit/root_system.hpp"

#include "sl2kit/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>

namespace sl2kit {

char type_letter(LieType type) { return "ABCDEFG"[static_cast<int>(type)]; }

LieType parse_lie_type(char letter) {
  if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
  if (letter < 'A' || letter > 'G') throw DomainError(std::string("unknown Lie type '") + letter + "'");
  return static_cast<LieType>(letter - 'A');
}

std::string RootSystem::name() const { return type_letter(type) + std::to_string(rank); }

bool is_valid_type(LieType type, unsigned rank) {
  switch (type) {
    case LieType::A: return rank >= 1;
    case LieType::B:
    case LieType::C: return rank >= 2;
    case LieType::D: return rank >= 3;
    case LieType::E: return rank >= 6 && rank <= 8;
    case LieType::F: return rank == 4;
    case LieType::G: return rank == 2;
  }
  return false;
}

namespace {

// Gram matrix (alpha_i, alpha_j) in Bourbaki numbering, scaled to integers.
std::vector<std::vector<int>> gram_matrix(LieType type, unsigned n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](unsigned i, unsigned j, int value) { g[i][j] = g[j][i] = value; };
  switch (type) {
    case LieType::A:
      for (unsigned i = 0; i < n; ++i) g[i][i] = 2;
      for (unsigned i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case LieType::B:  // alpha_n short
      for (unsigned i = 0; i + 1 < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (unsigned i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case LieType::C:  // alpha_n long
      for (unsigned i = 0; i + 1 < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (unsigned i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case LieType::D:
      for (unsigned i = 0; i < n; ++i) g[i][i] = 2;
      for (unsigned i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case LieType::E:  // 1-3-4-5-6-7-8 with 2 attached to 4
      for (unsigned i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (unsigned i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case LieType::F:  // alpha_1, alpha_2 long
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case LieType::G:  // alpha_1 short
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

RootSystem build_root_system(LieType type, unsigned rank) {
  if (!is_valid_type(type, rank))
    throw DomainError(std::string("invalid simple type ") + type_letter(type) + std::to_string(rank));

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  if (type == LieType::D && rank == 3) rs.note = "isomorphic to A3";
  const auto gram = gram_matrix(type, rank);
  rs.cartan.assign(rank, std::vector<int>(rank));
  for (unsigned i = 0; i < rank; ++i) {
    rs.squared_lengths.push_back(gram[i][i]);
    for (unsigned j = 0; j < rank; ++j) rs.cartan[i][j] = 2 * gram[i][j] / gram[j][j];
  }

  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (unsigned i = 0; i < rank; ++i) {
    RootVector simple(rank, 0);
    simple[i] = 1;
    layer.push_back(simple);
    known.insert(simple);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    rs.positive_roots.insert(rs.positive_roots.end(), layer.begin(), layer.end());
    std::set<RootVector> next;
    for (const auto& beta : layer)
      for (unsigned j = 0; j < rank; ++j) {
        // alpha_j-string through beta: beta - p alpha_j, ..., beta + q alpha_j with p - q = <beta, alpha_j^vee>.
        int p = 0;
        RootVector down = beta;
        while (down[j] > 0) {
          --down[j];
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (unsigned i = 0; i < rank; ++i) pairing += beta[i] * rs.cartan[i][j];
        if (p - pairing > 0) {
          RootVector up = beta;
          ++up[j];
          next.insert(up);
        }
      }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  return rs;
}

const RootSystem& root_system(LieType type, unsigned rank) {
  static std::mutex mutex;
  static std::map<std::pair<LieType, unsigned>, RootSystem> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({type, rank});
  if (it == cache.end()) it = cache.emplace(std::make_pair(type, rank), build_root_system(type, rank)).first;
  return it->second;
}

unsigned height(const RootVector& root) {
  return static_cast<unsigned>(std::accumulate(root.begin(), root.end(), 0));
}

ExponentList exponents(const RootSystem& rs) {
  std::map<unsigned, std::size_t> per_height;
  for (const auto& root : rs.positive_roots) ++per_height[height(root)];
  ExponentList out;
  for (const auto& [h, count] : per_height) {
    const auto it = per_height.find(h + 1);
    const std::size_t above = it == per_height.end() ? 0 : it->second;
    if (count < above) throw ConsistencyError("root heights are not a partition in " + rs.name());
    out.insert(out.end(), count - above, h);
  }
  return out;
}

std::size_t algebra_dimension(const RootSystem& rs) { return 2 * rs.positive_roots.size() + rs.rank; }

namespace {

// Product over positive roots of (w + rho, alpha) / (rho, alpha), using
// (omega_i, alpha_j) = delta_ij (alpha_j, alpha_j) / 2. Factors are >= 1;
// the cap is checked after each one.
std::optional<Integer> weyl_product(const RootSystem& rs, const DominantWeight& weight, const Integer* cap) {
  if (weight.size() != rs.rank) throw DimensionError("weight length does not match the rank");
  Rational product = 1;
  for (const auto& root : rs.positive_roots) {
    long rho_part = 0, weight_part = 0;
    for (unsigned i = 0; i < rs.rank; ++i) {
      if (root[i] == 0) continue;
      const long scaled = static_cast<long>(root[i]) * rs.squared_lengths[i];
      rho_part += scaled;
      weight_part += scaled * static_cast<long>(weight[i]);
    }
    if (weight_part == 0) continue;
    product *= make_rational(rho_part + weight_part, rho_part);
    if (cap && product > *cap) return std::nullopt;
  }
  if (cap && product > *cap) return std::nullopt;
  if (product.get_den() != 1) throw ConsistencyError("Weyl dimension is not an integer");
  return product.get_num();
}

}  // namespace

std::optional<Integer> weyl_dimension_capped(const RootSystem& rs, const DominantWeight& weight,
                                             const Integer& cap) {
  return weyl_product(rs, weight, &cap);
}

Integer weyl_dimension(const RootSystem& rs, const DominantWeight& weight) {
  return *weyl_product(rs, weight, nullptr);
}

namespace {

// Visits every dominant weight of dimension <= cap, pruning children of
// weights above cap (dimension is increasing in each coordinate).
template <typename Visit>
void for_each_irrep_up_to(const RootSystem& rs, const Integer& cap, Visit visit) {
  std::set<DominantWeight> seen;
  std::deque<DominantWeight> queue;
  DominantWeight zero(rs.rank, 0);
  queue.push_back(zero);
  seen.insert(zero);
  while (!queue.empty()) {
    DominantWeight w = std::move(queue.front());
    queue.pop_front();
    const auto dim = weyl_dimension_capped(rs, w, cap);
    if (!dim) continue;
    visit(w, *dim);
    for (unsigned i = 0; i < rs.rank; ++i) {
      DominantWeight child = w;
      ++child[i];
      if (seen.insert(child).second) queue.push_back(std::move(child));
    }
  }
}

}  // namespace

std::vector<DominantWeight> irreps_of_dimension(const RootSystem& rs, const Integer& k) {
  std::vector<DominantWeight> found;
  if (k < 1) return found;
  for_each_irrep_up_to(rs, k, [&](const DominantWeight& w, const Integer& dim) {
    if (dim == k) found.push_back(w);
  });
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Integer> dimensions_up_to(const RootSystem& rs, const Integer& cap) {
  std::set<Integer> dims;
  if (cap < 2) return {};
  for_each_irrep_up_to(rs, cap, [&](const DominantWeight&, const Integer& dim) {
    if (dim > 1) dims.insert(dim);
  });
  return {dims.begin(), dims.end()};
}

std::vector<Integer> least_dimensions(const RootSystem& rs, std::size_t count) {
  Integer cap(static_cast<unsigned long>(algebra_dimension(rs)));
  for (;;) {
    auto dims = dimensions_up_to(rs, cap);
    if (dims.size() >= count) {
      dims.resize(count);
      return dims;
    }
    cap *= 2;
  }
}

DominantWeight fundamental_weight(const RootSystem& rs, unsigned i) {
  if (i < 1 || i > rs.rank) throw DomainError("fundamental weight index out of range");
  DominantWeight w(rs.rank, 0);
  w[i - 1] = 1;
  return w;
}

DominantWeight adjoint_weight(const RootSystem& rs) {
  const RootVector& highest = rs.positive_roots.back();
  DominantWeight w(rs.rank, 0);
  for (unsigned j = 0; j < rs.rank; ++j) {
    int pairing = 0;
    for (unsigned i = 0; i < rs.rank; ++i) pairing += highest[i] * rs.cartan[i][j];
    if (pairing < 0) throw ConsistencyError("highest root is not dominant");
    w[j] = static_cast<unsigned>(pairing);
  }
  return w;
}

}  // namespace sl2kit
