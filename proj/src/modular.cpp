#include "sl2kit/modular.hpp"

#include "sl2kit/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace sl2kit {

bool equal_up_to_sign(const SL2Matrix& x, const SL2Matrix& y) { return x == y || x == -y; }

std::string to_string(const Word& w) {
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += l == Letter::S ? "S" : l == Letter::T ? "T" : "T^-1";
  }
  return out.empty() ? "1" : out;
}

SL2Matrix evaluate(const Word& w) {
  static constexpr SL2Matrix t_inverse{1, -1, 0, 1};
  SL2Matrix m;
  for (Letter l : w) m = m * (l == Letter::S ? kMatrixS : l == Letter::T ? kMatrixT : t_inverse);
  return m;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void append_power_of_t(Word& w, std::int64_t q) {
  w.insert(w.end(), static_cast<std::size_t>(q < 0 ? -q : q), q < 0 ? Letter::TInverse : Letter::T);
}

}  // namespace

Word matrix_to_word(const SL2Matrix& m) {
  if (m.det() != 1) throw DomainError("matrix does not have determinant 1");
  // Peel off m = T^q1 S T^q2 S ... T^n by Euclid on the first column.
  Word w;
  SL2Matrix rest = m;
  while (rest.c != 0) {
    const std::int64_t q = floor_div(rest.a, rest.c);
    append_power_of_t(w, q);
    rest = SL2Matrix{rest.a - q * rest.c, rest.b - q * rest.d, rest.c, rest.d};
    w.push_back(Letter::S);
    rest = SL2Matrix{-rest.c, -rest.d, rest.a, rest.b};  // S * rest, which equals S^-1 * rest up to sign
  }
  // rest = +-(1 n; 0 1)
  append_power_of_t(w, rest.b * rest.a);
  return w;
}

bool is_valid_table(const CosetTable& t) {
  const std::size_t n = t.index;
  if (n == 0 || t.perm_S.size() != n || t.perm_T.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.perm_S[i] >= n || t.perm_T[i] >= n) return false;
    if (t.perm_S[t.perm_S[i]] != i) return false;
    std::size_t j = i;
    for (int rep = 0; rep < 3; ++rep) j = t.perm_T[t.perm_S[j]];
    if (j != i) return false;
  }
  std::vector<std::size_t> hits(n, 0);
  for (auto v : t.perm_T) ++hits[v];
  if (std::any_of(hits.begin(), hits.end(), [](std::size_t h) { return h != 1; })) return false;

  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t next : {t.perm_S[c], t.perm_T[c]})
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        queue.push_back(next);
      }
  }
  return reached == n;
}

std::size_t default_coset_capacity() {
  if (const char* env = std::getenv("SL2KIT_COSET_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

namespace {

// Columns: 0 = s (an involution, its own inverse), 1 = u, 2 = u^-1.
constexpr int kGens = 3;
constexpr std::array<int, kGens> kInverse{0, 2, 1};
constexpr long kUndefined = -1;

class ToddCoxeter {
 public:
  explicit ToddCoxeter(std::size_t capacity) : capacity_(capacity) { new_coset(); }

  void run(const std::vector<std::vector<int>>& subgroup_words) {
    static const std::vector<std::vector<int>> relators{{0, 0}, {1, 1, 1}};
    for (const auto& w : subgroup_words) scan_and_fill(0, w);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : relators) {
        scan_and_fill(static_cast<long>(c), r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < kGens; ++x)
        if (table_[c][x] == kUndefined) define(static_cast<long>(c), x);
    }
  }

  // Live cosets renumbered breadth-first from coset 0.
  CosetTable result() const {
    std::vector<long> order;
    std::vector<long> number(table_.size(), kUndefined);
    order.push_back(0);
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int x = 0; x < kGens; ++x) {
        const long next = find(table_[order[i]][x]);
        if (number[next] == kUndefined) {
          number[next] = static_cast<long>(order.size());
          order.push_back(next);
        }
      }
    CosetTable t;
    t.index = order.size();
    t.perm_S.resize(t.index);
    t.perm_T.resize(t.index);
    for (std::size_t i = 0; i < t.index; ++i) {
      const long c = order[i];
      const long cs = find(table_[c][0]);
      t.perm_S[i] = static_cast<std::size_t>(number[cs]);
      t.perm_T[i] = static_cast<std::size_t>(number[find(table_[cs][1])]);  // T = s u
    }
    return t;
  }

 private:
  bool live(std::size_t c) const { return forward_[c] == static_cast<long>(c); }

  long find(long c) const {
    if (c == kUndefined) throw ConsistencyError("coset table is incomplete");
    while (forward_[c] != c) c = forward_[c];
    return c;
  }

  long new_coset() {
    if (table_.size() >= capacity_)
      throw IndexBoundExceeded("coset enumeration exceeded " + std::to_string(capacity_) +
                               " cosets; the subgroup may have infinite index");
    table_.push_back({kUndefined, kUndefined, kUndefined});
    forward_.push_back(static_cast<long>(table_.size() - 1));
    return static_cast<long>(table_.size() - 1);
  }

  void define(long c, int x) {
    const long d = new_coset();
    table_[c][x] = d;
    table_[d][kInverse[x]] = c;
  }

  void scan_and_fill(long c, const std::vector<int>& w) {
    if (w.empty()) return;
    long f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][kInverse[w[j]]] != kUndefined) b = table_[b][kInverse[w[j--]]];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][kInverse[w[i]]] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  long rep(long c) {
    long r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {  // path compression
      const long next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(long a, long b, std::deque<long>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const long low = std::min(a, b), high = std::max(a, b);
    forward_[high] = low;
    queue.push_back(high);
  }

  void coincidence(long a, long b) {
    std::deque<long> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const long g = queue.front();
      queue.pop_front();
      for (int x = 0; x < kGens; ++x) {
        const long d = table_[g][x];
        if (d == kUndefined) continue;
        table_[d][kInverse[x]] = kUndefined;
        const long mu = rep(g), nu = rep(d);
        if (table_[mu][x] != kUndefined) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][kInverse[x]] != kUndefined) {
          merge(mu, table_[nu][kInverse[x]], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][kInverse[x]] = mu;
        }
      }
    }
  }

  std::size_t capacity_;
  std::vector<std::array<long, kGens>> table_;
  std::vector<long> forward_;  // union-find parent; forward_[c] == c iff c is live
};

std::vector<int> to_columns(const Word& w) {
  std::vector<int> cols;
  for (Letter l : w) switch (l) {
      case Letter::S: cols.push_back(0); break;
      case Letter::T: cols.insert(cols.end(), {0, 1}); break;          // T = s u
      case Letter::TInverse: cols.insert(cols.end(), {2, 0}); break;  // T^-1 = u^-1 s
    }
  return cols;
}

}  // namespace

CosetTable coset_enumerate(const GeneratorSet& g, std::size_t capacity) {
  std::vector<std::vector<int>> words;
  for (const auto& m : g.generators) words.push_back(to_columns(matrix_to_word(m)));
  ToddCoxeter tc(capacity);
  tc.run(words);
  CosetTable t = tc.result();
  if (!is_valid_table(t)) throw ConsistencyError("coset enumeration produced an invalid table");
  return t;
}

namespace {

std::vector<std::size_t> cycle_lengths(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

// Element of PSL2(Z/N), with the sign normalised to the lexicographically smaller of +-m.
using ModMatrix = std::array<std::int64_t, 4>;

ModMatrix reduce_mod(const SL2Matrix& m, std::int64_t n) {
  auto r = [n](std::int64_t v) { return ((v % n) + n) % n; };
  ModMatrix plus{r(m.a), r(m.b), r(m.c), r(m.d)};
  ModMatrix minus{r(-m.a), r(-m.b), r(-m.c), r(-m.d)};
  return std::min(plus, minus);
}

ModMatrix multiply_mod(const ModMatrix& x, const ModMatrix& y, std::int64_t n) {
  return reduce_mod(SL2Matrix{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                              x[2] * y[1] + x[3] * y[3]},
                    n);
}

}  // namespace

bool congruence_test(const CosetTable& t) {
  if (!is_valid_table(t)) throw DomainError("invalid coset table");
  std::size_t level = 1;
  for (auto w : cycle_lengths(t.perm_T)) level = std::lcm(level, w);
  if (level == 1) return true;
  const auto n = static_cast<std::int64_t>(level);

  // The subgroup contains Gamma(N) iff the assignment S -> perm_S, T -> perm_T
  // is well defined on PSL2(Z/N): no matrix may be reached with two different
  // permutations while closing the diagonal subgroup.
  using Perm = std::vector<std::size_t>;
  const std::array<std::pair<ModMatrix, const Perm*>, 2> gens{
      {{reduce_mod(kMatrixS, n), &t.perm_S}, {reduce_mod(kMatrixT, n), &t.perm_T}}};
  Perm identity(t.index);
  std::iota(identity.begin(), identity.end(), 0);

  std::map<ModMatrix, Perm> reached;
  std::deque<ModMatrix> queue;
  reached.emplace(reduce_mod(SL2Matrix{}, n), identity);
  queue.push_back(reduce_mod(SL2Matrix{}, n));
  while (!queue.empty()) {
    const ModMatrix m = queue.front();
    queue.pop_front();
    const Perm current = reached.at(m);
    for (const auto& [gm, gp] : gens) {
      const ModMatrix next = multiply_mod(m, gm, n);
      Perm composed(t.index);
      for (std::size_t i = 0; i < t.index; ++i) composed[i] = (*gp)[current[i]];
      auto [it, inserted] = reached.emplace(next, composed);
      if (inserted) {
        queue.push_back(next);
      } else if (it->second != composed) {
        return false;
      }
    }
  }
  return true;
}

SubgroupInvariants invariants(const CosetTable& t) {
  if (!is_valid_table(t)) throw DomainError("invalid coset table");
  SubgroupInvariants inv;
  inv.index = t.index;
  inv.cusp_widths = cycle_lengths(t.perm_T);
  std::sort(inv.cusp_widths.rbegin(), inv.cusp_widths.rend());
  for (std::size_t i = 0; i < t.index; ++i) {
    if (t.perm_S[i] == i) ++inv.nu2;
    if (t.perm_T[t.perm_S[i]] == i) ++inv.nu3;
  }
  const long twelve_g = 12 + static_cast<long>(inv.index) - 3 * static_cast<long>(inv.nu2) -
                        4 * static_cast<long>(inv.nu3) - 6 * static_cast<long>(inv.cusps());
  if (twelve_g < 0 || twelve_g % 12 != 0)
    throw ConsistencyError("Riemann-Hurwitz gives a non-integral genus (12g = " + std::to_string(twelve_g) + ")");
  inv.genus = static_cast<std::size_t>(twelve_g / 12);
  for (auto w : inv.cusp_widths) inv.level = std::lcm(inv.level, w);
  inv.congruence = congruence_test(t);
  return inv;
}

long dim_cusp_forms(const SubgroupInvariants& inv, long weight) {
  if (weight < 2 || weight % 2 != 0)
    throw DomainError("cusp form dimension needs an even weight >= 2, got " + std::to_string(weight));
  const auto g = static_cast<long>(inv.genus);
  if (weight == 2) return g;
  return (weight - 1) * (g - 1) + (weight / 2 - 1) * static_cast<long>(inv.cusps()) +
         static_cast<long>(inv.nu2) * (weight / 4) + static_cast<long>(inv.nu3) * (weight / 3);
}

GeneratorSet full_modular_group() { return {"PSL2(Z)", {kMatrixS, kMatrixT}}; }

namespace {

const std::vector<GeneratorSet>& presets() {
  static const std::vector<GeneratorSet> sets{
      {"gamma43", {{1, 4, 0, 1}, {2, 1, 1, 1}, {1, -1, 2, -1}}},
      {"gamma52", {{1, 5, 0, 1}, {0, -1, 1, 0}, {2, 3, 1, 2}}},
      {"gamma711", {{1, 7, 0, 1}, {0, -1, 1, 0}, {3, -4, 1, -1}, {-1, -4, 1, 3}}},
  };
  return sets;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& g : presets()) names.push_back(g.name);
  return names;
}

const GeneratorSet& preset(std::string_view name) {
  for (const auto& g : presets())
    if (g.name == name) return g;
  throw DomainError("unknown preset '" + std::string(name) + "'");
}

bool is_preset(const GeneratorSet& g) {
  return std::any_of(presets().begin(), presets().end(), [&](const GeneratorSet& p) {
    return std::equal(p.generators.begin(), p.generators.end(), g.generators.begin(), g.generators.end(),
                      equal_up_to_sign);
  });
}

long dim_rho_prim(const GeneratorSet& g, long k) {
  if (k < 2 || k % 2 != 0) throw DomainError("dim_rho_prim needs an even k >= 2, got " + std::to_string(k));
  if (!is_preset(g)) throw CongruenceClosureUnknown("congruence closure unknown for '" + g.name + "'");
  const auto own = invariants(coset_enumerate(g));
  const auto full = invariants(coset_enumerate(full_modular_group()));
  return 2 * (dim_cusp_forms(own, k + 2) - dim_cusp_forms(full, k + 2));
}

GeneratorSet parse_generator_set(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed generator document: ") + e.what());
  }
  GeneratorSet g;
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
    throw DomainError("generator document needs a 'generators' list");
  g.name = doc.value("name", std::string("unnamed"));
  for (const auto& row : doc["generators"]) {
    if (!row.is_array() || row.size() != 4 ||
        !std::all_of(row.begin(), row.end(), [](const nlohmann::json& v) { return v.is_number_integer(); }))
      throw DomainError("each generator must be a row [a, b, c, d] of integers");
    const SL2Matrix m{row[0].get<std::int64_t>(), row[1].get<std::int64_t>(), row[2].get<std::int64_t>(),
                      row[3].get<std::int64_t>()};
    if (m.det() != 1) throw DomainError("generator " + row.dump() + " does not have determinant 1");
    g.generators.push_back(m);
  }
  if (g.generators.empty()) throw DomainError("generator list is empty");
  return g;
}

GeneratorSet load_generator_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_generator_set(text.str());
}

}  // namespace sl2kit
