#include "sl2kit/verification.hpp"

#include "sl2kit/classifier.hpp"
#include "sl2kit/errors.hpp"
#include "sl2kit/modular.hpp"
#include "sl2kit/principal_sl2.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace sl2kit {

namespace {

std::string join(const auto& values, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

std::string name_of(LieType type, unsigned rank) { return type_letter(type) + std::to_string(rank); }

// Counts checks; the summary lists the first few failures.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  std::string summary() const {
    if (failures.empty()) return std::to_string(checks) + "/" + std::to_string(checks) + " ok";
    std::vector<std::string> shown(failures.begin(), failures.begin() + std::min<std::size_t>(failures.size(), 4));
    std::string text = std::to_string(checks - failures.size()) + "/" + std::to_string(checks) + " ok; " + join(shown, "; ");
    if (failures.size() > shown.size()) text += "; ...";
    return text;
  }
};

CriterionResult finish(int id, std::string group, std::string claim, std::string expected, const Tally& t) {
  return {id, std::move(group), std::move(claim), std::move(expected), t.summary(), t.failures.empty()};
}

std::set<std::string> expected_classification(std::size_t k) {
  if (k == 2) return {"A1"};
  std::set<std::string> names{"A1", name_of(LieType::A, static_cast<unsigned>(k - 1))};
  if (k % 2 == 0) names.insert(name_of(LieType::C, static_cast<unsigned>(k / 2)));
  if (k % 2 == 1 && k >= 5) names.insert(name_of(LieType::B, static_cast<unsigned>((k - 1) / 2)));
  if (k == 7) names.insert("G2");
  return names;
}

CriterionResult criterion_classification() {
  Tally t;
  for (std::size_t k = 2; k <= 30; ++k) {
    std::set<std::string> got;
    for (const auto& c : classify(k)) got.insert(c.candidate.name());
    const auto want = expected_classification(k);
    t.check(got == want, "k=" + std::to_string(k) + " gave {" + join(got) + "}");
  }
  return finish(1, "classification", "classify(k) lists A1, A_{k-1}, C_{k/2} or B_{(k-1)/2}, and G2 at k=7",
                "k=2..30 match", t);
}

CriterionResult criterion_pipeline() {
  Tally t;
  const HodgeTateData two_weights{{0, 1}};
  for (std::size_t k = 2; k <= 30; k += 2) {
    const auto report = classification_report(k, two_weights, true);
    const std::string want = "GSp_" + std::to_string(k);
    t.check(report.conclusion == want,
            "k=" + std::to_string(k) + " concluded " + report.conclusion.value_or("nothing"));
  }
  return finish(2, "classification", "classify, ht_filter and form_filter conclude GSp_k", "even k=2..30 give GSp_k",
                t);
}

CriterionResult criterion_decomposition() {
  Tally t;
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto d = decompose_adjoint(principal_triple(k));
    std::vector<std::size_t> dims;
    std::size_t total = 0;
    for (const auto& b : d.blocks()) {
      dims.push_back(b.dimension());
      total += b.dimension();
    }
    bool ok = dims.size() == k - 1 && total == k * k - 1;
    for (std::size_t r = 1; ok && r < k; ++r) ok = dims[r - 1] == 2 * r + 1;
    t.check(ok, "k=" + std::to_string(k) + " dims " + join(dims));
    t.check(rank(d.change_of_basis()) == k * k - 1, "k=" + std::to_string(k) + " change of basis singular");
  }
  return finish(3, "sl2", "sl(V) = U_1 + ... + U_{k-1} with dim U_r = 2r+1", "k=2..12: dims 3,5,..,2k-1, invertible",
                t);
}

CriterionResult criterion_bracket_identity() {
  Tally t;
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto triple = principal_triple(k);
    const auto d = decompose_adjoint(triple);
    for (unsigned r = 1; r < k; ++r)
      for (unsigned s = 1; r + s <= k; ++s) {
        const std::string at = "k=" + std::to_string(k) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
        t.check(verify_bracket_identity(triple, r, s), at + " identity");
        const auto support = bracket_support(d, std::max(r, s), std::min(r, s));
        t.check(support.count(r + s - 1) == 1 && support.count(r + s) == 0,
                at + " support {" + join(support) + "}");
      }
  }
  return finish(4, "sl2", "[x^r, ad(y) x^s] = 2rs x^{r+s-1}; [U_r, U_s] meets U_{r+s-1} and not U_{r+s}",
                "k=2..10, r+s<=k", t);
}

CriterionResult criterion_exponents(const std::map<std::string, ExponentList>& table) {
  // Standard dimensions of the simple algebras, for the sum over exponents.
  auto standard_dimension = [](LieType type, unsigned n) -> std::size_t {
    switch (type) {
      case LieType::A: return n * (n + 2);
      case LieType::B:
      case LieType::C: return n * (2 * n + 1);
      case LieType::D: return n * (2 * n - 1);
      case LieType::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
      case LieType::F: return 52;
      case LieType::G: return 14;
    }
    return 0;
  };
  Tally t;
  for (const auto& [name, want] : table) {
    const LieType type = parse_lie_type(name.front());
    const auto rank = static_cast<unsigned>(std::stoul(name.substr(1)));
    const auto got = exponents(root_system(type, rank));
    t.check(got == want, name + " gave " + join(got) + " want " + join(want));
    std::size_t sum = 0;
    for (unsigned r : got) sum += 2 * r + 1;
    t.check(sum == standard_dimension(type, rank), name + " sum(2r+1)=" + std::to_string(sum));
  }
  return finish(5, "roots", "exponents match the table; sum of 2r_i+1 is the algebra dimension",
                std::to_string(table.size()) + " types", t);
}

CriterionResult criterion_least_dimensions() {
  Tally t;
  auto least = [](LieType type, unsigned n) { return least_dimensions(root_system(type, n), 2); };
  auto text = [](const std::vector<Integer>& dims) {
    std::vector<std::string> parts;
    for (const auto& d : dims) parts.push_back(d.get_str());
    return join(parts);
  };
  for (unsigned n = 2; n <= 8; ++n) {
    const auto dims = least(LieType::A, n);
    const Integer wedge2(n * (n + 1) / 2);
    t.check(dims[0] == n + 1 && (dims[0] == wedge2 || dims[1] == wedge2), "A" + std::to_string(n) + " " + text(dims));
  }
  for (unsigned n = 3; n <= 8; ++n) {
    const auto dims = least(LieType::B, n);
    t.check(dims[0] == 2 * n + 1, "B" + std::to_string(n) + " " + text(dims));
  }
  for (unsigned n = 2; n <= 8; ++n) {
    const auto dims = least(LieType::C, n);
    t.check(dims[0] == 2 * n, "C" + std::to_string(n) + " " + text(dims));
  }
  const auto g2 = least(LieType::G, 2);
  t.check(g2[0] == 7 && g2[1] == 14, "G2 " + text(g2));
  return finish(6, "roots", "least representation dimensions", "A_n: n+1, n(n+1)/2; B_n: 2n+1; C_n: 2n; G2: 7, 14",
                t);
}

CriterionResult criterion_form_parity() {
  Tally t;
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto form = invariant_bilinear_form(principal_triple(k));
    const bool antisymmetric = form.form.transpose() == -form.form;
    t.check(antisymmetric == (k % 2 == 0) && form.symmetric == (k % 2 == 1),
            "k=" + std::to_string(k) + (antisymmetric ? " antisymmetric" : form.symmetric ? " symmetric" : " neither"));
  }
  return finish(7, "sl2", "the invariant form on Sym^{k-1} is alternating iff k is even",
                "k=2..12: even alternating, odd symmetric", t);
}

CriterionResult criterion_subgroups() {
  struct Expected {
    const char* name;
    std::size_t index;
    std::vector<std::size_t> widths;
  };
  const Expected table[] = {{"gamma43", 7, {4, 3}}, {"gamma52", 7, {5, 2}}, {"gamma711", 9, {7, 1, 1}}};
  Tally t;
  for (const auto& e : table) {
    const auto inv = invariants(coset_enumerate(preset(e.name)));
    t.check(inv.index == e.index && inv.cusp_widths == e.widths,
            std::string(e.name) + " index " + std::to_string(inv.index) + " widths " + join(inv.cusp_widths));
    t.check(!inv.congruence, std::string(e.name) + " is congruence");
  }
  return finish(8, "subgroups", "index and cusp widths of the three subgroups; all noncongruence",
                "7 {4,3}; 7 {5,2}; 9 {7,1,1}; noncongruence", t);
}

CriterionResult criterion_rho_prim() {
  Tally t;
  for (const auto& name : preset_names())
    for (long k = 2; k <= 20; k += 2) {
      const long dim = dim_rho_prim(preset(name), k);
      t.check(dim == k, name + " k=" + std::to_string(k) + " gave " + std::to_string(dim));
    }
  return finish(9, "subgroups", "dim rho^prim = k for each subgroup", "even k=2..20 give k", t);
}

CriterionResult criterion_frobenius() {
  Tally t;
  for (std::size_t k = 1; k <= 30; ++k) {
    const auto check = frobenius_dimension_check(static_cast<long>(k) + 1, k);
    t.check(check.dimensions == std::vector<std::size_t>{k},
            "k=" + std::to_string(k) + " gave {" + join(check.dimensions) + "}");
  }
  return finish(10, "frobenius", "the Frobenius exponent forces k' = k", "k=1..30 give {k}", t);
}

}  // namespace

std::map<std::string, ExponentList> reference_exponent_table() {
  std::map<std::string, ExponentList> table;
  for (unsigned n = 1; n <= 8; ++n) {
    ExponentList a, odd;
    for (unsigned i = 1; i <= n; ++i) {
      a.push_back(i);
      odd.push_back(2 * i - 1);
    }
    table[name_of(LieType::A, n)] = a;
    if (n >= 2) table[name_of(LieType::B, n)] = table[name_of(LieType::C, n)] = odd;
    if (n >= 3) {
      ExponentList d(odd.begin(), odd.end() - 1);
      d.push_back(n - 1);
      std::sort(d.begin(), d.end());
      table[name_of(LieType::D, n)] = d;
    }
  }
  table["E6"] = {1, 4, 5, 7, 8, 11};
  table["E7"] = {1, 5, 7, 9, 11, 13, 17};
  table["E8"] = {1, 7, 11, 13, 17, 19, 23, 29};
  table["F4"] = {1, 5, 7, 11};
  table["G2"] = {1, 5};
  return table;
}

std::vector<std::string> criterion_groups() { return {"classification", "sl2", "roots", "subgroups", "frobenius"}; }

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  const auto groups = criterion_groups();
  if (options.only && std::find(groups.begin(), groups.end(), *options.only) == groups.end())
    throw DomainError("unknown criterion group '" + *options.only + "'");
  const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria{
      {"classification", criterion_classification},
      {"classification", criterion_pipeline},
      {"sl2", criterion_decomposition},
      {"sl2", criterion_bracket_identity},
      {"roots", [&] { return criterion_exponents(options.exponent_table); }},
      {"roots", criterion_least_dimensions},
      {"sl2", criterion_form_parity},
      {"subgroups", criterion_subgroups},
      {"subgroups", criterion_rho_prim},
      {"frobenius", criterion_frobenius},
  };
  std::vector<CriterionResult> results;
  for (const auto& [group, run] : criteria)
    if (!options.only || *options.only == group) results.push_back(run());
  return results;
}

}  // namespace sl2kit
