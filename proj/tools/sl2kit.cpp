#include "sl2kit/classifier.hpp"
#include "sl2kit/errors.hpp"
#include "sl2kit/modular.hpp"
#include "sl2kit/principal_sl2.hpp"
#include "sl2kit/root_system.hpp"
#include "sl2kit/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace sl2kit;

namespace {

template <typename Range>
std::string join(const Range& values, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

std::string weight_text(const DominantWeight& w) { return "(" + join(w) + ")"; }

json case_json(const ClassificationCase& c) {
  json weights = json::array();
  for (const auto& w : c.candidate.realizing_weights) weights.push_back(w);
  return {{"algebra", c.candidate.name()},
          {"label", to_string(c.label)},
          {"exponents", c.candidate.exponents},
          {"realizing_weights", weights}};
}

void print_cases(const char* title, const std::vector<ClassificationCase>& cases) {
  std::cout << title << ":\n";
  if (cases.empty()) std::cout << "  (none)\n";
  for (const auto& c : cases) {
    std::vector<std::string> weights;
    for (const auto& w : c.candidate.realizing_weights) weights.push_back(weight_text(w));
    std::cout << "  " << std::left << std::setw(5) << c.candidate.name() << std::setw(15) << to_string(c.label)
              << "exponents " << join(c.candidate.exponents) << "  weights " << join(weights, " ") << "\n";
  }
}

int cmd_classify(std::size_t k, const std::vector<long>& ht_weights, bool symplectic, bool as_json) {
  std::optional<HodgeTateData> ht;
  if (!ht_weights.empty()) ht = HodgeTateData{{ht_weights.begin(), ht_weights.end()}};
  const auto report = classification_report(k, ht, symplectic);
  if (as_json) {
    auto list = [](const std::vector<ClassificationCase>& cases) {
      json out = json::array();
      for (const auto& c : cases) out.push_back(case_json(c));
      return out;
    };
    json doc{{"k", report.k},
             {"raw_cases", list(report.raw_cases)},
             {"after_ht_filter", list(report.after_ht_filter)},
             {"after_form_filter", list(report.after_form_filter)},
             {"conclusion", report.conclusion ? json(*report.conclusion) : json(nullptr)}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "k = " << k << "\n";
  print_cases("cases", report.raw_cases);
  if (ht) print_cases("after Hodge-Tate filter", report.after_ht_filter);
  if (symplectic) print_cases("after form filter", report.after_form_filter);
  std::cout << "conclusion: " << report.conclusion.value_or("none") << "\n";
  return 0;
}

int cmd_sl2(std::size_t k, const std::string& action, bool as_json) {
  const auto triple = principal_triple(k);
  json doc{{"k", k}, {"action", action}};
  if (action == "decompose") {
    const auto d = decompose_adjoint(triple);
    std::vector<std::size_t> dims;
    for (const auto& b : d.blocks()) dims.push_back(b.dimension());
    const bool invertible = rank(d.change_of_basis()) == k * k - 1;
    doc["dimensions"] = dims;
    doc["total"] = k * k - 1;
    doc["change_of_basis_invertible"] = invertible;
    if (!as_json)
      std::cout << "U_r dimensions: " << join(dims) << " (total " << k * k - 1 << ")\n"
                << "change of basis invertible: " << (invertible ? "yes" : "no") << "\n";
  } else if (action == "identities") {
    json rows = json::array();
    bool all = true;
    for (unsigned r = 1; r < k; ++r)
      for (unsigned s = 1; r + s <= k; ++s) {
        const bool ok = verify_bracket_identity(triple, r, s);
        all = all && ok;
        rows.push_back({{"r", r}, {"s", s}, {"holds", ok}});
        if (!as_json)
          std::cout << "[x^" << r << ", [y, x^" << s << "]] = " << 2 * r * s << " x^" << r + s - 1 << "  "
                    << (ok ? "ok" : "FAIL") << "\n";
      }
    doc["identities"] = rows;
    doc["all_hold"] = all;
    if (!as_json) std::cout << (all ? "all identities hold" : "some identities fail") << "\n";
  } else {
    const auto form = invariant_bilinear_form(triple);
    const bool alternating = form.form.transpose() == -form.form;
    const char* parity = form.symmetric ? "symmetric" : alternating ? "alternating" : "neither";
    doc["parity"] = parity;
    doc["form"] = form.form.to_string();
    if (!as_json) std::cout << "invariant form (" << parity << "):\n" << form.form.to_string() << "\n";
  }
  if (as_json) std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_rootsys(const std::string& name, std::optional<std::size_t> dim, const std::vector<unsigned>& weight,
                bool as_json) {
  if (name.size() < 2) throw DomainError("expected a type such as A3 or G2, got '" + name + "'");
  unsigned rank = 0;
  try {
    rank = static_cast<unsigned>(std::stoul(name.substr(1)));
  } catch (const std::exception&) {
    throw DomainError("bad rank in '" + name + "'");
  }
  const RootSystem& rs = root_system(parse_lie_type(name.front()), rank);
  std::vector<std::string> least;
  for (const auto& d : least_dimensions(rs, 2)) least.push_back(d.get_str());
  json doc{{"type", rs.name()},
           {"rank", rs.rank},
           {"positive_roots", rs.positive_roots.size()},
           {"dimension", algebra_dimension(rs)},
           {"exponents", exponents(rs)},
           {"least_dimensions", least}};
  if (!rs.note.empty()) doc["note"] = rs.note;
  if (dim) {
    json weights = json::array();
    for (const auto& w : irreps_of_dimension(rs, Integer(static_cast<unsigned long>(*dim)))) weights.push_back(w);
    doc["irreps_of_dimension"] = {{"k", *dim}, {"weights", weights}};
  }
  if (!weight.empty()) doc["weyl_dimension"] = {{"weight", weight}, {"dimension", weyl_dimension(rs, weight).get_str()}};
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << rs.name() << (rs.note.empty() ? "" : " (" + rs.note + ")") << "\n"
            << "rank: " << rs.rank << "\n"
            << "positive roots: " << rs.positive_roots.size() << "\n"
            << "dimension: " << algebra_dimension(rs) << "\n"
            << "exponents: " << join(exponents(rs)) << "\n"
            << "least representation dimensions: " << join(least) << "\n";
  if (dim) {
    std::vector<std::string> weights;
    for (const auto& w : doc["irreps_of_dimension"]["weights"]) weights.push_back(weight_text(w.get<DominantWeight>()));
    std::cout << "irreps of dimension " << *dim << ": " << (weights.empty() ? "none" : join(weights, " ")) << "\n";
  }
  if (!weight.empty())
    std::cout << "Weyl dimension of " << weight_text(weight) << ": " << weyl_dimension(rs, weight).get_str() << "\n";
  return 0;
}

int cmd_subgroup(const std::string& input, bool dims, long kmax, bool as_json) {
  const auto names = preset_names();
  const bool builtin = std::find(names.begin(), names.end(), input) != names.end();
  const GeneratorSet g = builtin ? preset(input) : load_generator_set(input);
  const auto inv = invariants(coset_enumerate(g));
  json doc{{"name", g.name},         {"index", inv.index}, {"cusp_widths", inv.cusp_widths},
           {"nu2", inv.nu2},         {"nu3", inv.nu3},     {"genus", inv.genus},
           {"level", inv.level},     {"congruence", inv.congruence}};
  if (!as_json)
    std::cout << "name: " << g.name << "\n"
              << "index: " << inv.index << "\n"
              << "cusp widths: " << join(inv.cusp_widths) << "\n"
              << "nu2: " << inv.nu2 << "\n"
              << "nu3: " << inv.nu3 << "\n"
              << "genus: " << inv.genus << "\n"
              << "level: " << inv.level << "\n"
              << "congruence: " << (inv.congruence ? "yes" : "no") << "\n";
  if (dims) {
    const auto full = invariants(coset_enumerate(full_modular_group()));
    const bool closure_known = is_preset(g);
    json rows = json::array();
    if (!as_json) {
      std::cout << "\n" << std::right << std::setw(4) << "k" << std::setw(14) << "dim S(G)" << std::setw(14)
                << "dim S(SL2Z)" << std::setw(14) << "dim rho_prim" << "\n";
    }
    for (long k = 2; k <= kmax; k += 2) {
      const long own = dim_cusp_forms(inv, k + 2);
      const long base = dim_cusp_forms(full, k + 2);
      json row{{"k", k}, {"dim_cusp_forms", own}, {"dim_cusp_forms_full", base}};
      if (closure_known) row["dim_rho_prim"] = dim_rho_prim(g, k);
      if (!as_json) {
        std::cout << std::setw(4) << k << std::setw(14) << own << std::setw(14) << base << std::setw(14)
                  << (closure_known ? std::to_string(row["dim_rho_prim"].get<long>()) : std::string("?")) << "\n";
      }
      rows.push_back(row);
    }
    doc["dimensions"] = rows;
    if (!closure_known && !as_json)
      std::cout << "dim rho_prim needs the congruence closure, known only for the built-in groups\n";
  }
  if (as_json) std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::optional<std::string>& only, bool as_json) {
  VerifyOptions options;
  options.only = only;
  const auto results = run_acceptance(options);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    rows.push_back({{"id", r.id},
                    {"group", r.group},
                    {"claim", r.claim},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"pass", r.pass}});
  }
  if (as_json) {
    std::cout << json{{"criteria", rows}, {"all_pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << std::right << std::setw(2) << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.claim
                << "\n      expected: " << r.expected << "\n      computed: " << r.computed << "\n";
    std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with principal sl2, root systems and subgroups of the modular group"};
  app.require_subcommand(1, 1);

  std::size_t k = 0;
  std::vector<long> ht_weights;
  bool symplectic = false;
  bool as_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Simple algebras with an irreducible k-dimensional principal sl2");
  classify_cmd->add_option("--k", k, "Dimension k")->required()->check(CLI::Range(std::size_t{2}, std::size_t{200}));
  classify_cmd->add_option("--ht-weights", ht_weights, "Hodge-Tate weights, comma separated")->delimiter(',');
  classify_cmd->add_flag("--symplectic", symplectic, "Apply the alternating-form filter (k even)");
  classify_cmd->add_flag("--json", as_json, "Structured output");

  std::string action;
  auto* sl2_cmd = app.add_subcommand("sl2", "Principal sl2 in gl_k");
  sl2_cmd->add_option("--k", k, "Dimension k")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  sl2_cmd->add_option("action", action, "decompose, identities or form")
      ->required()
      ->check(CLI::IsMember({"decompose", "identities", "form"}));
  sl2_cmd->add_flag("--json", as_json, "Structured output");

  std::string type_name;
  std::optional<std::size_t> irrep_dim;
  std::vector<unsigned> weight;
  auto* root_cmd = app.add_subcommand("rootsys", "Root system data: exponents, dimensions, Weyl dimension");
  root_cmd->add_option("type", type_name, "Type and rank, e.g. E8")->required();
  root_cmd->add_option("--dims", irrep_dim, "List irreducible representations of this dimension")
      ->check(CLI::PositiveNumber);
  root_cmd->add_option("--weyl-dim", weight, "Weyl dimension of a dominant weight, comma separated")->delimiter(',');
  root_cmd->add_flag("--json", as_json, "Structured output");

  std::string input;
  bool dims = false;
  long kmax = 20;
  auto* sub_cmd = app.add_subcommand("subgroup", "Invariants of a finite-index subgroup of PSL2(Z)");
  sub_cmd->add_option("input", input, "Built-in name (gamma43, gamma52, gamma711) or a JSON file")->required();
  sub_cmd->add_flag("--dims", dims, "Tabulate cusp form dimensions");
  sub_cmd->add_option("--kmax", kmax, "Largest k for --dims")->check(CLI::Range(2L, 10000L));
  sub_cmd->add_flag("--json", as_json, "Structured output");

  std::optional<std::string> only;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every acceptance criterion");
  verify_cmd->add_option("--only", only, "Run a single group")->check(CLI::IsMember(criterion_groups()));
  verify_cmd->add_flag("--json", as_json, "Structured output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return cmd_classify(k, ht_weights, symplectic, as_json);
    if (sl2_cmd->parsed()) return cmd_sl2(k, action, as_json);
    if (root_cmd->parsed()) return cmd_rootsys(type_name, irrep_dim, weight, as_json);
    if (sub_cmd->parsed()) return cmd_subgroup(input, dims, kmax, as_json);
    if (verify_cmd->parsed()) return cmd_verify(only, as_json);
  } catch (const IndexBoundExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise SL2KIT_COSET_CAP to allow more cosets)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
