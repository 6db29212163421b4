#pragma once

#include "sl2kit/root_system.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sl2kit {

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Exponents as listed in the standard tables, keyed by name ("A1", ..., "G2"):
/// A_n, B_n, C_n for n <= 8, D_n for 3 <= n <= 8, E6, E7, E8, F4, G2.
std::map<std::string, ExponentList> reference_exponent_table();

struct VerifyOptions {
  std::optional<std::string> only;  // one of criterion_groups()
  std::map<std::string, ExponentList> exponent_table = reference_exponent_table();
};

/// "classification", "sl2", "roots", "subgroups", "frobenius".
std::vector<std::string> criterion_groups();

/// Runs criteria 1-10 (or one group) in order of id.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

}  // namespace sl2kit
