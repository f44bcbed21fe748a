#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ifdist/model.hpp"
#include "ifdist/moments.hpp"
#include "ifdist/oracle.hpp"

namespace ifdist::registry {

/// Named special cases of the family with their tabulated mean, entropy and
/// maximum-entropy constraints. The table expressions are transcribed as
/// standalone formulas; they deliberately do not call the moment or entropy
/// modules, so comparing the two is a real cross-check.

using FreeParams = std::map<std::string, double, std::less<>>;

struct FreeParam {
  std::string symbol;
  std::string domain;  // human-readable, e.g. "> 0"
  std::function<bool(double)> admits;
};

struct TableConstraint {
  std::string description;
  double expected;
  oracle::PointFunctional functional;
};

struct NamedCase {
  std::string name;   // identifier used in specs, e.g. "pareto1"
  std::string title;  // e.g. "Pareto I"
  std::vector<FreeParam> free_params;
  std::string mapping_text;     // (p, b, c, q, x0) in terms of free params
  std::string mean_text;
  std::string mean_condition_text;  // empty when the mean always exists
  std::string entropy_text;

  std::function<IFParams(const FreeParams&)> mapping;
  std::function<bool(const FreeParams&)> mean_exists;
  std::function<double(const FreeParams&)> mean;
  std::function<double(const FreeParams&)> entropy;
  std::function<std::vector<TableConstraint>(const FreeParams&)> constraints;
};

/// All sixteen entries, in table order.
const std::vector<NamedCase>& catalog();

/// Throws UnknownCase.
const NamedCase& find(std::string_view name);

std::vector<std::string> list_cases();

/// Checks that exactly the declared free parameters are present and within
/// their domains (InvalidParam otherwise), then applies the mapping.
IFParams resolve(std::string_view name, const FreeParams& free);

/// Tabulated mean, or Divergent where the table's condition fails.
MomentResult table_mean(std::string_view name, const FreeParams& free);

double table_entropy(std::string_view name, const FreeParams& free);

std::vector<TableConstraint> table_constraints(std::string_view name,
                                               const FreeParams& free);

}  // namespace ifdist::registry
