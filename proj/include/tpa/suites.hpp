#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tpa/serialize.hpp"

namespace tpa {

struct SuiteItem {
  std::string label;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds; exceeding it fails the item
  Json report;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteItem> items;
  bool pass() const;
  double seconds() const;
  Json json() const;
};

struct SuiteOptions {
  bool slow = false;        // adds the expensive instances
  std::uint64_t seed = 1;   // random composable pairs
};

using SuiteRunner = std::function<SuiteResult(const SuiteOptions&)>;

struct SuiteInfo {
  std::string name;
  std::string summary;
  SuiteRunner run;
};

/// In acceptance order.
const std::vector<SuiteInfo>& suites();
/// Throws InputError for an unknown name.
const SuiteInfo& find_suite(const std::string& name);

/// Path algebra of a Dynkin type with the default orientation.
FDAlgebra dynkin_path_algebra(const std::string& type);
/// Fixed reference presentations used by the golden suite.
AlgebraPresentation reference_d4_total();
AlgebraPresentation reference_eight_vertex_algebra();
AlgebraPresentation reference_eight_vertex_total();

}  // namespace tpa
