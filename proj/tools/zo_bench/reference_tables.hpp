#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zo/types.hpp"

namespace zo::cli {

/// One reference error table: fixed (n, x, delta grid), a Stiefel row with
/// mean and spread over 10 runs, and a deterministic entry-wise row.
struct ReferenceTable {
  std::string_view name;
  bool hessian;
  Index n;
  std::string_view x;  // point preset
  std::array<double, 3> deltas;
  std::array<double, 3> stiefel_mean;
  std::array<double, 3> stiefel_std;
  std::array<double, 3> entrywise;
};

const std::vector<ReferenceTable>& reference_tables();
std::optional<ReferenceTable> find_reference_table(std::string_view name);
std::string reference_table_names();

/// a and b agree when both print the same with two significant figures.
bool same_two_sig_figs(double a, double b);

}  // namespace zo::cli
