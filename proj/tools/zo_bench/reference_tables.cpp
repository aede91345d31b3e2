#include "zo_bench/reference_tables.hpp"

#include <cstdio>

namespace zo::cli {

const std::vector<ReferenceTable>& reference_tables() {
  // Gradient errors are Euclidean, Hessian errors spectral; Stiefel runs use k = n.
  static const std::vector<ReferenceTable> tables = {
      {"t1", false, 500, "zero", {0.1, 0.01, 0.001},
       {2.8e-4, 2.8e-6, 2.9e-8}, {4.0e-6, 1.0e-7, 6.4e-10},
       {3.8e-2, 3.7e-4, 3.7e-6}},
      {"t-entry", false, 500, "pi4", {0.1, 0.01, 0.001},
       {2.4e-4, 2.5e-6, 2.5e-8}, {1.0e-5, 1.5e-7, 6.8e-10},
       {3.2e-2, 3.2e-4, 3.2e-6}},
      {"t-hess1", true, 100, "pi2", {0.1, 0.01, 0.001},
       {0.17, 1.7e-3, 1.6e-5}, {0.024, 0.16e-4, 1.6e-6},
       {4.4, 4.3e-2, 4.3e-4}},
      {"t-hess2", true, 100, "pi4", {0.1, 0.01, 0.001},
       {4.1e-3, 3.8e-5, 3.8e-7}, {5.3e-4, 4.63e-6, 3.7e-8},
       {0.12, 1.2e-3, 1.2e-5}},
  };
  return tables;
}

std::optional<ReferenceTable> find_reference_table(std::string_view name) {
  for (const auto& t : reference_tables())
    if (t.name == name) return t;
  return std::nullopt;
}

std::string reference_table_names() {
  std::string out;
  for (const auto& t : reference_tables()) {
    if (!out.empty()) out += ", ";
    out += t.name;
  }
  return out;
}

bool same_two_sig_figs(double a, double b) {
  char sa[32], sb[32];
  std::snprintf(sa, sizeof sa, "%.1e", a);
  std::snprintf(sb, sizeof sb, "%.1e", b);
  return std::string(sa) == sb;
}

}  // namespace zo::cli
