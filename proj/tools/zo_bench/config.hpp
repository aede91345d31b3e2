#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zo/objective.hpp"
#include "zo/types.hpp"

namespace zo::cli {

/// Everything a subcommand needs, after flags and the config file are merged.
struct ExperimentConfig {
  std::string subcommand;
  std::string function = "exp-sine";
  std::string params;             // parameter file for linear / quadratic / constant
  std::optional<Index> n;
  std::string k;                  // single value, or a comma list for sweep-k
  double delta = 0.01;
  std::string x = "zero";
  std::uint64_t trials = 10;
  std::uint64_t seed = 1;
  std::string estimator = "stiefel";
  std::string out;
  double eta = 0.01;
  std::uint64_t steps = 100;
  std::string table_name;
  std::optional<double> sparsity;
  int p = 4;                      // moments: even power
  std::uint64_t draws = 1000000;  // moments: sample count
  std::optional<double> lipschitz;
};

/// Reads whitespace- or comma-separated numbers, one matrix row per line.
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<double>> read_rows(const std::string& path);

/// Builds the named objective: exp-sine, linear, quadratic, constant.
Objective make_objective(const ExperimentConfig& config);

/// zero, pi4, pi2, or a file holding n numbers.
Vector resolve_point(const std::string& spec, Index n);

/// Parses "5" or "1,2,5" into positive integers.
std::vector<Index> parse_index_list(const std::string& text);

/// 1, 2, 5, 10, 20, 50, ... below n, then n itself.
std::vector<Index> default_k_grid(Index n);

}  // namespace zo::cli
