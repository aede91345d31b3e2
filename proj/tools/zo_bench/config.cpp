#include "zo_bench/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace zo::cli {

std::vector<std::vector<double>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream fields(line);
    std::string token;
    std::vector<double> row;
    while (fields >> token) {
      if (row.empty() && token[0] == '#') break;
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(value))
        throw ParameterError(path + ":" + std::to_string(line_no) + ": bad number '" + token +
                             "'");
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Vector flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> all;
  for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
  return Eigen::Map<const Vector>(all.data(), static_cast<Index>(all.size()));
}

void check_n(const ExperimentConfig& config, Index actual) {
  if (config.n && *config.n != actual)
    throw ParameterError("--n " + std::to_string(*config.n) + " does not match the " +
                         std::to_string(actual) + "-dimensional parameter file");
}

}  // namespace

Objective make_objective(const ExperimentConfig& config) {
  const std::string& name = config.function;
  if (name == "exp-sine") {
    if (!config.n) throw ParameterError("--n is required for the exp-sine function");
    return make_exp_sine_function(*config.n);
  }
  if (name == "linear") {
    if (config.params.empty()) throw ParameterError("linear needs --params with c");
    const Vector c = flatten(read_rows(config.params));
    if (c.size() == 0) throw ParameterError("linear: empty parameter file");
    check_n(config, c.size());
    return make_linear(c);
  }
  if (name == "quadratic") {
    if (config.params.empty()) throw ParameterError("quadratic needs --params with A (and b)");
    const auto rows = read_rows(config.params);
    const auto n = static_cast<Index>(rows.empty() ? 0 : rows.front().size());
    if (n == 0 || (rows.size() != static_cast<std::size_t>(n) &&
                   rows.size() != static_cast<std::size_t>(n) + 1))
      throw ParameterError("quadratic: expected n rows of A and an optional row b");
    Matrix a(n, n);
    Vector b = Vector::Zero(n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != static_cast<std::size_t>(n))
        throw ParameterError("quadratic: row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(n));
      for (Index j = 0; j < n; ++j) {
        if (static_cast<Index>(i) < n) a(static_cast<Index>(i), j) = rows[i][j];
        else b[j] = rows[i][j];
      }
    }
    check_n(config, n);
    return make_quadratic(a, b);
  }
  if (name == "constant") {
    if (!config.n) throw ParameterError("--n is required for the constant function");
    double value = 0.0;
    if (!config.params.empty()) {
      const Vector v = flatten(read_rows(config.params));
      if (v.size() != 1) throw ParameterError("constant: parameter file must hold one number");
      value = v[0];
    }
    return make_constant(*config.n, value);
  }
  throw ParameterError("unknown function '" + name +
                       "' (expected exp-sine, linear, quadratic or constant)");
}

Vector resolve_point(const std::string& spec, Index n) {
  if (spec == "zero") return Vector::Zero(n);
  if (spec == "pi4") return Vector::Constant(n, M_PI / 4);
  if (spec == "pi2") return Vector::Constant(n, M_PI / 2);
  const Vector x = flatten(read_rows(spec));
  if (x.size() != n)
    throw ParameterError("point file '" + spec + "' has " + std::to_string(x.size()) +
                         " entries, expected " + std::to_string(n));
  return x;
}

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value < 1)
      throw ParameterError("bad k value '" + item + "' (expected a positive integer)");
    out.push_back(static_cast<Index>(value));
  }
  if (out.empty()) throw ParameterError("empty k list");
  return out;
}

std::vector<Index> default_k_grid(Index n) {
  std::vector<Index> grid;
  for (Index decade = 1; decade < n; decade *= 10)
    for (Index m : {1, 2, 5})
      if (m * decade < n) grid.push_back(m * decade);
  grid.push_back(n);
  return grid;
}

}  // namespace zo::cli
