#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfym/finite_group.hpp"
#include "tfym/gauge.hpp"
#include "tfym/invariant_forms.hpp"
#include "tfym/reduction.hpp"

namespace tfym {

struct RandomSettings {
  std::uint64_t seed = 1;
  int degree_cap = 3;
  int terms = 3;
  int coefficient_bound = 3;

  RandomFormSpec spec() const { return {degree_cap, terms, coefficient_bound}; }
};

// One instance document. Rationals are "p/q" strings, tensors are lists of
// [i, j, k, "c"] entries, maps are dense row lists.
struct InstanceConfig {
  std::string name;
  DifferentialTwoCrossedModule module;
  AxiomSelection axioms;

  // Explicit Grams, else projected seeds (identity when absent).
  std::optional<std::array<Matrix, 3>> grams;
  std::optional<std::array<Matrix, 3>> gram_seeds;
  std::optional<InvariantFormTriple> triple;
  std::string triple_error;  // set when the projection failed

  int ambient_dim = 4;
  RandomSettings random;
  std::optional<ReductionArrow> reduction;
  std::vector<FiniteTwoCrossedModule> finite;
};

// Parse errors are ConfigError with a field path, e.g. "algebras.g.dim: missing".
InstanceConfig parse_config(const std::string& json_text);
InstanceConfig load_config(const std::string& path);

// Inverse of parse_config up to formatting.
std::string export_config(const InstanceConfig& cfg);

// Builds the triple from grams / gram_seeds (identity seeds when neither is set).
void attach_triple(InstanceConfig& cfg);

std::string read_text_file(const std::string& path);

}  // namespace tfym
