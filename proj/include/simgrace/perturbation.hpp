#pragma once

#include "simgrace/tensor_set.hpp"

#include <cstdint>
#include <string>

namespace simgrace {

struct SigmaRule {
  enum class Kind { per_tensor_std, fixed };
  Kind kind = Kind::per_tensor_std;
  double value = 0.0;  // used by Kind::fixed

  static SigmaRule per_tensor_std() { return {}; }
  static SigmaRule fixed(double sigma) { return {Kind::fixed, sigma}; }

  // "per-tensor-std" or "fixed:<v>"
  static SigmaRule parse(const std::string& text);
  std::string to_string() const;
};

struct PerturbationConfig {
  double eta = 1.0;
  SigmaRule sigma_rule;
  std::uint64_t seed = 0;

  void validate() const;
};

// Sample standard deviation (n - 1 denominator) of the entries; 0 for a
// single entry.
double tensor_std(const Matrix& m);

// Gaussian noise delta_l ~ N(0, sigma_l^2) for every perturbable tensor, not
// yet scaled by eta.
WeightPerturbation sample_noise(const WeightSet& weights, const SigmaRule& rule, Rng& rng);

// theta' = theta + eta * delta. Head tensors, GIN eps and running statistics
// are copied unchanged.
WeightSet sample_perturbed(const WeightSet& weights, const PerturbationConfig& config, Rng& rng);

}  // namespace simgrace
