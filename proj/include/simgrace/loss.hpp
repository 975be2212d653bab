#pragma once

#include "simgrace/graph.hpp"

#include <span>
#include <vector>

namespace simgrace {

struct LossConfig {
  double temperature = 0.5;
};

double cosine_sim(std::span<const double> a, std::span<const double> b);
double cosine_sim(const RowVector& a, const RowVector& b);

struct NtXentResult {
  double mean = 0.0;
  Vector per_graph;  // l_n for each row
};

// NT-Xent anchored on z. For row n the positive is z'_n and the negatives are
// the other rows of z'; the positive is not part of the denominator:
//   l_n = -sim(z_n, z'_n)/tau + log sum_{m != n} exp(sim(z_n, z'_m)/tau)
NtXentResult nt_xent(const Matrix& z, const Matrix& z_prime, const LossConfig& config);

struct NtXentGradient {
  NtXentResult loss;
  Matrix d_z;
  Matrix d_z_prime;
};

// Gradient of sum_n weights[n] * l_n. An empty `weights` means 1/N for every
// row, i.e. the gradient of the mean loss.
NtXentGradient nt_xent_backward(const Matrix& z, const Matrix& z_prime, const LossConfig& config,
                                std::span<const double> weights = {});

}  // namespace simgrace
