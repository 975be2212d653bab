#pragma once

#include "simgrace/trainer.hpp"

#include <cstdint>
#include <vector>

namespace simgrace {

struct ATConfig {
  double epsilon = 0.01;  // L2 ball radius
  double zeta = 0.001;    // inner ascent rate
  int inner_iters = 3;
  double gamma = 0.01;    // outer SGD rate
  int epochs = 150;
  int batch_size = 128;
  double temperature = 0.5;
  std::uint64_t seed = 0;
  int probe_size = 256;
  double norm_momentum = 0.1;
  MetricConfig metric;
  bool record_time = false;

  void validate() const;
};

// Projected gradient ascent on a weight-space perturbation of the perturbable
// tensors. Starting from 0, each of the inner_iters steps adds zeta times the
// mean-loss gradient at theta + delta (the theta branch held constant), then
// rescales onto the epsilon ball when it leaves it. `step_norms`, if given,
// receives ||delta|| after every step.
WeightPerturbation inner_maximize(const GraphBatch& batch, const WeightSet& weights,
                                  const EncoderConfig& encoder, const ATConfig& config,
                                  std::vector<double>* step_norms = nullptr);

// Outer loop: theta <- theta - gamma * grad l(theta + delta, theta), plain SGD.
TrainResult at_pretrain(const Dataset& dataset, const EncoderConfig& encoder, const ATConfig& config,
                        const TrainHooks& hooks = {});

}  // namespace simgrace
