#pragma once

#include "simgrace/diagnostics.hpp"
#include "simgrace/encoder.hpp"
#include "simgrace/optimizer.hpp"
#include "simgrace/perturbation.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

namespace simgrace {

// Independent generator streams derived from one run seed.
enum class Stream : std::uint64_t { init = 1, batches = 2, perturbation = 3, probe = 4, probe_noise = 5 };

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
Rng make_rng(std::uint64_t seed, Stream stream);

struct TrainConfig {
  int epochs = 20;
  int batch_size = 128;
  double learning_rate = 0.01;
  // perturbation.seed drives the theta' noise stream.
  PerturbationConfig perturbation;
  LossConfig loss;
  // Drives initialisation, batch order and the diagnostics probe.
  std::uint64_t seed = 0;
  OptimizerKind optimizer = OptimizerKind::adam;
  int probe_size = 256;
  double norm_momentum = 0.1;
  MetricConfig metric;
  // Wall-clock seconds land in the trajectory only when set; otherwise the
  // column is 0 so trajectories stay byte-reproducible.
  bool record_time = false;

  void validate() const;
};

struct StepEvent {
  int epoch = 0;  // 1-based
  int batch = 0;  // 0-based within the epoch
  double loss = 0.0;
  const GraphBatch* graphs = nullptr;
  const WeightSet* weights = nullptr;       // theta before the update
  const WeightSet* view_weights = nullptr;  // constant branch (theta' or theta)
  const WeightSet* anchor_weights = nullptr;  // differentiated branch
  const Gradient* gradient = nullptr;
  const WeightPerturbation* delta = nullptr;  // adversarial runs only
  std::vector<double> inner_norms;            // ||delta|| after each inner step
};

struct TrainHooks {
  std::function<void(const StepEvent&)> on_step;
};

struct TrainResult {
  WeightSet weights;
  TrainTrajectory trajectory;
  std::vector<double> batch_losses;
};

// SimGRACE: per batch theta' = theta + eta * noise, z = g(f(G; theta)),
// z' = g(f(G; theta')), gradient of NT-Xent w.r.t. theta only.
TrainResult pretrain(const Dataset& dataset, const EncoderConfig& encoder, const TrainConfig& config,
                     const TrainHooks& hooks = {});

namespace detail {

// Fixed probe subset: min(probe_size, dataset size) graphs chosen once.
std::vector<Graph> choose_probe(const Dataset& dataset, int probe_size, std::uint64_t seed);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

}  // namespace simgrace
