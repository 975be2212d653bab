#pragma once

#include "simgrace/encoder.hpp"

#include <filesystem>
#include <span>
#include <vector>

namespace simgrace {

struct MetricConfig {
  double alpha = 2.0;
  double t = 2.0;
  bool normalize_embeddings = true;

  void validate() const;
};

// Mean over rows of ||h_i - h'_i||^alpha.
double alignment_from_embeddings(const Matrix& h, const Matrix& h_prime, const MetricConfig& config);

// log of the mean over distinct unordered pairs of exp(-t ||h_i - h_j||^2).
double uniformity_from_embeddings(const Matrix& h, const MetricConfig& config);

// Both metrics use eval-mode encoder outputs h; nothing is mutated.
double alignment(std::span<const Graph> sample, const WeightSet& weights, const WeightSet& perturbed,
                 const EncoderConfig& config, const MetricConfig& metric);
double uniformity(std::span<const Graph> sample, const WeightSet& weights, const EncoderConfig& config,
                  const MetricConfig& metric);

struct SharpnessResult {
  double base_loss = 0.0;
  double max_increase = 0.0;
  std::vector<double> increases;  // one per direction
};

// Worst loss increase over random unit directions u (L2 norm over the
// concatenated perturbable tensors) at radius r:
//   max_u [ l(theta + r u, theta) - l(theta, theta) ]
// with l the train-mode contrastive loss on `batch`.
SharpnessResult sharpness_probe(const GraphBatch& batch, const WeightSet& weights,
                                const EncoderConfig& config, double temperature, double radius,
                                int directions, Rng& rng);

struct EpochRecord {
  int epoch = 0;
  double loss = 0.0;
  double alignment = 0.0;
  double uniformity = 0.0;
  double seconds = 0.0;

  bool operator==(const EpochRecord&) const = default;
};

struct TrainTrajectory {
  std::vector<EpochRecord> records;

  bool operator==(const TrainTrajectory&) const = default;
};

inline constexpr const char* kTrajectoryHeader = "epoch,loss,alignment,uniformity,seconds";

void write_trajectory_csv(const TrainTrajectory& trajectory, const std::filesystem::path& path);
TrainTrajectory read_trajectory_csv(const std::filesystem::path& path);

// Scatter of (uniformity, alignment) with epoch labels.
std::string trajectory_svg(const TrainTrajectory& trajectory);

struct ReportPaths {
  std::filesystem::path csv;
  std::filesystem::path svg;
};

// Writes `out` (CSV) and a sibling .svg plot.
ReportPaths trajectory_report(const TrainTrajectory& trajectory, const std::filesystem::path& out);

}  // namespace simgrace
