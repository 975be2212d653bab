#pragma once

#include "simgrace/encoder.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace simgrace {

enum class EmbeddingSource { encoder, projection };

EmbeddingSource parse_embedding_source(const std::string& text);

// Eval-mode embeddings for every graph in dataset order: h, or z = g(h).
EmbeddingMatrix embed_all(const Dataset& dataset, const WeightSet& weights, const EncoderConfig& config,
                          EmbeddingSource source = EmbeddingSource::encoder);

// Test folds for one repeat. Each class is shuffled separately and its members
// dealt round-robin across folds, continuing where the previous class
// stopped, so classes smaller than `folds` still land somewhere.
std::vector<std::vector<int>> stratified_folds(std::span<const int> labels, int folds, Rng& rng);

struct Standardizer {
  RowVector mean;
  RowVector scale;

  static Standardizer fit(const Matrix& x, std::span<const int> rows);
  Matrix apply(const Matrix& x, std::span<const int> rows) const;
};

// L2-regularised hinge-loss linear SVM trained by dual coordinate descent,
// one-vs-rest for more than two classes. A constant feature carries the bias.
class LinearSvm {
 public:
  struct Options {
    double c = 1.0;
    double tolerance = 1e-3;
    int max_iterations = 1000;
    std::uint64_t seed = 0;
  };

  void fit(const Matrix& x, std::span<const int> labels, int num_classes, const Options& options);
  std::vector<int> predict(const Matrix& x) const;

 private:
  Matrix weights_;  // (dim + 1) x num_classifiers
  int num_classes_ = 0;
};

struct FitRecord {
  int repeat = 0;
  int fold = 0;
  std::span<const int> rows;  // dataset rows entering standardisation/model fitting
};

struct EvalOptions {
  int folds = 10;
  int repeats = 5;
  std::uint64_t seed = 0;
  std::vector<double> c_grid{1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
  int inner_folds = 5;
  // Called once per outer fold with the rows used for fitting.
  std::function<void(const FitRecord&)> on_fit;
};

struct EvalReport {
  Matrix fold_accuracy;  // repeats x folds, percent
  std::vector<std::vector<double>> chosen_c;
  double mean = 0.0;     // mean of the per-repeat means, percent
  double std = 0.0;      // population std of the per-repeat means, percent

  std::vector<double> repeat_means() const;
};

EvalReport evaluate(const Matrix& embeddings, std::span<const int> labels, const EvalOptions& options);

std::string report_to_json(const EvalReport& report);

}  // namespace simgrace
