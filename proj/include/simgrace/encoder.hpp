#pragma once

#include "simgrace/graph.hpp"
#include "simgrace/loss.hpp"
#include "simgrace/tensor_set.hpp"

#include <span>
#include <string>
#include <vector>

namespace simgrace {

struct EncoderConfig {
  int num_layers = 3;
  int hidden_dim = 32;
  int feature_dim = 1;
  bool use_normalization = true;

  void validate() const;
  bool operator==(const EncoderConfig&) const = default;
};

enum class Mode { train, eval };

// Graph-level (or projected) embeddings, one row per batch slot.
using EmbeddingMatrix = Matrix;

inline constexpr double kNormEpsilon = 1e-5;

namespace names {
std::string layer(int k);  // "gin.<k>"
std::string eps(int k);
std::string lin1_weight(int k);
std::string lin1_bias(int k);
std::string lin2_weight(int k);
std::string lin2_bias(int k);
std::string norm_scale(int k);
std::string norm_shift(int k);
std::string running_mean(int k);
std::string running_var(int k);
inline constexpr const char* head_lin1_weight = "head.lin1.weight";
inline constexpr const char* head_lin1_bias = "head.lin1.bias";
inline constexpr const char* head_lin2_weight = "head.lin2.weight";
inline constexpr const char* head_lin2_bias = "head.lin2.bias";
}  // namespace names

// All-zero WeightSet with the exact names, roles and shapes for `config`.
WeightSet weight_layout(const EncoderConfig& config);

// Affine weights ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in)); biases, GIN eps and
// normalization shift 0; normalization scale and running variance 1.
WeightSet init_weights(const EncoderConfig& config, Rng& rng);

// Throws ShapeError unless `weights` matches weight_layout(config).
void check_weights(const WeightSet& weights, const EncoderConfig& config);

struct LayerTrace {
  Matrix input;       // node states entering the layer
  Matrix aggregated;  // (1+eps) x + A x
  Matrix normalized;  // x_hat (equals pre-activation when normalization is off)
  Matrix activated_in;  // pre-ReLU
  Matrix hidden;      // post-ReLU
  RowVector inv_std;
  RowVector batch_mean;
  RowVector batch_var;  // biased variance over nodes
};

struct EncoderTrace {
  Mode mode = Mode::train;
  std::vector<LayerTrace> layers;
  SparseMatrix adjacency;
  SparseMatrix readout;
  Matrix node_states;  // output of the last layer
  EmbeddingMatrix embeddings;
  int total_nodes = 0;
};

EncoderTrace encode_traced(const GraphBatch& batch, const WeightSet& weights,
                           const EncoderConfig& config, Mode mode);

// Sum-readout GIN embeddings h (graph_count x hidden_dim).
EmbeddingMatrix encode(const GraphBatch& batch, const WeightSet& weights, const EncoderConfig& config,
                       Mode mode);

// Accumulates d(loss)/d(weights) into `grads` given d(loss)/d(embeddings).
void encoder_backward(const EncoderTrace& trace, const WeightSet& weights, const EncoderConfig& config,
                      const Matrix& d_embeddings, Gradient& grads);

struct HeadTrace {
  Matrix input;
  Matrix pre_activation;
  Matrix hidden;
  EmbeddingMatrix output;
};

HeadTrace project_traced(const EmbeddingMatrix& h, const WeightSet& weights);

// Shared two-layer projection head: z = relu(h W1 + b1) W2 + b2.
EmbeddingMatrix project(const EmbeddingMatrix& h, const WeightSet& weights);

// Returns d(loss)/d(h) and accumulates head gradients into `grads`.
Matrix head_backward(const HeadTrace& trace, const WeightSet& weights, const Matrix& d_output,
                     Gradient& grads);

// Exponential moving update of running statistics from a train-mode trace,
// momentum-weighted like common deep learning frameworks (unbiased variance).
void update_running_stats(WeightSet& weights, const EncoderTrace& trace, const EncoderConfig& config,
                          double momentum);

enum class GradientTarget { anchor, view };

// Everything a contrastive optimisation step needs from one forward/backward.
struct ContrastiveEvaluation {
  NtXentResult loss;
  Gradient gradient;        // w.r.t. the selected weight set
  EncoderTrace anchor_trace;
  EncoderTrace view_trace;
};

// z = g(f(batch; anchor)), z' = g(f(batch; view)), both in train mode, loss
// nt_xent(z, z'). The other weight set is held constant. `loss_weights`
// weights the per-graph losses (empty: the mean).
ContrastiveEvaluation evaluate_contrastive(const GraphBatch& batch, const WeightSet& anchor_weights,
                                           const WeightSet& view_weights, const EncoderConfig& config,
                                           double temperature, GradientTarget wrt,
                                           std::span<const double> loss_weights = {});

Gradient loss_gradient(const GraphBatch& batch, const WeightSet& anchor_weights,
                       const WeightSet& view_weights, const EncoderConfig& config, double temperature,
                       GradientTarget wrt);

double contrastive_loss(const GraphBatch& batch, const WeightSet& anchor_weights,
                        const WeightSet& view_weights, const EncoderConfig& config, double temperature);

}  // namespace simgrace
