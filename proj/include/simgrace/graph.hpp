#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace simgrace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Rng = std::mt19937_64;

// Unordered edge, stored with first < second.
using Edge = std::pair<int, int>;

struct Graph {
  int node_count = 0;
  std::vector<Edge> edges;
  Matrix node_features;  // node_count x feature_dim
  int label = 0;
  // Raw TUDataset node labels; empty when the dataset ships none.
  std::vector<int> node_labels;

  bool operator==(const Graph& other) const;
};

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  int num_classes = 0;
  int feature_dim = 0;
  // Original graph-label value for each contiguous class id.
  std::vector<int> class_values;
  bool has_node_labels = false;
  // Self-loop rows dropped during ingestion.
  std::size_t dropped_self_loops = 0;

  std::size_t size() const { return graphs.size(); }
  std::vector<int> labels() const;
  double mean_node_count() const;

  // Equality of content; ingestion bookkeeping (dropped_self_loops) ignored.
  bool operator==(const Dataset& other) const;
};

// Disjoint union of graphs. Node indices of slot i occupy a contiguous block
// [offsets[i], offsets[i+1]).
struct GraphBatch {
  int total_nodes = 0;
  int graph_count = 0;
  std::vector<Edge> edges;
  Matrix node_features;
  std::vector<int> indicator;
  std::vector<int> offsets;
  std::vector<int> labels;
  std::vector<std::size_t> source_ids;  // index of each slot in its Dataset
  std::vector<int> node_labels;         // empty unless every member has them

  int feature_dim() const { return static_cast<int>(node_features.cols()); }

  // Symmetric adjacency (both directions of every edge).
  SparseMatrix adjacency() const;
  // graph_count x total_nodes sum-readout operator.
  SparseMatrix readout() const;
};

enum class FeatureScheme { node_label_onehot, degree_onehot, constant };

struct FeatureOptions {
  FeatureScheme scheme = FeatureScheme::node_label_onehot;
  int degree_cap = 64;
};

// Reads `<name>_A.txt`, `<name>_graph_indicator.txt`, `<name>_graph_labels.txt`
// and, when present, `<name>_node_labels.txt` from `directory`. The returned
// graphs carry a single constant feature column until featurize() is called.
Dataset parse_tudataset(const std::filesystem::path& directory, const std::string& name);

// Writes the TUDataset layout (both edge directions per undirected edge).
void write_tudataset(const Dataset& dataset, const std::filesystem::path& directory);

Dataset featurize(const Dataset& dataset, const FeatureOptions& options);

// Distinct raw node-label values across the dataset, ascending.
std::vector<int> distinct_node_labels(const Dataset& dataset);

GraphBatch assemble_batch(const Dataset& dataset, std::span<const std::size_t> ids);
GraphBatch assemble_batch(std::span<const Graph> graphs);

// Reconstructs the member graph in `slot`.
Graph slice_batch(const GraphBatch& batch, int slot);

// Shuffled minibatches covering the dataset exactly once. A trailing batch of
// one graph borrows a graph from its predecessor, or is merged into it when the
// predecessor would drop below two.
std::vector<GraphBatch> make_batches(const Dataset& dataset, int batch_size, Rng& rng);
std::vector<std::vector<std::size_t>> batch_partition(std::size_t dataset_size, int batch_size,
                                                      Rng& rng);

}  // namespace simgrace
