#pragma once

#include "simgrace/graph.hpp"

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace simgrace {

enum class TensorRole {
  encoder_weight,
  encoder_bias,
  norm_scale,
  norm_shift,
  running_stat,
  gin_eps,
  head_weight,
  head_bias,
};

// Encoder affine weights/biases and normalization scale/shift. The shared
// projection head, GIN self-weights and running statistics stay fixed.
constexpr bool is_perturbable(TensorRole role) {
  return role == TensorRole::encoder_weight || role == TensorRole::encoder_bias ||
         role == TensorRole::norm_scale || role == TensorRole::norm_shift;
}

constexpr bool is_trainable(TensorRole role) { return role != TensorRole::running_stat; }

const char* to_string(TensorRole role);

// Ordered collection of named 2-D tensors. Vectors are stored as 1 x n rows,
// scalars as 1 x 1.
class TensorSet {
 public:
  struct Entry {
    std::string name;
    TensorRole role;
    Matrix value;
  };

  void add(std::string name, TensorRole role, Matrix value);

  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const Entry* find(const std::string& name) const;
  Matrix& at(const std::string& name);
  const Matrix& at(const std::string& name) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Same names, roles and shapes in the same order.
  bool same_layout(const TensorSet& other) const;
  TensorSet zeros_like() const;
  TensorSet filtered(const std::function<bool(const Entry&)>& keep) const;
  TensorSet perturbable() const;

  // this[name] += alpha * other[name] for every tensor in `other`, which must
  // be a subset (by name and shape) of this set.
  void add_scaled(const TensorSet& other, double alpha);
  void scale(double alpha);
  double dot(const TensorSet& other) const;
  double l2_norm() const;
  std::size_t element_count() const;
  bool all_finite() const;

  bool operator==(const TensorSet& other) const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

using WeightSet = TensorSet;
using WeightPerturbation = TensorSet;
using Gradient = TensorSet;

}  // namespace simgrace
