#pragma once

#include "simgrace/tensor_set.hpp"

#include <string>

namespace simgrace {

enum class OptimizerKind { sgd, adam };

OptimizerKind parse_optimizer(const std::string& text);
const char* to_string(OptimizerKind kind);

// Updates trainable tensors only; running statistics are never touched.
class Optimizer {
 public:
  Optimizer(OptimizerKind kind, double learning_rate);

  void step(WeightSet& weights, const Gradient& gradient);

  OptimizerKind kind() const { return kind_; }
  double learning_rate() const { return lr_; }

 private:
  OptimizerKind kind_;
  double lr_;
  double beta1_ = 0.9;
  double beta2_ = 0.999;
  double eps_ = 1e-8;
  long steps_ = 0;
  TensorSet first_moment_;
  TensorSet second_moment_;
};

}  // namespace simgrace
