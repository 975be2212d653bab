#pragma once

#include "simgrace/encoder.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace simgrace {

// On disk: a JSON document
//   {"format": "simgrace-checkpoint", "version": 1,
//    "encoder": {...EncoderConfig...},
//    "metadata": {string: string},
//    "tensors": [{"name", "role", "shape": [rows, cols], "dtype": "float64"}, ...],
//    "payload": {name: [row-major values...], ...}}
struct Checkpoint {
  EncoderConfig encoder;
  WeightSet weights;
  std::map<std::string, std::string> metadata;
};

inline constexpr const char* kCheckpointFormat = "simgrace-checkpoint";
inline constexpr int kCheckpointVersion = 1;

std::string serialize_checkpoint(const Checkpoint& checkpoint);
Checkpoint deserialize_checkpoint(const std::string& text);

void save_checkpoint(const Checkpoint& checkpoint, const std::filesystem::path& path);

// Rejects any tensor whose name or shape differs from the layout implied by
// the stored encoder config.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace simgrace
