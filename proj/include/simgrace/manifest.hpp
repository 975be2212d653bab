#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace simgrace {

struct FileFingerprint {
  std::string file;
  std::uintmax_t bytes = 0;
  std::string sha256;
};

struct DatasetFingerprint {
  std::string name;
  std::string directory;
  std::vector<FileFingerprint> files;
  std::string combined_sha256;  // over the per-file digests, in file order
};

// Fingerprints every `<name>_*.txt` file in the directory (sorted by name).
DatasetFingerprint fingerprint_dataset(const std::filesystem::path& directory, const std::string& name);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

// Everything needed to replay a run. Values are kept as text exactly as they
// were resolved, so identical runs produce byte-identical manifests.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::map<std::string, std::string> config;
  std::uint64_t seed = 0;
  DatasetFingerprint dataset;
  std::map<std::string, std::string> artifacts;
  std::string tool_version;

  std::string to_json() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace simgrace
