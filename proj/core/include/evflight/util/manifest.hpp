#pragma once

#include <string>
#include <vector>

#include "evflight/util/kv.hpp"

namespace evflight {

// Every artifact directory gets exactly one manifest. Reruns with identical
// inputs must reproduce identical data files; `wrote_at` is the only
// non-reproducible key and is excluded from determinism comparisons.
struct RunManifest {
  std::string command;          // full CLI invocation
  std::string config_hash;      // crc32 of the resolved config text
  uint64_t seed = 0;
  std::string version;          // library version
  std::vector<std::string> outputs;

  KvFile to_kv(bool with_timestamp = true) const;
  static RunManifest from_kv(const KvFile& kv);

  void write(const std::string& dir) const;
  static RunManifest read(const std::string& dir);
};

// crc32 of a string, hex-encoded; used for config hashes.
std::string content_hash(const std::string& text);

}  // namespace evflight
