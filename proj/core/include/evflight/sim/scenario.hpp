#pragma once

#include <string>

#include "evflight/sim/types.hpp"
#include "evflight/util/kv.hpp"

namespace evflight::sim {

// Plain-text scenario description shared by data generation, flight tests
// and the EKF runner.
struct Scenario {
  PhysicalParams params;
  uint64_t seed = 1;
  double duration_s = 10.0;
  double difficulty = 1.0;   // 0 = pure hover
  double start_height = 1.5; // m

  // camera / scene
  uint64_t scene_seed = 7;
  std::string scene_style = "horizonful";  // blobs|stripes|mixed|horizonful|horizonless
  double contrast_threshold = 0.2;         // log units
  std::string mask_mode = "quarter";       // full|half|quarter

  static Scenario from_kv(const KvFile& kv);
  KvFile to_kv() const;
  static Scenario load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace evflight::sim
