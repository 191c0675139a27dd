#include "evflight/util/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>

#include "evflight/util/crc32.hpp"

namespace evflight {

std::string content_hash(const std::string& text) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%08x", crc32(text.data(), text.size()));
  return buf;
}

KvFile RunManifest::to_kv(bool with_timestamp) const {
  KvFile kv;
  kv.set("command", command);
  kv.set("config_hash", config_hash);
  kv.set_int("seed", (long long)seed);
  kv.set("version", version);
  for (size_t i = 0; i < outputs.size(); ++i)
    kv.set("output_" + std::to_string(i), outputs[i]);
  if (with_timestamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    kv.set_int("wrote_at_unix_s",
               std::chrono::duration_cast<std::chrono::seconds>(now).count());
  }
  return kv;
}

RunManifest RunManifest::from_kv(const KvFile& kv) {
  RunManifest m;
  m.command = kv.get_str("command");
  m.config_hash = kv.get_str("config_hash", "");
  m.seed = (uint64_t)kv.get_int("seed", 0);
  m.version = kv.get_str("version", "");
  for (int i = 0;; ++i) {
    std::string key = "output_" + std::to_string(i);
    if (!kv.has(key)) break;
    m.outputs.push_back(kv.get_str(key));
  }
  return m;
}

void RunManifest::write(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  to_kv().save(dir + "/manifest.txt");
}

RunManifest RunManifest::read(const std::string& dir) {
  return from_kv(KvFile::load(dir + "/manifest.txt"));
}

}  // namespace evflight
