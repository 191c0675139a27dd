#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evflight {

// Plain-text key-value files: one `key = value` per line, '#' comments.
// Used for scenario files, run configs and manifests.
class KvFile {
public:
  KvFile() = default;

  static KvFile parse(const std::string& text);
  static KvFile load(const std::string& path);
  void save(const std::string& path) const;
  std::string to_string() const;

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_str(const std::string& key) const;
  std::string get_str(const std::string& key, const std::string& fallback) const;
  double get_num(const std::string& key) const;
  double get_num(const std::string& key, double fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void set_num(const std::string& key, double value);
  void set_int(const std::string& key, long long value);

  const std::map<std::string, std::string>& items() const { return values_; }

private:
  std::map<std::string, std::string> values_;
};

struct KvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace evflight
