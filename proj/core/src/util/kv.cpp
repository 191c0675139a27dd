#include "evflight/util/kv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace evflight {

static std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

KvFile KvFile::parse(const std::string& text) {
  KvFile kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw KvError("kv parse error at line " + std::to_string(lineno) + ": missing '='");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      throw KvError("kv parse error at line " + std::to_string(lineno) + ": empty key");
    kv.values_[key] = val;
  }
  return kv;
}

KvFile KvFile::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw KvError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

void KvFile::save(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw KvError("cannot write " + path);
  f << to_string();
}

std::string KvFile::to_string() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    out += k;
    out += " = ";
    out += v;
    out += "\n";
  }
  return out;
}

std::string KvFile::get_str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw KvError("missing key: " + key);
  return it->second;
}

std::string KvFile::get_str(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KvFile::get_num(const std::string& key) const {
  const std::string s = get_str(key);
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw KvError("key '" + key + "' is not a number: " + s);
  }
}

double KvFile::get_num(const std::string& key, double fallback) const {
  return has(key) ? get_num(key) : fallback;
}

long long KvFile::get_int(const std::string& key) const {
  const std::string s = get_str(key);
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw KvError("key '" + key + "' is not an integer: " + s);
  }
}

long long KvFile::get_int(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool KvFile::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  std::string s = get_str(key);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw KvError("key '" + key + "' is not a bool: " + s);
}

void KvFile::set_num(const std::string& key, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  values_[key] = buf;
}

void KvFile::set_int(const std::string& key, long long value) {
  values_[key] = std::to_string(value);
}

}  // namespace evflight
