#include "selberg/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "selberg/errors.hpp"

namespace selberg {

namespace {

std::map<std::string, Real Config::*> real_fields() {
  return {
      {"prasad_c1", &Config::prasad_c1},
      {"prasad_c2", &Config::prasad_c2},
      {"belolipetsky_a", &Config::belolipetsky_a},
      {"belolipetsky_b", &Config::belolipetsky_b},
      {"jordan_index", &Config::jordan_index},
      {"epsilon", &Config::epsilon},
      {"lemma_C", &Config::lemma_C},
      {"volume_log_c", &Config::volume_log_c},
  };
}

Config defaults() {
  Config c;
  for (const auto& k : config_keys()) c.defaulted.insert(k);
  return c;
}

std::string value_text(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw DomainError("config value for '" + key + "' must be a number");
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : real_fields()) keys.push_back(k);
  keys.emplace_back("prime_scan_cap");
  return keys;
}

std::vector<std::string> Config::warnings_for(const std::vector<std::string>& keys) const {
  std::vector<std::string> out;
  for (const auto& k : keys) {
    if (defaulted.count(k) == 0) continue;
    std::string value;
    if (k == "prime_scan_cap") {
      value = std::to_string(prime_scan_cap);
    } else {
      value = (this->*real_fields().at(k)).str(12);
    }
    out.push_back("warning: " + k + " = " + value + " is an illustrative default, not a derived constant");
  }
  return out;
}

Config parse_config(const std::string& json_text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("config " + source + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw DomainError("config " + source + " must be a JSON object");
  Config c = defaults();
  c.source = source;
  const auto fields = real_fields();
  for (const auto& [key, v] : j.items()) {
    if (key == "prime_scan_cap") {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() < 2) {
        throw DomainError("prime_scan_cap must be an integer >= 2");
      }
      c.prime_scan_cap = v.get<std::uint64_t>();
    } else if (auto it = fields.find(key); it != fields.end()) {
      const Real x = parse_real(value_text(v, key));
      if (!(x > 0)) throw DomainError("config constant '" + key + "' must be > 0");
      if (key == "jordan_index" && !(x >= 1)) throw DomainError("jordan_index must be >= 1");
      c.*(it->second) = x;
    } else {
      throw DomainError("unknown config key '" + key + "'");
    }
    c.defaulted.erase(key);
  }
  return c;
}

Config load_config(const std::optional<std::string>& path) {
  std::optional<std::string> chosen = path;
  if (!chosen) {
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') chosen = env;
  }
  if (!chosen) return defaults();
  std::ifstream in(*chosen);
  if (!in) {
    Config c = defaults();
    c.load_warnings.push_back("warning: config file " + *chosen + " not found, using defaults");
    return c;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), *chosen);
}

}  // namespace selberg
