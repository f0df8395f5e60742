#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selberg/real.hpp"

namespace selberg {

// Constants that the theory leaves unspecified. Every default is
// illustrative; `defaulted` lists the keys not set by a config file.
struct Config {
  Real prasad_c1 = 1;
  Real prasad_c2 = 1;
  Real belolipetsky_a = 1;
  Real belolipetsky_b = 1;
  Real jordan_index = 1;
  Real epsilon = Real("0.1");
  Real lemma_C = 1;
  Real volume_log_c = 1;
  std::uint64_t prime_scan_cap = 1000000;

  std::optional<std::string> source;  // path read, if any
  std::set<std::string> defaulted;
  std::vector<std::string> load_warnings;

  // One warning line per requested key that still has its illustrative
  // default.
  std::vector<std::string> warnings_for(const std::vector<std::string>& keys) const;
};

inline constexpr const char* kConfigEnvVar = "SELBERG_CONFIG";

std::vector<std::string> config_keys();

// Reads a JSON object of constants; unknown keys and non-positive values
// are DomainErrors.
Config parse_config(const std::string& json_text, const std::string& source = "<string>");

// Explicit path, else $SELBERG_CONFIG, else defaults. A path that does not
// exist falls back to defaults with a load warning.
Config load_config(const std::optional<std::string>& path);

}  // namespace selberg
