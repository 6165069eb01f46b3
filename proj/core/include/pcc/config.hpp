#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcc/errors.hpp"

namespace pcc {

// Flat key-value experiment configuration with a per-kind typed schema.
// Unknown keys are rejected; missing optional keys take their defaults on
// parse, so parse -> serialize -> parse is the identity.
struct ExperimentConfig {
  std::string kind;
  std::map<std::string, std::string> values;

  const std::string& raw(const std::string& key) const;
  long long get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::vector<int> get_int_list(const std::string& key) const;
};

enum class FieldType { Int, Double, String, IntList };

struct FieldSpec {
  std::string name;
  FieldType type;
  std::string default_value;  // empty + required
  bool required = false;
};

const std::vector<std::string>& experiment_kinds();
const std::vector<FieldSpec>& config_schema(const std::string& kind);

// `filename` only labels error messages; errors carry file:line.
ExperimentConfig parse_config(const std::string& text, const std::string& filename);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace pcc
