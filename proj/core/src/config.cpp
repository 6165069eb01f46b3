#include "pcc/config.hpp"

#include <algorithm>
#include <sstream>

#include "pcc/io.hpp"

namespace pcc {

namespace {

const std::vector<std::string> kKinds = {
    "srm-showdown", "tau-growth",      "oig-loo",     "boosting",
    "nn-sweep",     "contrastive-sweep", "margin-sweep", "end-to-end",
};

std::map<std::string, std::vector<FieldSpec>> build_schemas() {
  std::map<std::string, std::vector<FieldSpec>> s;
  auto common = [](std::vector<FieldSpec> fields) {
    fields.push_back({"seed", FieldType::Int, "1", false});
    fields.push_back({"out", FieldType::String, "out.csv", false});
    return fields;
  };
  s["srm-showdown"] = common({
      {"m", FieldType::IntList, "256", false},
      {"delta", FieldType::Double, "0.1", false},
      {"seeds", FieldType::Int, "20", false},
      {"weight_rule", FieldType::String, "double-exp", false},
      {"c_prime", FieldType::Double, "1", false},
      {"n_trunc", FieldType::Int, "0", false},
  });
  s["tau-growth"] = common({
      {"domain_size", FieldType::Int, "10", false},
      {"grouping", FieldType::String, "nn", false},  // nn|similarity|contrastive|hc
      {"base", FieldType::String, "cube", false},    // cube|thresholds
      {"m", FieldType::IntList, "2 4 6 8", false},
      {"mode", FieldType::String, "exact", false},  // exact|sampled
      {"trials", FieldType::Int, "50", false},
      {"delta", FieldType::Double, "0.1", false},
      {"bound_c", FieldType::Double, "1", false},
  });
  s["oig-loo"] = common({
      {"instances", FieldType::Int, "50", false},
      {"domain_size", FieldType::Int, "8", false},
      {"class_size", FieldType::Int, "40", false},
      {"n", FieldType::Int, "8", false},
      {"star_pct", FieldType::Int, "30", false},
  });
  s["boosting"] = common({
      {"instances", FieldType::Int, "50", false},
      {"domain_size", FieldType::Int, "8", false},
      {"class_size", FieldType::Int, "30", false},
      {"m", FieldType::Int, "48", false},
  });
  s["nn-sweep"] = common({
      {"domain_size", FieldType::Int, "10", false},
      {"base", FieldType::String, "cube", false},
      {"grid", FieldType::Int, "12", false},
  });
  s["contrastive-sweep"] = common({
      {"domain_size", FieldType::Int, "10", false},
      {"grid", FieldType::Int, "12", false},
  });
  s["margin-sweep"] = common({
      {"domain_size", FieldType::Int, "4", false},
      {"levels", FieldType::Int, "7", false},
      {"lipschitz", FieldType::Double, "2", false},
      {"m", FieldType::Int, "64", false},
      {"grid", FieldType::Int, "8", false},
  });
  s["end-to-end"] = common({
      {"class_file", FieldType::String, "", true},
      {"metric_file", FieldType::String, "", false},
      {"weight_file", FieldType::String, "", false},
      {"dist_file", FieldType::String, "", true},
      {"grouping", FieldType::String, "none", false},  // none|nn|similarity|contrastive
      {"m", FieldType::Int, "64", false},
      {"delta", FieldType::Double, "0.1", false},
      {"c_prime", FieldType::Double, "1", false},
      {"tau_mode", FieldType::String, "sample", false},  // sample|analytic
  });
  return s;
}

const std::map<std::string, std::vector<FieldSpec>>& schemas() {
  static const auto s = build_schemas();
  return s;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

void check_type(const FieldSpec& spec, const std::string& value, const std::string& where) {
  auto fail = [&](const char* what) {
    throw InputError(where + ": key '" + spec.name + "' expects " + what + ", got '" + value +
                     "'");
  };
  std::istringstream is(value);
  switch (spec.type) {
    case FieldType::Int: {
      long long v;
      if (!(is >> v) || !(is >> std::ws).eof()) fail("an integer");
      break;
    }
    case FieldType::Double: {
      double v;
      if (!(is >> v) || !(is >> std::ws).eof()) fail("a number");
      break;
    }
    case FieldType::IntList: {
      long long v;
      int cnt = 0;
      while (is >> v) ++cnt;
      if (!is.eof() || cnt == 0) fail("a space-separated integer list");
      break;
    }
    case FieldType::String:
      if (value.empty()) fail("a nonempty string");
      break;
  }
}

}  // namespace

const std::vector<std::string>& experiment_kinds() { return kKinds; }

const std::vector<FieldSpec>& config_schema(const std::string& kind) {
  auto it = schemas().find(kind);
  require_input(it != schemas().end(), "unknown experiment kind '" + kind + "'");
  return it->second;
}

const std::string& ExperimentConfig::raw(const std::string& key) const {
  auto it = values.find(key);
  require_input(it != values.end(), "config: missing key '" + key + "'");
  return it->second;
}

long long ExperimentConfig::get_int(const std::string& key) const {
  return std::stoll(raw(key));
}

double ExperimentConfig::get_double(const std::string& key) const { return std::stod(raw(key)); }

std::string ExperimentConfig::get_string(const std::string& key) const { return raw(key); }

std::vector<int> ExperimentConfig::get_int_list(const std::string& key) const {
  std::istringstream is(raw(key));
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  return out;
}

ExperimentConfig parse_config(const std::string& text, const std::string& filename) {
  ExperimentConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::map<std::string, std::pair<std::string, int>> raw;  // key -> (value, line)
  while (std::getline(is, line)) {
    ++lineno;
    std::string where = filename + ":" + std::to_string(lineno);
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    require_input(eq != std::string::npos, where + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    require_input(!key.empty(), where + ": empty key");
    require_input(raw.emplace(key, std::make_pair(value, lineno)).second,
                  where + ": duplicate key '" + key + "'");
  }

  auto kind_it = raw.find("kind");
  require_input(kind_it != raw.end(), filename + ": missing key 'kind'");
  cfg.kind = kind_it->second.first;
  if (schemas().find(cfg.kind) == schemas().end())
    throw InputError(filename + ":" + std::to_string(kind_it->second.second) +
                     ": unknown experiment kind '" + cfg.kind + "'");
  raw.erase(kind_it);

  const auto& schema = config_schema(cfg.kind);
  for (const auto& spec : schema) {
    auto it = raw.find(spec.name);
    if (it == raw.end()) {
      require_input(!spec.required, filename + ": missing required key '" + spec.name + "'");
      cfg.values[spec.name] = spec.default_value;
      continue;
    }
    std::string where = filename + ":" + std::to_string(it->second.second);
    check_type(spec, it->second.first, where);
    cfg.values[spec.name] = it->second.first;
    raw.erase(it);
  }
  if (!raw.empty()) {
    const auto& [key, val] = *raw.begin();
    throw InputError(filename + ":" + std::to_string(val.second) + ": unknown key '" + key +
                     "' for kind '" + cfg.kind + "'");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  return parse_config(read_text_file(path), path);
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::string out = "kind = " + cfg.kind + "\n";
  for (const auto& spec : config_schema(cfg.kind)) {
    auto it = cfg.values.find(spec.name);
    if (it == cfg.values.end()) continue;
    out += spec.name + " = " + it->second + "\n";
  }
  return out;
}

}  // namespace pcc
