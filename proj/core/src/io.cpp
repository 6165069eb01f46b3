#include "pcc/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace pcc {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require_input(in.good(), "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require_input(out.good(), "cannot write file: " + path);
  out << text;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_number(const std::string& s, const std::string& context) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    require_input(used == s.size(), context + ": trailing characters in number '" + s + "'");
    return v;
  } catch (const InputError&) {
    throw;
  } catch (...) {
    throw InputError(context + ": expected a number, got '" + s + "'");
  }
}

}  // namespace

ExplicitClass parse_class_text(const std::string& text, const std::string& name) {
  std::vector<Hypothesis> hs;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    hs.push_back(Hypothesis::from_string(line));
  }
  require_input(!hs.empty(), "class file: no hypotheses");
  return ExplicitClass(name, std::move(hs));
}

ExplicitClass read_class_file(const std::string& path, const std::string& name) {
  return parse_class_text(read_text_file(path), name);
}

std::string class_to_text(const ExplicitClass& c) {
  std::string out;
  for (const auto& h : c.hypotheses()) {
    out += h.to_string();
    out += '\n';
  }
  return out;
}

std::vector<std::vector<double>> parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> m;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split_csv_row(line)) row.push_back(parse_number(cell, "matrix csv"));
    m.push_back(std::move(row));
  }
  require_input(!m.empty(), "matrix csv: empty");
  for (const auto& row : m)
    require_input(row.size() == m.size(), "matrix csv: must be square");
  return m;
}

std::vector<std::vector<double>> read_matrix_csv(const std::string& path) {
  return parse_matrix_csv(read_text_file(path));
}

std::string matrix_to_csv(const std::vector<std::vector<double>>& m) {
  std::string out;
  for (const auto& row : m) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_double(row[j]);
    }
    out += '\n';
  }
  return out;
}

FiniteDistribution parse_distribution_csv(const std::string& text) {
  std::vector<FiniteDistribution::Atom> atoms;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    auto cells = split_csv_row(line);
    require_input(cells.size() == 3, "distribution csv: rows are point,label,prob");
    int point = static_cast<int>(parse_number(cells[0], "distribution csv"));
    int label = static_cast<int>(parse_number(cells[1], "distribution csv"));
    require_input(label == 0 || label == 1, "distribution csv: label must be 0 or 1");
    atoms.push_back({point, label == 1 ? Label::One : Label::Zero,
                     parse_number(cells[2], "distribution csv")});
  }
  return FiniteDistribution(std::move(atoms));
}

FiniteDistribution read_distribution_csv(const std::string& path) {
  return parse_distribution_csv(read_text_file(path));
}

std::string distribution_to_csv(const FiniteDistribution& d) {
  std::string out;
  for (const auto& a : d.atoms()) {
    out += std::to_string(a.point);
    out += ',';
    out += (a.label == Label::One) ? '1' : '0';
    out += ',';
    out += format_double(a.prob);
    out += '\n';
  }
  return out;
}

HierarchicalClustering parse_hc_text(const std::string& text) {
  // level -> point -> cluster id
  std::map<int, std::map<int, int>> table;
  int max_point = -1;
  for (const auto& line : split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    int level, cluster;
    require_input(static_cast<bool>(is >> level >> cluster), "hc file: bad line '" + line + "'");
    int pt;
    while (is >> pt) {
      require_input(table[level].emplace(pt, cluster).second,
                    "hc file: point listed twice at one level");
      max_point = std::max(max_point, pt);
    }
  }
  require_input(!table.empty() && max_point >= 0, "hc file: empty");
  std::vector<std::vector<int>> levels;
  for (const auto& [level, pts] : table) {
    require_input(level == static_cast<int>(levels.size()), "hc file: levels must be 0,1,2,...");
    std::vector<int> row(max_point + 1, -1);
    for (const auto& [pt, cluster] : pts) {
      require_input(pt >= 0 && pt <= max_point, "hc file: point out of range");
      row[pt] = cluster;
    }
    for (int v : row) require_input(v >= 0, "hc file: level misses a point");
    levels.push_back(std::move(row));
  }
  return HierarchicalClustering::from_levels(std::move(levels));
}

HierarchicalClustering read_hc_file(const std::string& path) {
  return parse_hc_text(read_text_file(path));
}

std::string hc_to_text(const HierarchicalClustering& hc) {
  std::string out;
  for (int l = 0; l < hc.num_levels(); ++l) {
    std::map<int, std::vector<int>> clusters;
    for (int x = 0; x < hc.domain_size(); ++x) clusters[hc.level(l)[x]].push_back(x);
    for (const auto& [id, pts] : clusters) {
      out += std::to_string(l);
      out += ' ';
      out += std::to_string(id);
      for (int p : pts) {
        out += ' ';
        out += std::to_string(p);
      }
      out += '\n';
    }
  }
  return out;
}

RealValuedClass parse_real_class_csv(const std::string& text, const std::string& name) {
  RealValuedClass f;
  f.name = name;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split_csv_row(line))
      row.push_back(parse_number(cell, "real class csv"));
    f.functions.push_back(std::move(row));
  }
  require_input(!f.functions.empty(), "real class csv: empty");
  for (const auto& row : f.functions)
    require_input(row.size() == f.functions.front().size(),
                  "real class csv: rows must have equal length");
  return f;
}

RealValuedClass read_real_class_csv(const std::string& path, const std::string& name) {
  return parse_real_class_csv(read_text_file(path), name);
}

std::string real_class_to_csv(const RealValuedClass& f) {
  std::string out;
  for (const auto& row : f.functions) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_double(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string ledger_to_csv(const SelectionLedger& ledger) {
  std::string out = "class,J_len,J_indices,emp_err,penalty,score,selected\n";
  for (const auto& row : ledger.rows) {
    out += row.class_name;
    out += ',';
    out += std::to_string(row.candidate.j_len());
    out += ',';
    auto j = row.candidate.j_indices();
    for (size_t i = 0; i < j.size(); ++i) {
      if (i) out += ';';
      out += std::to_string(j[i]);
    }
    out += ',';
    out += format_double(row.emp_err.value());
    out += ',';
    out += format_double(row.penalty);
    out += ',';
    out += format_double(row.score);
    out += ',';
    out += row.selected ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string partition_to_csv(const Collection& c, const TauResult& tau) {
  require_input(tau.member_class.size() == c.members.size(),
                "partition_to_csv: partition does not match the collection");
  std::string out = "member_name,class_id\n";
  for (size_t i = 0; i < c.members.size(); ++i) {
    out += c.members[i].name();
    out += ',';
    out += std::to_string(tau.member_class[i]);
    out += '\n';
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

uint64_t fnv1a(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace pcc
