#pragma once

#include <string>
#include <vector>

#include "pcc/groupings.hpp"
#include "pcc/growth.hpp"
#include "pcc/learner.hpp"
#include "pcc/srm.hpp"

namespace pcc {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Class file: one hypothesis per line over {0,1,*}, equal lengths.
ExplicitClass parse_class_text(const std::string& text, const std::string& name);
ExplicitClass read_class_file(const std::string& path, const std::string& name);
std::string class_to_text(const ExplicitClass& c);

// Square CSV matrix of reals.
std::vector<std::vector<double>> parse_matrix_csv(const std::string& text);
std::vector<std::vector<double>> read_matrix_csv(const std::string& path);
std::string matrix_to_csv(const std::vector<std::vector<double>>& m);

// Distribution file: rows `point,label,prob`.
FiniteDistribution parse_distribution_csv(const std::string& text);
FiniteDistribution read_distribution_csv(const std::string& path);
std::string distribution_to_csv(const FiniteDistribution& d);

// Hierarchical clustering: one cluster per line, `level cluster_id points...`.
HierarchicalClustering parse_hc_text(const std::string& text);
HierarchicalClustering read_hc_file(const std::string& path);
std::string hc_to_text(const HierarchicalClustering& hc);

// Real-valued class: CSV, one function per row.
RealValuedClass parse_real_class_csv(const std::string& text, const std::string& name);
RealValuedClass read_real_class_csv(const std::string& path, const std::string& name);
std::string real_class_to_csv(const RealValuedClass& f);

// Selection ledger: class,J_len,J_indices,emp_err,penalty,score,selected.
std::string ledger_to_csv(const SelectionLedger& ledger);
// Equivalence partition: member_name,class_id.
std::string partition_to_csv(const Collection& c, const TauResult& tau);

// Deterministic shortest-ish decimal rendering used by all CSV output.
std::string format_double(double v);

uint64_t fnv1a(const std::string& text);

}  // namespace pcc
