#include "kss/rigged.hpp"

#include <algorithm>
#include <stdexcept>

namespace kss {

RiggedConfiguration::RiggedConfiguration(int rank) : rank_(rank), config_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
}

RiggedConfiguration::RiggedConfiguration(int rank, std::vector<QuantumRow> quantum,
                                         std::vector<std::vector<ConfigRow>> configuration)
    : rank_(rank), quantum_(std::move(quantum)), config_(std::move(configuration)) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (static_cast<int>(config_.size()) != rank)
    throw std::invalid_argument("expected one configuration per level 1..rank");
  for (const auto& q : quantum_) {
    if (q.level < 0 || q.level >= rank)
      throw std::invalid_argument("quantum-space level outside 0..rank-1");
    if (q.length < 1) throw std::invalid_argument("quantum-space rows must be positive");
  }
  for (const auto& level : config_)
    for (const auto& row : level)
      if (row.length < 1) throw std::invalid_argument("configuration rows must be positive");
}

std::vector<int> RiggedConfiguration::nu(int level) const {
  std::vector<int> out;
  for (const auto& q : quantum_)
    if (q.level == level) out.push_back(q.length);
  return out;
}

void RiggedConfiguration::add_quantum_row(int level, int length) {
  if (level < 0 || level >= rank_) throw std::invalid_argument("quantum-space level outside 0..rank-1");
  if (length < 1) throw std::invalid_argument("quantum-space rows must be positive");
  quantum_.push_back({level, length, static_cast<int>(quantum_.size())});
}

bool operator==(const RiggedConfiguration& a, const RiggedConfiguration& b) {
  if (a.rank_ != b.rank_ || a.quantum_ != b.quantum_) return false;
  for (std::size_t i = 0; i < a.config_.size(); ++i) {
    auto x = a.config_[i];
    auto y = b.config_[i];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

int boxes_in_first_columns(std::span<const int> lengths, int l) {
  int total = 0;
  for (int len : lengths) total += std::min(l, len);
  return total;
}

int boxes_in_first_columns(std::span<const ConfigRow> rows, int l) {
  int total = 0;
  for (const auto& row : rows) total += std::min(l, row.length);
  return total;
}

int q_l(const RiggedConfiguration& rc, int level, int l) {
  if (level == 0 || level == rc.rank() + 1) return 0;
  if (level < 0 || level > rc.rank() + 1) throw std::invalid_argument("level out of range");
  return boxes_in_first_columns(rc.mu(level), l);
}

int vacancy_number(std::span<const int> quantum_below, std::span<const ConfigRow> lower,
                   std::span<const ConfigRow> here, std::span<const ConfigRow> upper, int l) {
  return boxes_in_first_columns(quantum_below, l) + boxes_in_first_columns(lower, l) -
         2 * boxes_in_first_columns(here, l) + boxes_in_first_columns(upper, l);
}

int vacancy(const RiggedConfiguration& rc, int level, int l) {
  if (level < 1 || level > rc.rank()) throw std::invalid_argument("level must lie in 1..rank");
  const auto below = rc.nu(level - 1);
  return boxes_in_first_columns(below, l) + q_l(rc, level - 1, l) - 2 * q_l(rc, level, l) +
         q_l(rc, level + 1, l);
}

namespace {

const ConfigRow& row_at(const RiggedConfiguration& rc, RowRef row) {
  if (row.level < 1 || row.level > rc.rank() || row.index >= rc.mu(row.level).size())
    throw std::out_of_range("no such configuration row");
  return rc.mu(row.level)[row.index];
}

}  // namespace

bool is_singular(const RiggedConfiguration& rc, RowRef row) { return corigging(rc, row) == 0; }

int corigging(const RiggedConfiguration& rc, RowRef row) {
  const auto& r = row_at(rc, row);
  return vacancy(rc, row.level, r.length) - r.rigging;
}

std::vector<std::string> validate(const RiggedConfiguration& rc, Validity mode) {
  std::vector<std::string> violations;
  for (int a = 1; a <= rc.rank(); ++a) {
    const auto& rows = rc.mu(a);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int p = vacancy(rc, a, rows[i].length);
      const std::string where = "mu(" + std::to_string(a) + ") row " + std::to_string(i) +
                                " (length " + std::to_string(rows[i].length) + ")";
      if (mode == Validity::restricted && p < 0)
        violations.push_back(where + ": vacancy number " + std::to_string(p) + " is negative");
      if (rows[i].rigging > p)
        violations.push_back(where + ": rigging " + std::to_string(rows[i].rigging) +
                             " exceeds vacancy number " + std::to_string(p));
      if (mode == Validity::restricted && rows[i].rigging < 0)
        violations.push_back(where + ": rigging " + std::to_string(rows[i].rigging) +
                             " is negative");
    }
  }
  return violations;
}

}  // namespace kss
