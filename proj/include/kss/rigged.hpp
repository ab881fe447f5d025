#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace kss {

/// One row ν_i^(a) of the quantum space. A row at level a records a path
/// factor of shape B^{a+1, length}; `factor` is that factor's 0-based index.
struct QuantumRow {
  int level = 0;
  int length = 0;
  int factor = 0;
  friend bool operator==(const QuantumRow&, const QuantumRow&) = default;
};

/// A row (μ_i^(a), r_i^(a)) of a configuration.
struct ConfigRow {
  int length = 0;
  int rigging = 0;
  friend bool operator==(const ConfigRow&, const ConfigRow&) = default;
  friend auto operator<=>(const ConfigRow&, const ConfigRow&) = default;
};

/// Row i (0-based storage index) of μ^(level).
struct RowRef {
  int level = 0;
  std::size_t index = 0;
};

/// Quantum space ν^(0..n-1) in path-factor order plus configurations
/// μ^(1..n) with riggings.
///
/// Equality compares the ordered quantum space and, per level, the multiset
/// of (length, rigging) pairs; row order inside a configuration carries no
/// meaning.
class RiggedConfiguration {
 public:
  RiggedConfiguration() = default;
  explicit RiggedConfiguration(int rank);
  RiggedConfiguration(int rank, std::vector<QuantumRow> quantum,
                      std::vector<std::vector<ConfigRow>> configuration);

  int rank() const { return rank_; }

  /// All quantum-space rows in provenance (path-factor) order.
  const std::vector<QuantumRow>& quantum_space() const { return quantum_; }
  /// Lengths of ν^(a), 0 <= a <= n-1, in provenance order.
  std::vector<int> nu(int level) const;

  /// Rows of μ^(a), 1 <= a <= n.
  const std::vector<ConfigRow>& mu(int level) const { return config_.at(level - 1); }
  std::vector<ConfigRow>& mu(int level) { return config_.at(level - 1); }

  void add_quantum_row(int level, int length);

  friend bool operator==(const RiggedConfiguration& a, const RiggedConfiguration& b);

 private:
  int rank_ = 0;
  std::vector<QuantumRow> quantum_;
  std::vector<std::vector<ConfigRow>> config_;
};

/// Σ_i min(l, length_i).
int boxes_in_first_columns(std::span<const int> lengths, int l);
int boxes_in_first_columns(std::span<const ConfigRow> rows, int l);

/// Q_l^(a) = Σ_i min(l, μ_i^(a)); zero for a = 0 and a = n+1.
int q_l(const RiggedConfiguration& rc, int level, int l);

/// p_l^(a) = Σ min(l, ν^(a-1)) + Q_l^(a-1) - 2 Q_l^(a) + Q_l^(a+1).
int vacancy(const RiggedConfiguration& rc, int level, int l);

/// The vacancy formula on raw data; `lower`/`upper` may be empty for the
/// virtual levels 0 and n+1.
int vacancy_number(std::span<const int> quantum_below, std::span<const ConfigRow> lower,
                   std::span<const ConfigRow> here, std::span<const ConfigRow> upper, int l);

bool is_singular(const RiggedConfiguration& rc, RowRef row);
int corigging(const RiggedConfiguration& rc, RowRef row);

enum class Validity { restricted, unrestricted };

/// Restricted: every vacancy number p_{μ_i} >= 0 and 0 <= r_i <= p_{μ_i}.
/// Unrestricted: only r_i <= p_{μ_i}. Returns the violations (empty if ok).
std::vector<std::string> validate(const RiggedConfiguration& rc, Validity mode);

}  // namespace kss
