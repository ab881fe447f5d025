#pragma once

#include <vector>

#include "kss/tableau.hpp"

namespace kss {

/// b_1 ⊗ ... ⊗ b_L with b_j ∈ B^{α_j, β_j}; every factor rectangular over the
/// same alphabet.
class Path {
 public:
  Path() = default;
  explicit Path(int rank) : rank_(rank) {}
  Path(int rank, std::vector<Tableau> factors);

  int rank() const { return rank_; }
  const std::vector<Tableau>& factors() const { return factors_; }
  std::size_t length() const { return factors_.size(); }
  const Tableau& operator[](std::size_t j) const { return factors_[j]; }

  /// Total number of boxes, Σ α_j β_j.
  int boxes() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  int rank_ = 0;
  std::vector<Tableau> factors_;
};

/// Column (j, k) of a local energy distribution: factor j (1-based, from the
/// left) and column c_k of b_j, counted from the RIGHT of the tableau.
struct ColumnId {
  int factor = 0;
  int column = 0;
  friend bool operator==(const ColumnId&, const ColumnId&) = default;
  friend auto operator<=>(const ColumnId&, const ColumnId&) = default;
};

/// b_{j,k} = c_k ... c_1: the rightmost k columns of b (k = 0 gives ∅).
Tableau column_prefix(const Tableau& b, int k);

struct CarrierStep {
  Tableau emitted;  // b'
  Tableau carrier;  // u'
};

/// u ⊗ b ≃ b' ⊗ u'.
CarrierStep carrier_pass(const Tableau& carrier, const Tableau& b);

struct Evolution {
  Path path;
  Tableau carrier;  // u_{l,L}^(a)
};

/// T_l^(a): thread u_l^(a) through the path from left to right.
Evolution time_evolution(const Path& p, int level, int width);

/// E_{l,j,k}^(a) = H(u_{l,j-1}^(a) ⊗ b_{j,k}) for 0 <= l <= l_max.
class EnergyMatrix {
 public:
  EnergyMatrix(const Path& p, int level, int l_max);

  int level() const { return level_; }
  int l_max() const { return static_cast<int>(values_.size()) - 1; }
  /// j is 1-based; 0 <= k <= β_j. Row l = 0 and column k = 0 are zero.
  int operator()(int l, int j, int k) const { return values_[l][j - 1][k]; }

 private:
  int level_;
  std::vector<std::vector<std::vector<int>>> values_;
};

inline EnergyMatrix energy_matrix(const Path& p, int level, int l_max) {
  return EnergyMatrix(p, level, l_max);
}

/// One table ε^(a) of the local energy distribution. Columns are in
/// lexicographic (j, k) order; the last row is the first all-zero row.
struct LedTable {
  int level = 0;
  std::vector<ColumnId> columns;
  std::vector<std::vector<int>> rows;

  /// ε_{l,(j,k)} with 1-based l and column index; zero outside the table.
  int at(int l, std::size_t column) const {
    return l >= 1 && l <= static_cast<int>(rows.size()) ? rows[l - 1][column] : 0;
  }
  friend bool operator==(const LedTable&, const LedTable&) = default;
};

struct LocalEnergyDistribution {
  int rank = 0;
  std::vector<LedTable> tables;  // tables[a - 1] for a = 1..rank

  const LedTable& table(int level) const { return tables.at(level - 1); }
  friend bool operator==(const LocalEnergyDistribution&,
                         const LocalEnergyDistribution&) = default;
};

/// The column ids of p in lexicographic order.
std::vector<ColumnId> led_columns(const Path& p);

LedTable led_table(const Path& p, int level);
LocalEnergyDistribution local_energy_distribution(const Path& p);

/// E_l^(a) = Σ_j H(u_{l,j-1}^(a) ⊗ b_j).
int total_energy(const Path& p, int level, int width);

}  // namespace kss
