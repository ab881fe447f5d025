#include "kss/evolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "kss/rmatrix.hpp"

namespace kss {

Path::Path(int rank, std::vector<Tableau> factors) : rank_(rank), factors_(std::move(factors)) {
  if (rank_ < 1) throw std::invalid_argument("rank must be at least 1");
  for (const auto& b : factors_) {
    if (b.empty() || !b.is_rectangular())
      throw std::invalid_argument("path factors must be non-empty rectangular tableaux");
    if (b.rank() != rank_) throw std::invalid_argument("path factor has a different rank");
    if (b.height() > rank_) throw std::invalid_argument("path factor taller than the rank");
  }
}

int Path::boxes() const {
  int total = 0;
  for (const auto& b : factors_) total += static_cast<int>(b.size());
  return total;
}

Tableau column_prefix(const Tableau& b, int k) {
  if (k < 0 || k > b.width()) throw std::out_of_range("column prefix out of range");
  if (k == 0) return Tableau(b.rank());
  std::vector<std::vector<Letter>> rows;
  rows.reserve(b.rows().size());
  for (const auto& row : b.rows()) rows.emplace_back(row.end() - k, row.end());
  return Tableau(b.rank(), std::move(rows));
}

CarrierStep carrier_pass(const Tableau& carrier, const Tableau& b) {
  auto [pair, h] = combinatorial_r(carrier, b);
  return {std::move(pair.left), std::move(pair.right)};
}

Evolution time_evolution(const Path& p, int level, int width) {
  Tableau u = highest_element(level, width, p.rank());
  std::vector<Tableau> out;
  out.reserve(p.length());
  for (const auto& b : p.factors()) {
    auto step = carrier_pass(u, b);
    out.push_back(std::move(step.emitted));
    u = std::move(step.carrier);
  }
  return {Path(p.rank(), std::move(out)), std::move(u)};
}

namespace {

// One row l of the energy matrix: [j][k] for k = 0..β_j.
std::vector<std::vector<int>> energy_row(const Path& p, int level, int l) {
  std::vector<std::vector<int>> row(p.length());
  if (l == 0) {
    for (std::size_t j = 0; j < p.length(); ++j) row[j].assign(p[j].width() + 1, 0);
    return row;
  }
  Tableau u = highest_element(level, l, p.rank());
  for (std::size_t j = 0; j < p.length(); ++j) {
    const Tableau& b = p[j];
    auto& e = row[j];
    e.assign(b.width() + 1, 0);
    for (int k = 1; k < b.width(); ++k) e[k] = energy(u, column_prefix(b, k));
    auto full = combinatorial_r(u, b);
    e[b.width()] = full.energy;
    u = std::move(full.pair.right);
  }
  return row;
}

void check_level(const Path& p, int level) {
  if (level < 1 || level > p.rank()) throw std::invalid_argument("level must lie in 1..rank");
}

}  // namespace

EnergyMatrix::EnergyMatrix(const Path& p, int level, int l_max) : level_(level) {
  check_level(p, level);
  if (l_max < 1) throw std::invalid_argument("l_max must be positive");
  values_.reserve(l_max + 1);
  for (int l = 0; l <= l_max; ++l) values_.push_back(energy_row(p, level, l));
}

std::vector<ColumnId> led_columns(const Path& p) {
  std::vector<ColumnId> cols;
  for (std::size_t j = 0; j < p.length(); ++j)
    for (int k = 1; k <= p[j].width(); ++k) cols.push_back({static_cast<int>(j) + 1, k});
  return cols;
}

LedTable led_table(const Path& p, int level) {
  check_level(p, level);
  LedTable table{level, led_columns(p), {}};
  const int cap = 1 + p.boxes();
  auto below = energy_row(p, level, 0);
  for (int l = 1;; ++l) {
    if (l > cap) throw std::logic_error("local energy distribution did not terminate");
    auto above = energy_row(p, level, l);
    std::vector<int> eps;
    eps.reserve(table.columns.size());
    for (std::size_t j = 0; j < p.length(); ++j)
      for (int k = 1; k <= p[j].width(); ++k)
        eps.push_back((above[j][k] - above[j][k - 1]) - (below[j][k] - below[j][k - 1]));
    const bool zero = std::all_of(eps.begin(), eps.end(), [](int e) { return e == 0; });
    table.rows.push_back(std::move(eps));
    if (zero) break;
    below = std::move(above);
  }
  return table;
}

LocalEnergyDistribution local_energy_distribution(const Path& p) {
  LocalEnergyDistribution led{p.rank(), {}};
  led.tables.reserve(p.rank());
  for (int a = 1; a <= p.rank(); ++a) led.tables.push_back(led_table(p, a));
  return led;
}

int total_energy(const Path& p, int level, int width) {
  check_level(p, level);
  if (width == 0) return 0;
  Tableau u = highest_element(level, width, p.rank());
  int total = 0;
  for (const auto& b : p.factors()) {
    auto step = combinatorial_r(u, b);
    total += step.energy;
    u = std::move(step.pair.right);
  }
  return total;
}

}  // namespace kss
