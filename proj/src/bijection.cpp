#include "kss/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "kss/rmatrix.hpp"

namespace kss {

std::vector<SolitonGroup> extract_groups(const LedTable& table, Descent descent) {
  auto rows = table.rows;
  long remaining = 0;
  for (const auto& row : rows)
    for (int e : row) {
      if (e < 0) throw std::invalid_argument("local energy distribution has a negative entry");
      remaining += e;
    }

  auto rightmost_positive = [](const std::vector<int>& row,
                               std::size_t from) -> std::optional<std::size_t> {
    for (std::size_t c = row.size(); c-- > from;)
      if (row[c] > 0) return c;
    return std::nullopt;
  };

  std::vector<SolitonGroup> groups;
  const long budget = remaining;
  while (remaining > 0) {
    if (static_cast<long>(groups.size()) >= budget)
      throw std::logic_error("group extraction did not exhaust the table");
    auto col = rows.empty() ? std::nullopt : rightmost_positive(rows.front(), 0);
    if (!col) throw std::logic_error("positive entries below an empty top row");
    std::vector<std::size_t> chain{*col};
    for (std::size_t l = 1; l < rows.size(); ++l) {
      auto next = rightmost_positive(rows[l], chain.back() + (descent == Descent::strict ? 1 : 0));
      if (!next) break;
      chain.push_back(*next);
    }
    for (std::size_t l = 0; l < chain.size(); ++l) --rows[l][chain[l]];
    remaining -= static_cast<long>(chain.size());
    groups.push_back({table.level, static_cast<int>(chain.size()), table.columns[chain.back()],
                      chain.back()});
  }
  return groups;
}

RiggingTerms compute_rigging(const Path& p, const LocalEnergyDistribution& led,
                             const SolitonGroup& group) {
  const int a = group.level;
  const int mu = group.length;
  const auto [j, k] = group.endpoint;

  RiggingTerms terms;
  for (int i = 1; i < j; ++i)
    if (p[i - 1].height() == a) terms.quantum += std::min(mu, p[i - 1].width());
  if (p[j - 1].height() == a) terms.quantum += std::min(mu, k);

  const LedTable* lower = a > 1 ? &led.table(a - 1) : nullptr;
  const LedTable& here = led.table(a);
  const LedTable* upper = a < led.rank ? &led.table(a + 1) : nullptr;
  for (std::size_t c = 0; c <= group.endpoint_index; ++c)
    for (int l = 1; l <= mu; ++l)
      terms.energy += (lower ? lower->at(l, c) : 0) - 2 * here.at(l, c) +
                      (upper ? upper->at(l, c) : 0);
  return terms;
}

std::vector<QuantumRow> quantum_space_of(const Path& p) {
  std::vector<QuantumRow> rows;
  rows.reserve(p.length());
  for (std::size_t j = 0; j < p.length(); ++j)
    rows.push_back({p[j].height() - 1, p[j].width(), static_cast<int>(j)});
  return rows;
}

RiggedConfiguration phi(const Path& p) {
  const auto led = local_energy_distribution(p);
  std::vector<std::vector<ConfigRow>> config(p.rank());
  for (int a = 1; a <= p.rank(); ++a)
    for (const auto& g : extract_groups(led.table(a)))
      config[a - 1].push_back({g.length, compute_rigging(p, led, g).total()});
  return RiggedConfiguration(p.rank(), quantum_space_of(p), std::move(config));
}

namespace {

// Mutable snapshot used while boxes are removed. Levels 0 and n+1 of `mu`
// are permanently empty sentinels.
struct Workspace {
  int rank;
  std::vector<std::vector<int>> nu;
  std::vector<std::vector<ConfigRow>> mu;

  explicit Workspace(const RiggedConfiguration& rc)
      : rank(rc.rank()), nu(rc.rank()), mu(rc.rank() + 2) {
    for (const auto& q : rc.quantum_space()) nu[q.level].push_back(q.length);
    for (int a = 1; a <= rank; ++a) mu[a] = rc.mu(a);
  }

  int vacancy(int level, int l) const {
    return vacancy_number(nu[level - 1], mu[level - 1], mu[level], mu[level + 1], l);
  }

  std::vector<RemovalStep::Snapshot> snapshot() const {
    std::vector<RemovalStep::Snapshot> out;
    for (int a = 1; a <= rank; ++a)
      for (const auto& row : mu[a]) out.push_back({a, row.length, vacancy(a, row.length), row.rigging});
    return out;
  }

  using Chosen = std::vector<std::pair<int, std::size_t>>;

  // Step 1 from a quantum box in column `threshold` at `level`: the chain of
  // shortest singular rows, each not shorter than the previous choice.
  Chosen choose_chain(int level, int threshold) const {
    Chosen chosen;
    int len = threshold;
    for (int j = level + 1; j <= rank; ++j) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < mu[j].size(); ++i) {
        const auto& row = mu[j][i];
        if (row.length < len || row.rigging != vacancy(j, row.length)) continue;
        if (!best || row.length < mu[j][*best].length) best = i;
      }
      if (!best) break;
      chosen.emplace_back(j, *best);
      len = mu[j][*best].length;
    }
    return chosen;
  }

  // Step 2 on the configuration side, after the quantum space was updated:
  // shortened rows take their new vacancy number as rigging.
  void settle(const Chosen& chosen) {
    for (auto [j, i] : chosen)
      if (mu[j][i].length > 0) mu[j][i].rigging = vacancy(j, mu[j][i].length);
    for (auto [j, i] : chosen)
      std::erase_if(mu[j], [](const ConfigRow& r) { return r.length == 0; });
  }
};

std::vector<Tableau> reconstruct(const RiggedConfiguration& rc,
                                 std::span<const std::size_t> order, RemovalTrace* trace) {
  Workspace ws(rc);
  std::vector<Tableau> produced;
  produced.reserve(order.size());

  for (std::size_t q : order) {
    const QuantumRow& row = rc.quantum_space()[q];
    const int a = row.level;
    auto& level_rows = ws.nu[a];
    const auto idx = static_cast<std::size_t>(
        std::find(level_rows.begin(), level_rows.end(), row.length) - level_rows.begin());
    if (idx == level_rows.size()) throw std::logic_error("quantum row vanished during removal");

    std::vector<std::vector<Letter>> columns;
    while (level_rows[idx] > 0) {
      ColumnTrace* col_trace = nullptr;
      if (trace) {
        trace->columns.push_back({q, {}});
        col_trace = &trace->columns.back();
      }
      std::vector<Letter> column(a + 1);
      for (int i = a; i >= 0; --i) {
        const int threshold = i == a ? level_rows[idx] : 1;
        RemovalStep step;
        RemovalStep* sp = nullptr;
        if (col_trace) {
          step.start_level = i;
          step.start_column = threshold;
          step.before = ws.snapshot();
          sp = &step;
        }
        const auto chosen = ws.choose_chain(i, threshold);
        const auto out = static_cast<Letter>(i + 1 + chosen.size());
        column[i] = out;
        for (auto [j, r] : chosen) {
          if (sp) sp->removed.push_back({j, ws.mu[j][r].length});
          --ws.mu[j][r].length;
        }
        if (i == a)
          --level_rows[idx];
        else
          ws.nu[i].pop_back();
        if (i > 0) ws.nu[i - 1].push_back(1);
        ws.settle(chosen);

        if (sp) {
          step.output = out;
          col_trace->steps.push_back(std::move(step));
        }
      }
      for (int i = 1; i <= a; ++i)
        if (column[i] <= column[i - 1]) throw std::logic_error("reconstructed column is not strict");
      columns.push_back(std::move(column));
    }
    level_rows.erase(level_rows.begin() + static_cast<std::ptrdiff_t>(idx));

    std::vector<std::vector<Letter>> rows(a + 1);
    for (int r = 0; r <= a; ++r)
      for (const auto& c : columns) rows[r].push_back(c[r]);
    try {
      produced.emplace_back(rc.rank(), std::move(rows));
    } catch (const std::invalid_argument&) {
      throw std::logic_error("reconstructed factor is not semistandard");
    }
  }

  if (order.size() == rc.quantum_space().size())
    for (int a = 1; a <= ws.rank; ++a)
      if (!ws.mu[a].empty())
        throw std::invalid_argument("configuration not exhausted by the quantum space");
  return produced;
}

void require_valid(const RiggedConfiguration& rc) {
  const auto violations = validate(rc, Validity::unrestricted);
  if (violations.empty()) return;
  std::string msg = "invalid rigged configuration:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw std::invalid_argument(msg);
}

void require_distinct(std::span<const std::size_t> order, std::size_t size) {
  std::vector<bool> seen(size, false);
  for (std::size_t q : order) {
    if (q >= size || seen[q])
      throw std::invalid_argument("removal order must list distinct quantum-space rows");
    seen[q] = true;
  }
}

}  // namespace

Path phi_inverse(const RiggedConfiguration& rc, std::span<const std::size_t> order,
                 RemovalTrace* trace) {
  require_valid(rc);
  const std::size_t m = rc.quantum_space().size();
  std::vector<std::size_t> plan(order.begin(), order.end());
  if (plan.empty()) {
    plan.resize(m);
    std::iota(plan.rbegin(), plan.rend(), std::size_t{0});
  }
  if (plan.size() != m) throw std::invalid_argument("removal order must cover every quantum-space row");
  require_distinct(plan, m);

  auto factors = reconstruct(rc, plan, trace);
  std::reverse(factors.begin(), factors.end());
  return Path(rc.rank(), std::move(factors));
}

bool removal_order_equivalence(const RiggedConfiguration& rc, std::size_t row_a,
                               std::size_t row_b) {
  require_valid(rc);
  const std::size_t ab[] = {row_a, row_b};
  const std::size_t ba[] = {row_b, row_a};
  require_distinct(ab, rc.quantum_space().size());
  const auto first = reconstruct(rc, ab, nullptr);   // a_1, b_1
  const auto second = reconstruct(rc, ba, nullptr);  // b_2, a_2
  const auto image = combinatorial_r(first[1], first[0]).pair;
  return image.left == second[1] && image.right == second[0];
}

}  // namespace kss
