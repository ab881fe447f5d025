#include "kss/tableau.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kss {

namespace detail {

bool is_semistandard(const Rows& rows, int rank) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.empty()) return false;
    if (i > 0 && row.size() > rows[i - 1].size()) return false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 1 || row[k] > rank + 1) return false;
      if (k > 0 && row[k] < row[k - 1]) return false;
      if (i > 0 && row[k] <= rows[i - 1][k]) return false;
    }
  }
  return true;
}

Cell bump(Rows& rows, Letter x) {
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(i) + 1, 1};
    }
    auto& row = rows[i];
    // leftmost entry strictly larger than x
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(i) + 1, static_cast<int>(row.size())};
    }
    std::swap(*it, x);
  }
}

Letter unbump(Rows& rows, Cell c) {
  const auto r = static_cast<std::size_t>(c.row - 1);
  Letter y = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  for (std::size_t i = r; i-- > 0;) {
    auto& row = rows[i];
    // rightmost entry strictly smaller than y
    auto it = std::lower_bound(row.begin(), row.end(), y);
    --it;
    std::swap(*it, y);
  }
  return y;
}

}  // namespace detail

Tableau::Tableau(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
}

Tableau::Tableau(int rank, std::vector<std::vector<Letter>> rows)
    : rank_(rank), rows_(std::move(rows)) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (!detail::is_semistandard(rows_, rank_))
    throw std::invalid_argument("rows do not form a semistandard tableau over 1.." +
                                std::to_string(rank_ + 1));
}

std::size_t Tableau::size() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool Tableau::is_rectangular() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [w = rows_.empty() ? 0 : rows_.front().size()](const auto& row) {
                       return row.size() == w;
                     });
}

std::vector<int> Tableau::shape() const {
  std::vector<int> lambda;
  lambda.reserve(rows_.size());
  for (const auto& row : rows_) lambda.push_back(static_cast<int>(row.size()));
  return lambda;
}

Word row_word(const Tableau& t) {
  Word w;
  w.reserve(t.size());
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

namespace {

void check_letter(const Tableau& t, Letter x) {
  if (x < 1 || x > t.rank() + 1)
    throw std::invalid_argument("letter " + std::to_string(x) + " outside alphabet 1.." +
                                std::to_string(t.rank() + 1));
}

}  // namespace

std::pair<Tableau, Cell> insert(const Tableau& t, Letter x) {
  check_letter(t, x);
  auto rows = t.rows();
  const Cell added = detail::bump(rows, x);
  return {Tableau(t.rank(), std::move(rows)), added};
}

Tableau insert_word(const Tableau& t, const Word& w) {
  auto rows = t.rows();
  for (Letter x : w) {
    check_letter(t, x);
    detail::bump(rows, x);
  }
  return Tableau(t.rank(), std::move(rows));
}

std::pair<Tableau, Letter> inverse_insert(const Tableau& t, Cell c) {
  const auto& rows = t.rows();
  const bool corner = c.row >= 1 && c.row <= t.height() &&
                      c.col == static_cast<int>(rows[c.row - 1].size()) &&
                      (c.row == t.height() || static_cast<int>(rows[c.row].size()) < c.col);
  if (!corner) throw std::invalid_argument("not a corner");
  auto work = rows;
  const Letter x = detail::unbump(work, c);
  return {Tableau(t.rank(), std::move(work)), x};
}

Tableau highest_element(int level, int width, int rank) {
  if (level < 1 || level > rank)
    throw std::invalid_argument("level must lie in 1..rank");
  if (width < 1) throw std::invalid_argument("width must be positive");
  std::vector<std::vector<Letter>> rows(level);
  for (int i = 0; i < level; ++i) rows[i].assign(width, i + 1);
  return Tableau(rank, std::move(rows));
}

namespace {

// Fills the r x s rectangle in row-major order; each cell is bounded below by
// its left and upper neighbours and above by the room the column still needs.
void fill(std::vector<std::vector<Letter>>& rows, int cell, int r, int s, int rank,
          std::vector<Tableau>& out) {
  if (cell == r * s) {
    out.emplace_back(rank, rows);
    return;
  }
  const int i = cell / s;
  const int k = cell % s;
  int lo = 1;
  if (k > 0) lo = std::max(lo, rows[i][k - 1]);
  if (i > 0) lo = std::max(lo, rows[i - 1][k] + 1);
  const int hi = rank + 1 - (r - 1 - i);
  for (Letter x = lo; x <= hi; ++x) {
    rows[i][k] = x;
    fill(rows, cell + 1, r, s, rank, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_kr(int r, int s, int rank) {
  // r = rank + 1 (a full column, one element) is accepted for completeness.
  if (r < 1 || r > rank + 1) throw std::invalid_argument("row count must lie in 1..rank+1");
  if (s < 1) throw std::invalid_argument("width must be positive");
  std::vector<std::vector<Letter>> rows(r, std::vector<Letter>(s, 0));
  std::vector<Tableau> out;
  fill(rows, 0, r, s, rank, out);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return row_word(a) < row_word(b);
  });
  return out;
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) {
  if (t.empty()) return os << "()";
  const bool wide = t.rank() + 1 > 9;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i > 0) os << '/';
    const auto& row = t.rows()[i];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (wide && k > 0) os << ',';
      os << row[k];
    }
  }
  return os;
}

}  // namespace kss
