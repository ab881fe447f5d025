#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace kss {

using Letter = int;

/// A finite sequence of letters; row words are read bottom row first.
using Word = std::vector<Letter>;

/// Position of a box: 1-based row from the top, 1-based column from the left.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Semistandard Young tableau over the alphabet {1, ..., rank + 1}.
///
/// Rows weakly increase, columns strictly increase and row lengths weakly
/// decrease from top to bottom. The empty tableau (no rows) is a valid value.
/// Construction validates and throws std::invalid_argument on violation.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(int rank);
  Tableau(int rank, std::vector<std::vector<Letter>> rows);

  int rank() const { return rank_; }
  const std::vector<std::vector<Letter>>& rows() const { return rows_; }

  /// Number of rows.
  int height() const { return static_cast<int>(rows_.size()); }
  /// Length of the first row (0 for the empty tableau).
  int width() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  std::size_t size() const;
  bool empty() const { return rows_.empty(); }
  bool is_rectangular() const;
  std::vector<int> shape() const;

  Letter at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  int rank_ = 0;
  std::vector<std::vector<Letter>> rows_;
};

/// Letters of the rows from the bottom row to the top row, each left to right.
Word row_word(const Tableau& t);

/// Schensted row insertion (t <- x). Returns the new tableau and the added box.
std::pair<Tableau, Cell> insert(const Tableau& t, Letter x);

/// Left-to-right fold of insert over the letters of w.
Tableau insert_word(const Tableau& t, const Word& w);

/// Inverse of insert: removes the corner box c by reverse bumping and returns
/// the ejected letter. Throws std::invalid_argument("not a corner").
std::pair<Tableau, Letter> inverse_insert(const Tableau& t, Cell c);

/// u_l^(a): the element of B^{a,l} whose i-th row holds only the letter i.
Tableau highest_element(int level, int width, int rank);

/// Every element of B^{r,s} over {1..n+1}, sorted lexicographically by
/// row word.
std::vector<Tableau> enumerate_kr(int r, int s, int rank);

std::ostream& operator<<(std::ostream& os, const Tableau& t);

namespace detail {

// Unchecked row arithmetic shared by insertion-based algorithms.
using Rows = std::vector<std::vector<Letter>>;

Cell bump(Rows& rows, Letter x);
Letter unbump(Rows& rows, Cell c);
bool is_semistandard(const Rows& rows, int rank);

}  // namespace detail

}  // namespace kss
