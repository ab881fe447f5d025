#include "kss/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kss {

namespace {

void check_pair(const Tableau& left, const Tableau& right) {
  if (!left.is_rectangular() || !right.is_rectangular())
    throw std::invalid_argument("tensor factors must be rectangular");
  if (left.rank() != right.rank())
    throw std::invalid_argument("tensor factors must share the same alphabet");
}

int count_outside(const detail::Rows& product, const Tableau& left, const Tableau& right) {
  int outside = 0;
  for (int i = 0; i < static_cast<int>(product.size()); ++i) {
    const int bound = (i < left.height() ? left.width() : 0) +
                      (i < right.height() ? right.width() : 0);
    outside += std::max(0, static_cast<int>(product[i].size()) - bound);
  }
  return outside;
}

detail::Rows product_rows(const Tableau& left, const Tableau& right) {
  auto rows = right.rows();
  for (Letter x : row_word(left)) detail::bump(rows, x);
  return rows;
}

// Orders the boxes of Y \ (s^r) for unbumping: peel vertical strips of
// `strip` boxes, each scanning rows top to bottom and taking the last box of
// every row still outside the rectangle; boxes within a strip are labelled
// bottom to top.
std::vector<Cell> unbump_order(const detail::Rows& y, int r, int s, int strip) {
  std::vector<int> len(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) len[i] = static_cast<int>(y[i].size());
  auto floor = [&](std::size_t i) { return static_cast<int>(i) < r ? s : 0; };

  for (std::size_t i = 0; i < y.size(); ++i)
    if (len[i] < floor(i)) throw std::logic_error("malformed complement");

  std::vector<Cell> order;
  for (;;) {
    std::vector<Cell> picked;
    for (std::size_t i = 0; i < len.size() && static_cast<int>(picked.size()) < strip; ++i)
      if (len[i] > floor(i)) picked.push_back({static_cast<int>(i) + 1, len[i]});
    if (picked.empty()) break;
    if (static_cast<int>(picked.size()) != strip) throw std::logic_error("malformed complement");
    for (const Cell& c : picked) --len[c.row - 1];
    for (std::size_t i = 1; i < len.size(); ++i)
      if (len[i] > len[i - 1]) throw std::logic_error("malformed complement");
    order.insert(order.end(), picked.rbegin(), picked.rend());
  }
  return order;
}

}  // namespace

Tableau product_tableau(const Tableau& left, const Tableau& right) {
  check_pair(left, right);
  return Tableau(right.rank(), product_rows(left, right));
}

int energy(const Tableau& left, const Tableau& right) {
  check_pair(left, right);
  return count_outside(product_rows(left, right), left, right);
}

RImage combinatorial_r(const Tableau& left, const Tableau& right) {
  check_pair(left, right);
  if (left.empty() || right.empty()) return {{right, left}, 0};

  auto y = product_rows(left, right);
  const int h = count_outside(y, left, right);
  const auto order = unbump_order(y, left.height(), left.width(), right.height());

  Word ejected;
  ejected.reserve(order.size());
  for (const Cell& c : order) ejected.push_back(detail::unbump(y, c));

  detail::Rows new_left;
  for (auto it = ejected.rbegin(); it != ejected.rend(); ++it) detail::bump(new_left, *it);

  Tableau image_left(right.rank(), std::move(new_left));
  Tableau image_right(right.rank(), std::move(y));
  if (image_left.height() != right.height() || image_left.width() != right.width() ||
      !image_left.is_rectangular() || image_right.height() != left.height() ||
      image_right.width() != left.width() || !image_right.is_rectangular())
    throw std::logic_error("malformed complement");
  return {{std::move(image_left), std::move(image_right)}, h};
}

std::pair<AffineElement, AffineElement> apply_affine_r(const AffineElement& x,
                                                       const AffineElement& y) {
  auto [pair, h] = combinatorial_r(x.tableau, y.tableau);
  return {{std::move(pair.left), y.mode - h}, {std::move(pair.right), x.mode + h}};
}

}  // namespace kss
