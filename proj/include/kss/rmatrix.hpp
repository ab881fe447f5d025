#pragma once

#include <utility>

#include "kss/tableau.hpp"

namespace kss {

/// b ⊗ b' with b ∈ B^{r,s} on the left and b' ∈ B^{r',s'} on the right.
struct TensorPair {
  Tableau left;
  Tableau right;
  friend bool operator==(const TensorPair&, const TensorPair&) = default;
};

/// Image of the combinatorial R together with the energy of the source pair.
struct RImage {
  TensorPair pair;
  int energy = 0;
};

/// (right <- row(left)). Both sides of an R-isomorphism share this tableau.
Tableau product_tableau(const Tableau& left, const Tableau& right);

/// Number of boxes of the product tableau outside the row-wise sum of the two
/// rectangular shapes.
int energy(const Tableau& left, const Tableau& right);

/// Combinatorial R: B^{r,s} ⊗ B^{r',s'} -> B^{r',s'} ⊗ B^{r,s}.
///
/// The product tableau is split into its upper-left (s^r) part and the
/// complement; the complement is peeled into vertical r'-strips (each taken
/// as high as possible) and unbumped in label order. The ejected letters,
/// reinserted in reverse, give the new left factor; the residue is the new
/// right factor.
RImage combinatorial_r(const Tableau& left, const Tableau& right);

inline TensorPair apply_r(const TensorPair& p) { return combinatorial_r(p.left, p.right).pair; }
inline int energy(const TensorPair& p) { return energy(p.left, p.right); }

/// b[d]: an element of the affinization Aff(B).
struct AffineElement {
  Tableau tableau;
  long mode = 0;
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// b[d] ⊗ b'[d'] -> b̃'[d' - H] ⊗ b̃[d + H].
std::pair<AffineElement, AffineElement> apply_affine_r(const AffineElement& x,
                                                       const AffineElement& y);

}  // namespace kss
