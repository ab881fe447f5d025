#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kss/evolution.hpp"
#include "kss/rmatrix.hpp"

namespace kss::verify {

/// Size caps for the exhaustive families.
struct Bounds {
  int max_n = 3;  // largest rank
  int max_l = 4;  // longest single-box path
  int max_s = 2;  // widest factor in two-factor paths
};

struct Failure {
  std::string input;
  std::string detail;
};

struct Report {
  std::string suite;
  long cases = 0;
  long failed = 0;
  std::vector<Failure> failures;  // the first few, in enumeration order
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

/// A factor shape B^{rows, cols}.
using Shape = std::pair<int, int>;

/// Every path in B^{shapes[0]} ⊗ B^{shapes[1]} ⊗ ... over {1..rank+1}, in
/// lexicographic order of the factor enumerations.
std::vector<Path> all_paths(int rank, std::span<const Shape> shapes);

/// B^{1,1}^{⊗L} for 1 <= L <= max_l, 1 <= n <= max_n.
std::vector<Path> single_box_family(const Bounds& b);
/// B^{r,s} ⊗ B^{r',s'} for r, r' <= n, s, s' <= max_s, 1 <= n <= max_n.
std::vector<Path> two_factor_family(const Bounds& b);

/// Highest weight test through the plactic monoid: the insertion tableau of
/// row(b_L) ... row(b_1) must have only the letter i in row i.
bool is_highest_weight(const Path& p);

/// p ⊗ u_l^(a). The R-matrix on B^{a,l} ⊗ B^{a,l} is the identity, so the
/// carrier of T_l^(a) always leaves this path as u_l^(a).
Path with_vacuum(const Path& p, int level, int width);

// Single-case checks. Each returns a description of the first discrepancy,
// or nullopt when the property holds.
using Outcome = std::optional<std::string>;

/// (R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R) on Aff(B) ⊗ Aff(B') ⊗ Aff(B''),
/// modes included.
Outcome check_yang_baxter(const AffineElement& x, const AffineElement& y,
                          const AffineElement& z);
/// R∘R = id, equal product tableaux, letter conservation, mode-sum
/// conservation under the affine lift.
Outcome check_involution(const Tableau& left, const Tableau& right);
/// phi_inverse(phi(p)) = p, phi(p) passes unrestricted validation, and
/// restricted validation when p is highest weight.
Outcome check_roundtrip(const Path& p);
/// E_l^(a)(p) = Q_l^(a)(phi(p)) for every level and every l up to
/// stabilisation; LED entries are non-negative.
Outcome check_energy_equals_q(const Path& p);
/// E_l^(r)(u_k^(a) ⊗ p) = E_l^(r)(p) = E_l^(r)(p ⊗ u_k^(a)) for r, a <= n,
/// l <= 3, k <= 2.
Outcome check_vacuum_energy(const Path& p);
/// removal_order_equivalence on phi(p) for every ordered pair of quantum rows.
Outcome check_removal_order(const Path& p);
/// Energies are unchanged when R is applied to any adjacent pair of factors.
Outcome check_r_invariance(const Path& p);
/// phi(T_l^(a)(p)) is phi(p) with r_i^(a) raised by min(l, μ_i^(a)). Requires
/// the carrier to return to u_l^(a); otherwise that is reported.
Outcome check_linearization(const Path& p, int level, int width);

/// u ⊗ v ≃ v ⊗ u with H = 0 (used for pairs of highest elements and for a
/// highest element passing an A_1-reducible one).
Outcome check_trivial_swap(const Tableau& u, const Tableau& v);
/// For v, v' ∈ B^{a+1,s}, B^{a+1,s'} whose upper a rows are highest and whose
/// bottom rows are the words w, w' over {a+1, a+2}: R and H agree with the
/// rank-1 computation on w - a, w' - a.
Outcome check_a1_reduction(int a, const Word& w, const Word& w2, int rank);
/// Non-decreasing words of length s over {lo, lo + 1}.
std::vector<Word> two_letter_rows(int s, Letter lo);

/// Lemma-style statements over highest elements and the A_1-reducible
/// elements of B^{a+1,s}; cases are enumerated from the bounds.
Report lemma_report(const Bounds& b);

const std::vector<std::string>& suite_names();

/// Runs one named suite ("yang-baxter", "involution", "lemmas", "energy-q",
/// "roundtrip", "removal-order", "r-invariance", "linearization").
/// Throws std::invalid_argument for an unknown name.
Report run_suite(std::string_view name, const Bounds& b);

}  // namespace kss::verify
