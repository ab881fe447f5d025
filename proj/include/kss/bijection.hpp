#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kss/evolution.hpp"
#include "kss/rigged.hpp"
#include "kss/tableau.hpp"

namespace kss {

/// A chain of positive LED entries, one per row 1..length, ending at
/// (row = length, column = endpoint). It becomes a row of μ^(level).
struct SolitonGroup {
  int level = 0;
  int length = 0;
  ColumnId endpoint;
  std::size_t endpoint_index = 0;  // position of `endpoint` in the table's columns
  friend bool operator==(const SolitonGroup&, const SolitonGroup&) = default;
};

/// How a chain may move when it descends one row.
///
/// `strict` only looks at columns strictly right of the current one. Two
/// entries stacked in one LED column come from boxes removed while
/// reconstructing the same path column, and those always belong to different
/// rows of μ^(a). `weak` also admits the current column; it agrees with
/// `strict` on many paths but merges such stacked entries, which makes phi
/// non-injective (e.g. n = 3, 1 ⊗ 12 ⊗ 2/3 ⊗ 3/4 and 1 ⊗ 12 ⊗ 3/4 ⊗ 2/3).
enum class Descent { strict, weak };

/// Repeatedly takes the rightmost positive entry of the top row, descends
/// taking the rightmost positive entry of each next row permitted by
/// `descent`, records the endpoint and decrements the chain, until the table
/// is zero.
std::vector<SolitonGroup> extract_groups(const LedTable& table, Descent descent = Descent::strict);

/// Rigging of a group as quantum-space term plus LED term.
struct RiggingTerms {
  int quantum = 0;  // Σ_{i<j} δ_{α_i,a} min(μ, β_i) + δ_{α_j,a} min(μ, k)
  int energy = 0;   // Σ over the upper-left block of ε^(a-1) - 2ε^(a) + ε^(a+1)
  int total() const { return quantum + energy; }
};

RiggingTerms compute_rigging(const Path& p, const LocalEnergyDistribution& led,
                             const SolitonGroup& group);

/// ν rows read off the factor shapes, left to right: B^{a+1,s} contributes s
/// to ν^(a).
std::vector<QuantumRow> quantum_space_of(const Path& p);

/// Path -> (unrestricted) rigged configuration via energy functions.
RiggedConfiguration phi(const Path& p);

/// Diagnostic record of one box-removal step of phi_inverse.
struct RemovalStep {
  struct Removed {
    int level = 0;   // configuration level
    int column = 0;  // column of the removed box (row length before removal)
  };
  struct Snapshot {
    int level = 0;
    int length = 0;
    int vacancy = 0;
    int rigging = 0;
  };
  int start_level = 0;  // level i of the quantum box x^(i)
  int start_column = 0;
  std::vector<Removed> removed;
  Letter output = 0;              // j_i
  std::vector<Snapshot> before;   // every configuration row prior to the step
};

/// One column of a reconstructed factor.
struct ColumnTrace {
  std::size_t quantum_row = 0;  // index into RiggedConfiguration::quantum_space()
  std::vector<RemovalStep> steps;
};

struct RemovalTrace {
  std::vector<ColumnTrace> columns;
};

/// Box-removal reconstruction. `order` lists quantum_space() indices in
/// removal order (first removed becomes the rightmost factor); empty means
/// reverse provenance order. Throws std::invalid_argument if rc fails
/// unrestricted validation or the order is not a permutation.
Path phi_inverse(const RiggedConfiguration& rc, std::span<const std::size_t> order = {},
                 RemovalTrace* trace = nullptr);

/// Removes quantum rows a then b, and b then a, and checks b_1 ⊗ a_1 ≃ a_2 ⊗ b_2.
bool removal_order_equivalence(const RiggedConfiguration& rc, std::size_t row_a,
                               std::size_t row_b);

}  // namespace kss
