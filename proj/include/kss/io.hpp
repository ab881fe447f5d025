#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kss/evolution.hpp"
#include "kss/rigged.hpp"
#include "kss/rmatrix.hpp"
#include "kss/tableau.hpp"

namespace kss::io {

using json = nlohmann::json;

/// Input that is not well-formed: bad JSON syntax or a document whose
/// structure does not match the expected schema. The message names the
/// location (line/column or JSON pointer).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input describing an object that violates its invariants
/// (a non-semistandard tableau, an invalid rigged configuration, ...).
class ContentError : public std::runtime_error {
 public:
  explicit ContentError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

json parse(std::string_view text);

// Tableau: {"n": 3, "rows": [[1,1],[2,4]]}
json to_json(const Tableau& t);
/// `where` prefixes error locations when the tableau is embedded in a larger
/// document.
Tableau tableau_from_json(const json& j, const std::string& where = "");

// Element of Aff(B): a tableau object with an optional integer "mode".
json to_json(const AffineElement& x);
AffineElement affine_from_json(const json& j, const std::string& where = "");

// Path: {"n": 3, "factors": [[[1,1],[2,4]], [[3,4],[4,5],[5,6]]]}
json to_json(const Path& p);
Path path_from_json(const json& j);

// Rigged configuration:
//   {"n": 4, "nu": [[4],[4],[2],[]],
//    "mu": [{"rows": [[3,1]]}, ...],
//    "quantum_space": [[0,4],[2,2],[1,4]]}
// "nu" lists ν^(0..n-1). "quantum_space" is optional and fixes the
// provenance order as [level, length] pairs; without it the rows are taken
// level by level in ascending order.
json to_json(const RiggedConfiguration& rc);
RiggedConfiguration rc_from_json(const json& j);

// LED: [{"a": 1, "rows": [[...], ...], "columns": [[j,k], ...]}, ...]
json to_json(const LocalEnergyDistribution& led);
LocalEnergyDistribution led_from_json(const json& j);

/// One-line form: rows joined by '/', e.g. "12/23/34".
std::string compact(const Tableau& t);
/// Factors in compact form joined by " (x) ".
std::string compact(const Path& p);

/// Rows of the tableau, one per line, entries separated by spaces.
std::string render(const Tableau& t);

/// Bordered table with one block per path factor, e.g.
///   a=1:
///   +-------+---+
///   |0 0 0 0|1 0|
///   +-------+---+
std::string render(const LedTable& table);
std::string render(const LocalEnergyDistribution& led);

/// Quantum space followed by each configuration, longest row first, one row
/// per line with the vacancy number on the left and the rigging on the right.
std::string render(const RiggedConfiguration& rc);

}  // namespace kss::io
