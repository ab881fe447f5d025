#include "kss/io.hpp"

#include <algorithm>
#include <sstream>

namespace kss::io {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Structural accessors. `where` is the JSON pointer of `j`.
const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing field \"" + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  return j;
}

long integer_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<long>();
}

int small_int(const json& j, const std::string& where) {
  const long v = integer_at(j, where);
  if (v < -1000000 || v > 1000000) throw FormatError(where + ": integer out of range");
  return static_cast<int>(v);
}

int rank_of(const json& j, const std::string& where) {
  const int n = small_int(member(j, "n", where), where + "/n");
  if (n < 1) throw ContentError({where + "/n: rank must be at least 1"});
  return n;
}

std::vector<std::vector<Letter>> rows_from(const json& j, const std::string& where) {
  std::vector<std::vector<Letter>> rows;
  const auto& arr = array_at(j, where);
  for (std::size_t r = 0; r < arr.size(); ++r) {
    const std::string rw = where + "/" + std::to_string(r);
    std::vector<Letter> row;
    for (std::size_t c = 0; c < array_at(arr[r], rw).size(); ++c)
      row.push_back(small_int(arr[r][c], rw + "/" + std::to_string(c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Runs a constructor, reporting std::invalid_argument as a content error.
template <class F>
auto checked(const std::string& where, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw ContentError({where + ": " + e.what()});
  }
}

}  // namespace

ContentError::ContentError(std::vector<std::string> violations)
    : std::runtime_error(join(violations, "; ")), violations_(std::move(violations)) {}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

json to_json(const Tableau& t) { return {{"n", t.rank()}, {"rows", t.rows()}}; }

Tableau tableau_from_json(const json& j, const std::string& where) {
  const int n = rank_of(j, where);
  auto rows = rows_from(member(j, "rows", where), where + "/rows");
  return checked(where + "/rows", [&] { return Tableau(n, std::move(rows)); });
}

json to_json(const AffineElement& x) {
  json j = to_json(x.tableau);
  j["mode"] = x.mode;
  return j;
}

AffineElement affine_from_json(const json& j, const std::string& where) {
  AffineElement x{tableau_from_json(j, where), 0};
  if (j.contains("mode")) x.mode = integer_at(j["mode"], where + "/mode");
  return x;
}

json to_json(const Path& p) {
  json factors = json::array();
  for (const auto& b : p.factors()) factors.push_back(b.rows());
  return {{"n", p.rank()}, {"factors", factors}};
}

Path path_from_json(const json& j) {
  const int n = rank_of(j, "");
  const auto& arr = array_at(member(j, "factors", ""), "/factors");
  std::vector<Tableau> factors;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "/factors/" + std::to_string(i);
    auto rows = rows_from(arr[i], where);
    factors.push_back(checked(where, [&] { return Tableau(n, std::move(rows)); }));
  }
  return checked("/factors", [&] { return Path(n, std::move(factors)); });
}

json to_json(const RiggedConfiguration& rc) {
  json nu = json::array();
  for (int a = 0; a < rc.rank(); ++a) nu.push_back(rc.nu(a));
  json mu = json::array();
  for (int a = 1; a <= rc.rank(); ++a) {
    json rows = json::array();
    for (const auto& r : rc.mu(a)) rows.push_back({r.length, r.rigging});
    mu.push_back({{"rows", rows}});
  }
  json qs = json::array();
  for (const auto& q : rc.quantum_space()) qs.push_back({q.level, q.length});
  return {{"n", rc.rank()}, {"nu", nu}, {"mu", mu}, {"quantum_space", qs}};
}

RiggedConfiguration rc_from_json(const json& j) {
  const int n = rank_of(j, "");

  const auto& nu = array_at(member(j, "nu", ""), "/nu");
  if (static_cast<int>(nu.size()) != n)
    throw ContentError({"/nu: expected " + std::to_string(n) + " lists (levels 0.." +
                        std::to_string(n - 1) + ")"});
  std::vector<std::vector<int>> by_level(n);
  for (int a = 0; a < n; ++a) {
    const std::string where = "/nu/" + std::to_string(a);
    for (std::size_t i = 0; i < array_at(nu[a], where).size(); ++i)
      by_level[a].push_back(small_int(nu[a][i], where + "/" + std::to_string(i)));
  }

  std::vector<QuantumRow> quantum;
  if (j.contains("quantum_space")) {
    const auto& qs = array_at(j["quantum_space"], "/quantum_space");
    std::vector<std::vector<int>> seen(n);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string where = "/quantum_space/" + std::to_string(i);
      if (!qs[i].is_array() || qs[i].size() != 2)
        throw FormatError(where + ": expected [level, length]");
      const int level = small_int(qs[i][0], where + "/0");
      const int length = small_int(qs[i][1], where + "/1");
      if (level < 0 || level >= n) throw ContentError({where + ": level outside 0..n-1"});
      quantum.push_back({level, length, static_cast<int>(i)});
      seen[level].push_back(length);
    }
    if (seen != by_level)
      throw ContentError({"/quantum_space: does not list the rows of /nu in order"});
  } else {
    for (int a = 0; a < n; ++a)
      for (int len : by_level[a])
        quantum.push_back({a, len, static_cast<int>(quantum.size())});
  }

  const auto& mu = array_at(member(j, "mu", ""), "/mu");
  if (static_cast<int>(mu.size()) != n)
    throw ContentError({"/mu: expected " + std::to_string(n) + " configurations"});
  std::vector<std::vector<ConfigRow>> config(n);
  for (int a = 0; a < n; ++a) {
    const std::string where = "/mu/" + std::to_string(a) + "/rows";
    const auto& rows = array_at(member(mu[a], "rows", "/mu/" + std::to_string(a)), where);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string rw = where + "/" + std::to_string(i);
      if (!rows[i].is_array() || rows[i].size() != 2)
        throw FormatError(rw + ": expected [length, rigging]");
      config[a].push_back({small_int(rows[i][0], rw + "/0"), small_int(rows[i][1], rw + "/1")});
    }
  }
  return checked("", [&] {
    return RiggedConfiguration(n, std::move(quantum), std::move(config));
  });
}

json to_json(const LocalEnergyDistribution& led) {
  json out = json::array();
  for (const auto& t : led.tables) {
    json cols = json::array();
    for (const auto& c : t.columns) cols.push_back({c.factor, c.column});
    out.push_back({{"a", t.level}, {"rows", t.rows}, {"columns", cols}});
  }
  return out;
}

LocalEnergyDistribution led_from_json(const json& j) {
  LocalEnergyDistribution led;
  const auto& arr = array_at(j, "");
  led.rank = static_cast<int>(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "/" + std::to_string(i);
    LedTable t;
    t.level = small_int(member(arr[i], "a", where), where + "/a");
    if (t.level != static_cast<int>(i) + 1)
      throw ContentError({where + "/a: tables must be listed for a = 1..n in order"});
    t.rows = rows_from(member(arr[i], "rows", where), where + "/rows");
    const auto& cols = array_at(member(arr[i], "columns", where), where + "/columns");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string cw = where + "/columns/" + std::to_string(c);
      if (!cols[c].is_array() || cols[c].size() != 2) throw FormatError(cw + ": expected [j, k]");
      t.columns.push_back({small_int(cols[c][0], cw + "/0"), small_int(cols[c][1], cw + "/1")});
    }
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      if (t.rows[r].size() != t.columns.size())
        throw ContentError({where + "/rows/" + std::to_string(r) +
                            ": length differs from the number of columns"});
    led.tables.push_back(std::move(t));
  }
  return led;
}

std::string compact(const Tableau& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::string compact(const Path& p) {
  std::vector<std::string> parts;
  for (const auto& b : p.factors()) parts.push_back(compact(b));
  return parts.empty() ? "()" : join(parts, " (x) ");
}

std::string render(const Tableau& t) {
  if (t.empty()) return "()\n";
  std::string out;
  for (const auto& row : t.rows()) {
    std::vector<std::string> cells;
    for (Letter x : row) cells.push_back(std::to_string(x));
    out += join(cells, " ") + "\n";
  }
  return out;
}

std::string render(const LedTable& table) {
  std::size_t width = 1;
  for (const auto& row : table.rows)
    for (int e : row) width = std::max(width, std::to_string(e).size());

  // Split the columns into one block per path factor.
  std::vector<std::size_t> block_sizes;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c == 0 || table.columns[c].factor != table.columns[c - 1].factor)
      block_sizes.push_back(0);
    ++block_sizes.back();
  }

  std::string rule = "+";
  for (std::size_t n : block_sizes) rule += std::string(n * (width + 1) - 1, '-') + "+";

  std::string out = "a=" + std::to_string(table.level) + ":\n" + rule + "\n";
  for (const auto& row : table.rows) {
    std::string line = "|";
    std::size_t c = 0;
    for (std::size_t n : block_sizes) {
      for (std::size_t i = 0; i < n; ++i, ++c) {
        std::string cell = std::to_string(row[c]);
        line += std::string(width - cell.size(), ' ') + cell;
        line += i + 1 < n ? " " : "|";
      }
    }
    out += line + "\n";
  }
  return out + rule + "\n";
}

std::string render(const LocalEnergyDistribution& led) {
  std::string out;
  for (std::size_t i = 0; i < led.tables.size(); ++i) {
    if (i) out += "\n";
    out += render(led.tables[i]);
  }
  return out;
}

std::string render(const RiggedConfiguration& rc) {
  std::string out;
  for (int a = 0; a < rc.rank(); ++a) {
    std::vector<std::string> lens;
    for (int len : rc.nu(a)) lens.push_back(std::to_string(len));
    out += "nu(" + std::to_string(a) + "): " + (lens.empty() ? "-" : join(lens, " ")) + "\n";
  }
  for (int a = 1; a <= rc.rank(); ++a) {
    out += "mu(" + std::to_string(a) + "):";
    auto rows = rc.mu(a);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ConfigRow& x, const ConfigRow& y) { return x.length > y.length; });
    if (rows.empty()) {
      out += " -\n";
      continue;
    }
    out += "\n";
    std::vector<std::string> vac;
    std::size_t w = 1;
    for (const auto& r : rows) {
      vac.push_back(std::to_string(vacancy(rc, a, r.length)));
      w = std::max(w, vac.back().size());
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      out += "  " + std::string(w - vac[i].size(), ' ') + vac[i] + " " +
             std::string(static_cast<std::size_t>(rows[i].length), '#') + " " +
             std::to_string(rows[i].rigging) + "\n";
  }
  return out;
}

}  // namespace kss::io
