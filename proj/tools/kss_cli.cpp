// kss: command-line front end for the tableau, R-matrix, box-ball and
// rigged-configuration routines.
//
// Exit codes: 0 success, 1 usage error, 2 malformed input, 3 invalid content,
// 4 a requested check found failures.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kss/bijection.hpp"
#include "kss/io.hpp"
#include "kss/verify.hpp"

namespace {

using kss::io::json;

enum class Format { text, json };

constexpr int kUsage = 1;
constexpr int kMalformed = 2;
constexpr int kInvalid = 3;
constexpr int kCheckFailed = 4;

struct Options {
  Format format = Format::text;
  std::string input = "-";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json input_json(const Options& o) { return kss::io::parse(read_input(o.input)); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Comma- or space-separated integers.
std::vector<long> integer_list(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<long> out;
  long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw CLI::ValidationError("expected a list of integers: " + s);
  return out;
}

std::pair<kss::AffineElement, kss::AffineElement> pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw kss::io::FormatError(": expected an array of two tableau objects");
  return {kss::io::affine_from_json(j[0], "/0"), kss::io::affine_from_json(j[1], "/1")};
}

int cmd_tableau_insert(const Options& o, const std::string& word, const std::string& unbump) {
  auto t = kss::io::tableau_from_json(input_json(o));
  json ejected = json::array();
  std::vector<json> cells;
  if (!unbump.empty()) {
    const auto rc = integer_list(unbump);
    if (rc.size() != 2) throw CLI::ValidationError("--unbump expects ROW,COL");
    try {
      auto [rest, x] = kss::inverse_insert(t, {static_cast<int>(rc[0]), static_cast<int>(rc[1])});
      t = std::move(rest);
      ejected.push_back(x);
    } catch (const std::invalid_argument& e) {
      throw kss::io::ContentError({std::string("--unbump: ") + e.what()});
    }
  }
  for (long x : integer_list(word)) {
    if (x < 1 || x > t.rank() + 1)
      throw kss::io::ContentError({"letter " + std::to_string(x) + " outside 1.." +
                                   std::to_string(t.rank() + 1)});
    auto [next, cell] = kss::insert(t, static_cast<kss::Letter>(x));
    t = std::move(next);
    cells.push_back({cell.row, cell.col});
  }
  if (o.format == Format::json) {
    json out = kss::io::to_json(t);
    out["added"] = cells;
    if (!ejected.empty()) out["ejected"] = ejected.front();
    emit(out);
  } else {
    std::cout << kss::io::render(t);
    if (!ejected.empty()) std::cout << "ejected " << ejected.front().get<int>() << "\n";
  }
  return 0;
}

int cmd_rmatrix(const Options& o) {
  const auto [x, y] = pair_from_json(input_json(o));
  const int h = kss::energy(x.tableau, y.tableau);
  const auto [nx, ny] = kss::apply_affine_r(x, y);
  if (o.format == Format::json) {
    emit({{"left", kss::io::to_json(nx)}, {"right", kss::io::to_json(ny)}, {"H", h}});
  } else {
    std::cout << kss::io::compact(nx.tableau) << "[" << nx.mode << "] (x) "
              << kss::io::compact(ny.tableau) << "[" << ny.mode << "]\nH = " << h << "\n";
  }
  return 0;
}

int cmd_energy(const Options& o) {
  const auto [x, y] = pair_from_json(input_json(o));
  const int h = kss::energy(x.tableau, y.tableau);
  if (o.format == Format::json)
    emit({{"H", h}});
  else
    std::cout << h << "\n";
  return 0;
}

int cmd_led(const Options& o) {
  const auto led = kss::local_energy_distribution(kss::io::path_from_json(input_json(o)));
  if (o.format == Format::json)
    emit(kss::io::to_json(led));
  else
    std::cout << kss::io::render(led);
  return 0;
}

int cmd_bbs(const Options& o, int a, int l, int steps) {
  auto p = kss::io::path_from_json(input_json(o));
  if (a < 1 || a > p.rank() || l < 1)
    throw kss::io::ContentError({"carrier u_l^(a) needs 1 <= a <= n and l >= 1"});
  json states = json::array();
  for (int t = 0;; ++t) {
    if (o.format == Format::json)
      states.push_back(kss::io::to_json(p));
    else
      std::cout << "t=" << t << ": " << kss::io::compact(p) << "\n";
    if (t == steps) break;
    p = kss::time_evolution(p, a, l).path;
  }
  if (o.format == Format::json) emit(states);
  return 0;
}

int cmd_phi(const Options& o, bool check) {
  const auto p = kss::io::path_from_json(input_json(o));
  const auto rc = kss::phi(p);
  bool ok = true;
  if (check) ok = kss::phi_inverse(rc) == p;
  if (o.format == Format::json) {
    json out = kss::io::to_json(rc);
    if (check) out["roundtrip"] = ok;
    emit(out);
  } else {
    std::cout << kss::io::render(rc);
    if (check) std::cout << "roundtrip: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : kCheckFailed;
}

int cmd_phi_inverse(const Options& o, const std::string& order_text) {
  const auto rc = kss::io::rc_from_json(input_json(o));
  if (const auto v = kss::validate(rc, kss::Validity::unrestricted); !v.empty())
    throw kss::io::ContentError(v);
  std::vector<std::size_t> order;
  for (long i : integer_list(order_text)) {
    if (i < 0) throw CLI::ValidationError("--order indices must be non-negative");
    order.push_back(static_cast<std::size_t>(i));
  }
  kss::Path p;
  try {
    p = kss::phi_inverse(rc, order);
  } catch (const std::invalid_argument& e) {
    throw kss::io::ContentError({e.what()});
  }
  if (o.format == Format::json)
    emit(kss::io::to_json(p));
  else
    std::cout << kss::io::compact(p) << "\n";
  return 0;
}

int cmd_rc_validate(const Options& o, const std::string& mode) {
  const auto rc = kss::io::rc_from_json(input_json(o));
  const auto v = kss::validate(
      rc, mode == "unrestricted" ? kss::Validity::unrestricted : kss::Validity::restricted);
  if (o.format == Format::json) {
    emit({{"valid", v.empty()}, {"violations", v}});
  } else {
    if (v.empty()) std::cout << "valid (" << mode << ")\n";
    for (const auto& s : v) std::cout << s << "\n";
  }
  return v.empty() ? 0 : kInvalid;
}

int cmd_verify(const Options& o, std::vector<std::string> suites, const kss::verify::Bounds& b) {
  if (suites.empty()) suites = kss::verify::suite_names();
  long failed = 0;
  json out = json::array();
  for (const auto& name : suites) {
    const auto r = kss::verify::run_suite(name, b);
    failed += r.failed;
    if (o.format == Format::json) {
      json fs = json::array();
      for (const auto& f : r.failures) fs.push_back({{"input", f.input}, {"detail", f.detail}});
      out.push_back({{"suite", r.suite},
                     {"cases", r.cases},
                     {"failed", r.failed},
                     {"failures", fs},
                     {"seconds", r.seconds}});
    } else {
      std::cout << r.suite << ": " << r.cases << " cases, " << r.failed << " failed ("
                << r.seconds << " s)\n";
      for (const auto& f : r.failures) std::cout << "  " << f.input << "\n    " << f.detail << "\n";
    }
  }
  if (o.format == Format::json) emit(out);
  return failed == 0 ? 0 : kCheckFailed;
}

int cmd_enumerate(const Options& o, int r, int s, int n) {
  if (n < 1 || r < 1 || r > n + 1 || s < 1)
    throw kss::io::ContentError({"enumerate needs 1 <= r <= n + 1 and s >= 1"});
  const auto all = kss::enumerate_kr(r, s, n);
  if (o.format == Format::json) {
    json out = json::array();
    for (const auto& t : all) out.push_back(kss::io::to_json(t));
    emit(out);
  } else {
    for (const auto& t : all) std::cout << kss::io::compact(t) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kirillov-Reshetikhin crystals, box-ball systems and rigged configurations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}));

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "JSON input file, '-' for stdin")->capture_default_str();
    return sub;
  };

  std::string word, unbump;
  auto* insert = with_input(app.add_subcommand("tableau-insert", "Row-insert letters into a tableau"));
  insert->add_option("--word", word, "Letters to insert, in order");
  insert->add_option("--unbump", unbump, "ROW,COL of a corner to remove first");

  auto* rmatrix = with_input(app.add_subcommand(
      "rmatrix", "Combinatorial R on a pair [b, b'] (tableaux with optional \"mode\")"));
  auto* energy = with_input(app.add_subcommand("energy", "Energy H of a pair [b, b']"));
  auto* led = with_input(app.add_subcommand("led", "Local energy distribution of a path"));

  int a = 1, l = 1, steps = 1;
  auto* bbs = with_input(app.add_subcommand("bbs", "Box-ball time evolution T_l^(a)"));
  bbs->add_option("--a", a, "Carrier height")->capture_default_str();
  bbs->add_option("--l", l, "Carrier width")->capture_default_str();
  bbs->add_option("--steps", steps, "Number of time steps")->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  bool roundtrip = false;
  auto* phi = with_input(app.add_subcommand("phi", "Path to rigged configuration"));
  phi->add_flag("--check-roundtrip", roundtrip, "Also check phi_inverse(phi(p)) = p");

  std::string order;
  auto* phi_inv = with_input(app.add_subcommand("phi-inverse", "Rigged configuration to path"));
  phi_inv->add_option("--order", order,
                      "Quantum-space row indices in removal order (first removed becomes "
                      "the rightmost factor)");

  std::string mode = "restricted";
  auto* validate = with_input(app.add_subcommand("rc-validate", "Check a rigged configuration"));
  validate->add_option("--mode", mode)
      ->check(CLI::IsMember({"restricted", "unrestricted"}))
      ->capture_default_str();

  std::vector<std::string> suites;
  kss::verify::Bounds bounds;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive invariant suites");
  verify->add_option("--suite", suites, "Suites to run (default: all)")
      ->check(CLI::IsMember(kss::verify::suite_names()));
  verify->add_option("--max-n", bounds.max_n, "Largest rank")->capture_default_str()
      ->check(CLI::Range(1, 6));
  verify->add_option("--max-l", bounds.max_l, "Longest B^{1,1} path")->capture_default_str()
      ->check(CLI::Range(0, 6));
  verify->add_option("--max-s", bounds.max_s, "Widest factor")->capture_default_str()
      ->check(CLI::Range(1, 4));

  int er = 1, es = 1, en = 1;
  auto* enumerate = app.add_subcommand("enumerate", "List the elements of B^{r,s}");
  enumerate->add_option("--r", er, "Rows")->required();
  enumerate->add_option("--s", es, "Columns")->required();
  enumerate->add_option("--n", en, "Rank")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*insert) return cmd_tableau_insert(o, word, unbump);
    if (*rmatrix) return cmd_rmatrix(o);
    if (*energy) return cmd_energy(o);
    if (*led) return cmd_led(o);
    if (*bbs) return cmd_bbs(o, a, l, steps);
    if (*phi) return cmd_phi(o, roundtrip);
    if (*phi_inv) return cmd_phi_inverse(o, order);
    if (*validate) return cmd_rc_validate(o, mode);
    if (*verify) return cmd_verify(o, suites, bounds);
    if (*enumerate) return cmd_enumerate(o, er, es, en);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const kss::io::FormatError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const kss::io::ContentError& e) {
    std::cerr << "invalid input:\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return kInvalid;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
