#include "kss/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "kss/bijection.hpp"
#include "kss/io.hpp"
#include "kss/rigged.hpp"

namespace kss::verify {

namespace {

constexpr std::size_t kMaxRecorded = 5;

std::string describe(const Path& p) {
  return "n=" + std::to_string(p.rank()) + " " + io::compact(p);
}

std::string describe(const Tableau& t) { return io::compact(t); }

// Counts cases and keeps the first few failures. Inputs are rendered only
// when a case fails.
class Tally {
 public:
  explicit Tally(std::string suite) : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  template <class Describe>
  void record(const Outcome& outcome, Describe&& input) {
    ++report_.cases;
    if (!outcome) return;
    ++report_.failed;
    if (report_.failures.size() < kMaxRecorded) report_.failures.push_back({input(), *outcome});
  }

  // Runs a check, turning an exception into a failure.
  template <class Check, class Describe>
  void run(Check&& check, Describe&& input) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = std::string("exception: ") + e.what();
    }
    record(o, input);
  }

  Report finish() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  Report report_;
  std::chrono::steady_clock::time_point start_;
};

// Both families, without the B^{1,1} ⊗ B^{1,1} paths they share.
std::vector<Path> families(const Bounds& b) {
  auto out = single_box_family(b);
  for (auto& p : two_factor_family(b))
    if (!(p.length() == 2 && p[0].size() == 1 && p[1].size() == 1 && b.max_l >= 2))
      out.push_back(std::move(p));
  return out;
}

// Per-level multisets of configuration rows plus the ordered quantum space.
std::string canonical_key(const RiggedConfiguration& rc) {
  auto j = io::to_json(rc);
  for (auto& level : j["mu"]) std::sort(level["rows"].begin(), level["rows"].end());
  return j.dump();
}

// Stabilisation point of l ↦ Q_l^(a): the longest row.
int longest_row(const RiggedConfiguration& rc, int level) {
  int m = 0;
  for (const auto& r : rc.mu(level)) m = std::max(m, r.length);
  return m;
}

std::string tableau_pair(const Tableau& a, const Tableau& b) {
  return describe(a) + " (x) " + describe(b);
}

// The element of B^{a+1,s} whose first a rows are highest and whose bottom
// row is `bottom`.
Tableau lifted(int a, const std::vector<Letter>& bottom, int rank) {
  std::vector<std::vector<Letter>> rows;
  for (int i = 1; i <= a; ++i) rows.emplace_back(bottom.size(), i);
  rows.push_back(bottom);
  return Tableau(rank, std::move(rows));
}

}  // namespace

std::vector<Path> all_paths(int rank, std::span<const Shape> shapes) {
  std::vector<std::vector<Tableau>> choices;
  for (auto [r, s] : shapes) choices.push_back(enumerate_kr(r, s, rank));
  std::vector<Path> out;
  std::vector<Tableau> current;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == choices.size()) {
      out.emplace_back(rank, current);
      return;
    }
    for (const auto& t : choices[j]) {
      current.push_back(t);
      rec(j + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Path> single_box_family(const Bounds& b) {
  std::vector<Path> out;
  for (int n = 1; n <= b.max_n; ++n)
    for (int len = 1; len <= b.max_l; ++len) {
      std::vector<Shape> shapes(len, {1, 1});
      auto paths = all_paths(n, shapes);
      out.insert(out.end(), paths.begin(), paths.end());
    }
  return out;
}

std::vector<Path> two_factor_family(const Bounds& b) {
  std::vector<Path> out;
  for (int n = 1; n <= b.max_n; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= b.max_s; ++s)
        for (int r2 = 1; r2 <= n; ++r2)
          for (int s2 = 1; s2 <= b.max_s; ++s2) {
            const Shape shapes[] = {{r, s}, {r2, s2}};
            auto paths = all_paths(n, shapes);
            out.insert(out.end(), paths.begin(), paths.end());
          }
  return out;
}

bool is_highest_weight(const Path& p) {
  Word w;
  for (std::size_t j = p.length(); j-- > 0;) {
    const auto r = row_word(p[j]);
    w.insert(w.end(), r.begin(), r.end());
  }
  const auto t = insert_word(Tableau(p.rank()), w);
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    for (Letter x : t.rows()[i])
      if (x != static_cast<Letter>(i) + 1) return false;
  return true;
}

Path with_vacuum(const Path& p, int level, int width) {
  auto factors = p.factors();
  factors.push_back(highest_element(level, width, p.rank()));
  return Path(p.rank(), std::move(factors));
}

Outcome check_yang_baxter(const AffineElement& x, const AffineElement& y,
                          const AffineElement& z) {
  using Triple = std::vector<AffineElement>;
  auto r12 = [](Triple t) {
    std::tie(t[0], t[1]) = apply_affine_r(t[0], t[1]);
    return t;
  };
  auto r23 = [](Triple t) {
    std::tie(t[1], t[2]) = apply_affine_r(t[1], t[2]);
    return t;
  };
  const Triple start{x, y, z};
  const auto lhs = r12(r23(r12(start)));
  const auto rhs = r23(r12(r23(start)));
  if (lhs == rhs) return std::nullopt;
  auto show = [](const Triple& t) {
    std::string s;
    for (const auto& e : t)
      s += (s.empty() ? "" : " (x) ") + describe(e.tableau) + "[" + std::to_string(e.mode) + "]";
    return s;
  };
  return "R12 R23 R12 gives " + show(lhs) + ", R23 R12 R23 gives " + show(rhs);
}

Outcome check_involution(const Tableau& left, const Tableau& right) {
  const auto image = combinatorial_r(left, right);
  const auto back = apply_r(image.pair);
  if (back.left != left || back.right != right)
    return "R(R(x)) = " + tableau_pair(back.left, back.right);
  if (product_tableau(left, right) != product_tableau(image.pair.left, image.pair.right))
    return "product tableaux differ";
  auto letters = [](const Tableau& a, const Tableau& b) {
    auto w = row_word(a);
    auto v = row_word(b);
    w.insert(w.end(), v.begin(), v.end());
    std::sort(w.begin(), w.end());
    return w;
  };
  if (letters(left, right) != letters(image.pair.left, image.pair.right))
    return "letters not conserved";
  const auto [x, y] = apply_affine_r({left, 2}, {right, -5});
  if (x.mode + y.mode != -3) return "mode sum not conserved";
  if (image.energy != energy(left, right)) return "energy mismatch";
  return std::nullopt;
}

Outcome check_roundtrip(const Path& p) {
  const auto rc = phi(p);
  if (const auto v = validate(rc, Validity::unrestricted); !v.empty())
    return "phi(p) fails unrestricted validation: " + v.front();
  if (is_highest_weight(p))
    if (const auto v = validate(rc, Validity::restricted); !v.empty())
      return "highest-weight path, phi(p) fails restricted validation: " + v.front();
  const auto back = phi_inverse(rc);
  if (back != p) return "phi_inverse(phi(p)) = " + io::compact(back);
  return std::nullopt;
}

Outcome check_energy_equals_q(const Path& p) {
  const auto led = local_energy_distribution(p);
  for (const auto& t : led.tables)
    for (const auto& row : t.rows)
      for (int e : row)
        if (e < 0) return "negative LED entry at a=" + std::to_string(t.level);
  const auto rc = phi(p);
  for (int a = 1; a <= p.rank(); ++a)
    for (int l = 1; l <= longest_row(rc, a) + 1; ++l) {
      const int e = total_energy(p, a, l);
      const int q = q_l(rc, a, l);
      if (e != q)
        return "a=" + std::to_string(a) + " l=" + std::to_string(l) + ": E=" + std::to_string(e) +
               " Q=" + std::to_string(q);
    }
  return std::nullopt;
}

Outcome check_vacuum_energy(const Path& p) {
  const int n = p.rank();
  for (int a = 1; a <= n; ++a)
    for (int k = 1; k <= 2; ++k) {
      const Tableau u = highest_element(a, k, n);
      auto left = p.factors();
      left.insert(left.begin(), u);
      const Path before(n, std::move(left));
      const Path after = with_vacuum(p, a, k);
      for (int r = 1; r <= n; ++r)
        for (int l = 1; l <= 3; ++l) {
          const int e = total_energy(p, r, l);
          const int e1 = total_energy(before, r, l);
          const int e2 = total_energy(after, r, l);
          if (e != e1 || e != e2)
            return "u_" + std::to_string(k) + "^(" + std::to_string(a) + "), E_" +
                   std::to_string(l) + "^(" + std::to_string(r) + "): " + std::to_string(e1) +
                   " / " + std::to_string(e) + " / " + std::to_string(e2);
        }
    }
  return std::nullopt;
}

Outcome check_removal_order(const Path& p) {
  const auto rc = phi(p);
  const std::size_t m = rc.quantum_space().size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (x != y && !removal_order_equivalence(rc, x, y))
        return "rows " + std::to_string(x) + " and " + std::to_string(y);
  return std::nullopt;
}

Outcome check_r_invariance(const Path& p) {
  for (std::size_t j = 0; j + 1 < p.length(); ++j) {
    auto factors = p.factors();
    const auto image = apply_r({factors[j], factors[j + 1]});
    factors[j] = image.left;
    factors[j + 1] = image.right;
    const Path q(p.rank(), std::move(factors));
    for (int a = 1; a <= p.rank(); ++a)
      for (int l = 1; l <= 3; ++l)
        if (total_energy(p, a, l) != total_energy(q, a, l))
          return "R at factors " + std::to_string(j + 1) + "," + std::to_string(j + 2) +
                 " changes E_" + std::to_string(l) + "^(" + std::to_string(a) + ")";
  }
  return std::nullopt;
}

Outcome check_linearization(const Path& p, int level, int width) {
  const auto ev = time_evolution(p, level, width);
  if (ev.carrier != highest_element(level, width, p.rank()))
    return "carrier leaves as " + io::compact(ev.carrier);
  auto expected = phi(p);
  for (auto& row : expected.mu(level)) row.rigging += std::min(width, row.length);
  const auto got = phi(ev.path);
  if (got == expected) return std::nullopt;
  return "T_" + std::to_string(width) + "^(" + std::to_string(level) + ") -> " +
         io::compact(ev.path) + " with configuration " + canonical_key(got);
}

std::vector<Word> two_letter_rows(int s, Letter lo) {
  std::vector<Word> out;
  for (int k = 0; k <= s; ++k) {
    Word w(s, lo);
    std::fill(w.begin() + (s - k), w.end(), lo + 1);
    out.push_back(std::move(w));
  }
  return out;
}

Outcome check_trivial_swap(const Tableau& u, const Tableau& v) {
  const auto image = combinatorial_r(u, v);
  if (image.energy != 0) return "H = " + std::to_string(image.energy);
  if (image.pair.left != v || image.pair.right != u) return "not a swap";
  return std::nullopt;
}

Outcome check_a1_reduction(int a, const Word& w, const Word& w2, int rank) {
  auto down = [&](Word row) {
    for (auto& x : row) x -= a;
    return Tableau(1, {std::move(row)});
  };
  auto up = [&](const Tableau& t) {
    auto row = t.rows().front();
    for (auto& x : row) x += a;
    return lifted(a, row, rank);
  };
  const auto small = combinatorial_r(down(w), down(w2));
  const auto big = combinatorial_r(lifted(a, w, rank), lifted(a, w2, rank));
  if (big.energy != small.energy)
    return "H = " + std::to_string(big.energy) + ", A_1 gives " + std::to_string(small.energy);
  if (big.pair.left != up(small.pair.left) || big.pair.right != up(small.pair.right))
    return "image " + tableau_pair(big.pair.left, big.pair.right);
  return std::nullopt;
}

Report lemma_report(const Bounds& b) {
  Tally tally("lemmas");

  // Highest elements commute with zero energy.
  for (int n = 1; n <= b.max_n; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 3; ++s)
        for (int r2 = 1; r2 <= n; ++r2)
          for (int s2 = 1; s2 <= 3; ++s2) {
            const auto u = highest_element(r, s, n);
            const auto v = highest_element(r2, s2, n);
            tally.run([&] { return check_trivial_swap(u, v); },
                      [&] { return "n=" + std::to_string(n) + " " + tableau_pair(u, v); });
          }

  // H(v ⊗ u_k^(a)) = 0 for arbitrary v.
  for (int n = 1; n <= b.max_n; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= b.max_s; ++s)
        for (const auto& v : enumerate_kr(r, s, n))
          for (int a = 1; a <= n; ++a)
            for (int k = 1; k <= 2; ++k) {
              const auto u = highest_element(a, k, n);
              tally.run(
                  [&]() -> Outcome {
                    const int h = energy(v, u);
                    if (h) return "H = " + std::to_string(h);
                    return std::nullopt;
                  },
                  [&] { return "n=" + std::to_string(n) + " " + tableau_pair(v, u); });
            }

  // Vacuum factors on either side leave the total energies unchanged.
  for (const auto& p : families(b))
    tally.run([&] { return check_vacuum_energy(p); }, [&] { return describe(p); });

  // Reduction to A_1: elements whose upper a rows are highest and whose
  // bottom row lies in {a+1, a+2}.
  for (int n = 1; n <= b.max_n; ++n)
    for (int a = 0; a + 1 <= n; ++a)
      for (int s = 1; s <= b.max_s; ++s)
        for (int s2 = 1; s2 <= b.max_s; ++s2)
          for (const auto& w : two_letter_rows(s, a + 1))
            for (const auto& w2 : two_letter_rows(s2, a + 1)) {
              const auto v = lifted(a, w, n);
              const auto v2 = lifted(a, w2, n);
              tally.run([&] { return check_a1_reduction(a, w, w2, n); },
                        [&] { return "n=" + std::to_string(n) + " " + tableau_pair(v, v2); });

              // Highest elements of other heights pass through untouched.
              for (int k = 1; k <= n; ++k) {
                if (k == a + 1) continue;
                for (int l = 1; l <= 2; ++l) {
                  const auto u = highest_element(k, l, n);
                  tally.run([&] { return check_trivial_swap(u, v); },
                            [&] { return "n=" + std::to_string(n) + " " + tableau_pair(u, v); });
                }
              }
            }
  return tally.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"yang-baxter",   "involution",   "lemmas",
                                              "energy-q",        "roundtrip",    "removal-order",
                                              "r-invariance",  "linearization"};
  return names;
}

Report run_suite(std::string_view name, const Bounds& b) {
  if (name == "lemmas") return lemma_report(b);

  Tally tally{std::string(name)};
  if (name == "yang-baxter") {
    const Shape shapes[] = {{1, 1}, {1, 2}, {2, 1}};
    for (int n = 1; n <= b.max_n; ++n) {
      std::vector<Tableau> elements;
      for (auto [r, s] : shapes)
        if (r <= n && s <= b.max_s)
          for (auto& t : enumerate_kr(r, s, n)) elements.push_back(std::move(t));
      for (const auto& x : elements)
        for (const auto& y : elements)
          for (const auto& z : elements)
            tally.run([&] { return check_yang_baxter({x, 0}, {y, 1}, {z, -2}); },
                      [&] { return "n=" + std::to_string(n) + " " + describe(x) + " (x) " +
                                   describe(y) + " (x) " + describe(z); });
    }
  } else if (name == "involution") {
    for (int n = 1; n <= b.max_n; ++n)
      for (int r = 1; r <= std::min(n, 2); ++r)
        for (int s = 1; s <= b.max_s; ++s)
          for (int r2 = 1; r2 <= std::min(n, 2); ++r2)
            for (int s2 = 1; s2 <= b.max_s; ++s2) {
              const auto left = enumerate_kr(r, s, n);
              const auto right = enumerate_kr(r2, s2, n);
              for (const auto& x : left)
                for (const auto& y : right)
                  tally.run([&] { return check_involution(x, y); },
                            [&] { return "n=" + std::to_string(n) + " " + tableau_pair(x, y); });
            }
  } else if (name == "energy-q") {
    for (const auto& p : families(b))
      tally.run([&] { return check_energy_equals_q(p); }, [&] { return describe(p); });
  } else if (name == "roundtrip") {
    std::map<std::string, Path> seen;
    for (const auto& p : families(b))
      tally.run(
          [&]() -> Outcome {
            if (auto o = check_roundtrip(p)) return o;
            const auto [it, fresh] = seen.emplace(canonical_key(phi(p)), p);
            if (!fresh) return "same configuration as " + describe(it->second);
            return std::nullopt;
          },
          [&] { return describe(p); });
  } else if (name == "removal-order") {
    for (const auto& p : families(b))
      tally.run([&] { return check_removal_order(p); }, [&] { return describe(p); });
  } else if (name == "r-invariance") {
    for (const auto& p : families(b))
      tally.run([&] { return check_r_invariance(p); }, [&] { return describe(p); });
  } else if (name == "linearization") {
    for (const auto& p : families(b))
      for (int a = 1; a <= p.rank(); ++a)
        for (int l = 1; l <= 3; ++l)
          tally.run([&] { return check_linearization(with_vacuum(p, a, l), a, l); },
                    [&] { return describe(p) + " with u_" + std::to_string(l) + "^(" +
                                 std::to_string(a) + "), a=" + std::to_string(a) +
                                 " l=" + std::to_string(l); });
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(name));
  }
  return tally.finish();
}

}  // namespace kss::verify
