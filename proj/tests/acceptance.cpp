// Acceptance harness: one PASS/FAIL line per criterion. `--criterion N` runs a single one and sets
// the exit status from it.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isq/cli.hpp"
#include "isq/verify.hpp"

using namespace isq;

namespace {

struct Outcome {
  bool pass = false;
  std::string details;
};

struct Query {
  std::string mode, check;
  std::optional<int> d;
  std::optional<std::string> a;
  std::optional<double> s, p;
};

std::vector<CellResult> run_matrix(const Query &q) {
  RunConfig cfg;
  cfg.mode = q.mode;
  cfg.checks = {q.check};
  cfg.d = q.d;
  cfg.a = q.a;
  cfg.s = q.s;
  cfg.p = q.p;
  validate(cfg);
  return run_cells(build_cells(cfg), 1);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// Counts cells of a given check name and those whose verdict differs from the expected one.
struct Tally {
  int cells = 0, bad = 0;
  std::string first_bad;
  void add(const CellResult &c) {
    ++cells;
    if (!c.ok()) {
      if (bad++ == 0) {
        first_bad = c.report.check;
        for (const auto &[k, v] : c.report.params) first_bad += " " + k + "=" + fmt(v);
        first_bad += " -> " + to_string(c.report.verdict);
      }
    }
  }
  bool ok() const { return cells > 0 && bad == 0; }
  std::string text(const std::string &what) const {
    std::string t = what + " " + std::to_string(cells - bad) + "/" + std::to_string(cells);
    if (bad) t += " (first off: " + first_bad + ")";
    return t;
  }
};

Outcome euclidean() {
  double worst = 0.0, min_points = 1e300;
  Tally t;
  for (auto &c : run_matrix({"verify", "heat", std::nullopt, "0"})) {
    if (c.report.check != "heat-euclidean") continue;
    t.add(c);
    worst = std::max(worst, c.report.observed_max);
    min_points = std::min(min_points, c.report.fit("points"));
  }
  const bool pass = t.ok() && worst < 1e-6 && min_points >= 1e4;
  return {pass, t.text("dims") + ", max rel error " + fmt(worst) + ", min lattice size " + fmt(min_points)};
}

Outcome envelope() {
  Tally t;
  double ratio = 0.0;
  bool endpoint_seen = false;
  for (auto &c : run_matrix({"verify", "heat"})) {
    if (c.report.check != "heat") continue;
    t.add(c);
    ratio = std::max(ratio, c.report.fit("C2_over_C1"));
    const double d = c.report.params[0].second, a = c.report.params[1].second;
    if (a == -0.25 * (d - 2) * (d - 2)) endpoint_seen = true;
  }
  return {t.ok() && endpoint_seen, t.text("(d, a) pairs") + ", max C2/C1 " + fmt(ratio) +
                                       (endpoint_seen ? ", endpoint included" : ", endpoint missing")};
}

Outcome riesz() {
  Tally t;
  double osc = 0.0, classical = NAN;
  bool below = false, above = false;
  for (auto &c : run_matrix({"verify", "riesz"})) {
    t.add(c);
    const auto &r = c.report;
    if (r.check == "riesz") {
      osc = std::max(osc, r.fit("log_oscillation"));
      const double s = r.params[2].second;
      below |= s < 1.0;
      above |= s > 1.0;
    }
    if (r.check == "riesz-classical" && r.params[0].second == 3.0 && r.params[2].second == 1.0)
      classical = r.fit("max_rel_error");
  }
  const bool pass = t.ok() && osc < std::log(1e3) && classical < 1e-4 && below && above;
  return {pass, t.text("cells") + ", max log oscillation " + fmt(osc) + ", d=3 s=1 classical error " +
                    fmt(classical)};
}

Outcome hardy_dichotomy() {
  // in-window 1/p = 2/3, then the two boundary exponents
  Tally t;
  std::string growth;
  for (double p : {1.5, 2.0, 1.2}) {
    for (auto &c : run_matrix({"sweep", "hardy", 3, "-0.25", 1.0, p})) {
      t.add(c);
      growth += " p=" + fmt(p) + ":" + to_string(c.report.verdict);
      for (const char *k : {"growth", "slope", "expected_slope"})
        if (!std::isnan(c.report.fit(k))) growth += " " + std::string(k) + "=" + fmt(c.report.fit(k));
      if (c.report.has_slope) growth += " slope=" + fmt(c.report.slope);
    }
  }
  return {t.ok(), t.text("cells") + ";" + growth};
}

Outcome sharp_hardy() {
  Tally t;
  std::string text;
  for (int d : {3, 4, 5}) {
    CellResult c{"", sharp_hardy_check(d), Verdict::pass};
    t.add(c);
    text += " d=" + std::to_string(d) + " min=" + fmt(c.report.observed_min) + " (bound " +
            fmt(0.25 * (d - 2) * (d - 2)) + ")";
  }
  return {t.ok(), t.text("dims") + ";" + text};
}

Outcome equivalence() {
  Tally cells, endpoint;
  bool below = false, above = false;
  double variation = 0.0, grad = 0.0;
  for (auto &c : run_matrix({"sweep", "equiv"})) {
    const auto &r = c.report;
    if (r.check == "equiv-endpoint") {
      endpoint.add(c);
      grad = std::max(grad, r.fit("gradient_growth"));
      continue;
    }
    cells.add(c);
    const double s = r.params[2].second;
    below |= s < 1.0;
    above |= s > 1.0;
    for (const char *k : {"forward_variation", "reverse_variation"})
      if (!std::isnan(r.fit(k))) variation = std::max(variation, r.fit(k));
  }
  return {cells.ok() && endpoint.ok() && below && above,
          cells.text("in-window cells") + ", max dilation variation " + fmt(variation) + "; " +
              endpoint.text("endpoint cells") + ", max gradient growth " + fmt(grad) + "x"};
}

Outcome bernstein() {
  Tally t;
  double worst = 0.0;
  for (auto &c : run_matrix({"sweep", "bernstein"})) {
    t.add(c);
    const double e = c.report.fit("expected_slope");
    if (e != 0.0) worst = std::max(worst, std::abs(c.report.slope - e) / std::abs(e));
  }
  // out-of-window pairs must be refused
  int refused = 0;
  const std::vector<std::pair<double, double>> outside{{1.1, 2.0}, {2.0, 6.0}, {1.15, 7.0}};
  const auto g = make_grid(GridSpec{1e-4, 1e3, 256}, 3);
  const HankelPlan plan(make_params(3, -0.25), 0, g);
  for (auto [p, q] : outside) {
    try {
      bernstein_fit(plan, p, q, dyadic_range(-1, 1));
    } catch (const ParameterError &) {
      ++refused;
    }
  }
  const bool pass = t.ok() && worst <= 0.1 && refused == static_cast<int>(outside.size());
  return {pass, t.text("cells") + ", worst relative slope error " + fmt(worst) + ", refused " +
                    std::to_string(refused) + "/" + std::to_string(outside.size()) + " out-of-window pairs"};
}

Outcome identity() {
  Tally t;
  double worst = 0.0;
  for (auto &c : run_matrix({"verify", "identity"})) {
    t.add(c);
    worst = std::max(worst, c.report.fit("relative_residual"));
  }
  return {t.ok() && worst < 1e-6, t.text("cells") + ", max relative residual " + fmt(worst)};
}

Outcome differences() {
  Tally kd, sq;
  double variation = 0.0;
  for (auto &c : run_matrix({"verify", "kernel-diff"})) kd.add(c);
  for (auto &c : run_matrix({"sweep", "sqfn-diff"})) {
    sq.add(c);
    variation = std::max(variation, c.report.fit("dilation_variation"));
  }
  return {kd.ok() && sq.ok(), kd.text("kernel-diff cells") + "; " + sq.text("sqfn-diff cells") +
                                  ", max dilation variation " + fmt(variation)};
}

Outcome mikhlin() {
  Tally sym, ratio, sharp;
  for (auto &c : run_matrix({"verify", "mikhlin"})) (c.report.check == "mikhlin" ? sym : ratio).add(c);
  std::string text;
  bool slope_ok = true;
  for (auto &c : run_matrix({"sweep", "sharpness", 3, "-0.25"})) {
    const double p = c.report.params[2].second;
    const double slope = c.report.fit("slope"), expected = c.report.fit("expected_slope");
    slope_ok &= std::abs(slope - expected) <= 0.05 * std::abs(expected);
    text += " p=" + fmt(p) + " growth=" + fmt(c.report.fit("growth")) + "x " + to_string(c.report.verdict);
    if (p >= 6.0 - 1e-12) sharp.add(c);
  }
  return {sym.ok() && ratio.ok() && sharp.ok() && slope_ok,
          sym.text("symbols") + "; " + ratio.text("ratio cells") + "; profile slope " +
              (slope_ok ? "within 5%" : "off") + ";" + text};
}

Outcome cz() {
  auto r = verify_cz(100, 1);
  return {r.verdict == Verdict::pass, "100 instances, " + fmt(r.fit("cubes")) + " cubes, " +
                                          fmt(r.fit("failures")) + " invariant failures"};
}

Outcome cross_path() {
  Tally t;
  double worst = 0.0;
  for (auto &c : run_matrix({"verify", "heat"})) {
    if (c.report.check != "cross-path") continue;
    t.add(c);
    worst = std::max(worst, c.report.observed_max);
  }
  return {t.ok() && worst < 1e-5, t.text("(d, a) pairs") + ", max relative L2 gap " + fmt(worst)};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::function<Outcome()>> criteria{
      {1, euclidean},  {2, envelope}, {3, riesz},        {4, hardy_dichotomy}, {5, sharp_hardy},
      {6, equivalence}, {7, bernstein}, {8, identity},   {9, differences},     {10, mikhlin},
      {11, cz},         {12, cross_path}};
  int failed = 0;
  for (const auto &[n, fn] : criteria) {
    if (only && n != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.details << " ["
              << fmt(secs) << " s]" << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
