#include "isq/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace isq {

const std::vector<std::string> &verify_checks() {
  static const std::vector<std::string> v{"heat", "riesz", "kernel-diff", "mikhlin", "cz", "identity"};
  return v;
}

const std::vector<std::string> &sweep_checks() {
  static const std::vector<std::string> v{"hardy", "equiv", "bernstein", "sqfn-diff", "sharpness", "schur"};
  return v;
}

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string &key, const std::string &v) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(key + ": not a number: " + v);
  return x;
}

long long to_int(const std::string &key, const std::string &v) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(key + ": not an integer: " + v);
  return x;
}

std::vector<std::string> split_list(const std::string &v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

// ---- test matrix ----

constexpr double k_equal = 1e-12;
constexpr double k_inf = std::numeric_limits<double>::infinity();

struct Env {
  const RunConfig &cfg;

  std::vector<int> dims() const { return cfg.d ? std::vector<int>{*cfg.d} : std::vector<int>{3, 4, 5}; }

  std::vector<double> couplings(int d) const {
    if (cfg.a) return {parse_coupling(*cfg.a, d)};
    const double e = -0.25 * (d - 2) * (d - 2);
    return {e, 0.5 * e, 0.0, 1.0};
  }

  RadialGrid grid(int d, GridSpec def) const {
    if (cfg.grid_n) def.n = *cfg.grid_n;
    if (cfg.r_min) def.r_min = *cfg.r_min;
    if (cfg.r_max) def.r_max = *cfg.r_max;
    if (!(def.r_min < def.r_max)) throw ConfigError("rmin must be below rmax");
    return make_grid(def, d);
  }

  int l_max() const { return cfg.l_max.value_or(k_auto_lmax); }
  std::vector<double> Ns(int lo, int hi) const {
    return dyadic_range(cfg.n_min.value_or(lo), cfg.n_max.value_or(hi));
  }
  std::vector<double> svals(std::vector<double> def) const { return cfg.s ? std::vector<double>{*cfg.s} : def; }
};

const GridSpec k_standard_grid{1e-4, 1e3, 1024};
const GridSpec k_hardy_grid{1e-6, 1e5, 1024};
const GridSpec k_wide_grid{1e-7, 1e5, 1024};
const GridSpec k_sharpness_grid{1e-7, 1e3, 1024};

const std::vector<double> k_dilations{1e-2, 1e-1, 1.0, 1e1, 1e2};

bool is_endpoint(const OperatorParams &op) { return op.a == op.endpoint(); }

double midpoint_p(const Interval &w) { return 2.0 / (w.lo + w.hi); }

void add(std::vector<Cell> &cells, std::string check, Verdict expected,
         std::function<VerificationReport()> fn) {
  cells.push_back({std::move(check), expected, std::move(fn)});
}

void verify_cells(const Env &env, const std::string &check, std::vector<Cell> &cells) {
  const auto &cfg = env.cfg;
  if (check == "cz") {
    const auto seed = cfg.seed;
    add(cells, "cz", Verdict::pass, [seed] { return verify_cz(100, seed); });
    return;
  }
  if (check == "mikhlin") {
    for (int d : env.dims()) {
      add(cells, "mikhlin", Verdict::pass, [d] { return verify_mikhlin("exp(-k^2)", gaussian_symbol(), d); });
      add(cells, "mikhlin", Verdict::pass, [d] { return verify_mikhlin("phi_1", smooth_phi_symbol(1.0), d); });
      add(cells, "mikhlin", Verdict::pass, [d] { return verify_mikhlin("psi_1", smooth_psi_symbol(1.0), d); });
    }
  }
  for (int d : env.dims()) {
    for (double a : env.couplings(d)) {
      const auto op = make_params(d, a);
      if (check == "heat") {
        LatticeOptions opt;
        opt.l_max = env.l_max();
        if (cfg.tol) opt.tol = *cfg.tol;
        add(cells, "heat", Verdict::pass, [op, opt] { return verify_heat_envelope(op, opt); });
        if (a == 0.0) {
          LatticeOptions eo = opt;
          eo.ratio_points = 33; // >= 1e4 lattice points per dimension
          add(cells, "heat", Verdict::pass, [d, eo] { return verify_euclidean_heat(d, eo); });
        }
        auto g = env.grid(d, k_standard_grid);
        const double tol = cfg.tol.value_or(1e-5);
        add(cells, "heat", Verdict::pass, [op, g, tol] {
          const std::vector<double> times{1e-2, 1.0, 1e2};
          return verify_cross_path(op, g, times, tol);
        });
      } else if (check == "riesz") {
        RieszOptions opt;
        opt.l_max = env.l_max();
        for (double s : env.svals({0.5, 1.0, 1.5})) {
          if (!(s > 0.0 && s < d && d - s - 2.0 * op.sigma() > 0.0)) {
            if (cfg.s) throw ConfigError("riesz needs 0 < s < d and d - s - 2 sigma > 0");
            continue;
          }
          add(cells, "riesz", Verdict::pass, [op, s, opt] { return verify_riesz(op, s, opt); });
          if (a == 0.0) {
            const double tol = cfg.tol.value_or(1e-4);
            add(cells, "riesz", Verdict::pass, [d, s, opt, tol] { return verify_riesz_classical(d, s, opt, tol); });
          }
        }
      } else if (check == "kernel-diff") {
        DiffOptions opt;
        opt.l_max = env.l_max();
        add(cells, "kernel-diff", Verdict::pass, [op, opt] { return verify_kernel_diff(op, opt); });
      } else if (check == "mikhlin") {
        Interval w{std::max(0.0, 1.0 / op.r0_prime()), std::min(1.0, 1.0 / op.r0())};
        const double p = cfg.p.value_or(midpoint_p(w));
        if (!(p > op.r0() && p < op.r0_prime()) || !(p > 1.0))
          throw ConfigError("multiplier ratio needs r0 < p < r0'");
        auto g = env.grid(d, k_standard_grid);
        for (int which = 0; which < 2; ++which)
          add(cells, "multiplier-ratio", Verdict::pass, [op, g, p, which] {
            auto plan = cached_plan(op, 0, g);
            return which == 0 ? multiplier_ratio_check(*plan, "exp(-k^2)", gaussian_symbol(), p, k_dilations)
                              : multiplier_ratio_check(*plan, "psi_1", smooth_psi_symbol(1.0), p, k_dilations);
          });
      } else if (check == "identity") {
        std::vector<double> ps = cfg.p ? std::vector<double>{*cfg.p} : std::vector<double>{1.5, 2.0, 3.0};
        const int jmin = cfg.n_min.value_or(-10), jmax = cfg.n_max.value_or(10);
        const double tol = cfg.tol.value_or(1e-6);
        auto g = env.grid(d, k_standard_grid);
        for (double p : ps) {
          if (!(p > 1.0) || (a < 0.0 && !(p > op.r0() && p < op.r0_prime()))) {
            if (cfg.p) throw ConfigError("identity needs p inside (r0, r0')");
            continue;
          }
          for (LpKind kind : {LpKind::smooth, LpKind::heat})
            add(cells, "identity", Verdict::pass, [op, g, p, kind, jmin, jmax, tol] {
              return identity_report(*cached_plan(op, 0, g), p, kind, jmin, jmax, tol);
            });
        }
      }
    }
  }
}

void sweep_cells(const Env &env, const std::string &check, std::vector<Cell> &cells) {
  const auto &cfg = env.cfg;
  for (int d : env.dims()) {
    std::vector<double> as = env.couplings(d);
    if (check == "bernstein" && !cfg.a) as = {-0.25 * (d - 2) * (d - 2), 0.0};
    for (double a : as) {
      const auto op = make_params(d, a);
      const double sg = op.sigma();
      if (check == "hardy") {
        auto g = env.grid(d, k_hardy_grid);
        for (double s : env.svals({0.5, 1.0})) {
          Interval w = hardy_window(op, s);
          if (w.empty()) {
            if (cfg.s) throw ConfigError("Hardy sweep needs 0 < s < d and d - s - 2 sigma > 0");
            continue;
          }
          std::vector<std::pair<double, Verdict>> ps;
          if (cfg.p) {
            ps.push_back({*cfg.p, w.contains(1.0 / *cfg.p) ? Verdict::pass : Verdict::diverges_as_designed});
          } else {
            // outside points where the partial norms grow like cutoff^{-1/2}: d |1/p - edge| = 1/2
            ps.push_back({midpoint_p(w), Verdict::pass});
            if (w.lo - 0.5 / d > 0.0) ps.push_back({1.0 / (w.lo - 0.5 / d), Verdict::diverges_as_designed});
            if (w.hi + 0.5 / d < 1.0) ps.push_back({1.0 / (w.hi + 0.5 / d), Verdict::diverges_as_designed});
          }
          for (auto [p, expected] : ps)
            add(cells, "hardy", expected, [op, g, s, p] {
              return hardy_sweep(*cached_plan(op, 0, g), s, p, k_dilations);
            });
        }
      } else if (check == "equiv") {
        auto g = env.grid(d, k_wide_grid);
        for (double s : env.svals({0.5, 1.0, 1.5})) {
          Interval fw = equivalence_forward_window(op, s), rv = equivalence_reverse_window(op, s);
          std::vector<double> ps;
          if (cfg.p) {
            if (fw.contains(1.0 / *cfg.p) || rv.contains(1.0 / *cfg.p)) ps.push_back(*cfg.p);
          } else {
            if (!fw.empty()) ps.push_back(midpoint_p(fw));
            if (!rv.empty() && (ps.empty() || std::abs(midpoint_p(rv) - ps[0]) > k_equal))
              ps.push_back(midpoint_p(rv));
          }
          for (double p : ps)
            add(cells, "equiv", Verdict::pass, [op, g, s, p] {
              auto g0 = g;
              return equiv_sweep(*cached_plan(op, 0, g), *cached_plan(make_params(op.d, 0.0), 0, g0), s, p,
                                 k_dilations);
            });
          const bool endpoint_cell = is_endpoint(op) && std::abs(s - 1.0) < k_equal &&
                                     (!cfg.p || std::abs(*cfg.p - 2.0) < k_equal);
          if (endpoint_cell)
            add(cells, "equiv", Verdict::diverges_as_designed, [d] {
              const std::vector<double> cut{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
              return endpoint_exclusion(d, cut);
            });
          if (cfg.p && ps.empty() && !endpoint_cell)
            throw ConfigError("p lies outside both equivalence windows");
        }
      } else if (check == "bernstein") {
        auto g = env.grid(d, k_standard_grid);
        std::vector<std::pair<double, double>> pq;
        if (cfg.p) pq = {{*cfg.p, *cfg.p}, {*cfg.p, 2.0 * *cfg.p}};
        else pq = {{1.5, 1.5}, {1.5, 3.0}, {2.0, 4.0}, {2.0, k_inf}};
        auto Ns = env.Ns(-3, 3);
        int added = 0;
        for (auto [p, q] : pq) {
          if (!(p > 1.0) || (a < 0.0 && !bernstein_admissible(op, p, q))) continue;
          ++added;
          add(cells, "bernstein", Verdict::pass, [op, g, p, q, Ns] {
            return bernstein_fit(*cached_plan(op, 0, g), p, q, Ns);
          });
        }
        if (cfg.p && added == 0) throw ConfigError("(p, q) outside (r0, r0')");
      } else if (check == "sqfn-diff") {
        auto g = env.grid(d, k_wide_grid);
        auto Ns = env.Ns(-18, 18);
        for (double s : env.svals({0.5, 1.0, 1.5})) {
          std::vector<double> ps = cfg.p ? std::vector<double>{*cfg.p} : std::vector<double>{1.5, 2.0};
          for (double p : ps) {
            const bool ok = s > 0.0 && s < 2.0 && s * p < d &&
                            (a < 0.0 ? sqfn_difference_range(op, s).contains(p) : p > 1.0);
            if (!ok) {
              if (cfg.p || cfg.s) throw ConfigError("square-function cell outside its admissible window");
              continue;
            }
            add(cells, "sqfn-diff", Verdict::pass, [op, g, s, p, Ns] {
              const std::vector<double> dil{1.0 / 16, 0.25, 1.0, 4.0, 16.0};
              return sqfn_diff_check(*cached_plan(op, 0, g), *cached_plan(make_params(op.d, 0.0), 0, g), s,
                                     p, Ns, dil);
            });
          }
        }
      } else if (check == "sharpness") {
        if (!(sg > 0.0)) {
          if (cfg.a) throw ConfigError("sharpness demonstration needs a < 0");
          continue;
        }
        auto g = env.grid(d, k_sharpness_grid);
        const double pc = d / sg;
        std::vector<double> ps = cfg.p ? std::vector<double>{*cfg.p}
                                       : std::vector<double>{0.5 * pc, pc, 4.0 * pc / 3.0, 2.0 * pc};
        for (double p : ps)
          add(cells, "sharpness", p >= pc ? Verdict::diverges_as_designed : Verdict::pass, [op, g, p] {
            const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
            return sharpness_demo(*cached_plan(op, 0, g), p, eps);
          });
      } else if (check == "schur") {
        for (double s : env.svals({0.5, 1.0})) {
          std::vector<double> ps = cfg.p ? std::vector<double>{*cfg.p} : std::vector<double>{1.5, 2.0, 3.0};
          for (double p : ps) {
            const double pp = p / (p - 1.0);
            if (!(p > 1.0 && s + sg > 0.0 && p * (s + sg) < pp * (d - s - sg))) {
              if (cfg.p || cfg.s) throw ConfigError("empty weight window for the Schur test");
              continue;
            }
            add(cells, "schur", Verdict::pass, [op, s, p] { return verify_schur(op, s, p); });
          }
        }
      }
    }
  }
}

std::string pad(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

} // namespace

void apply_config_text(RunConfig &cfg, const std::string &text) {
  static const std::map<std::string, std::set<std::string>> keys{
      {"run", {"mode", "checks", "out", "jobs", "seed"}},
      {"params", {"d", "a", "s", "p", "lmax", "nmin", "nmax", "tol"}},
      {"grid", {"n", "rmin", "rmax"}}};
  std::string section;
  std::set<std::string> seen;
  std::stringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!keys.count(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    if (section.empty()) throw ConfigError(where + "key outside a section");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (!keys.at(section).count(key)) throw ConfigError(where + "unknown key " + section + "." + key);
    if (!seen.insert(section + "." + key).second) throw ConfigError(where + "duplicate key " + key);
    if (val.empty()) throw ConfigError(where + "empty value for " + key);
    if (key == "mode") cfg.mode = val;
    else if (key == "checks") cfg.checks = split_list(val);
    else if (key == "out") cfg.out = val;
    else if (key == "jobs") cfg.jobs = static_cast<int>(to_int(key, val));
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(key, val));
    else if (key == "d") cfg.d = static_cast<int>(to_int(key, val));
    else if (key == "a") cfg.a = val;
    else if (key == "s") cfg.s = to_double(key, val);
    else if (key == "p") cfg.p = val == "inf" ? k_inf : to_double(key, val);
    else if (key == "lmax") cfg.l_max = static_cast<int>(to_int(key, val));
    else if (key == "nmin") cfg.n_min = static_cast<int>(to_int(key, val));
    else if (key == "nmax") cfg.n_max = static_cast<int>(to_int(key, val));
    else if (key == "tol") cfg.tol = to_double(key, val);
    else if (key == "n") cfg.grid_n = static_cast<int>(to_int(key, val));
    else if (key == "rmin") cfg.r_min = to_double(key, val);
    else if (key == "rmax") cfg.r_max = to_double(key, val);
  }
}

void apply_config_file(RunConfig &cfg, const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str());
}

void validate(const RunConfig &cfg) {
  if (!cfg.mode.empty() && cfg.mode != "verify" && cfg.mode != "sweep")
    throw ConfigError("mode must be verify or sweep");
  const auto &known = cfg.mode == "sweep" ? sweep_checks() : verify_checks();
  if (!cfg.checks.empty() && cfg.mode.empty()) throw ConfigError("checks given without a mode");
  for (const auto &c : cfg.checks)
    if (c != "all" && std::find(known.begin(), known.end(), c) == known.end())
      throw ConfigError("unknown check '" + c + "' for " + cfg.mode);
  if (cfg.d && (*cfg.d < 3 || *cfg.d > 10)) throw ConfigError("d must lie in [3, 10]");
  if (cfg.a) {
    for (int d : cfg.d ? std::vector<int>{*cfg.d} : std::vector<int>{3, 4, 5}) {
      try {
        parse_coupling(*cfg.a, d);
      } catch (const std::exception &e) {
        throw ConfigError(std::string("a: ") + e.what());
      }
    }
  }
  if (cfg.s && !(*cfg.s > 0.0 && *cfg.s < 10.0)) throw ConfigError("s must lie in (0, 10)");
  if (cfg.p && !(*cfg.p > 1.0)) throw ConfigError("p must exceed 1");
  if (cfg.grid_n && (*cfg.grid_n < 64 || *cfg.grid_n > 8192)) throw ConfigError("grid-n must lie in [64, 8192]");
  if (cfg.r_min && !(*cfg.r_min > 0.0)) throw ConfigError("rmin must be positive");
  if (cfg.r_max && !(*cfg.r_max > 0.0)) throw ConfigError("rmax must be positive");
  if (cfg.r_min && cfg.r_max && !(*cfg.r_min < *cfg.r_max)) throw ConfigError("rmin must be below rmax");
  if (cfg.l_max && (*cfg.l_max < 1 || *cfg.l_max > 100000)) throw ConfigError("lmax must lie in [1, 100000]");
  for (const auto &n : {cfg.n_min, cfg.n_max})
    if (n && std::abs(*n) > 30) throw ConfigError("nmin/nmax must lie in [-30, 30]");
  if (cfg.n_min && cfg.n_max && !(*cfg.n_min < *cfg.n_max)) throw ConfigError("nmin must be below nmax");
  if (cfg.tol && !(*cfg.tol > 0.0 && *cfg.tol < 1.0)) throw ConfigError("tol must lie in (0, 1)");
  if (cfg.jobs < 1 || cfg.jobs > 256) throw ConfigError("jobs must lie in [1, 256]");
  if (cfg.out.empty()) throw ConfigError("out must not be empty");
}

std::vector<Cell> build_cells(const RunConfig &cfg) {
  validate(cfg);
  Env env{cfg};
  std::vector<Cell> cells;
  const bool sweep = cfg.mode == "sweep";
  const auto &known = sweep ? sweep_checks() : verify_checks();
  std::vector<std::string> list;
  for (const auto &c : cfg.checks) {
    if (c == "all") list.insert(list.end(), known.begin(), known.end());
    else list.push_back(c);
  }
  try {
    for (const auto &c : list) sweep ? sweep_cells(env, c, cells) : verify_cells(env, c, cells);
  } catch (const ParameterError &e) {
    throw ConfigError(e.what());
  }
  return cells;
}

std::vector<CellResult> run_cells(const std::vector<Cell> &cells, int jobs) {
  std::vector<CellResult> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i].id = pad(i);
        results[i].expected = cells[i].expected;
        results[i].report = cells[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

int run(const RunConfig &cfg, std::ostream &log) {
  std::vector<Cell> cells;
  try {
    cells = build_cells(cfg);
  } catch (const ConfigError &e) {
    log << "configuration error: " << e.what() << "\n";
    return exit_config;
  }
  if (cells.empty()) {
    log << "warning: empty check list, nothing to do\n";
    return exit_ok;
  }
  std::vector<CellResult> results;
  try {
    results = run_cells(cells, cfg.jobs);
  } catch (const ParameterError &e) {
    log << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::exception &e) {
    log << "check aborted: " << e.what() << "\n";
    return exit_verification;
  }
  bool all_ok = true;
  for (const auto &r : results) {
    all_ok = all_ok && r.ok();
    log << r.id << " " << r.report.check;
    for (const auto &[k, v] : r.report.params) log << " " << k << "=" << v;
    log << " -> " << to_string(r.report.verdict);
    if (!r.ok()) log << " (expected " << to_string(r.expected) << ")";
    log << "\n";
  }
  try {
    write_run(results, cfg.out, utc_timestamp());
  } catch (const std::exception &e) {
    log << "I/O error: " << e.what() << "\n";
    return exit_io;
  }
  return all_ok ? exit_ok : exit_verification;
}

int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Numerical checks for the inverse-square Schroedinger operator", "isqcheck"};
  app.fallthrough();
  std::string config;
  RunConfig flags;
  std::string a_text, p_text;
  app.add_option("--config", config, "key=value configuration file");
  app.add_option("--d", flags.d, "dimension (default 3, 4, 5)");
  app.add_option("--a", a_text, "coupling, a number or 'endpoint'");
  app.add_option("--s", flags.s, "smoothness order");
  app.add_option("--p", p_text, "Lebesgue exponent (> 1, or inf)");
  app.add_option("--grid-n", flags.grid_n, "radial grid intervals");
  app.add_option("--rmin", flags.r_min, "inner grid radius");
  app.add_option("--rmax", flags.r_max, "outer grid radius");
  app.add_option("--lmax", flags.l_max, "angular truncation for kernel sums");
  app.add_option("--nmin", flags.n_min, "smallest dyadic exponent j, N = 2^j");
  app.add_option("--nmax", flags.n_max, "largest dyadic exponent j");
  app.add_option("--tol", flags.tol, "tolerance for calibration and identity checks");
  app.add_option("--jobs", flags.jobs, "worker threads");
  app.add_option("--seed", flags.seed, "random seed");
  app.add_option("--out", flags.out, "output directory");
  std::vector<std::string> vnames, snames;
  auto *verify = app.add_subcommand("verify", "kernel, multiplier and decomposition checks");
  verify->add_option("checks", vnames, "heat riesz kernel-diff mikhlin cz identity all");
  auto *sweep = app.add_subcommand("sweep", "norm-inequality sweeps");
  sweep->add_option("checks", snames, "hardy equiv bernstein sqfn-diff sharpness schur all");
  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }
  RunConfig cfg;
  try {
    if (!config.empty()) apply_config_file(cfg, config);
    if (verify->parsed()) {
      cfg.mode = "verify";
      cfg.checks = vnames;
    } else if (sweep->parsed()) {
      cfg.mode = "sweep";
      cfg.checks = snames;
    }
    if (app.count("--d")) cfg.d = flags.d;
    if (app.count("--a")) cfg.a = a_text;
    if (app.count("--s")) cfg.s = flags.s;
    if (app.count("--p")) cfg.p = p_text == "inf" ? k_inf : to_double("p", p_text);
    if (app.count("--grid-n")) cfg.grid_n = flags.grid_n;
    if (app.count("--rmin")) cfg.r_min = flags.r_min;
    if (app.count("--rmax")) cfg.r_max = flags.r_max;
    if (app.count("--lmax")) cfg.l_max = flags.l_max;
    if (app.count("--nmin")) cfg.n_min = flags.n_min;
    if (app.count("--nmax")) cfg.n_max = flags.n_max;
    if (app.count("--tol")) cfg.tol = flags.tol;
    if (app.count("--jobs")) cfg.jobs = flags.jobs;
    if (app.count("--seed")) cfg.seed = flags.seed;
    if (app.count("--out")) cfg.out = flags.out;
  } catch (const ConfigError &e) {
    err << "configuration error: " << e.what() << "\n";
    return exit_config;
  }
  return run(cfg, err);
}

} // namespace isq
