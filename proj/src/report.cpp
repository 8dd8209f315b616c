#include "isq/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>

namespace isq {

namespace {

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) {
    if (std::isnan(v)) return nullptr;
    return v > 0 ? "inf" : "-inf";
  }
  return v;
}

double param(const VerificationReport &r, const std::string &k) {
  for (const auto &[name, v] : r.params)
    if (name == k) return v;
  return std::nan("");
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

} // namespace

nlohmann::ordered_json to_json(const CellResult &cell, const std::string &timestamp) {
  const auto &r = cell.report;
  nlohmann::ordered_json j;
  j["schema"] = k_report_schema;
  j["timestamp"] = timestamp;
  j["cell"] = cell.id;
  j["check"] = r.check;
  auto &params = j["params"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : r.params) params[k] = number(v);
  j["observed_min"] = number(r.observed_min);
  j["observed_max"] = number(r.observed_max);
  auto &fitted = j["fitted"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : r.fitted) fitted[k] = number(v);
  j["slope"] = r.has_slope ? number(r.slope) : nlohmann::ordered_json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["expected"] = to_string(cell.expected);
  j["ok"] = cell.ok();
  j["notes"] = r.notes;
  if (!r.plot.kind.empty()) {
    nlohmann::ordered_json plot;
    plot["kind"] = r.plot.kind;
    plot["columns"] = r.plot.columns;
    auto &rows = plot["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : r.plot.rows) {
      auto jr = nlohmann::ordered_json::array();
      for (double v : row) jr.push_back(number(v));
      rows.push_back(std::move(jr));
    }
    j["plot"] = std::move(plot);
  }
  return j;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string aggregate_csv(std::span<const CellResult> cells) {
  std::string out = "cell,check,d,a,s,p,observed_min,observed_max,slope,verdict,expected,ok,"
                    "runtime_s,params,notes\r\n";
  const std::set<std::string> shown{"d", "a", "s", "p"};
  for (const auto &c : cells) {
    const auto &r = c.report;
    std::string extra, notes;
    for (const auto &[k, v] : r.params)
      if (!shown.count(k)) extra += (extra.empty() ? "" : ";") + k + "=" + csv_number(v);
    for (const auto &n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
    std::vector<std::string> f{c.id,
                               r.check,
                               csv_number(param(r, "d")),
                               csv_number(param(r, "a")),
                               csv_number(param(r, "s")),
                               csv_number(param(r, "p")),
                               csv_number(r.observed_min),
                               csv_number(r.observed_max),
                               r.has_slope ? csv_number(r.slope) : "",
                               to_string(r.verdict),
                               to_string(c.expected),
                               c.ok() ? "true" : "false",
                               csv_number(r.runtime),
                               extra,
                               notes};
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + csv_field(f[i]);
    out += "\r\n";
  }
  return out;
}

std::vector<std::string> export_plotdata(std::span<const CellResult> cells, const std::string &kind,
                                         const std::filesystem::path &dir) {
  std::vector<std::string> names;
  for (const auto &c : cells) {
    const auto &plot = c.report.plot;
    if (plot.kind != kind) continue;
    std::string text;
    for (std::size_t i = 0; i < plot.columns.size(); ++i) text += (i ? "," : "") + csv_field(plot.columns[i]);
    text += "\r\n";
    for (const auto &row : plot.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "," : "") + csv_number(row[i]);
      text += "\r\n";
    }
    const std::string name = c.id + "-" + c.report.check + "-" + kind + ".csv";
    write_file(dir / name, text);
    names.push_back(name);
  }
  if (names.empty()) throw std::invalid_argument("no report carries plot data of kind " + kind);
  return names;
}

void write_run(std::span<const CellResult> cells, const std::filesystem::path &dir,
               const std::string &timestamp) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::set<std::string> kinds;
  for (const auto &c : cells) {
    write_file(dir / (c.id + "-" + c.report.check + ".json"), to_json(c, timestamp).dump(2) + "\n");
    if (!c.report.plot.kind.empty()) kinds.insert(c.report.plot.kind);
  }
  write_file(dir / "summary.csv", aggregate_csv(cells));
  for (const auto &k : kinds) export_plotdata(cells, k, dir);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace isq
