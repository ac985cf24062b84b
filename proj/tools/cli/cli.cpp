#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "betaorder/errors.hpp"

namespace betaorder::cli {
namespace {

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : "null"; }

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw DomainError("not a number: '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> parse_list(std::string_view text, std::size_t expected, std::string_view what) {
  const auto parts = split(text, ',');
  if (parts.size() != expected) {
    throw DomainError(fmt::format("{} expects {} comma-separated numbers, got '{}'", what, expected, text));
  }
  std::vector<double> out;
  for (auto p : parts) out.push_back(parse_double(p));
  return out;
}

BetaParams parse_beta(std::string_view text, std::string_view what) {
  const auto v = parse_list(text, 2, what);
  return {v[0], v[1]};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 1) throw DomainError("grid needs at least one point");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

std::vector<double> parse_grid(std::string_view text, std::string_view what) {
  const auto v = parse_list(text, 3, what);
  if (!(v[2] >= 1.0) || v[2] != std::floor(v[2])) throw DomainError(std::string(what) + " point count must be a positive integer");
  return linspace(v[0], v[1], static_cast<std::size_t>(v[2]));
}

// Lines of a CSV document without '#' metadata, blank lines and CR.
struct CsvDoc {
  std::vector<std::string> meta;
  std::vector<std::vector<std::string>> rows;  // rows[0] is the header
};

CsvDoc read_csv(std::string_view text) {
  CsvDoc doc;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      doc.meta.emplace_back(line.substr(1));
      continue;
    }
    std::vector<std::string> cells;
    for (auto c : split(line, ',')) cells.emplace_back(c);
    doc.rows.push_back(std::move(cells));
  }
  return doc;
}

void expect_header(const CsvDoc& doc, const std::vector<std::string>& header) {
  if (doc.rows.empty() || doc.rows.front() != header) throw DomainError("unexpected CSV header");
  for (std::size_t i = 1; i < doc.rows.size(); ++i) {
    if (doc.rows[i].size() != header.size()) throw DomainError("CSV row has the wrong number of cells");
  }
}

// "key=value" pairs from a metadata line.
std::optional<std::string> meta_value(const CsvDoc& doc, std::string_view key) {
  for (const auto& line : doc.meta) {
    for (auto kv : split(line, ',')) {
      while (!kv.empty() && kv.front() == ' ') kv.remove_prefix(1);
      const auto eq = kv.find('=');
      if (eq != std::string_view::npos && kv.substr(0, eq) == key) return std::string(kv.substr(eq + 1));
    }
  }
  return std::nullopt;
}

std::optional<double> optional_cell(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw DomainError("not a boolean: '" + std::string(s) + "'");
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("not an integer: '" + std::string(s) + "'");
  return v;
}

ShapeKind parse_shape_kind(std::string_view s) {
  for (ShapeKind k : {ShapeKind::unimodal, ShapeKind::uniantimodal, ShapeKind::monotone_density, ShapeKind::uniform}) {
    if (to_string(k) == s) return k;
  }
  throw DomainError("unknown shape '" + std::string(s) + "'");
}

const std::vector<std::string> kCheckHeader{"consistent", "pattern_bound", "grid_size", "lines_checked", "seed",
                                            "witness_c",  "witness_d",     "witness_x", "witness_pattern"};
const std::vector<std::string> kScanHeader{"param", "probability", "violation_flag"};
const std::vector<std::string> kRowHeader{"a", "b", "mean", "shape", "location", "p_over_mean", "p_over_mode",
                                          "p_over_antimode"};

// Options shared by every verb; tol has a verb-specific default.
struct Common {
  std::string output = "json";
  std::optional<double> tol;
  std::size_t grid_points = 2049;
  std::size_t lines = 200;
  std::uint64_t seed = kDefaultSeed;

  CheckOptions check_options() const {
    CheckOptions opts;
    opts.grid.points = grid_points;
    opts.zero_tol = tol.value_or(1e-9);
    opts.lines = lines;
    opts.seed = seed;
    return opts;
  }
  bool csv() const { return output == "csv"; }
};

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string verdict_json(const OrderVerdict& verdict) {
  return fmt::format("{{\"relation\":{},\"result\":{}}}\n", json_string(to_string(verdict.relation)),
                     json_string(to_string(verdict.result)));
}

std::string check_report_json(const NumericCheckReport& r) {
  std::string witness = "null";
  if (r.witness) {
    witness = fmt::format("{{\"line\":{{\"c\":{},\"d\":{}}},\"x\":{},\"pattern\":{}}}", format_number(r.witness->line.c),
                          format_number(r.witness->line.d), format_number(r.witness->x),
                          json_string(r.witness->pattern.to_string()));
  }
  return fmt::format(
      "{{\"seed\":{},\"consistent\":{},\"witness\":{},\"pattern_bound\":{},\"grid_size\":{},\"lines_checked\":{}}}\n",
      r.seed, r.consistent, witness, json_string(r.pattern_bound.to_string()), r.grid_size, r.lines_checked);
}

std::string check_report_csv(const NumericCheckReport& r) {
  std::string out = fmt::format("# seed={}\n{}\n", r.seed, fmt::join(kCheckHeader, ","));
  out += fmt::format("{},{},{},{},{},", r.consistent, r.pattern_bound.to_string(), r.grid_size, r.lines_checked, r.seed);
  if (r.witness) {
    out += fmt::format("{},{},{},{}\n", format_number(r.witness->line.c), format_number(r.witness->line.d),
                       format_number(r.witness->x), r.witness->pattern.to_string());
  } else {
    out += ",,,\n";
  }
  return out;
}

std::string monotonicity_csv(const MonotonicityReport& r) {
  std::string out = fmt::format("# axis={},direction={}\n{}\n", to_string(r.axis), to_string(r.direction),
                                fmt::join(kScanHeader, ","));
  std::vector<bool> flagged(r.samples.size(), false);
  for (std::size_t i : r.violations) flagged.at(i) = true;
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    out += fmt::format("{},{},{}\n", format_number(r.samples[i].first), format_number(r.samples[i].second),
                       flagged[i] ? 1 : 0);
  }
  return out;
}

std::string monotonicity_json(const MonotonicityReport& r) {
  std::vector<std::string> samples;
  for (const auto& [x, y] : r.samples) samples.push_back(fmt::format("[{},{}]", format_number(x), format_number(y)));
  return fmt::format("{{\"axis\":{},\"direction\":{},\"samples\":[{}],\"violations\":[{}]}}\n",
                     json_string(to_string(r.axis)), json_string(to_string(r.direction)), fmt::join(samples, ","),
                     fmt::join(r.violations, ","));
}

std::string exceedance_csv(std::span<const ExceedanceRow> rows) {
  std::string out = fmt::format("{}\n", fmt::join(kRowHeader, ","));
  auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", format_number(r.a), format_number(r.b), format_number(r.mean),
                       to_string(r.shape.kind), cell(r.shape.location), format_number(r.p_over_mean),
                       cell(r.p_over_mode), cell(r.p_over_antimode));
  }
  return out;
}

std::string exceedance_json(std::span<const ExceedanceRow> rows) {
  std::vector<std::string> items;
  for (const auto& r : rows) {
    items.push_back(fmt::format(
        "{{\"a\":{},\"b\":{},\"mean\":{},\"shape\":{{\"kind\":{},\"location\":{}}},\"p_over_mean\":{},"
        "\"p_over_mode\":{},\"p_over_antimode\":{}}}",
        format_number(r.a), format_number(r.b), format_number(r.mean), json_string(to_string(r.shape.kind)),
        optional_number(r.shape.location), format_number(r.p_over_mean), optional_number(r.p_over_mode),
        optional_number(r.p_over_antimode)));
  }
  return fmt::format("{{\"rows\":[{}]}}\n", fmt::join(items, ","));
}

NumericCheckReport parse_check_report_csv(std::string_view text) {
  const CsvDoc doc = read_csv(text);
  expect_header(doc, kCheckHeader);
  if (doc.rows.size() != 2) throw DomainError("check report CSV must have exactly one data row");
  const auto& c = doc.rows[1];
  NumericCheckReport r;
  r.consistent = parse_bool(c[0]);
  r.pattern_bound = SignPattern::parse(c[1]);
  r.grid_size = parse_u64(c[2]);
  r.lines_checked = parse_u64(c[3]);
  r.seed = parse_u64(c[4]);
  if (!c[5].empty()) r.witness = Witness{{parse_double(c[5]), parse_double(c[6])}, parse_double(c[7]), SignPattern::parse(c[8])};
  return r;
}

MonotonicityReport parse_monotonicity_csv(std::string_view text) {
  const CsvDoc doc = read_csv(text);
  expect_header(doc, kScanHeader);
  MonotonicityReport r;
  const auto axis = meta_value(doc, "axis");
  const auto direction = meta_value(doc, "direction");
  if (!axis || !direction) throw DomainError("scan CSV lacks the axis/direction header");
  r.axis = parse_scan_axis(*axis);
  r.direction = parse_direction(*direction);
  for (std::size_t i = 1; i < doc.rows.size(); ++i) {
    const auto& c = doc.rows[i];
    r.samples.emplace_back(parse_double(c[0]), parse_double(c[1]));
    if (c[2] == "1") {
      r.violations.push_back(i - 1);
    } else if (c[2] != "0") {
      throw DomainError("violation_flag must be 0 or 1");
    }
  }
  return r;
}

std::vector<ExceedanceRow> parse_exceedance_csv(std::string_view text) {
  const CsvDoc doc = read_csv(text);
  expect_header(doc, kRowHeader);
  std::vector<ExceedanceRow> rows;
  for (std::size_t i = 1; i < doc.rows.size(); ++i) {
    const auto& c = doc.rows[i];
    ExceedanceRow r;
    r.a = parse_double(c[0]);
    r.b = parse_double(c[1]);
    r.mean = parse_double(c[2]);
    r.shape = {parse_shape_kind(c[3]), optional_cell(c[4])};
    r.p_over_mean = parse_double(c[5]);
    r.p_over_mode = optional_cell(c[6]);
    r.p_over_antimode = optional_cell(c[7]);
    rows.push_back(r);
  }
  return rows;
}

int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transform orders on the Beta family", argv.empty() ? "betaorder" : argv.front()};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common common;
  app.add_option("--output", common.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", common.tol, "tolerance of the check");
  app.add_option("--grid-points", common.grid_points, "grid size of the numerical checkers")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 24));
  app.add_option("--lines", common.lines, "lines sampled by the numerical checkers")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
  app.add_option("--seed", common.seed, "seed of the line sampler");

  std::string order;
  std::string p_text;
  std::string q_text;
  std::string gamma_text;

  auto* decide = app.add_subcommand("decide", "closed-form order verdict for P against Q");
  decide->add_option("--order", order, "st, star or convex")->required();
  decide->add_option("--p", p_text, "a,b")->required();
  decide->add_option("--q", q_text, "a,b")->required();

  auto* verify = app.add_subcommand("verify", "numerical check that P is below Q in the order");
  verify->add_option("--order", order, "st, star or convex")->required();
  verify->add_option("--p", p_text, "a,b")->required();
  auto* q_opt = verify->add_option("--q", q_text, "Beta a,b");
  auto* gamma_opt = verify->add_option("--gamma", gamma_text, "Gamma shape,scale");
  q_opt->excludes(gamma_opt);

  std::string target = "mean";
  std::string axis = "a";
  std::optional<double> fixed;
  std::string range_text;
  std::size_t points = 41;
  int n = 0;
  int sequence = 1;
  auto* scan = app.add_subcommand("scan", "exceedance probabilities along a parameter axis");
  scan->add_option("--target", target, "mean, mode or antimode");
  scan->add_option("--axis", axis, "a, b or binomial-p");
  scan->add_option("--fixed", fixed, "value of the other parameter");
  scan->add_option("--range", range_text, "lo,hi of the axis");
  scan->add_option("--points", points, "number of axis points")->check(CLI::PositiveNumber);
  scan->add_option("--n", n, "binomial n (axis binomial-p)");
  scan->add_option("--sequence", sequence, "binomial sequence 1 or 2")->check(CLI::IsMember({1, 2}));

  std::optional<int> k;
  std::size_t p_points = 101;
  auto* identity = app.add_subcommand("identity", "Beta-Binomial identity error");
  identity->add_option("--n", n, "binomial n")->required()->check(CLI::Range(1, 100000));
  identity->add_option("--k", k, "0 <= k < n; all k when omitted");
  identity->add_option("--p-points", p_points, "p grid size on [0, 1]")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));

  std::string grid_text = "1,10,41";
  std::string a_grid_text;
  std::string b_grid_text;
  auto* report = app.add_subcommand("report", "table of exceedance probabilities");
  report->add_option("--grid", grid_text, "lo,hi,points for both axes");
  report->add_option("--a-grid", a_grid_text, "lo,hi,points for a");
  report->add_option("--b-grid", b_grid_text, "lo,hi,points for b");

  std::vector<const char*> raw;
  for (const auto& s : argv) raw.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (decide->parsed()) {
      const OrderKind kind = parse_order_kind(order);
      const BetaParams p = parse_beta(p_text, "--p");
      const BetaParams q = parse_beta(q_text, "--q");
      const OrderVerdict v = decide_beta_order(kind, p, q);
      if (common.csv()) {
        out << "relation,result\n" << to_string(v.relation) << ',' << to_string(v.result) << '\n';
      } else {
        out << verdict_json(v);
      }
      return kOk;
    }

    if (verify->parsed()) {
      const OrderKind kind = parse_order_kind(order);
      const BetaParams p = parse_beta(p_text, "--p");
      CheckOptions opts = common.check_options();
      Law g;
      if (!gamma_text.empty()) {
        const auto v = parse_list(gamma_text, 2, "--gamma");
        const GammaParams gp(v[0], v[1]);
        g = gamma_law(gp);
        opts.line_scale = gp.scale();
      } else if (!q_text.empty()) {
        g = beta_law(parse_beta(q_text, "--q"));
      } else {
        throw DomainError("verify needs --q or --gamma");
      }
      const Law f = beta_law(p);
      NumericCheckReport r;
      switch (kind) {
        case OrderKind::stochastic_dominance: r = verify_st_numeric(f, g, opts); break;
        case OrderKind::star_shaped: r = verify_star_numeric(f, g, opts); break;
        case OrderKind::convex_transform: r = verify_convex_numeric(f, g, opts); break;
      }
      out << (common.csv() ? check_report_csv(r) : check_report_json(r));
      return r.consistent ? kOk : kCheckFailed;
    }

    if (scan->parsed()) {
      const ScanAxis ax = parse_scan_axis(axis);
      const double tol = common.tol.value_or(ax == ScanAxis::binomial_p ? 1e-12 : 1e-10);
      MonotonicityReport r;
      if (ax == ScanAxis::binomial_p) {
        if (n < 2) throw DomainError("binomial scan needs --n >= 2");
        auto both = binomial_monotonicity(n, tol);
        r = sequence == 1 ? std::move(both.first) : std::move(both.second);
      } else {
        const ExceedanceTarget t = parse_exceedance_target(target);
        const double fixed_default = t == ExceedanceTarget::mean ? 2.0 : t == ExceedanceTarget::mode ? 3.0 : 0.9;
        const char* range_default = t == ExceedanceTarget::mean ? "1,10" : t == ExceedanceTarget::mode ? "1.125,6" : "0.025,0.975";
        const auto range = parse_list(range_text.empty() ? range_default : range_text, 2, "--range");
        if (!(range[0] < range[1]) && points > 1) throw DomainError("--range must have lo < hi");
        const auto values = linspace(range[0], range[1], points);
        r = scan_monotone(ax, fixed.value_or(fixed_default), values, t, tol);
      }
      out << (common.csv() ? monotonicity_csv(r) : monotonicity_json(r));
      return r.monotone() ? kOk : kCheckFailed;
    }

    if (identity->parsed()) {
      const double tol = common.tol.value_or(1e-12);
      if (k && (*k < 0 || *k > n - 1)) throw DomainError("--k must satisfy 0 <= k <= n - 1");
      const auto grid = linspace(0.0, 1.0, p_points);
      double worst = 0.0;
      for (int j = k.value_or(0); j <= k.value_or(n - 1); ++j) {
        worst = std::max(worst, beta_binomial_identity_check(n, j, grid));
      }
      const bool passed = worst <= tol;
      if (common.csv()) {
        out << "n,k,p_points,max_abs_error,tol,passed\n"
            << fmt::format("{},{},{},{},{},{}\n", n, k ? std::to_string(*k) : std::string(), p_points,
                           format_number(worst), format_number(tol), passed);
      } else {
        out << fmt::format("{{\"n\":{},\"k\":{},\"p_points\":{},\"max_abs_error\":{},\"tol\":{},\"passed\":{}}}\n", n,
                           k ? std::to_string(*k) : "null", p_points, format_number(worst), format_number(tol),
                           passed);
      }
      return passed ? kOk : kCheckFailed;
    }

    if (report->parsed()) {
      const auto a_values = parse_grid(a_grid_text.empty() ? grid_text : a_grid_text, "--a-grid");
      const auto b_values = parse_grid(b_grid_text.empty() ? grid_text : b_grid_text, "--b-grid");
      std::vector<BetaParams> laws;
      for (double a : a_values) {
        for (double b : b_values) laws.emplace_back(a, b);
      }
      std::vector<ExceedanceRow> rows;
      rows.reserve(laws.size());
      for (const auto& p : laws) rows.push_back(exceedance_row(p));
      out << (common.csv() ? exceedance_csv(rows) : exceedance_json(rows));
      return kOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OrderingError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no verb given\n";
  return kUsage;
}

}  // namespace betaorder::cli
