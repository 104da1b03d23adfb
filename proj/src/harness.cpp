#include "prasymp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "prasymp/branch.hpp"
#include "prasymp/curve.hpp"
#include "prasymp/errors.hpp"
#include "prasymp/io.hpp"
#include "prasymp/zeros.hpp"

namespace prasymp {

std::string to_string(OracleMode m) {
  switch (m) {
    case OracleMode::Auto: return "auto";
    case OracleMode::Native: return "native";
    case OracleMode::HighPrec: return "highprec";
    case OracleMode::Rational: return "rational";
  }
  return "?";
}

void validate_config(const SweepConfig& cfg) {
  if (cfg.n_list.empty()) throw UsageError("n list must be nonempty");
  for (size_t i = 0; i + 1 < cfg.n_list.size(); ++i)
    if (cfg.n_list[i] >= cfg.n_list[i + 1])
      throw UsageError("n list must be strictly ascending");
  if (cfg.n_list.front() < 1) throw UsageError("n must be >= 1");
  if (cfg.grid.empty()) throw UsageError("grid must be nonempty");
  if (!(cfg.delta > 0.0)) throw UsageError("delta must be positive");
  if (cfg.format != "csv" && cfg.format != "json")
    throw UsageError("format must be csv or json");
  if (cfg.bits < 53) throw UsageError("oracle bits must be >= 53");
  for (size_t gi = 0; gi < cfg.grid.size(); ++gi)
    for (int n : cfg.n_list) {
      Region r = classify_region(cfg.params, n, cfg.grid[gi], cfg.delta);
      if (r.kind == Region::Kind::TurningPointExcluded)
        throw UsageError("grid point " + std::to_string(gi) +
                         " sits in an excluded turning-point neighborhood at n = " +
                         std::to_string(n));
    }
}

namespace {

ScaledComplex oracle_eval(const RecurrenceParams& p, int n, Complex pt,
                          const SweepConfig& cfg) {
  const Complex x = unscale_point(p, n, pt);
  OracleMode m = cfg.mode;
  if (m == OracleMode::Auto)
    m = n <= 400 ? OracleMode::HighPrec : OracleMode::Native;
  switch (m) {
    case OracleMode::Native: return eval_pi(p, x, n).value;
    case OracleMode::HighPrec: return eval_pi_highprec(p, x, n, cfg.bits);
    case OracleMode::Rational: return eval_pi_rational(p, x, n);
    case OracleMode::Auto: break;
  }
  throw InvalidInputError("unreachable");
}

std::string sanitize_note(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n') c = ';';
  return s;
}

std::string point_str(Complex p) {
  return fmt_double(p.real()) + "," + fmt_double(p.imag());
}

void echo_config(const SweepConfig& cfg, std::ostream& os) {
  os << "# d=" << fmt_double(cfg.params.d) << " a=" << fmt_double(cfg.params.a)
     << " b=" << fmt_double(cfg.params.b) << " case=" << to_string(cfg.params.case_tag())
     << "\n";
  os << "# n_list=";
  for (size_t i = 0; i < cfg.n_list.size(); ++i)
    os << (i ? "," : "") << cfg.n_list[i];
  os << "\n# grid=";
  for (size_t i = 0; i < cfg.grid.size(); ++i)
    os << (i ? ";" : "") << point_str(cfg.grid[i]);
  os << "\n# mode=" << to_string(cfg.mode) << " bits=" << cfg.bits
     << " delta=" << fmt_double(cfg.delta) << " format=" << cfg.format
     << " reflected=" << (cfg.reflected ? 1 : 0) << "\n";
}

nlohmann::json config_json(const SweepConfig& cfg) {
  nlohmann::json grid = nlohmann::json::array();
  for (Complex p : cfg.grid) grid.push_back({p.real(), p.imag()});
  return {{"d", cfg.params.d},       {"a", cfg.params.a},
          {"b", cfg.params.b},       {"case", to_string(cfg.params.case_tag())},
          {"n_list", cfg.n_list},    {"grid", grid},
          {"mode", to_string(cfg.mode)}, {"bits", cfg.bits},
          {"delta", cfg.delta},      {"format", cfg.format},
          {"reflected", cfg.reflected}};
}

}  // namespace

ErrorReport compare_sweep(const SweepConfig& cfg) {
  validate_config(cfg);
  ErrorReport rep;
  rep.config = cfg;
  const RecurrenceParams& p = cfg.params;
  for (size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
    const int n = cfg.n_list[ni];
    for (size_t gi = 0; gi < cfg.grid.size(); ++gi) {
      const Complex pt = cfg.grid[gi];
      ErrorRow row;
      row.n = n;
      row.point = pt;
      row.region = classify_region(p, n, pt, cfg.delta);
      try {
        AsymptoticValue av = asym_eval(p, n, pt, row.region);
        if (av.branch_parts)
          row.log_gap = av.branch_parts->first.log_abs() -
                        av.branch_parts->second.log_abs();
        row.rel_error = rel_error(av.value, oracle_eval(p, n, pt, cfg));
      } catch (const std::exception& e) {
        row.note = sanitize_note(e.what());
        row.rel_error = std::numeric_limits<double>::quiet_NaN();
      }
      rep.rows.push_back(std::move(row));
    }
  }
  // Per-region max error for each n, in enum order.
  std::map<Region::Kind, std::vector<double>> sm;
  for (const ErrorRow& r : rep.rows) {
    auto& v = sm[r.region.kind];
    if (v.empty()) v.assign(cfg.n_list.size(), 0.0);
    const size_t ni =
        std::find(cfg.n_list.begin(), cfg.n_list.end(), r.n) - cfg.n_list.begin();
    if (!std::isnan(r.rel_error)) v[ni] = std::max(v[ni], r.rel_error);
  }
  for (auto& [kind, v] : sm) rep.summary.push_back({kind, v});
  // A grid point violates when its error grows along n_list.
  const size_t G = cfg.grid.size();
  for (size_t gi = 0; gi < G; ++gi) {
    bool ok = true;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
      const double e = rep.rows[ni * G + gi].rel_error;
      if (std::isnan(e)) continue;
      if (!std::isnan(prev) && e > prev) ok = false;
      prev = e;
    }
    if (!ok) rep.violations.push_back(static_cast<int>(gi));
  }
  return rep;
}

void write_report_csv(const ErrorReport& rep, std::ostream& os) {
  echo_config(rep.config, os);
  os << "n,point_re,point_im,region,scaled_rel_error,log_gap,note\n";
  for (const ErrorRow& r : rep.rows)
    os << r.n << "," << point_str(r.point) << "," << to_string(r.region.kind) << ","
       << fmt_double(r.rel_error) << "," << fmt_double(r.log_gap) << "," << r.note
       << "\n";
  os << "# summary\n";
  for (const auto& s : rep.summary) {
    os << "# region=" << to_string(s.kind) << " max_err=";
    for (size_t i = 0; i < s.max_err.size(); ++i)
      os << (i ? "," : "") << fmt_double(s.max_err[i]);
    os << "\n";
  }
  os << "# violations=";
  for (size_t i = 0; i < rep.violations.size(); ++i)
    os << (i ? "," : "") << rep.violations[i];
  os << "\n";
}

void write_report_json(const ErrorReport& rep, std::ostream& os) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ErrorRow& r : rep.rows) {
    nlohmann::json jr = {{"n", r.n},
                         {"point", {r.point.real(), r.point.imag()}},
                         {"region", to_string(r.region.kind)},
                         {"margin", r.region.margin},
                         {"log_gap", r.log_gap},
                         {"note", r.note}};
    if (std::isnan(r.rel_error))
      jr["scaled_rel_error"] = nullptr;
    else
      jr["scaled_rel_error"] = r.rel_error;
    rows.push_back(jr);
  }
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : rep.summary)
    summary.push_back({{"region", to_string(s.kind)}, {"max_err", s.max_err}});
  nlohmann::json j = {{"config", config_json(rep.config)},
                      {"rows", rows},
                      {"summary", summary},
                      {"violations", rep.violations}};
  os << j.dump(2) << "\n";
}

void emit_figure_data(const RecurrenceParams& p, int n, const std::string& out_dir) {
  if (p.needs_reflection() || p.case_tag() != CaseTag::IB)
    throw InvalidInputError("figure data requires d > 0 and a < 0");
  if (n < 1) throw InvalidInputError("need n >= 1");
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const double A = p.A();
  const CurvePolyline& curve = cached_curve(A);
  ZeroSet zs = find_zeros(p, n);
  const double rn = std::sqrt(double(n)), rA = 2.0 * std::sqrt(A);

  auto header = [&](std::ostream& os) {
    os << "# d=" << fmt_double(p.d) << " a=" << fmt_double(p.a)
       << " b=" << fmt_double(p.b) << " n=" << n << "\n"
       << "# A=" << fmt_double(A) << " zA=" << fmt_double(curve.zA) << "\n";
  };

  {
    std::ofstream f(fs::path(out_dir) / "curve.csv", std::ios::binary);
    if (!f) throw Error("cannot open curve.csv in " + out_dir);
    header(f);
    f << "re,im,residual\n";
    for (size_t i = 0; i < curve.points.size(); ++i)
      f << point_str(curve.points[i]) << "," << fmt_double(curve.residuals[i]) << "\n";
  }
  {
    std::ofstream f(fs::path(out_dir) / "segment.csv", std::ios::binary);
    if (!f) throw Error("cannot open segment.csv in " + out_dir);
    header(f);
    f << "re,im\n";
    const int m = 257;
    for (int k = 0; k < m; ++k) {
      const double t = double(k) / (m - 1);
      f << fmt_double(-rn * p.d + t * (curve.zA + rn * p.d)) << ",0\n";
    }
  }
  {
    std::ofstream f(fs::path(out_dir) / "zeros.csv", std::ios::binary);
    if (!f) throw Error("cannot open zeros.csv in " + out_dir);
    header(f);
    f << "re,im,scaled_re,scaled_im,residual\n";
    for (int i = 0; i < zs.n; ++i)
      f << point_str(zs.zeros[i]) << "," << point_str(zs.scaled[i]) << ","
        << fmt_double(zs.residuals[i]) << "\n";
  }
  // Max zero distance to the Y set, same tip exclusion as zeros_vs_Yset.
  const Complex tips[3] = {Complex(-rn * p.d, 0.0), Complex(0.0, rA),
                           Complex(0.0, -rA)};
  double maxd = 0.0;
  for (Complex zeta : zs.scaled) {
    bool near_tip = false;
    for (Complex t : tips)
      if (std::abs(zeta - t) < 0.3) near_tip = true;
    if (!near_tip) maxd = std::max(maxd, distance_to_Yset(A, p.d, n, zeta, curve));
  }
  {
    nlohmann::json jcurve = nlohmann::json::array(), jseg = nlohmann::json::array(),
                   jzeros = nlohmann::json::array();
    for (size_t i = 0; i < curve.points.size(); ++i)
      jcurve.push_back({curve.points[i].real(), curve.points[i].imag(),
                        curve.residuals[i]});
    const int m = 257;
    for (int k = 0; k < m; ++k) {
      const double t = double(k) / (m - 1);
      jseg.push_back({-rn * p.d + t * (curve.zA + rn * p.d), 0.0});
    }
    for (int i = 0; i < zs.n; ++i)
      jzeros.push_back({zs.zeros[i].real(), zs.zeros[i].imag(),
                        zs.scaled[i].real(), zs.scaled[i].imag(), zs.residuals[i]});
    nlohmann::json j = {
        {"params", {{"d", p.d}, {"a", p.a}, {"b", p.b}}},
        {"n", n},
        {"A", A},
        {"zA", curve.zA},
        {"max_distance", maxd},
        {"curve", jcurve},
        {"segment", jseg},
        {"zeros", jzeros}};
    std::ofstream f(fs::path(out_dir) / "overlay.json", std::ios::binary);
    if (!f) throw Error("cannot open overlay.json in " + out_dir);
    f << j.dump(2) << "\n";
  }
}

namespace {

struct Check {
  std::string name;
  bool ok;
};

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

std::vector<Check> run_selftest() {
  std::vector<Check> cs;
  auto add = [&](const std::string& name, bool ok) { cs.push_back({name, ok}); };

  // scaled arithmetic: ratios of huge products stay finite and exact-ish
  {
    ScaledComplex u = ScaledComplex::from(Complex(3.0, -2.0));
    ScaledComplex prod = ScaledComplex::from(1.0);
    for (int i = 0; i < 2000; ++i) prod = prod * u;
    ScaledComplex back = prod;
    for (int i = 0; i < 2000; ++i) back = back / u;
    add("scaled.product_roundtrip", rel_error(back, ScaledComplex::from(1.0)) < 1e-11);
    add("scaled.text_roundtrip",
        scaled_from_text(to_text(prod)) == prod &&
            scaled_from_json(scaled_to_json(prod)) == prod);
  }
  // branch kernels: asymptotic normalization and cut-side continuity
  {
    Complex big(0.0, 1e3);
    add("branch.sqrt_quad_normalized",
        std::abs(sqrt_quad(2.0, big) / big - 1.0) < 1e-4);
    Complex v = sqrt_quad(-1.0, Complex(-5.0, 1e-12));
    Complex w = sqrt_quad(-1.0, Complex(-5.0, -1e-12));
    add("branch.continuous_off_segment", std::abs(v - w) < 1e-9);
  }
  // recurrence: ratio product reproduces eval_pi
  {
    RecurrenceParams p(1.0, 1.0, 0.5);
    Complex x(75.0, 3.0);
    auto ws = ratio_sequence(p, x, 60);
    ScaledComplex prod = ScaledComplex::from(1.0);
    for (Complex w : ws) prod = prod * ScaledComplex::from(w);
    add("recurrence.ratio_product",
        rel_error(prod, eval_pi(p, x, 60).value) < 1e-10);
    add("recurrence.highprec_agrees",
        rel_error(eval_pi(p, x, 80).value, eval_pi_highprec(p, x, 80)) < 1e-12);
  }
  // curve geometry: certificates and the sqrt(A) scaling law
  {
    CurvePolyline c = trace_gamma(1.0, 129, 1e-10);
    double worst = 0.0;
    for (double r : c.residuals) worst = std::max(worst, r);
    add("curve.residual_certificates", worst < 1e-10);
    add("curve.endpoints",
        std::abs(c.endpoint_upper - Complex(0.0, 2.0)) < 1e-9 &&
            std::abs(c.endpoint_lower - Complex(0.0, -2.0)) < 1e-9);
    add("curve.zA_scaling", near(solve_zA(4.0), 2.0 * solve_zA(1.0), 1e-9));
  }
  // asymptotics: the d = a = 0, b = 1/4 evaluation is an equality
  {
    RecurrenceParams p(0.0, 0.0, 0.25);
    Complex x(0.41, 0.0);
    Region r = classify_region(p, 60, x);
    AsymptoticValue v = asym_IIC(p, 60, x, r);
    add("asym.chebyshev_equality",
        rel_error(v.value, eval_pi(p, x, 60).value) < 1e-10);
    RecurrenceParams q(1.0, 1.0, 0.0);
    Region ro = classify_region(q, 400, Complex(3.0, 0.0));
    AsymptoticValue vo = asym_IA(q, 400, Complex(3.0, 0.0), ro);
    add("asym.outer_converges",
        rel_error(vo.value, eval_pi_highprec(q, unscale_point(q, 400, Complex(3.0, 0.0)), 400)) < 0.2);
  }
  // zeros: the exactly-solvable case and conjugate symmetry
  {
    RecurrenceParams p(0.0, 0.0, 0.25);
    ZeroSet zs = find_zeros(p, 20, 1e-12, 200);
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double want = std::cos(k * 3.14159265358979323846 / 21.0);
      double best = 1e9;
      for (Complex z : zs.zeros) best = std::min(best, std::abs(z - want));
      worst = std::max(worst, best);
    }
    add("zeros.chebyshev_nodes", worst < 1e-8);
    RecurrenceParams ib(1.0, -1.0, 0.0);
    ZeroSet zb = find_zeros(ib, 40);
    double conj_gap = 0.0;
    for (Complex z : zb.zeros) {
      double best = 1e9;
      for (Complex w : zb.zeros) best = std::min(best, std::abs(std::conj(z) - w));
      conj_gap = std::max(conj_gap, best);
    }
    add("zeros.conjugate_symmetry", conj_gap < 1e-8);
  }
  // harness: byte-determinism of a small sweep
  {
    SweepConfig cfg;
    cfg.params = RecurrenceParams(1.0, 1.0, 0.0);
    cfg.n_list = {50, 100};
    cfg.grid = {Complex(3.0, 0.0), Complex(0.3, 0.0)};
    std::ostringstream a1, a2;
    write_report_csv(compare_sweep(cfg), a1);
    write_report_csv(compare_sweep(cfg), a2);
    add("harness.deterministic", a1.str() == a2.str() && !a1.str().empty());
  }
  return cs;
}

}  // namespace

bool selftest(std::ostream& os) {
  std::vector<Check> cs = run_selftest();
  bool all = true;
  for (const Check& c : cs) {
    os << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << "\n";
    all = all && c.ok;
  }
  os << (all ? "all checks passed" : "CHECKS FAILED") << " (" << cs.size()
     << " total)\n";
  return all;
}

namespace {

Complex parse_point_str(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return Complex(parse_double(s), 0.0);
  return Complex(parse_double(s.substr(0, comma)),
                 parse_double(s.substr(comma + 1)));
}

// native | highprec | highprec(BITS) | rational | auto
OracleMode parse_mode(const std::string& s, int& bits) {
  if (s == "auto") return OracleMode::Auto;
  if (s == "native") return OracleMode::Native;
  if (s == "rational") return OracleMode::Rational;
  if (s == "highprec") return OracleMode::HighPrec;
  if (s.rfind("highprec(", 0) == 0 && s.back() == ')') {
    bits = std::stoi(s.substr(9, s.size() - 10));
    return OracleMode::HighPrec;
  }
  throw UsageError("unknown mode '" + s + "'");
}

// The one flag among --z/--y/--x that matches the case's scaled coordinate.
std::string coord_flag(CaseTag tag) {
  switch (tag) {
    case CaseTag::IA:
    case CaseTag::IB: return "--z";
    case CaseTag::IC:
    case CaseTag::IIA:
    case CaseTag::IIB: return "--y";
    case CaseTag::IIC: return "--x";
  }
  return "--x";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file " + path);
  f << text;
}

struct CliOpts {
  double d = 0.0, a = 0.0, b = 0.0, A = 1.0;
  int n = 0, points = 512;
  double tol = 1e-10, delta = 0.1;
  std::string x, mode = "auto", out, format = "csv";
  std::vector<std::string> zs, ys, xs;  // repeatable scaled points
  std::string n_list;
};

int run_eval(const CliOpts& o) {
  RecurrenceParams p(o.d, o.a, o.b);
  if (o.n < 0) throw UsageError("--n must be nonnegative");
  const Complex x = parse_point_str(o.x);
  int bits = 256;
  OracleMode m = o.mode == "auto" ? OracleMode::Native : parse_mode(o.mode, bits);
  ScaledComplex v;
  switch (m) {
    case OracleMode::Native: v = eval_pi(p, x, o.n).value; break;
    case OracleMode::HighPrec: v = eval_pi_highprec(p, x, o.n, bits); break;
    case OracleMode::Rational: v = eval_pi_rational(p, x, o.n); break;
    case OracleMode::Auto: v = eval_pi(p, x, o.n).value; break;
  }
  const std::string line = scaled_to_json(v).dump();
  std::cout << line << "\n";
  if (!o.out.empty()) {
    nlohmann::json j = {{"config",
                         {{"d", p.d}, {"a", p.a}, {"b", p.b}, {"n", o.n},
                          {"x", {x.real(), x.imag()}},
                          {"mode", to_string(m)}}},
                        {"value", scaled_to_json(v)}};
    write_file(o.out, j.dump(2) + "\n");
  }
  return 0;
}

// Returns the scaled point for the normalized (d >= 0) params, negating the
// coordinate when the reflection x -> -x was applied.
Complex read_coord(const CliOpts& o, const RecurrenceParams& normalized, bool reflected) {
  const std::string want = coord_flag(normalized.case_tag());
  const std::vector<std::string>* src = nullptr;
  if (want == "--z") src = &o.zs;
  else if (want == "--y") src = &o.ys;
  else src = &o.xs;
  if (src->size() != 1)
    throw UsageError("this case takes exactly one " + want + " point");
  if ((want != "--z" && !o.zs.empty()) || (want != "--y" && !o.ys.empty()) ||
      (want != "--x" && !o.xs.empty()))
    throw UsageError("this case takes its point via " + want);
  Complex pt = parse_point_str(src->front());
  return reflected ? -pt : pt;
}

int run_asym(const CliOpts& o) {
  RecurrenceParams given(o.d, o.a, o.b);
  const bool reflected = given.needs_reflection();
  RecurrenceParams p = reflected ? given.reflected() : given;
  if (reflected)
    std::cerr << "note: d < 0 normalized by x -> -x; result includes the (-1)^n flip\n";
  if (o.n < 1) throw UsageError("--n must be >= 1");
  const Complex pt = read_coord(o, p, reflected);
  Region r = classify_region(p, o.n, pt, o.delta);
  AsymptoticValue v = asym_eval(p, o.n, pt, r);
  if (reflected && (o.n & 1)) {
    v.value = -v.value;
    if (v.branch_parts)
      v.branch_parts =
          std::make_pair(-v.branch_parts->first, -v.branch_parts->second);
  }
  nlohmann::json j = {{"region", to_string(r.kind)},
                      {"margin", r.margin},
                      {"value", scaled_to_json(v.value)}};
  if (v.branch_parts)
    j["parts"] = {scaled_to_json(v.branch_parts->first),
                  scaled_to_json(v.branch_parts->second)};
  std::cout << j.dump() << "\n";
  if (!o.out.empty()) {
    nlohmann::json wrapped = {
        {"config",
         {{"d", given.d}, {"a", given.a}, {"b", given.b}, {"n", o.n},
          {"point", {pt.real(), pt.imag()}}, {"delta", o.delta},
          {"reflected", reflected}}},
        {"result", j}};
    write_file(o.out, wrapped.dump(2) + "\n");
  }
  return 0;
}

std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

int run_compare(const CliOpts& o) {
  RecurrenceParams given(o.d, o.a, o.b);
  SweepConfig cfg;
  cfg.reflected = given.needs_reflection();
  cfg.params = cfg.reflected ? given.reflected() : given;
  if (cfg.reflected)
    std::cerr << "note: d < 0 normalized by x -> -x; errors are reflection-invariant\n";
  cfg.n_list = parse_n_list(o.n_list);
  const std::string want = coord_flag(cfg.params.case_tag());
  const std::vector<std::string>& src =
      want == "--z" ? o.zs : (want == "--y" ? o.ys : o.xs);
  if ((want != "--z" && !o.zs.empty()) || (want != "--y" && !o.ys.empty()) ||
      (want != "--x" && !o.xs.empty()))
    throw UsageError("this case takes its points via " + want);
  if (src.empty()) throw UsageError("need at least one " + want + " point");
  for (const std::string& s : src) {
    Complex pt = parse_point_str(s);
    cfg.grid.push_back(cfg.reflected ? -pt : pt);
  }
  int bits = 256;
  cfg.mode = parse_mode(o.mode, bits);
  cfg.bits = bits;
  cfg.delta = o.delta;
  cfg.out = o.out;
  cfg.format = o.format;
  ErrorReport rep = compare_sweep(cfg);
  std::ostringstream os;
  if (cfg.format == "csv")
    write_report_csv(rep, os);
  else
    write_report_json(rep, os);
  std::cout << os.str();
  if (!cfg.out.empty()) write_file(cfg.out, os.str());
  return 0;
}

int run_zeros(const CliOpts& o) {
  RecurrenceParams p(o.d, o.a, o.b);
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  ZeroSet zs = find_zeros(p, o.n, o.tol, 400);
  std::ostringstream os;
  if (o.format == "csv") {
    os << "# d=" << fmt_double(p.d) << " a=" << fmt_double(p.a)
       << " b=" << fmt_double(p.b) << " n=" << o.n << " tol=" << fmt_double(o.tol)
       << "\n";
    os << "re,im,scaled_re,scaled_im,residual\n";
    for (int i = 0; i < zs.n; ++i)
      os << point_str(zs.zeros[i]) << "," << point_str(zs.scaled[i]) << ","
         << fmt_double(zs.residuals[i]) << "\n";
  } else if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < zs.n; ++i)
      rows.push_back({{"re", zs.zeros[i].real()},
                      {"im", zs.zeros[i].imag()},
                      {"scaled_re", zs.scaled[i].real()},
                      {"scaled_im", zs.scaled[i].imag()},
                      {"residual", zs.residuals[i]}});
    nlohmann::json j = {{"config",
                         {{"d", p.d}, {"a", p.a}, {"b", p.b}, {"n", o.n},
                          {"tol", o.tol}}},
                        {"zeros", rows}};
    os << j.dump(2) << "\n";
  } else {
    throw UsageError("format must be csv or json");
  }
  std::cout << os.str();
  if (!o.out.empty()) write_file(o.out, os.str());
  return 0;
}

int run_curve(const CliOpts& o) {
  if (!(o.A > 0.0)) throw UsageError("--A must be positive");
  if (o.points < 2) throw UsageError("--points must be >= 2");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  CurvePolyline c = trace_gamma(o.A, o.points, o.tol);
  std::ostringstream os;
  os << "# A=" << fmt_double(o.A) << " points=" << o.points
     << " tol=" << fmt_double(o.tol) << "\n";
  os << "# zA=" << fmt_double(c.zA) << "\n";
  os << "re,im,residual\n";
  for (size_t i = 0; i < c.points.size(); ++i)
    os << point_str(c.points[i]) << "," << fmt_double(c.residuals[i]) << "\n";
  std::cout << os.str();
  if (!o.out.empty()) write_file(o.out, os.str());
  return 0;
}

int run_figure(const CliOpts& o) {
  RecurrenceParams p(o.d, o.a, o.b);
  if (o.n < 1) throw UsageError("--n must be >= 1");
  const std::string dir = o.out.empty() ? "figure_data" : o.out;
  emit_figure_data(p, o.n, dir);
  std::cout << "wrote " << dir << "/curve.csv, segment.csv, zeros.csv, overlay.json\n";
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Evaluation and asymptotics for pi_{n+1} = (x - dn) pi_n - (an + b) pi_{n-1}"};
  app.require_subcommand(1);
  CliOpts o;

  auto add_params = [&](CLI::App* c) {
    c->add_option("--d", o.d, "linear diagonal coefficient d");
    c->add_option("--a", o.a, "linear off-diagonal slope a");
    c->add_option("--b", o.b, "off-diagonal offset b");
  };
  auto add_points = [&](CLI::App* c) {
    c->add_option("--z", o.zs, "scaled point re[,im] (d > 0 cases)");
    c->add_option("--y", o.ys, "scaled point re[,im] (d = 0 and x = ny cases)");
    c->add_option("--x", o.xs, "unscaled point re[,im] (d = a = 0 case)");
  };

  CLI::App* ev = app.add_subcommand("eval", "evaluate pi_n(x) by the recurrence");
  add_params(ev);
  ev->add_option("--n", o.n, "degree")->required();
  ev->add_option("--x", o.x, "evaluation point re[,im]")->required();
  ev->add_option("--mode", o.mode, "native | highprec[(bits)] | rational");
  ev->add_option("--out", o.out, "also write a config-wrapped JSON file");

  CLI::App* as = app.add_subcommand("asym", "evaluate the applicable asymptotic formula");
  add_params(as);
  as->add_option("--n", o.n, "degree")->required();
  add_points(as);
  as->add_option("--delta", o.delta, "region-boundary exclusion radius");
  as->add_option("--out", o.out, "also write a config-wrapped JSON file");

  CLI::App* cm = app.add_subcommand("compare", "recurrence-vs-asymptotics error sweep");
  add_params(cm);
  cm->add_option("--n-list", o.n_list, "comma-separated ascending degrees")->required();
  add_points(cm);
  cm->add_option("--mode", o.mode, "auto | native | highprec[(bits)] | rational");
  cm->add_option("--delta", o.delta, "region-boundary exclusion radius");
  cm->add_option("--out", o.out, "write the report here as well");
  cm->add_option("--format", o.format, "csv | json");

  CLI::App* zr = app.add_subcommand("zeros", "all n zeros with residual certificates");
  add_params(zr);
  zr->add_option("--n", o.n, "degree")->required();
  zr->add_option("--tol", o.tol, "Newton-step freeze tolerance");
  zr->add_option("--out", o.out, "write the table here as well");
  zr->add_option("--format", o.format, "csv | json");

  CLI::App* cv = app.add_subcommand("curve", "trace the equal-modulus curve for A");
  cv->add_option("--A", o.A, "curve parameter A > 0")->required();
  cv->add_option("--points", o.points, "half-curve point count");
  cv->add_option("--tol", o.tol, "per-point residual tolerance");
  cv->add_option("--out", o.out, "write the polyline here as well");

  CLI::App* fg = app.add_subcommand("figure", "emit curve/segment/zeros overlay data");
  add_params(fg);
  fg->add_option("--n", o.n, "degree")->required();
  fg->add_option("--out", o.out, "output directory (default figure_data)");

  app.add_subcommand("selftest", "run the cross-module invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("eval")) return run_eval(o);
    if (app.got_subcommand("asym")) return run_asym(o);
    if (app.got_subcommand("compare")) return run_compare(o);
    if (app.got_subcommand("zeros")) return run_zeros(o);
    if (app.got_subcommand("curve")) return run_curve(o);
    if (app.got_subcommand("figure")) return run_figure(o);
    if (app.got_subcommand("selftest")) return selftest(std::cout) ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace prasymp
