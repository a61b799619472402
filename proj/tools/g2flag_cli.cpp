// Command-line interface: verification suites, metric classifiers, Ricci
// evaluation, flow integration, equilibrium and chart reports.

#include "g2flag/charts.hpp"
#include "g2flag/darboux.hpp"
#include "g2flag/flags.hpp"
#include "g2flag/metrics.hpp"
#include "g2flag/reference.hpp"
#include "g2flag/ricci.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using g2flag::QF13;
using json = nlohmann::ordered_json;

constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

// ---------------------------------------------------------------------------
// Scalar parsing: rationals ("3/2"), "sqrt13", and linear combinations like
// "1+2*sqrt13" or "-1/2*sqrt13+3".

QF13 parse_term(std::string t) {
  bool irr = false;
  auto pos = t.find("sqrt13");
  if (pos != std::string::npos) {
    irr = true;
    t.erase(pos, 6);
    if (!t.empty() && t.back() == '*') t.pop_back();
    if (t.empty() || t == "+") t = "1";
    if (t == "-") t = "-1";
  }
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    long frac = static_cast<long>(t.size() - dot - 1);
    std::size_t pos = 0;
    long mant = std::stol(digits, &pos);
    if (pos != digits.size()) throw std::invalid_argument("bad scalar '" + t + "'");
    long den10 = 1;
    for (long i = 0; i < frac; ++i) den10 *= 10;
    QF13 r(g2flag::Rational(mant, den10));
    return irr ? r * QF13::sqrt13() : r;
  }
  long num = 0, den = 1;
  auto slash = t.find('/');
  std::size_t used = 0;
  std::string ns = slash == std::string::npos ? t : t.substr(0, slash);
  num = std::stol(ns, &used);
  if (used != ns.size()) throw std::invalid_argument("bad scalar '" + t + "'");
  if (slash != std::string::npos) {
    std::string ds = t.substr(slash + 1);
    den = std::stol(ds, &used);
    if (used != ds.size() || den == 0) throw std::invalid_argument("bad scalar '" + t + "'");
  }
  QF13 r(g2flag::Rational(num, den));
  return irr ? r * QF13::sqrt13() : r;
}

QF13 parse_scalar(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  QF13 total(0);
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' &&
                          s[i - 1] != '+' && s[i - 1] != '-')) {
      total += parse_term(s.substr(start, i - start));
      start = i;
    }
  }
  return total;
}

std::vector<QF13> parse_scalar_list(const std::string& raw) {
  std::vector<QF13> out;
  std::size_t start = 0;
  while (start <= raw.size()) {
    auto comma = raw.find(',', start);
    if (comma == std::string::npos) comma = raw.size();
    out.push_back(parse_scalar(raw.substr(start, comma - start)));
    start = comma + 1;
    if (comma == raw.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic output helpers.

double fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json jscalar(const QF13& v) {
  return json{{"exact", v.to_string()}, {"value", fixed12(v.to_double())}};
}

json jscalar_list(const std::vector<QF13>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(jscalar(c));
  return a;
}

json jcomplex(const std::complex<double>& c) {
  return json{{"re", fixed12(c.real())}, {"im", fixed12(c.imag())}};
}

struct Output {
  std::string mode = "pretty";  // json, csv, pretty
  bool color = false;
};

void emit(const Output& out, const json& j, const std::string& pretty_text) {
  if (out.mode == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << pretty_text;
}

std::string pass_str(const Output& out, bool ok) {
  if (!out.color) return ok ? "pass" : "FAIL";
  return ok ? "\033[32mpass\033[0m" : "\033[31mFAIL\033[0m";
}

json config_echo(const std::vector<std::pair<std::string, std::string>>& kv) {
  json c = json::object();
  for (const auto& [k, v] : kv) c[k] = v;
  return c;
}

std::string pretty_config(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string s = "config:";
  for (const auto& [k, v] : kv) s += " " + k + "=" + v;
  return s + "\n";
}

// ---------------------------------------------------------------------------
// verify subcommand: the exact invariant suite.

bool check_jacobi() {
  auto basis = g2flag::standard_basis();
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        auto s = g2flag::bracket(g2flag::bracket(a, b), c) +
                 g2flag::bracket(g2flag::bracket(b, c), a) +
                 g2flag::bracket(g2flag::bracket(c, a), b);
        if (!s.is_zero()) return false;
      }
  return true;
}

bool check_bracket_tables() {
  const auto& k = g2flag::CompactAlgebra::get();
  for (const auto& r : g2flag::reference_brackets_xy()) {
    g2flag::KVec ei = g2flag::KVec::Zero(), ej = g2flag::KVec::Zero();
    ei(r.i) = QF13(1);
    ej(r.j) = QF13(1);
    g2flag::KVec got = k.bracket_table_xy(r.i, r.j);
    for (int t = 0; t < 6; ++t)
      if (got(t) != r.expected(t)) return false;
  }
  for (const auto& r : g2flag::reference_brackets_wz()) {
    g2flag::KVec ei = g2flag::KVec::Zero(), ej = g2flag::KVec::Zero();
    ei(r.i) = QF13(1);
    ej(r.j) = QF13(1);
    g2flag::KVec got = k.bracket_wz(ei, ej);
    for (int t = 0; t < 6; ++t)
      if (got(t) != r.expected(t)) return false;
  }
  return true;
}

bool check_killing_and_basis() {
  const auto& k = g2flag::CompactAlgebra::get();
  auto gram = g2flag::reference_killing_xy();
  auto wz = g2flag::reference_wz_in_xy();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (k.killing_gram()(i, j) != gram(i, j)) return false;
      if (k.wz_in_xy()(i, j) != wz(i, j)) return false;
    }
  return true;
}

bool check_parabolics() {
  using g2flag::FlagId;
  if (g2flag::span_rank(g2flag::parabolic_subalgebra(FlagId::Empty)) != 8) return false;
  if (g2flag::span_rank(g2flag::parabolic_subalgebra(FlagId::Alpha1)) != 9) return false;
  if (g2flag::span_rank(g2flag::parabolic_subalgebra(FlagId::Alpha2)) != 9) return false;
  // Closure under bracket.
  for (auto id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto p = g2flag::parabolic_subalgebra(id);
    for (const auto& a : p)
      for (const auto& b : p)
        if (!g2flag::in_span(p, g2flag::bracket(a, b))) return false;
  }
  return true;
}

bool check_flags() {
  using g2flag::FlagId;
  for (auto id : {FlagId::Empty, FlagId::Alpha1, FlagId::Alpha2}) {
    auto f = g2flag::flag_data(id);
    if (!g2flag::module_invariance_check(f)) return false;
    if (!g2flag::equivariance_check(f)) return false;
  }
  if (g2flag::flag_data(FlagId::Empty).tangent_dim() != 6) return false;
  if (g2flag::flag_data(FlagId::Alpha1).tangent_dim() != 5) return false;
  if (g2flag::flag_data(FlagId::Alpha2).tangent_dim() != 5) return false;
  return true;
}

bool check_darboux() {
  auto found = g2flag::darboux_search(g2flag::poly_field(), 2);
  auto expect = g2flag::reference_darboux_pairs();
  if (found.size() != expect.size()) return false;
  for (const auto& e : expect) {
    bool hit = false;
    for (const auto& g : found)
      if (g.f == e.f && g.k == e.k) hit = true;
    if (!hit) return false;
    if (!g2flag::darboux_verify(e, g2flag::poly_field())) return false;
  }
  return true;
}

bool check_charts() {
  if (!(g2flag::poly_field()[0] == g2flag::reference_xyz_system()[0]) ||
      !(g2flag::poly_field()[1] == g2flag::reference_xyz_system()[1]) ||
      !(g2flag::poly_field()[2] == g2flag::reference_xyz_system()[2]))
    return false;
  for (auto id : {g2flag::ChartId::Kappa1, g2flag::ChartId::U1, g2flag::ChartId::U2,
                  g2flag::ChartId::U3}) {
    auto d = g2flag::chart_field(id);
    auto r = g2flag::reference_chart_system(id);
    for (int i = 0; i < 3; ++i)
      if (!(d[i] == r[i])) return false;
  }
  return true;
}

int run_verify(const Output& out) {
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("ambient-jacobi-identity", check_jacobi());
  checks.emplace_back("compact-bracket-tables", check_bracket_tables());
  checks.emplace_back("killing-gram-and-orthonormal-basis", check_killing_and_basis());
  checks.emplace_back("parabolic-subalgebras", check_parabolics());
  checks.emplace_back("flag-decompositions", check_flags());
  checks.emplace_back("invariant-surface-table", check_darboux());
  checks.emplace_back("chart-derivation", check_charts());
  bool all = true;
  json j;
  j["command"] = "verify";
  json arr = json::array();
  std::string pretty;
  for (const auto& [name, ok] : checks) {
    all = all && ok;
    arr.push_back({{"name", name}, {"pass", ok}});
    pretty += name + ": " + pass_str(out, ok) + "\n";
  }
  j["checks"] = arr;
  j["all_pass"] = all;
  emit(out, j, pretty);
  return all ? 0 : kExitVerifyFail;
}

// ---------------------------------------------------------------------------

json flag_report(g2flag::FlagId id) {
  auto f = g2flag::flag_data(id);
  json j;
  j["theta"] = g2flag::to_string(id);
  j["tangent_dim"] = f.tangent_dim();
  json iso = json::array();
  for (const auto& g : f.isotropy) {
    json v = json::array();
    for (int i = 0; i < 6; ++i) v.push_back(jscalar(g(i)));
    iso.push_back(v);
  }
  j["isotropy"] = iso;
  json mods = json::array();
  for (const auto& m : f.modules) {
    json jm;
    jm["dim"] = static_cast<int>(m.gens.size());
    jm["norm2"] = jscalar(m.norm2);
    json gens = json::array();
    for (const auto& g : m.gens) {
      json v = json::array();
      for (int i = 0; i < 6; ++i) v.push_back(jscalar(g(i)));
      gens.push_back(v);
    }
    jm["generators_wz"] = gens;
    mods.push_back(jm);
  }
  j["modules"] = mods;
  json eqs = json::array();
  for (const auto& e : f.equivalences) eqs.push_back({{"i", e.i}, {"j", e.j}});
  j["equivalences"] = eqs;
  j["module_invariance"] = g2flag::module_invariance_check(f);
  j["equivariance"] = g2flag::equivariance_check(f);
  return j;
}

json equilibrium_json(const g2flag::Equilibrium& e) {
  json j;
  j["name"] = e.name;
  json pt = json::array();
  for (double c : e.point) pt.push_back(fixed12(c));
  j["point"] = pt;
  json evs = json::array();
  for (const auto& ev : e.eigenvalues) evs.push_back(jcomplex(ev));
  j["eigenvalues"] = evs;
  json vecs = json::array();
  for (const auto& v : e.eigenvectors) {
    json vv = json::array();
    for (const auto& c : v) vv.push_back(jcomplex(c));
    vecs.push_back(vv);
  }
  j["eigenvectors"] = vecs;
  j["classification"] = e.classification;
  j["family"] = e.family;
  if (!e.note.empty()) j["note"] = e.note;
  auto disk = g2flag::disk_projection(e.point);
  json dp = json::array();
  for (double c : disk) dp.push_back(fixed12(c));
  j["disk_projection"] = dp;
  return j;
}

std::string equilibrium_pretty(const g2flag::Equilibrium& e) {
  std::string s = e.name + " at (" + fmt12(e.point[0]) + ", " + fmt12(e.point[1]) + ", " +
                  fmt12(e.point[2]) + ")  " + e.classification;
  s += "\n  eigenvalues:";
  for (const auto& ev : e.eigenvalues) {
    s += " " + fmt12(ev.real());
    if (ev.imag() != 0) s += (ev.imag() > 0 ? "+" : "") + fmt12(ev.imag()) + "i";
  }
  if (e.family) s += "\n  one-parameter family";
  if (!e.note.empty()) s += "\n  note: " + e.note;
  return s + "\n";
}

// ---------------------------------------------------------------------------

int real_main(int argc, char** argv) {
  CLI::App app{"Exact invariant geometry and Ricci-flow analysis tool"};
  app.set_config("--config");
  app.require_subcommand(1);

  Output out;
  out.color = std::getenv("NO_COLOR") == nullptr;
  app.add_option("--output", out.mode, "Output style: json, csv, or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();

  // verify -------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run the exact invariant suite");

  // flags --------------------------------------------------------------
  auto* flags_cmd = app.add_subcommand("flags", "Print flag decompositions");
  std::string theta = "all";
  flags_cmd->add_option("--theta", theta, "Flag type: empty, a1, a2 or all")
      ->capture_default_str();

  // metric -------------------------------------------------------------
  auto* metric_cmd = app.add_subcommand("metric", "Classify an invariant metric");
  std::string m_theta = "a2", m_mu, m_a, m_vector;
  metric_cmd->add_option("--theta", m_theta, "Flag type")->capture_default_str();
  metric_cmd->add_option("--mu", m_mu, "Diagonal parameters, comma separated")->required();
  metric_cmd->add_option("--a", m_a, "Coupling parameters, comma separated");
  metric_cmd->add_option("--vector", m_vector,
                         "Tangent vector (flat coordinates) for the geodesic witness");

  // equigeodesic ---------------------------------------------------------
  auto* equi_cmd = app.add_subcommand("equigeodesic", "Classify an equigeodesic vector");
  std::string e_theta = "a2", e_vector;
  equi_cmd->add_option("--theta", e_theta, "Flag type")->capture_default_str();
  equi_cmd->add_option("--vector", e_vector, "Tangent vector in flat coordinates")->required();

  // ricci ----------------------------------------------------------------
  auto* ricci_cmd = app.add_subcommand("ricci", "Ricci components on the third flag");
  std::string r_mu;
  ricci_cmd->add_option("--mu", r_mu, "Three positive metric parameters")->required();

  // flow -----------------------------------------------------------------
  auto* flow_cmd = app.add_subcommand("flow", "Integrate the flow");
  std::string f_init, f_frame = "xyz", f_out;
  double f_tend = 10.0, f_reltol = 1e-10;
  int f_samples = 200;
  bool f_report = false;
  flow_cmd->add_option("--init", f_init, "Initial point, three comma-separated values")
      ->required();
  flow_cmd->add_option("--frame", f_frame, "Frame: mu or xyz")->capture_default_str();
  flow_cmd->add_option("--t-end", f_tend, "Final time")->capture_default_str();
  flow_cmd->add_option("--rel-tol", f_reltol, "Relative tolerance")
      ->check(CLI::Range(1e-12, 1e-3))
      ->capture_default_str();
  flow_cmd->add_option("--samples", f_samples, "Dense-output samples")->capture_default_str();
  flow_cmd->add_option("--out", f_out, "CSV output file (default stdout)");
  flow_cmd->add_flag("--report", f_report, "Append collapse diagnostics (mu frame)");

  // equilibria -------------------------------------------------------------
  auto* eq_cmd = app.add_subcommand("equilibria", "Equilibrium reports with eigen-data");
  std::string q_frame = "xyz";
  eq_cmd->add_option("--frame", q_frame, "Frame: xyz, kappa1, U1, U2 or U3")
      ->capture_default_str();

  // darboux ------------------------------------------------------------------
  auto* dar_cmd = app.add_subcommand("darboux", "Invariant algebraic surfaces");
  int d_deg = 2;
  dar_cmd->add_option("--max-degree", d_deg, "Maximum degree (1 or 2)")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();

  // chart ----------------------------------------------------------------------
  auto* chart_cmd = app.add_subcommand("chart", "Chart systems and their equilibria");
  std::string c_chart = "kappa1";
  chart_cmd->add_option("--chart", c_chart, "kappa1, U1, U2 or U3")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (verify->parsed()) return run_verify(out);

  if (flags_cmd->parsed()) {
    std::vector<std::pair<std::string, std::string>> cfg{{"theta", theta}};
    json j;
    j["command"] = "flags";
    j["config"] = config_echo(cfg);
    json arr = json::array();
    std::string pretty = pretty_config(cfg);
    std::vector<g2flag::FlagId> ids;
    if (theta == "all")
      ids = {g2flag::FlagId::Empty, g2flag::FlagId::Alpha1, g2flag::FlagId::Alpha2};
    else
      ids = {g2flag::flag_from_string(theta)};
    for (auto id : ids) {
      json fr = flag_report(id);
      arr.push_back(fr);
      pretty += "flag " + fr["theta"].get<std::string>() +
                ": tangent dim " + std::to_string(fr["tangent_dim"].get<int>()) +
                ", modules";
      for (const auto& m : fr["modules"]) pretty += " " + std::to_string(m["dim"].get<int>());
      pretty += ", invariance " + pass_str(out, fr["module_invariance"].get<bool>()) +
                ", equivariance " + pass_str(out, fr["equivariance"].get<bool>()) + "\n";
    }
    j["flags"] = arr;
    emit(out, j, pretty);
    return 0;
  }

  if (metric_cmd->parsed()) {
    g2flag::MetricParams p;
    p.id = g2flag::flag_from_string(m_theta);
    p.mu = parse_scalar_list(m_mu);
    if (!m_a.empty()) p.a = parse_scalar_list(m_a);
    auto f = g2flag::flag_data(p.id);
    auto validity = g2flag::metric_is_valid(p);
    std::vector<std::pair<std::string, std::string>> cfg{
        {"theta", m_theta}, {"mu", m_mu}, {"a", m_a.empty() ? "-" : m_a}};
    json j;
    j["command"] = "metric";
    j["config"] = config_echo(cfg);
    j["theta"] = g2flag::to_string(p.id);
    j["params"] = {{"mu", jscalar_list(p.mu)}, {"a", jscalar_list(p.a)}};
    j["valid"] = validity.ok;
    if (!validity.ok) j["reason"] = validity.reason;
    bool go = validity.ok && g2flag::is_go_closed_form(p);
    j["go"] = go;
    j["witness_lambda"] = nullptr;
    std::string extra;
    if (!m_vector.empty() && validity.ok && p.id != g2flag::FlagId::Empty) {
      auto xs = parse_scalar_list(m_vector);
      g2flag::DynVecQ x(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) x(static_cast<int>(i)) = xs[i];
      auto lambda = g2flag::go_witness_coefficient(p, f, x);
      if (lambda) {
        j["witness_lambda"] = jscalar(*lambda);
        extra = "witness lambda: " + lambda->to_string() + "\n";
      }
    }
    std::string pretty = pretty_config(cfg) + "valid: " + (validity.ok ? "yes" : "no") +
                         (validity.ok ? "" : " (" + validity.reason + ")") +
                         "\ngeodesic-orbit: " + (go ? "yes" : "no") + "\n" + extra;
    emit(out, j, pretty);
    return 0;
  }

  if (equi_cmd->parsed()) {
    auto id = g2flag::flag_from_string(e_theta);
    auto f = g2flag::flag_data(id);
    auto xs = parse_scalar_list(e_vector);
    if (static_cast<int>(xs.size()) != f.tangent_dim())
      throw std::domain_error("vector size must match the tangent dimension");
    g2flag::DynVecQ x(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) x(static_cast<int>(i)) = xs[i];
    bool closed = g2flag::is_equigeodesic_closed_form(f, x);
    bool oracle = g2flag::equigeodesic_oracle(f, x);
    std::vector<std::pair<std::string, std::string>> cfg{{"theta", e_theta},
                                                         {"vector", e_vector}};
    json j;
    j["command"] = "equigeodesic";
    j["config"] = config_echo(cfg);
    j["theta"] = g2flag::to_string(id);
    j["vector"] = jscalar_list(xs);
    j["equigeodesic"] = closed;
    j["oracle_agrees"] = (closed == oracle);
    std::string pretty = pretty_config(cfg) +
                         std::string("equigeodesic: ") + (closed ? "yes" : "no") +
                         "\noracle agrees: " + (closed == oracle ? "yes" : "NO") + "\n";
    emit(out, j, pretty);
    return 0;
  }

  if (ricci_cmd->parsed()) {
    auto mus = parse_scalar_list(r_mu);
    if (mus.size() != 3) throw std::domain_error("--mu needs exactly three values");
    std::array<QF13, 3> mu{mus[0], mus[1], mus[2]};
    auto closed = g2flag::ricci_closed(mu);
    auto besse = g2flag::ricci_besse(mu);
    bool agree = closed[0] == besse[0] && closed[1] == besse[1] && closed[2] == besse[2];
    std::vector<std::pair<std::string, std::string>> cfg{{"mu", r_mu}};
    json j;
    j["command"] = "ricci";
    j["config"] = config_echo(cfg);
    j["mu"] = jscalar_list(mus);
    j["ric"] = jscalar_list({closed[0], closed[1], closed[2]});
    j["besse_check"] = agree;
    std::string pretty = pretty_config(cfg) + "ric: " + closed[0].to_string() + " | " +
                         closed[1].to_string() + " | " + closed[2].to_string() +
                         "\noracle check: " + pass_str(out, agree) + "\n";
    emit(out, j, pretty);
    return 0;
  }

  if (flow_cmd->parsed()) {
    auto inits = parse_scalar_list(f_init);
    if (inits.size() != 3) throw std::domain_error("--init needs exactly three values");
    std::array<double, 3> y0{inits[0].to_double(), inits[1].to_double(), inits[2].to_double()};
    for (double c : y0)
      if (!(c > 0)) throw std::domain_error("initial coordinates must be positive");
    if (f_frame != "mu" && f_frame != "xyz") throw std::domain_error("frame must be mu or xyz");
    g2flag::OdeRhs rhs;
    // Trial stages of the integrator may dip below zero near finite-time
    // extinction; evaluate the field at a clamped point and let the
    // positivity guard terminate the trajectory.
    auto clamp = [](std::array<double, 3> y) {
      for (double& c : y)
        if (!(c > 1e-100)) c = 1e-100;  // also catches NaN
      return y;
    };
    if (f_frame == "mu")
      rhs = [clamp](double, const std::array<double, 3>& y) {
        return g2flag::mu_field(clamp(y));
      };
    else
      rhs = [clamp](double, const std::array<double, 3>& y) {
        return g2flag::eval_field(g2flag::poly_field(), clamp(y));
      };
    g2flag::IntegrateOptions opt;
    opt.rel_tol = f_reltol;
    opt.abs_tol = f_reltol * 1e-2;
    opt.samples = f_samples;
    opt.positivity_guard = true;
    auto traj = g2flag::integrate_ode(rhs, y0, 0.0, f_tend, opt);
    std::ostringstream csv;
    csv << "t,c1,c2,c3,frame\n";
    for (const auto& p : traj.points)
      csv << fmt12(p.t) << "," << fmt12(p.y[0]) << "," << fmt12(p.y[1]) << ","
          << fmt12(p.y[2]) << "," << f_frame << "\n";
    if (!f_out.empty()) {
      std::ofstream ofs(f_out);
      if (!ofs) throw std::domain_error("cannot open output file '" + f_out + "'");
      ofs << csv.str();
      std::cout << "wrote " << traj.points.size() << " samples to " << f_out
                << " (status: " << traj.status << ")\n";
    } else {
      std::cout << csv.str();
    }
    if (f_report && f_frame == "mu") {
      auto rep = g2flag::collapse_diagnostics(traj);
      json j;
      j["status"] = traj.status;
      j["omega_limit"] = rep.omega_limit;
      j["z_strictly_decreasing"] = rep.z_strictly_decreasing;
      json mono = json::array(), coll = json::array(), term = json::array();
      for (int i = 0; i < 3; ++i) {
        mono.push_back(rep.monotone_decreasing[i]);
        coll.push_back(rep.collapsed[i]);
        term.push_back(fixed12(rep.terminal[i]));
      }
      j["monotone_decreasing"] = mono;
      j["collapsed"] = coll;
      j["terminal"] = term;
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }

  if (eq_cmd->parsed()) {
    std::vector<g2flag::Equilibrium> eqs;
    if (q_frame == "xyz")
      eqs = g2flag::finite_equilibria();
    else
      eqs = g2flag::chart_equilibria(g2flag::chart_from_string(q_frame));
    std::vector<std::pair<std::string, std::string>> cfg{{"frame", q_frame}};
    json j;
    j["command"] = "equilibria";
    j["config"] = config_echo(cfg);
    json arr = json::array();
    std::string pretty = pretty_config(cfg);
    for (const auto& e : eqs) {
      arr.push_back(equilibrium_json(e));
      pretty += equilibrium_pretty(e);
    }
    j["equilibria"] = arr;
    emit(out, j, pretty);
    return 0;
  }

  if (dar_cmd->parsed()) {
    auto pairs = g2flag::darboux_search(g2flag::poly_field(), d_deg);
    std::vector<std::pair<std::string, std::string>> cfg{
        {"max-degree", std::to_string(d_deg)}};
    json j;
    j["command"] = "darboux";
    j["config"] = config_echo(cfg);
    json arr = json::array();
    std::string pretty = pretty_config(cfg);
    for (const auto& p : pairs) {
      bool ok = g2flag::darboux_verify(p, g2flag::poly_field());
      arr.push_back({{"f", p.f.to_string()}, {"k", p.k.to_string()}, {"verified", ok}});
      pretty += "f = " + p.f.to_string() + "\n  k = " + p.k.to_string() +
                "  [" + pass_str(out, ok) + "]\n";
    }
    j["pairs"] = arr;
    emit(out, j, pretty);
    return 0;
  }

  if (chart_cmd->parsed()) {
    auto id = g2flag::chart_from_string(c_chart);
    const auto& field = g2flag::chart_field(id);
    std::array<std::string, 3> names =
        id == g2flag::ChartId::Kappa1 ? std::array<std::string, 3>{"x1", "r1", "z1"}
                                      : std::array<std::string, 3>{"z1", "z2", "z3"};
    std::vector<std::pair<std::string, std::string>> cfg{{"chart", c_chart}};
    json j;
    j["command"] = "chart";
    j["config"] = config_echo(cfg);
    j["chart"] = g2flag::to_string(id);
    json sys = json::array();
    std::string pretty = pretty_config(cfg);
    for (int i = 0; i < 3; ++i) {
      sys.push_back(field[i].to_string(names));
      pretty += names[i] + "' = " + field[i].to_string(names) + "\n";
    }
    j["system"] = sys;
    json arr = json::array();
    for (const auto& e : g2flag::chart_equilibria(id)) {
      arr.push_back(equilibrium_json(e));
      pretty += equilibrium_pretty(e);
    }
    j["equilibria"] = arr;
    emit(out, j, pretty);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return real_main(argc, argv);
  } catch (const CLI::ParseError&) {
    return kExitParse;  // unreachable: CLI11_PARSE handles these
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
