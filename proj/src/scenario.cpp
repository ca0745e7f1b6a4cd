#include "wpstab/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace wpstab {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_rational(const json& v, const std::string& path) {
  if (v.is_array()) {
    if (v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw ConfigError(path, "rational must be [num, den]");
    const double den = v[1].get<double>();
    if (den == 0.0) throw ConfigError(path, "zero denominator");
    return v[0].get<double>() / den;
  }
  if (v.is_number()) return v.get<double>();
  throw ConfigError(path, "expected a number or [num, den]");
}

GridRange parse_range(const json& j, const std::string& path) {
  GridRange r;
  if (!j.is_object()) throw ConfigError(path, "expected an object with min/max/count");
  try {
    r.min = j.at("min").get<double>();
    r.max = j.at("max").get<double>();
    r.count = j.at("count").get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(path, e.what());
  }
  if (r.count < 0) throw ConfigError(path + ".count", "must be >= 0");
  if (r.count > 1 && !(r.max >= r.min)) throw ConfigError(path + ".max", "must be >= min");
  return r;
}

std::vector<double> linspace(const GridRange& r) {
  std::vector<double> v;
  v.reserve(std::size_t(std::max(r.count, 0)));
  if (r.count == 1) {
    v.push_back(r.min);
    return v;
  }
  for (int k = 0; k < r.count; ++k)
    v.push_back(r.min + (r.max - r.min) * double(k) / double(r.count - 1));
  return v;
}

constexpr double kLog2 = 0.69314718055994530942;

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::elliptic: return "elliptic";
    case ScenarioKind::product_abelian: return "product_abelian";
    case ScenarioKind::split_abelian: return "split_abelian";
    case ScenarioKind::abelian_nfold: return "abelian_nfold";
    case ScenarioKind::quintic: return "quintic";
    case ScenarioKind::siegel_compare: return "siegel_compare";
  }
  return "?";
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
  for (ScenarioKind k :
       {ScenarioKind::elliptic, ScenarioKind::product_abelian, ScenarioKind::split_abelian,
        ScenarioKind::abelian_nfold, ScenarioKind::quintic, ScenarioKind::siegel_compare})
    if (to_string(k) == name) return k;
  throw ConfigError("scenario", "unknown scenario kind: " + name);
}

ScenarioConfig ScenarioConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), fs::path(path).parent_path().string());
}

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text,
                                              const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("(root)", std::string("invalid JSON: ") + e.what());
  }
  ScenarioConfig cfg;
  auto resolve = [&](const std::string& rel) {
    fs::path p(rel);
    if (p.is_absolute() || base_dir.empty()) return rel;
    return (fs::path(base_dir) / p).lexically_normal().string();
  };

  try {
    cfg.schema_version = j.value("schema_version", 1);
    cfg.kind = scenario_kind_from_string(j.at("scenario").get<std::string>());
    cfg.ring_file = resolve(j.at("ring_file").get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError("scenario/ring_file", e.what());
  }

  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
    throw ConfigError("basis", "must be a non-empty array");
  for (std::size_t i = 0; i < j["basis"].size(); ++i) {
    const std::string path = "basis[" + std::to_string(i) + "]";
    const json& e = j["basis"][i];
    BasisEntry entry;
    if (!e.contains("label") || !e["label"].is_string())
      throw ConfigError(path + ".label", "missing or not a string");
    entry.label = e["label"].get<std::string>();
    if (!e.contains("ch") || !e["ch"].is_object())
      throw ConfigError(path + ".ch", "missing coefficient map");
    for (const auto& [label, val] : e["ch"].items())
      entry.ch[label] = parse_rational(val, path + ".ch." + label);
    cfg.basis.push_back(std::move(entry));
  }

  if (j.contains("chern")) {
    if (!j["chern"].is_object()) throw ConfigError("chern", "must be an object");
    for (const auto& [key, val] : j["chern"].items()) {
      if (!val.is_object()) throw ConfigError("chern." + key, "must be a coefficient map");
      std::map<std::string, double> coeffs;
      for (const auto& [label, v] : val.items())
        coeffs[label] = parse_rational(v, "chern." + key + "." + label);
      cfg.chern[key] = std::move(coeffs);
    }
  }

  if (!j.contains("grid") || !j["grid"].is_array())
    throw ConfigError("grid", "must be an array of axes");
  for (std::size_t i = 0; i < j["grid"].size(); ++i) {
    const std::string path = "grid[" + std::to_string(i) + "]";
    const json& a = j["grid"][i];
    GridAxis axis;
    if (!a.contains("param") || !a["param"].is_string())
      throw ConfigError(path + ".param", "missing parameter name");
    axis.param = a["param"].get<std::string>();
    if (!a.contains("re") || !a.contains("im"))
      throw ConfigError(path, "axis needs re and im ranges");
    axis.re = parse_range(a["re"], path + ".re");
    axis.im = parse_range(a["im"], path + ".im");
    cfg.grid.push_back(std::move(axis));
  }

  if (j.contains("gw_file")) cfg.gw_file = resolve(j["gw_file"].get<std::string>());
  cfg.fd_step = j.value("fd_step", 1e-4);
  cfg.curvature_step = j.value("curvature_step", 0.01);
  if (j.contains("tolerances")) {
    cfg.tolerances.tol_zero = j["tolerances"].value("tol_zero", 1e-9);
    cfg.tolerances.tol_pos = j["tolerances"].value("tol_pos", 1e-12);
  }
  cfg.with_hessian = j.value("with_hessian", true);
  cfg.with_curvature = j.value("with_curvature", true);
  cfg.threads = j.value("threads", 0);
  if (j.contains("output")) {
    const json& o = j["output"];
    cfg.output.path = o.value("path", std::string());
    const std::string f = o.value("format", std::string("csv"));
    if (f == "csv")
      cfg.output.format = OutputFormat::csv;
    else if (f == "json")
      cfg.output.format = OutputFormat::json;
    else
      throw ConfigError("output.format", "must be csv or json");
  }

  cfg.validate();
  return cfg;
}

void ScenarioConfig::validate() const {
  if (ring_file.empty()) throw ConfigError("ring_file", "must be set");
  if (basis.empty()) throw ConfigError("basis", "must be non-empty");
  if (!(fd_step > 0.0)) throw ConfigError("fd_step", "must be positive");
  if (!(curvature_step > 0.0)) throw ConfigError("curvature_step", "must be positive");
  if (!(tolerances.tol_zero > 0.0)) throw ConfigError("tolerances.tol_zero", "must be positive");
  if (!(tolerances.tol_pos > 0.0)) throw ConfigError("tolerances.tol_pos", "must be positive");
  if (threads < 0) throw ConfigError("threads", "must be >= 0");
  if (kind == ScenarioKind::quintic && !gw_file)
    throw ConfigError("gw_file", "quintic scenario needs Gromov-Witten data");
}

Scenario::Scenario(ScenarioConfig cfg) : cfg_(std::move(cfg)) { build(); }

void Scenario::build() {
  ring_ = GradedRingSpec::load_file(cfg_.ring_file);

  chern_ = ChernData::trivial(ring_);
  for (const auto& [key, coeffs] : cfg_.chern) {
    if (key.size() < 2 || key[0] != 'c')
      throw ConfigError("chern." + key, "keys must look like c2, c3, ...");
    const int k = std::atoi(key.c_str() + 1);
    if (k < 1 || k > ring_->dim_n())
      throw ConfigError("chern." + key, "index out of range for this ring");
    std::map<std::string, Complex> cmap;
    for (const auto& [label, v] : coeffs) {
      if (ring_->index_of(label) < 0)
        throw ConfigError("chern." + key + "." + label, "unknown ring label");
      cmap[label] = v;
    }
    chern_.c[std::size_t(k - 1)] = CohClass::from_labels(ring_, cmap);
    if (!chern_.c[std::size_t(k - 1)].pure_degree(2 * k))
      throw ConfigError("chern." + key, "class is not of pure degree 2k");
  }
  chern_.validate();

  std::vector<CohClass> basis_ch;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cfg_.basis.size(); ++i) {
    std::map<std::string, Complex> cmap;
    for (const auto& [label, v] : cfg_.basis[i].ch) {
      if (ring_->index_of(label) < 0)
        throw ConfigError("basis[" + std::to_string(i) + "].ch." + label, "unknown ring label");
      cmap[label] = v;
    }
    basis_ch.push_back(CohClass::from_labels(ring_, cmap));
    labels.push_back(cfg_.basis[i].label);
  }

  switch (cfg_.kind) {
    case ScenarioKind::elliptic:
    case ScenarioKind::abelian_nfold:
      params_ = {"tau"};
      break;
    case ScenarioKind::product_abelian:
    case ScenarioKind::siegel_compare:
      params_ = {"rho", "tau", "sigma"};
      break;
    case ScenarioKind::split_abelian:
      params_ = {"tau1", "tau2"};
      break;
    case ScenarioKind::quintic:
      params_ = {"tau"};
      break;
  }

  // the chart consumes the degree-2 basis elements in ring order
  int deg2 = 0;
  for (int k = 0; k < ring_->size(); ++k)
    if (ring_->degree(k) == 2) ++deg2;
  const int need = (cfg_.kind == ScenarioKind::product_abelian ||
                    cfg_.kind == ScenarioKind::siegel_compare)
                       ? 3
                       : (cfg_.kind == ScenarioKind::split_abelian ? 2 : 1);
  if (deg2 < need)
    throw ConfigError("ring_file", "ring has too few degree-2 elements for this scenario");

  if (cfg_.kind == ScenarioKind::quintic) {
    GWData gw = GWData::load_file(*cfg_.gw_file);
    quintic_ = std::make_unique<QuinticModel>(chern_, basis_ch, labels, std::move(gw),
                                              TwistMode::gamma, cfg_.tolerances);
  } else {
    MukaiBasis basis;
    basis.labels = labels;
    for (const CohClass& ch : basis_ch)
      basis.vectors.push_back(twisted_mukai_vector(ch, chern_));
    model_ = std::make_unique<StabilityModel>(std::move(basis), chern_, cfg_.tolerances);
  }

  // grid axes must match the chart parameters, in any order
  if (!cfg_.grid.empty()) {
    std::vector<GridAxis> ordered;
    for (const std::string& p : params_) {
      const auto it = std::find_if(cfg_.grid.begin(), cfg_.grid.end(),
                                   [&](const GridAxis& a) { return a.param == p; });
      if (it == cfg_.grid.end()) throw ConfigError("grid", "missing axis for parameter " + p);
      ordered.push_back(*it);
    }
    if (ordered.size() != cfg_.grid.size())
      throw ConfigError("grid", "grid declares a parameter the chart does not have");
    cfg_.grid = std::move(ordered);
  }
}

void Scenario::override_gw_file(const std::string& path) {
  if (cfg_.kind != ScenarioKind::quintic)
    throw ConfigError("gw_file", "only the quintic scenario consumes Gromov-Witten data");
  cfg_.gw_file = path;
  build();
}

namespace {

std::vector<int> degree2_indices(const RingPtr& ring) {
  std::vector<int> idx;
  for (int k = 0; k < ring->size(); ++k)
    if (ring->degree(k) == 2) idx.push_back(k);
  return idx;
}

}  // namespace

bool Scenario::guard(const std::vector<Complex>& point) const {
  if (int(point.size()) != arity()) return false;
  switch (cfg_.kind) {
    case ScenarioKind::elliptic:
    case ScenarioKind::abelian_nfold:
    case ScenarioKind::quintic:
      return point[0].imag() > 0.0;
    case ScenarioKind::split_abelian:
      return point[0].imag() > 0.0 && point[1].imag() > 0.0;
    case ScenarioKind::product_abelian:
    case ScenarioKind::siegel_compare: {
      const double a = point[0].imag(), b = point[1].imag(), s = point[2].imag();
      return a > 0.0 && a * b - s * s > 0.0;  // Sylvester for the 2x2 Im block
    }
  }
  return false;
}

CohClass Scenario::section(const std::vector<Complex>& point) const {
  if (cfg_.kind == ScenarioKind::quintic) return quintic_->section(point[0]);
  const auto deg2 = degree2_indices(ring_);
  CohClass omega(ring_);
  switch (cfg_.kind) {
    case ScenarioKind::elliptic:
    case ScenarioKind::abelian_nfold:
      omega[deg2[0]] = point[0];
      break;
    case ScenarioKind::split_abelian:
      omega[deg2[0]] = point[0];
      omega[deg2[1]] = point[1];
      break;
    case ScenarioKind::product_abelian:
    case ScenarioKind::siegel_compare:
      omega[deg2[0]] = point[0];
      omega[deg2[1]] = point[1];
      omega[deg2[2]] = point[2];
      break;
    case ScenarioKind::quintic:
      break;
  }
  return exp_class(omega);
}

const StabilityModel& Scenario::model() const {
  return quintic_ ? quintic_->model() : *model_;
}

double Scenario::wp(const std::vector<Complex>& point) const {
  return model().wp_potential(section(point));
}

std::optional<double> Scenario::k_ber(const std::vector<Complex>& point) const {
  switch (cfg_.kind) {
    case ScenarioKind::elliptic: {
      Eigen::MatrixXcd m(1, 1);
      m(0, 0) = point[0];
      return bergman_potential(SiegelPoint(m));
    }
    case ScenarioKind::split_abelian: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
      m(0, 0) = point[0];
      m(1, 1) = point[1];
      return bergman_potential(SiegelPoint(m));
    }
    case ScenarioKind::product_abelian:
    case ScenarioKind::siegel_compare:
      return bergman_potential(omega_to_M(point[0], point[1], point[2]));
    case ScenarioKind::abelian_nfold:
    case ScenarioKind::quintic:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> Scenario::residual(const std::vector<Complex>& point, double k_wp) const {
  switch (cfg_.kind) {
    case ScenarioKind::elliptic:
      return std::abs(k_wp - (-std::log(2.0 * point[0].imag())));
    case ScenarioKind::split_abelian:
    case ScenarioKind::product_abelian:
    case ScenarioKind::siegel_compare:
      return std::abs(k_wp - *k_ber(point) - kLog2);
    case ScenarioKind::abelian_nfold: {
      // closed-form residual: K + log( 2^n/n! * int (Im omega)^n )
      const int n = ring_->dim_n();
      CohClass im_omega(ring_);
      const auto deg2 = degree2_indices(ring_);
      im_omega[deg2[0]] = point[0].imag();
      CohClass pow = im_omega;
      for (int k = 1; k < n; ++k) pow = multiply(pow, im_omega);
      double scale = 1.0;
      for (int k = 1; k <= n; ++k) scale *= 2.0 / double(k);
      return std::abs(k_wp + std::log(scale * integrate(pow).real()));
    }
    case ScenarioKind::quintic:
      return std::nullopt;
  }
  return std::nullopt;
}

ChartedPotential Scenario::wp_chart() const {
  ChartedPotential f;
  f.arity = arity();
  f.eval = [this](const std::vector<Complex>& p) { return wp(p); };
  f.guard = [this](const std::vector<Complex>& p) { return guard(p); };
  return f;
}

std::vector<std::vector<Complex>> Scenario::grid_points() const {
  std::vector<std::vector<double>> re_vals, im_vals;
  for (const GridAxis& a : cfg_.grid) {
    re_vals.push_back(linspace(a.re));
    im_vals.push_back(linspace(a.im));
  }
  std::vector<std::vector<Complex>> axis_values;
  for (std::size_t k = 0; k < cfg_.grid.size(); ++k) {
    std::vector<Complex> vals;
    for (double re : re_vals[k])
      for (double im : im_vals[k]) vals.emplace_back(re, im);
    axis_values.push_back(std::move(vals));
  }
  std::vector<std::vector<Complex>> points;
  if (axis_values.size() != std::size_t(arity())) return points;  // no grid -> no points
  std::size_t total = 1;
  for (const auto& v : axis_values) total *= v.size();
  if (total == 0) return points;
  points.reserve(total);
  std::vector<std::size_t> idx(axis_values.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<Complex> p;
    p.reserve(axis_values.size());
    for (std::size_t k = 0; k < axis_values.size(); ++k) p.push_back(axis_values[k][idx[k]]);
    points.push_back(std::move(p));
    for (std::size_t k = axis_values.size(); k-- > 0;) {
      if (++idx[k] < axis_values[k].size()) break;
      idx[k] = 0;
    }
  }
  return points;
}

ResultRecord Scenario::evaluate(int index, const std::vector<Complex>& point) const {
  ResultRecord r;
  r.index = index;
  r.params = params_;
  r.coords = point;
  if (!guard(point)) {
    r.skipped = true;
    return r;
  }
  try {
    r.k_wp = wp(point);
  } catch (const std::domain_error&) {
    r.skipped = true;
    return r;
  }
  r.k_ber = k_ber(point);
  r.residual = residual(point, r.k_wp);
  if (cfg_.with_hessian) {
    try {
      const HermitianForm g = complex_hessian(wp_chart(), point, cfg_.fd_step);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.g);
      r.metric = g.g;
      r.metric_eigenvalues =
          std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + arity());
    } catch (const std::domain_error&) {
      // stencil left the chart; report the point without metric data
    }
  }
  if (cfg_.with_curvature && arity() == 1) {
    try {
      r.curvature = curvature_1d(wp_chart(), point[0], cfg_.curvature_step);
    } catch (const std::domain_error&) {
    }
  }
  return r;
}

std::vector<ResultRecord> run_scenario(const Scenario& scenario) {
  const auto points = scenario.grid_points();
  std::vector<ResultRecord> records(points.size());
  const int n = int(points.size());
  if (n == 0) return records;
  int threads = scenario.config().threads > 0 ? scenario.config().threads
                                              : int(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, n);
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= n) break;
      try {
        records[std::size_t(i)] = scenario.evaluate(i, points[std::size_t(i)]);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

std::string result_csv_header(const std::vector<std::string>& params, int arity,
                              bool with_hessian, bool with_curvature) {
  std::ostringstream out;
  out << "index";
  for (const std::string& p : params) out << "," << p << "_re," << p << "_im";
  out << ",skipped,k_wp,k_ber,residual";
  if (with_hessian) {
    for (int a = 0; a < arity; ++a)
      for (int b = 0; b < arity; ++b)
        out << ",g_" << a << b << "_re,g_" << a << b << "_im";
    for (int a = 0; a < arity; ++a) out << ",eig_" << a;
  }
  if (with_curvature && arity == 1) out << ",curvature";
  return out.str();
}

std::string result_csv_row(const ResultRecord& r, int arity, bool with_hessian,
                           bool with_curvature) {
  std::ostringstream out;
  out << r.index;
  for (const Complex& c : r.coords) out << "," << fmt_g17(c.real()) << "," << fmt_g17(c.imag());
  out << "," << (r.skipped ? 1 : 0);
  out << "," << (r.skipped ? "" : fmt_g17(r.k_wp));
  out << "," << (r.k_ber ? fmt_g17(*r.k_ber) : "");
  out << "," << (r.residual ? fmt_g17(*r.residual) : "");
  if (with_hessian) {
    for (int a = 0; a < arity; ++a)
      for (int b = 0; b < arity; ++b) {
        if (r.metric) {
          out << "," << fmt_g17((*r.metric)(a, b).real()) << ","
              << fmt_g17((*r.metric)(a, b).imag());
        } else {
          out << ",,";
        }
      }
    for (int a = 0; a < arity; ++a)
      out << "," << (r.metric_eigenvalues ? fmt_g17((*r.metric_eigenvalues)[std::size_t(a)]) : "");
  }
  if (with_curvature && arity == 1) out << "," << (r.curvature ? fmt_g17(*r.curvature) : "");
  return out.str();
}

void write_records_csv(const Scenario& scenario, const std::vector<ResultRecord>& records,
                       std::ostream& out) {
  const bool wh = scenario.config().with_hessian;
  const bool wc = scenario.config().with_curvature;
  out << result_csv_header(scenario.params(), scenario.arity(), wh, wc) << "\n";
  for (const ResultRecord& r : records)
    out << result_csv_row(r, scenario.arity(), wh, wc) << "\n";
}

namespace {

json record_to_json(const ResultRecord& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["index"] = r.index;
  json coords = json::object();
  for (std::size_t k = 0; k < r.params.size(); ++k)
    coords[r.params[k]] = {r.coords[k].real(), r.coords[k].imag()};
  j["coords"] = coords;
  j["params"] = r.params;
  j["skipped"] = r.skipped;
  if (!r.skipped) j["k_wp"] = r.k_wp;
  if (r.k_ber) j["k_ber"] = *r.k_ber;
  if (r.residual) j["residual"] = *r.residual;
  if (r.metric) {
    json m = json::array();
    for (int a = 0; a < r.metric->rows(); ++a) {
      json row = json::array();
      for (int b = 0; b < r.metric->cols(); ++b)
        row.push_back({(*r.metric)(a, b).real(), (*r.metric)(a, b).imag()});
      m.push_back(row);
    }
    j["metric"] = m;
    j["eigenvalues"] = *r.metric_eigenvalues;
  }
  if (r.curvature) j["curvature"] = *r.curvature;
  return j;
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.schema_version = j.at("schema_version").get<int>();
  r.index = j.at("index").get<int>();
  r.params = j.at("params").get<std::vector<std::string>>();
  for (const std::string& p : r.params) {
    const auto& c = j.at("coords").at(p);
    r.coords.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  r.skipped = j.at("skipped").get<bool>();
  if (j.contains("k_wp")) r.k_wp = j["k_wp"].get<double>();
  if (j.contains("k_ber")) r.k_ber = j["k_ber"].get<double>();
  if (j.contains("residual")) r.residual = j["residual"].get<double>();
  if (j.contains("metric")) {
    const auto& m = j["metric"];
    const int n = int(m.size());
    Eigen::MatrixXcd g(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        g(a, b) = Complex(m[std::size_t(a)][std::size_t(b)][0].get<double>(),
                          m[std::size_t(a)][std::size_t(b)][1].get<double>());
    r.metric = g;
    r.metric_eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  }
  if (j.contains("curvature")) r.curvature = j["curvature"].get<double>();
  return r;
}

}  // namespace

std::string results_to_json(const std::vector<ResultRecord>& records) {
  json arr = json::array();
  for (const ResultRecord& r : records) arr.push_back(record_to_json(r));
  return arr.dump(2);
}

std::vector<ResultRecord> results_from_json(const std::string& text) {
  const json arr = json::parse(text);
  std::vector<ResultRecord> records;
  for (const auto& j : arr) records.push_back(record_from_json(j));
  return records;
}

void write_records_json(const std::vector<ResultRecord>& records, std::ostream& out) {
  out << results_to_json(records) << "\n";
}

}  // namespace wpstab
