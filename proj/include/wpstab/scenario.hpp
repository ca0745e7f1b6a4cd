#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpstab/diffgeo.hpp"
#include "wpstab/quantum.hpp"
#include "wpstab/siegel.hpp"
#include "wpstab/stability.hpp"

namespace wpstab {

// Configuration problem with the offending field path attached.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), field_path(path) {}
  std::string field_path;
};

enum class ScenarioKind {
  elliptic,
  product_abelian,
  split_abelian,
  abelian_nfold,
  quintic,
  siegel_compare,
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

struct GridRange {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct GridAxis {
  std::string param;
  GridRange re;
  GridRange im;
};

enum class OutputFormat { csv, json };

struct OutputSpec {
  std::string path;
  OutputFormat format = OutputFormat::csv;
};

struct BasisEntry {
  std::string label;
  std::map<std::string, double> ch;  // ring label -> rational value
};

// Declarative description of one worked example.
struct ScenarioConfig {
  int schema_version = 1;
  ScenarioKind kind = ScenarioKind::elliptic;
  std::string ring_file;                 // resolved against the config directory
  std::vector<BasisEntry> basis;
  std::map<std::string, std::map<std::string, double>> chern;  // "c2" -> {label: value}
  std::vector<GridAxis> grid;
  std::optional<std::string> gw_file;
  double fd_step = 1e-4;
  double curvature_step = 0.01;
  Tolerances tolerances;
  bool with_hessian = true;
  bool with_curvature = true;
  int threads = 0;  // 0 = hardware default
  OutputSpec output;

  static ScenarioConfig load_file(const std::string& path);
  static ScenarioConfig from_json_text(const std::string& text, const std::string& base_dir);
  void validate() const;
};

// One evaluated grid point. Skipped points carry only coordinates.
struct ResultRecord {
  int schema_version = 1;
  int index = 0;
  std::vector<std::string> params;
  std::vector<Complex> coords;
  bool skipped = false;
  double k_wp = 0.0;
  std::optional<double> k_ber;
  std::optional<double> residual;
  std::optional<Eigen::MatrixXcd> metric;
  std::optional<std::vector<double>> metric_eigenvalues;
  std::optional<double> curvature;
};

std::string result_csv_header(const std::vector<std::string>& params, int arity,
                              bool with_hessian, bool with_curvature);
std::string result_csv_row(const ResultRecord& r, int arity, bool with_hessian,
                           bool with_curvature);
std::string results_to_json(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> results_from_json(const std::string& text);

// A scenario config bound to its loaded ring, basis and data files.
class Scenario {
 public:
  explicit Scenario(ScenarioConfig cfg);

  const ScenarioConfig& config() const { return cfg_; }
  const RingPtr& ring() const { return ring_; }
  const StabilityModel& model() const;
  const QuinticModel* quintic() const { return quintic_.get(); }

  // Chart coordinates, e.g. {"tau"} or {"rho", "tau", "sigma"}.
  const std::vector<std::string>& params() const { return params_; }
  int arity() const { return int(params_.size()); }

  bool guard(const std::vector<Complex>& point) const;
  CohClass section(const std::vector<Complex>& point) const;
  double wp(const std::vector<Complex>& point) const;
  std::optional<double> k_ber(const std::vector<Complex>& point) const;
  std::optional<double> residual(const std::vector<Complex>& point, double k_wp) const;
  ChartedPotential wp_chart() const;

  std::vector<std::vector<Complex>> grid_points() const;
  ResultRecord evaluate(int index, const std::vector<Complex>& point) const;

  // Override hooks used by the CLI flags.
  void override_gw_file(const std::string& path);

 private:
  void build();

  ScenarioConfig cfg_;
  RingPtr ring_;
  ChernData chern_;
  std::vector<std::string> params_;
  std::unique_ptr<StabilityModel> model_;
  std::unique_ptr<QuinticModel> quintic_;
};

// Evaluates every grid point on a worker pool; record order follows grid
// index regardless of completion order.
std::vector<ResultRecord> run_scenario(const Scenario& scenario);

void write_records_csv(const Scenario& scenario, const std::vector<ResultRecord>& records,
                       std::ostream& out);
void write_records_json(const std::vector<ResultRecord>& records, std::ostream& out);

}  // namespace wpstab
