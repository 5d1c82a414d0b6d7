#include "pcafactor/analysis.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pcafactor/errors.hpp"

namespace pcafactor {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string component_label(AnalysisMode mode, std::size_t j) {
  return (mode == AnalysisMode::pca ? "PC" : "F") + std::to_string(j + 1);
}

std::vector<std::string> component_labels(AnalysisMode mode, std::size_t k) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t j = 0; j < k; ++j) labels.push_back(component_label(mode, j));
  return labels;
}

// shortest decimal representation that round-trips the double
std::string format_number(double v) { return ordered_json(v).dump(); }

ordered_json matrix_json(const Matrix& m,
                         const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels) {
  ordered_json j;
  if (!row_labels.empty()) j["rows"] = row_labels;
  j["cols"] = col_labels;
  auto data = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

void write_matrix_csv(const std::filesystem::path& path,
                      const std::string& label_header,
                      const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels,
                      const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path.string());
  out << label_header;
  for (const auto& label : col_labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << row_labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << ',' << format_number(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw DataError("failed while writing: " + path.string());
}

std::vector<std::string> observation_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return labels;
}

}  // namespace

AnalysisReport run_analysis(const Dataset& dataset, double threshold,
                            AnalysisMode mode) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ShapeError("threshold must lie in (0, 1], got " +
                     std::to_string(threshold));
  }
  const std::size_t m = dataset.data.variable_count();
  for (std::size_t j = 0; j < m; ++j) {
    if (detail::effectively_constant(dataset.data.column(j))) {
      throw DataError("column '" + dataset.column_names[j] +
                      "' is constant (zero variance); cannot analyze");
    }
  }

  const DataMatrix standardized = standardize_columns(dataset.data);
  CorrelationMatrix correlation = correlation_matrix(standardized);
  const EigenDecomposition decomp = eigen_decompose(correlation);
  LoadingsMatrix loadings = component_loadings(decomp);
  DeterminationMatrix common_variance = component_common_variance(loadings);
  const std::size_t k = select_k(common_variance, threshold);

  std::vector<double> communality(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      communality[i] += common_variance.matrix()(i, j);
    }
  }

  std::vector<double> aggregate(m, 0.0);
  double running = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    running += decomp.eigenvalues[j];
    aggregate[j] = running / static_cast<double>(m);
  }

  std::vector<std::string> warnings;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (std::fabs(decomp.eigenvalues[j] - decomp.eigenvalues[j + 1]) < 1e-8) {
      warnings.push_back(
          "eigenvalues " + std::to_string(j + 1) + " and " +
          std::to_string(j + 2) +
          " differ by less than 1e-8; the order and orientation of the "
          "corresponding components is convention-dependent");
    }
  }

  AnalysisReport report{dataset.column_names,
                        dataset.source_path,
                        mode,
                        dataset.data.observation_count(),
                        std::move(correlation),
                        decomp.eigenvalues,
                        std::move(loadings),
                        std::move(common_variance),
                        k,
                        threshold,
                        std::move(communality),
                        std::move(aggregate),
                        std::move(warnings),
                        std::nullopt,
                        std::nullopt,
                        std::nullopt};

  if (mode == AnalysisMode::pca) {
    report.components = reduce_via_u(standardized, decomp, k).p;
  } else {
    const FactorModel model = reduce_loadings(report.loadings, k);
    report.reduced_loadings = model.loadings.matrix();
    report.implied_correlation = implied_correlation(model);
  }
  return report;
}

std::string report_to_json(const AnalysisReport& report) {
  const std::size_t m = report.variable_names.size();
  const auto full_labels = component_labels(report.mode, m);
  const auto kept_labels = component_labels(report.mode, report.selected_k);

  ordered_json j;
  j["input"] = report.source_path;
  j["mode"] = report.mode == AnalysisMode::pca ? "pca" : "fa";
  j["observations"] = report.observation_count;
  j["variables"] = report.variable_names;
  j["threshold"] = report.threshold;
  j["selected_k"] = report.selected_k;
  j["eigenvalues"] = report.eigenvalues;
  j["aggregate_explained_variance"] = report.aggregate_explained_variance;
  j["correlation"] = matrix_json(report.correlation.matrix(),
                                 report.variable_names, report.variable_names);
  j["loadings"] =
      matrix_json(report.loadings.matrix(), report.variable_names, full_labels);
  j["common_variance"] = matrix_json(report.common_variance.matrix(),
                                     report.variable_names, full_labels);
  j["per_variable_communality_at_k"] = report.per_variable_communality_at_k;
  if (report.components) {
    j["components"] = matrix_json(*report.components, {}, kept_labels);
  }
  if (report.reduced_loadings) {
    j["reduced_loadings"] = matrix_json(*report.reduced_loadings,
                                        report.variable_names, kept_labels);
  }
  if (report.implied_correlation) {
    j["implied_correlation"] =
        matrix_json(*report.implied_correlation, report.variable_names,
                    report.variable_names);
  }
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

void export_report_csv(const AnalysisReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create directory: " + dir);
  const fs::path base(dir);

  const std::size_t m = report.variable_names.size();
  const auto full_labels = component_labels(report.mode, m);
  const auto kept_labels = component_labels(report.mode, report.selected_k);

  write_matrix_csv(base / "correlation.csv", "variable", report.variable_names,
                   report.variable_names, report.correlation.matrix());
  write_matrix_csv(base / "loadings.csv", "variable", report.variable_names,
                   full_labels, report.loadings.matrix());
  write_matrix_csv(base / "common_variance.csv", "variable",
                   report.variable_names, full_labels,
                   report.common_variance.matrix());

  {
    std::ofstream out(base / "eigenvalues.csv");
    if (!out) throw DataError("cannot write file: " + (base / "eigenvalues.csv").string());
    out << "component,eigenvalue,cumulative_explained_variance\n";
    for (std::size_t j = 0; j < m; ++j) {
      out << full_labels[j] << ',' << format_number(report.eigenvalues[j])
          << ',' << format_number(report.aggregate_explained_variance[j])
          << '\n';
    }
  }

  if (report.components) {
    write_matrix_csv(base / "components.csv", "observation",
                     observation_labels(report.components->rows()),
                     kept_labels, *report.components);
  }
  if (report.reduced_loadings) {
    write_matrix_csv(base / "reduced_loadings.csv", "variable",
                     report.variable_names, kept_labels,
                     *report.reduced_loadings);
  }
  if (report.implied_correlation) {
    write_matrix_csv(base / "implied_correlation.csv", "variable",
                     report.variable_names, report.variable_names,
                     *report.implied_correlation);
  }
}

LoadedModel load_model_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot open model file: " + path);
  std::string text((std::istreambuf_iterator<char>(file)),
                   std::istreambuf_iterator<char>());

  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::istringstream stream(text);
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  if (rows.size() < 2) {
    throw DataError(path + ": model file needs a header and at least one "
                           "variable row");
  }
  const std::size_t k = rows[0].size() - 1;
  if (rows[0].size() < 2) {
    throw DataError(path + ": model file needs at least one factor column");
  }

  const std::size_t m = rows.size() - 1;
  std::vector<std::string> names;
  std::vector<double> values(m * k);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != k + 1) {
      throw DataError(path + ": row " + std::to_string(i + 2) + " has " +
                      std::to_string(row.size()) + " cells, expected " +
                      std::to_string(k + 1));
    }
    if (row[0].empty()) {
      throw DataError(path + ": row " + std::to_string(i + 2) +
                      " has an empty variable name");
    }
    names.push_back(row[0]);
    for (std::size_t j = 0; j < k; ++j) {
      try {
        std::size_t used = 0;
        values[i * k + j] = std::stod(row[j + 1], &used);
        if (used != row[j + 1].size()) throw std::invalid_argument(row[j + 1]);
      } catch (const std::exception&) {
        throw DataError(path + ": non-numeric loading '" + row[j + 1] +
                        "' at row " + std::to_string(i + 2) + ", column " +
                        std::to_string(j + 2));
      }
    }
  }
  return LoadedModel{std::move(names),
                     make_factor_model(LoadingsMatrix(Matrix(m, k, std::move(values))))};
}

SimulationSummary run_simulation(const std::string& model_path,
                                 std::size_t samples, std::uint64_t seed,
                                 const std::string& out_path) {
  LoadedModel loaded = load_model_csv(model_path);
  const std::vector<double> variances = modeled_variances(loaded.model);
  for (std::size_t i = 0; i < variances.size(); ++i) {
    if (variances[i] <= 1e-12) {
      throw DataError("variable '" + loaded.variable_names[i] +
                      "' has zero modeled variance; the reduced model cannot "
                      "reproduce its correlations");
    }
  }

  const DataMatrix simulated = simulate(loaded.model, samples, seed);

  std::ofstream out(out_path);
  if (!out) throw DataError("cannot write file: " + out_path);
  for (std::size_t j = 0; j < loaded.variable_names.size(); ++j) {
    if (j > 0) out << ',';
    out << loaded.variable_names[j];
  }
  out << '\n';
  const Matrix& data = simulated.observations();
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_number(data(i, j));
    }
    out << '\n';
  }
  if (!out) throw DataError("failed while writing: " + out_path);

  // Correlations the model implies for the simulated variables: the
  // second-moment matrix L L' normalized by the modeled variances.
  const Matrix implied = implied_correlation(loaded.model);
  const CorrelationMatrix empirical = correlation_matrix(simulated);
  double max_dev = 0.0;
  const std::size_t m = implied.rows();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double implied_corr =
          implied(i, j) / std::sqrt(variances[i] * variances[j]);
      max_dev = std::max(max_dev,
                         std::fabs(empirical.matrix()(i, j) - implied_corr));
    }
  }

  return SimulationSummary{samples,
                           seed,
                           out_path,
                           max_dev,
                           variances,
                           std::move(loaded.variable_names)};
}

VerifySummary verify_identity(const DataMatrix& data) {
  const DataMatrix standardized =
      data.standardized() ? data : standardize_columns(data);
  const CorrelationMatrix correlation = correlation_matrix(standardized);
  const EigenDecomposition decomp = eigen_decompose(correlation);
  const LoadingsMatrix loadings = component_loadings(decomp);
  const PrincipalComponents components =
      principal_components(standardized, decomp.u);
  const Matrix direct = direct_component_correlations(standardized, components);

  double max_dev = 0.0;
  for (std::size_t i = 0; i < direct.rows(); ++i) {
    for (std::size_t j = 0; j < direct.cols(); ++j) {
      max_dev = std::max(max_dev,
                         std::fabs(loadings.matrix()(i, j) - direct(i, j)));
    }
  }
  return VerifySummary{max_dev, decomp.eigenvalues.back()};
}

double verify_max_deviation(const DataMatrix& data) {
  return verify_identity(data).max_deviation;
}

}  // namespace pcafactor
