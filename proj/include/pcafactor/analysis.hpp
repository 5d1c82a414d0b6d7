#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcafactor/correlation.hpp"
#include "pcafactor/dataset.hpp"
#include "pcafactor/eigen.hpp"
#include "pcafactor/factor_model.hpp"
#include "pcafactor/pca.hpp"

namespace pcafactor {

// Same numbers either way; the mode picks the column labels (PC1.. vs F1..)
// and which reduction artifacts the report carries.
enum class AnalysisMode { pca, fa };

struct AnalysisReport {
  std::vector<std::string> variable_names;
  std::string source_path;
  AnalysisMode mode;
  std::size_t observation_count;
  CorrelationMatrix correlation;
  std::vector<double> eigenvalues;
  LoadingsMatrix loadings;                 // full m x m
  DeterminationMatrix common_variance;     // full m x m
  std::size_t selected_k;
  double threshold;
  std::vector<double> per_variable_communality_at_k;
  std::vector<double> aggregate_explained_variance;  // cumulative sum(λ)/m
  std::vector<std::string> warnings;
  std::optional<Matrix> components;           // pca: reduced P', n x k
  std::optional<Matrix> reduced_loadings;     // fa: L', m x k
  std::optional<Matrix> implied_correlation;  // fa: L' L''
};

// standardize -> correlation -> eigendecompose -> loadings -> common
// variance -> component count selection. Zero-variance columns are reported
// by name.
AnalysisReport run_analysis(const Dataset& dataset, double threshold,
                            AnalysisMode mode);

// Deterministic JSON document (ordered keys, shortest round-trip floats).
std::string report_to_json(const AnalysisReport& report);

// Writes per-matrix CSV files (correlation, loadings, common variance,
// eigenvalues, plus the mode's reduction artifacts) into `dir`.
void export_report_csv(const AnalysisReport& report, const std::string& dir);

struct LoadedModel {
  std::vector<std::string> variable_names;
  FactorModel model;
};

// Reads a loadings artifact as written by export_report_csv: a header row
// followed by one row per variable, first column the variable name.
LoadedModel load_model_csv(const std::string& path);

struct SimulationSummary {
  std::size_t samples;
  std::uint64_t seed;
  std::string out_path;
  double max_correlation_deviation;  // empirical vs model-implied
  std::vector<double> modeled_variances;
  std::vector<std::string> variable_names;
};

// Simulates from a stored loadings model, writes the samples as CSV, and
// compares the empirical correlations of the simulated data against the
// model-implied ones.
SimulationSummary run_simulation(const std::string& model_path,
                                 std::size_t samples, std::uint64_t seed,
                                 const std::string& out_path);

struct VerifySummary {
  double max_deviation;  // |u*s - correlations computed from the data|
  double min_eigenvalue;
};

// Runs the closed-form/direct cross-check on a dataset: the u*s loadings
// against correlations between each variable and each component computed
// from the data itself.
VerifySummary verify_identity(const DataMatrix& data);
double verify_max_deviation(const DataMatrix& data);

}  // namespace pcafactor
