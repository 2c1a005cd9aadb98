#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prismcurv/curvature.hpp"

namespace prismcurv {

/// Threshold above which |F - F_aug| counts as a disagreement.
inline constexpr double kDisagreeThreshold = 1e-9;

struct ClassStats {
  std::size_t count = 0;
  double mean_F = 0;
  double sem_F = 0;
  double mean_F_aug = 0;
  double sem_F_aug = 0;
  double mean_diff = 0;
};

/// Aggregate over all 1-simplices of one run.
struct StatsSummary {
  std::size_t n_edges = 0;
  std::size_t n_triangles = 0;
  std::size_t n_disagree = 0;
  double pct_disagree = 0;
  double mean_F = 0;
  double mean_F_aug = 0;
  std::optional<double> pearson;
  std::string pearson_note;
  /// Indexed by EdgeClass.
  std::array<ClassStats, 3> by_class{};

  nlohmann::json to_json() const;
};

/// Throws DomainError on an empty record list.
StatsSummary table_stats(const std::vector<CurvatureRecord>& records);

/// Pearson correlation; nullopt if either series has zero variance.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Mean and standard error (sample sd / sqrt(n)); sem is 0 below two values.
std::pair<double, double> mean_and_sem(const std::vector<double>& values);

/// Linear-interpolation quantile of unsorted data, q in [0, 1].
double quantile(std::vector<double> values, double q);

/// Freedman–Diaconis width 2 IQR n^(-1/3).
double freedman_diaconis_width(const std::vector<double>& values);

enum class FigureKind { Scatter, Hist, ByClass, DtDep };

/// `scatter`, `hist`, `by_class` or `dt_dep`; throws DomainError otherwise.
FigureKind parse_figure_kind(const std::string& name);
const char* figure_file_name(FigureKind kind);

/// CSV payloads. Column orders:
///   scatter  edge_id,class,dt,F,F_aug
///   hist     bin_lo,bin_hi,count_F,count_F_aug
///   by_class class,count,mean_F,sem_F,mean_F_aug,sem_F_aug,mean_diff
///   dt_dep   edge_id,class,dt,diff
std::string figure_data(const std::vector<CurvatureRecord>& records, FigureKind kind);

/// h(g) = (1 - g) sqrt(g).
double h_factor(double g);

struct HFactorRow {
  int dt = 0;
  double g = 0;
  double h = 0;
};

/// h(g(Δt)) for Δt = 1..max_gap.
std::vector<HFactorRow> h_factor_table(const GapWeight& g, int max_gap);

}  // namespace prismcurv
