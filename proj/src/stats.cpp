#include "prismcurv/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "prismcurv/errors.hpp"
#include "prismcurv/format.hpp"

namespace prismcurv {

namespace {

constexpr std::array<EdgeClass, 3> kClasses{EdgeClass::Spatial, EdgeClass::Temporal, EdgeClass::Diagonal};

double mean_of(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

}  // namespace

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("pearson: series lengths differ");
  if (x.size() < 2) return std::nullopt;
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::pair<double, double> mean_and_sem(const std::vector<double>& values) {
  const double m = mean_of(values);
  if (values.size() < 2) return {m, 0.0};
  double ss = 0;
  for (double x : values) ss += (x - m) * (x - m);
  const double n = static_cast<double>(values.size());
  return {m, std::sqrt(ss / (n - 1)) / std::sqrt(n)};
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw DomainError("quantile of empty data");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double freedman_diaconis_width(const std::vector<double>& values) {
  if (values.empty()) throw DomainError("histogram of empty data");
  const double iqr = quantile(values, 0.75) - quantile(values, 0.25);
  return 2.0 * iqr / std::cbrt(static_cast<double>(values.size()));
}

StatsSummary table_stats(const std::vector<CurvatureRecord>& records) {
  if (records.empty()) throw DomainError("no curvature records to summarize");
  StatsSummary s;
  s.n_edges = records.size();
  std::size_t tri_incidences = 0;
  std::vector<double> f, fa;
  std::array<std::vector<double>, 3> cf, cfa, cdiff;
  for (const auto& r : records) {
    tri_incidences += r.n_tri;
    f.push_back(r.F);
    fa.push_back(r.F_aug);
    if (std::abs(r.diff) > kDisagreeThreshold) ++s.n_disagree;
    const auto c = static_cast<std::size_t>(r.cls);
    cf[c].push_back(r.F);
    cfa[c].push_back(r.F_aug);
    cdiff[c].push_back(r.diff);
  }
  s.n_triangles = tri_incidences / 3;
  s.pct_disagree = 100.0 * static_cast<double>(s.n_disagree) / static_cast<double>(s.n_edges);
  s.mean_F = mean_of(f);
  s.mean_F_aug = mean_of(fa);
  s.pearson = pearson(f, fa);
  if (!s.pearson) s.pearson_note = "undefined: zero variance";
  for (std::size_t c = 0; c < 3; ++c) {
    auto& out = s.by_class[c];
    out.count = cf[c].size();
    std::tie(out.mean_F, out.sem_F) = mean_and_sem(cf[c]);
    std::tie(out.mean_F_aug, out.sem_F_aug) = mean_and_sem(cfa[c]);
    out.mean_diff = mean_of(cdiff[c]);
  }
  return s;
}

nlohmann::json StatsSummary::to_json() const {
  nlohmann::json j;
  j["n_edges"] = n_edges;
  j["n_triangles"] = n_triangles;
  j["n_disagree"] = n_disagree;
  j["pct_disagree"] = pct_disagree;
  j["disagree_threshold"] = kDisagreeThreshold;
  j["mean_F"] = mean_F;
  j["mean_F_aug"] = mean_F_aug;
  j["pearson"] = pearson ? nlohmann::json(*pearson) : nlohmann::json(nullptr);
  if (!pearson_note.empty()) j["pearson_note"] = pearson_note;
  auto& classes = j["by_class"] = nlohmann::json::object();
  for (std::size_t c = 0; c < 3; ++c) {
    const auto& b = by_class[c];
    classes[edge_class_name(kClasses[c])] = {{"count", b.count},         {"mean_F", b.mean_F},
                                             {"sem_F", b.sem_F},         {"mean_F_aug", b.mean_F_aug},
                                             {"sem_F_aug", b.sem_F_aug}, {"mean_diff", b.mean_diff}};
  }
  return j;
}

FigureKind parse_figure_kind(const std::string& name) {
  if (name == "scatter") return FigureKind::Scatter;
  if (name == "hist") return FigureKind::Hist;
  if (name == "by_class") return FigureKind::ByClass;
  if (name == "dt_dep") return FigureKind::DtDep;
  throw DomainError("unknown figure selector '" + name + "' (scatter, hist, by_class, dt_dep)");
}

const char* figure_file_name(FigureKind kind) {
  switch (kind) {
    case FigureKind::Scatter: return "scatter.csv";
    case FigureKind::Hist: return "hist.csv";
    case FigureKind::ByClass: return "by_class.csv";
    case FigureKind::DtDep: return "dt_dep.csv";
  }
  return "?";
}

std::string figure_data(const std::vector<CurvatureRecord>& records, FigureKind kind) {
  std::ostringstream out;
  switch (kind) {
    case FigureKind::Scatter:
      out << "edge_id,class,dt,F,F_aug\n";
      for (const auto& r : records)
        out << r.edge << ',' << edge_class_name(r.cls) << ',' << r.dt << ',' << format_double(r.F) << ','
            << format_double(r.F_aug) << '\n';
      break;

    case FigureKind::Hist: {
      out << "bin_lo,bin_hi,count_F,count_F_aug\n";
      if (records.empty()) break;
      // Shared bins over both series so the two histograms overlay.
      std::vector<double> all;
      for (const auto& r : records) {
        all.push_back(r.F);
        all.push_back(r.F_aug);
      }
      const double lo = *std::min_element(all.begin(), all.end());
      const double hi = *std::max_element(all.begin(), all.end());
      double width = freedman_diaconis_width(all);
      if (!(width > 0)) width = (hi > lo) ? (hi - lo) : 1.0;
      const auto bins = static_cast<std::size_t>(std::floor((hi - lo) / width)) + 1;
      std::vector<std::size_t> cf(bins, 0), cfa(bins, 0);
      auto slot = [&](double x) { return std::min(bins - 1, static_cast<std::size_t>(std::floor((x - lo) / width))); };
      for (const auto& r : records) {
        ++cf[slot(r.F)];
        ++cfa[slot(r.F_aug)];
      }
      for (std::size_t b = 0; b < bins; ++b)
        out << format_double(lo + static_cast<double>(b) * width) << ','
            << format_double(lo + static_cast<double>(b + 1) * width) << ',' << cf[b] << ',' << cfa[b] << '\n';
      break;
    }

    case FigureKind::ByClass: {
      out << "class,count,mean_F,sem_F,mean_F_aug,sem_F_aug,mean_diff\n";
      if (records.empty()) break;
      const auto s = table_stats(records);
      for (std::size_t c = 0; c < 3; ++c) {
        const auto& b = s.by_class[c];
        if (b.count == 0) continue;
        out << edge_class_name(kClasses[c]) << ',' << b.count << ',' << format_double(b.mean_F) << ','
            << format_double(b.sem_F) << ',' << format_double(b.mean_F_aug) << ',' << format_double(b.sem_F_aug)
            << ',' << format_double(b.mean_diff) << '\n';
      }
      break;
    }

    case FigureKind::DtDep:
      out << "edge_id,class,dt,diff\n";
      for (const auto& r : records)
        if (r.cls != EdgeClass::Spatial)
          out << r.edge << ',' << edge_class_name(r.cls) << ',' << r.dt << ',' << format_double(r.diff) << '\n';
      break;
  }
  return out.str();
}

double h_factor(double g) { return (1.0 - g) * std::sqrt(g); }

std::vector<HFactorRow> h_factor_table(const GapWeight& g, int max_gap) {
  std::vector<HFactorRow> rows;
  for (int dt = 1; dt <= max_gap; ++dt) {
    const double gv = g(static_cast<double>(dt));
    rows.push_back({dt, gv, h_factor(gv)});
  }
  return rows;
}

}  // namespace prismcurv
