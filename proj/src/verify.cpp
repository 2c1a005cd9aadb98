#include "prismcurv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "prismcurv/curvature.hpp"

namespace prismcurv {

namespace {

void record(CheckResult& check, double error, double tolerance) {
  ++check.population;
  check.max_error = std::max(check.max_error, error);
  if (error > tolerance) ++check.violations;
}

std::map<Slice, WeightedComplex> weighted_snapshots(const PrismComplex& pc) {
  std::map<Slice, WeightedComplex> out;
  for (const auto& snap : pc.snapshots) out.emplace(snap.slice, weighted_snapshot(pc, snap.slice));
  return out;
}

bool snapshot_has(const PrismComplex& pc, Slice slice, std::vector<NodeId> nodes) {
  const Snapshot* snap = pc.snapshot_at(slice);
  if (!snap) return false;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<SpacetimeVertex> verts;
  for (NodeId n : nodes) verts.push_back({n, slice});
  return snap->flag.contains(Simplex::from_sorted(std::move(verts)));
}

CheckResult coupling_check(const PrismComplex& pc, const std::string& name, double tolerance) {
  CheckResult check{name, true};
  const auto snaps = weighted_snapshots(pc);
  for (SimplexId id : pc.complex.ids(1)) {
    if (pc.edge(id).cls != EdgeClass::Spatial) continue;
    const auto terms = coupling_decomposition(pc, id, snaps.at(pc.complex.simplex(id)[0].slice));
    record(check, std::abs(terms.f_full - (terms.f_static + terms.delta_prism)), tolerance);
  }
  return check;
}

CheckResult prism_euler_check(const PrismComplex& pc) {
  CheckResult check{"prism_euler", true};
  for (const auto& stack : pc.stacks) {
    for (const auto& sigma : stack.persistent) {
      const auto p = prism(sigma.nodes(), stack.lower, stack.upper);
      record(check, static_cast<double>(std::abs(euler_characteristic(p) - 1)), 0.0);
      for (const auto& snap : pc.snapshots) {
        std::int64_t chi = 0;
        for (SimplexId id : p.all_ids())
          if (snap.flag.contains(p.simplex(id))) chi += (p.dim(id) % 2 == 0) ? 1 : -1;
        const std::int64_t expected = (snap.slice == stack.lower || snap.slice == stack.upper) ? 1 : 0;
        record(check, static_cast<double>(std::abs(chi - expected)), 0.0);
      }
    }
  }
  check.notes = "prism chi = 1; prism ∩ snapshot chi = 1 at its end slices, 0 elsewhere";
  return check;
}

}  // namespace

bool VerificationReport::hard_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["hard_failure"] = hard_failure();
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"kind", c.hard ? "hard" : "report-only"},
                   {"skipped", c.skipped},
                   {"population", c.population},
                   {"violations", c.violations},
                   {"max_error", c.max_error},
                   {"passed", !c.failed()},
                   {"notes", c.notes}});
  }
  const auto& gb = gauss_bonnet;
  j["gauss_bonnet"] = {{"alternating_forman_sum", gb.alternating_sum},
                       {"chi", gb.chi},
                       {"sum_snapshot_chi", gb.sum_snapshot_chi},
                       {"sum_pair_chi", gb.sum_pair_chi},
                       {"residual_c1", gb.residual_c1},
                       {"residual_c2", gb.residual_c2},
                       {"oracle_chi", gb.oracle_chi ? nlohmann::json(*gb.oracle_chi) : nlohmann::json(nullptr)},
                       {"oracle_note", gb.oracle_note}};
  const auto& m = monotonicity;
  j["monotonicity"] = {{"spatial_edges", m.spatial_edges},
                       {"qualifying", m.qualifying},
                       {"excluded_not_persistent", m.excluded_not_persistent},
                       {"excluded_foreign_parallel", m.excluded_foreign_parallel},
                       {"violations", m.violations},
                       {"equality_cases", m.equality_cases},
                       {"equality_rule_mismatches", m.equality_rule_mismatches}};
  return j;
}

int exit_code_for(const VerificationReport& report) { return report.hard_failure() ? 1 : 0; }

std::optional<std::int64_t> inclusion_exclusion_oracle(const PrismComplex& pc, std::size_t size_cap) {
  const auto& cx = pc.complex;
  if (cx.size() > size_cap) return std::nullopt;

  std::vector<std::vector<SimplexId>> cover;
  for (const auto& snap : pc.snapshots) {
    std::vector<SimplexId> ids;
    for (SimplexId id : snap.flag.all_ids()) ids.push_back(cx.at(snap.flag.simplex(id)));
    std::sort(ids.begin(), ids.end());
    cover.push_back(std::move(ids));
  }
  for (const auto& stack : pc.stacks) cover.push_back(stack.ids);

  // Walk subsets in index order; an empty intersection stays empty under
  // further intersection and contributes nothing.
  std::int64_t total = 0;
  auto chi_of = [&](const std::vector<SimplexId>& ids) { return euler_characteristic_of_ids(cx, ids); };
  auto walk = [&](auto&& self, std::size_t next, const std::vector<SimplexId>& meet, std::size_t depth) -> void {
    for (std::size_t k = next; k < cover.size(); ++k) {
      std::vector<SimplexId> narrowed;
      std::set_intersection(meet.begin(), meet.end(), cover[k].begin(), cover[k].end(), std::back_inserter(narrowed));
      if (narrowed.empty()) continue;
      const std::int64_t sign = (depth % 2 == 1) ? 1 : -1;  // depth = |A| after adding k
      total += sign * chi_of(narrowed);
      self(self, k + 1, narrowed, depth + 1);
    }
  };
  for (std::size_t k = 0; k < cover.size(); ++k) {
    if (cover[k].empty()) continue;
    total += chi_of(cover[k]);
    walk(walk, k + 1, cover[k], 2);
  }
  return total;
}

GaussBonnetBlock gauss_bonnet_report(const PrismComplex& pc, std::size_t oracle_cap) {
  const PrismComplex unit = pc.with_unit_weights();
  GaussBonnetBlock gb;
  gb.alternating_sum = alternating_sum(unit.complex);
  gb.chi = euler_characteristic(unit.complex);
  for (const auto& snap : unit.snapshots) gb.sum_snapshot_chi += euler_characteristic(snap.flag);
  for (const auto& stack : unit.stacks) gb.sum_pair_chi += euler_characteristic(std::span<const Simplex>(stack.persistent));
  gb.residual_c1 = gb.chi - gb.sum_snapshot_chi + gb.sum_pair_chi;
  gb.residual_c2 = gb.chi - gb.sum_snapshot_chi + 2 * gb.sum_pair_chi;
  gb.oracle_chi = inclusion_exclusion_oracle(unit, oracle_cap);
  gb.oracle_note = gb.oracle_chi ? "full cover inclusion-exclusion"
                                 : "skipped: " + std::to_string(unit.complex.size()) + " simplices exceed cap " +
                                       std::to_string(oracle_cap);
  return gb;
}

CheckResult check_monotonicity(const PrismComplex& unit_pc, MonotonicityStats& stats) {
  CheckResult check{"monotonicity", true};
  const auto& cx = unit_pc.complex;
  const auto snaps = weighted_snapshots(unit_pc);
  for (SimplexId id : cx.ids(1)) {
    if (unit_pc.edge(id).cls != EdgeClass::Spatial) continue;
    ++stats.spatial_edges;
    const Simplex& e = cx.simplex(id);
    const Slice k = e[0].slice;
    const NodeId u = e[0].node;
    const NodeId v = e[1].node;

    // Persistence with the smallest window δ = 1, which any larger δ implies.
    if (!snapshot_has(unit_pc, k - 1, {u, v}) || !snapshot_has(unit_pc, k + 1, {u, v})) {
      ++stats.excluded_not_persistent;
      continue;
    }
    // Every prism-origin parallel {(x,k),(w,k')} comes from a persistent
    // simplex holding u, v and w.
    bool origin_ok = true;
    for (SimplexId other : parallels_1(cx, id)) {
      const Simplex& o = cx.simplex(other);
      if (o[0].slice == k && o[1].slice == k) continue;
      const SpacetimeVertex& far = (o[0].slice == k) ? o[1] : o[0];
      if (!snapshot_has(unit_pc, k, {u, v, far.node}) || !snapshot_has(unit_pc, far.slice, {u, v, far.node})) {
        origin_ok = false;
        break;
      }
    }
    if (!origin_ok) {
      ++stats.excluded_foreign_parallel;
      continue;
    }
    ++stats.qualifying;

    const auto terms = coupling_decomposition(unit_pc, id, snaps.at(k));
    const double shift = terms.f_full - terms.f_static;
    const auto predicted = static_cast<double>(terms.prism_cofaces) - static_cast<double>(terms.prism_parallels);
    const bool ok = shift == predicted && predicted >= 0;
    ++check.population;
    check.max_error = std::max(check.max_error, std::abs(shift - predicted));
    if (!ok) {
      ++check.violations;
      ++stats.violations;
    }

    if (predicted == 0) ++stats.equality_cases;
    bool all_temporal = true;
    for (SimplexId tri : cx.cofaces(id)) {
      const Simplex& t = cx.simplex(tri);
      if (t[0].slice == k && t[1].slice == k && t[2].slice == k) continue;
      bool has_temporal = false;
      for (SimplexId side : cx.faces(tri)) {
        if (side == id) continue;
        const Simplex& s = cx.simplex(side);
        if (s[0].node == s[1].node && s[0].slice != s[1].slice) has_temporal = true;
      }
      all_temporal = all_temporal && has_temporal;
    }
    if ((predicted == 0) != all_temporal) ++stats.equality_rule_mismatches;
  }
  check.notes = std::to_string(stats.qualifying) + " of " + std::to_string(stats.spatial_edges) +
                " spatial edges qualify; excluded " + std::to_string(stats.excluded_not_persistent) + " not persistent, " +
                std::to_string(stats.excluded_foreign_parallel) + " with a foreign prism parallel";
  return check;
}

VerificationReport run_suite(const PrismComplex& pc, const SuiteOptions& options) {
  VerificationReport report;
  const auto& cx = pc.complex;
  const PrismComplex unit = pc.with_unit_weights();
  const double tol = options.weighted_tolerance;
  const double exact = options.exact_tolerance;

  {
    CheckResult check{"uniform_agreement", true};
    for (SimplexId id : unit.complex.ids(1)) {
      const double f = forman_general(unit.complex, id);
      const double fa = forman_aug(unit.complex, id);
      const double expected = 2.0 + static_cast<double>(unit.complex.cofaces(id).size()) -
                              static_cast<double>(parallels_1(unit.complex, id).size());
      record(check, std::max({std::abs(f - fa), std::abs(f - expected), std::abs(fa - expected)}), exact);
    }
    check.notes = "unit weights: F = F_aug = 2 + |cof2| - |P|";
    report.checks.push_back(std::move(check));
  }

  CheckResult reduced{"reduced_form", true};
  CheckResult spatial{"spatial_agreement", true};
  CheckResult classes{"disagreement_classes", true};
  CheckResult magnitude{"closed_form_magnitude", true};
  CheckResult bound{"bound_inequality", true};
  CheckResult sign{"discrepancy_sign", false};
  std::size_t opposite = 0, same = 0, negative = 0, positive = 0;
  for (SimplexId id : cx.ids(1)) {
    const auto info = pc.edge(id);
    const double f = forman_general(cx, id);
    const double fa = forman_aug(cx, id);
    const double diff = f - fa;
    const double closed = discrepancy_closed_form(cx, id);
    record(reduced, std::abs(forman_orig_1(cx, id) - f), exact);
    record(magnitude, std::abs(std::abs(diff) - std::abs(closed)), tol);
    record(bound, std::max(0.0, std::abs(diff) - discrepancy_bound(cx, id)), tol);
    if (info.cls == EdgeClass::Spatial) record(spatial, std::abs(diff), tol);
    if (std::abs(diff) > tol) {
      ++classes.population;
      if (info.cls == EdgeClass::Spatial) ++classes.violations;
      if (info.cls != EdgeClass::Spatial) {
        ++sign.population;
        if (diff * closed < 0) ++opposite;
        else ++same;
        if (diff < 0) ++negative;
        else ++positive;
      }
    }
  }
  sign.violations = std::min(opposite, same);
  sign.notes = "disagreeing non-spatial edges: F - F_aug = -closed_form on " + std::to_string(opposite) +
               ", = +closed_form on " + std::to_string(same) + "; F < F_aug on " + std::to_string(negative) +
               ", F > F_aug on " + std::to_string(positive);
  classes.notes = "disagreeing edges (|F - F_aug| > tol) that are spatial";
  for (auto* c : {&reduced, &spatial, &classes, &magnitude, &bound, &sign}) report.checks.push_back(std::move(*c));

  {
    CheckResult check{"scaling_covariance", true};
    const auto scaled = cx.scaled(options.scale_factor);
    for (SimplexId id : cx.ids(1)) {
      const double c = options.scale_factor;
      const double ef = std::abs(forman_general(scaled, id) - c * forman_general(cx, id));
      const double ea = std::abs(forman_aug(scaled, id) - c * forman_aug(cx, id));
      record(check, std::max(ef, ea), tol);
    }
    check.notes = "all weights multiplied by " + std::to_string(options.scale_factor);
    report.checks.push_back(std::move(check));
  }

  report.checks.push_back(coupling_check(pc, "coupling_identity", tol));
  report.checks.push_back(coupling_check(unit, "coupling_identity_unit", tol));
  report.checks.push_back(check_monotonicity(unit, report.monotonicity));
  {
    CheckResult eq{"monotonicity_equality_case", false};
    eq.population = report.monotonicity.qualifying;
    eq.violations = report.monotonicity.equality_rule_mismatches;
    eq.notes = std::to_string(report.monotonicity.equality_cases) + " qualifying edges with zero shift";
    report.checks.push_back(std::move(eq));
  }
  report.checks.push_back(prism_euler_check(pc));

  report.gauss_bonnet = gauss_bonnet_report(pc, options.oracle_cap);
  {
    CheckResult check{"inclusion_exclusion", true};
    const auto& gb = report.gauss_bonnet;
    if (gb.oracle_chi) {
      record(check, static_cast<double>(std::abs(*gb.oracle_chi - gb.chi)), 0.0);
    } else {
      check.skipped = true;
    }
    check.notes = gb.oracle_note;
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check{"gauss_bonnet_first_equality", false};
    const auto& gb = report.gauss_bonnet;
    record(check, std::abs(gb.alternating_sum - static_cast<double>(gb.chi)), tol);
    check.notes = "alternating Forman sum vs chi, reported only";
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace prismcurv
