#include "heisdens/io.hpp"

#include <sstream>

#ifndef HEISDENS_VERSION
#define HEISDENS_VERSION "0.0.0"
#endif

namespace heisdens {

using nlohmann::ordered_json;

std::string_view version() noexcept { return HEISDENS_VERSION; }

ordered_json to_json(const MetricSpec& m) {
  return {{"kind", metric_name(m.kind)}, {"kappa", m.kappa}, {"box_c", m.box_c}};
}

ordered_json to_json(const McEstimate& e) {
  return {{"mean", e.mean}, {"std_error", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

ordered_json to_json(const DensityConstants& c) {
  return {{"metric", to_json(c.metric)},
          {"beta0", c.beta0},
          {"beta", c.beta},
          {"b_star", c.b_star},
          {"gamma", c.gamma},
          {"abs_error", c.abs_error},
          {"quadrature_tol", c.quadrature_tol},
          {"seed", c.seed},
          {"samples", c.samples}};
}

ordered_json to_json(const SliceSection& s) {
  ordered_json j{{"metric", to_json(s.metric)}, {"b", s.b}};
  j["phi_max"] = s.phi_max ? ordered_json(*s.phi_max) : ordered_json(nullptr);
  j["area"] = s.area;
  j["area_error"] = s.area_error;
  j["curve_points"] = s.curve.size();
  return j;
}

ordered_json to_json(const MapleReport& r) {
  return {{"i0", r.i0},
          {"i0_error", r.i0_error},
          {"i1", r.i1},
          {"i1_error", r.i1_error},
          {"gap", r.gap},
          {"combined_error", r.combined_error},
          {"gap_resolved", r.gap_resolved},
          {"i0_route_diff", r.i0_route_diff},
          {"i1_route_diff", r.i1_route_diff},
          {"routes_agree", r.routes_agree},
          {"mc_i0", to_json(r.mc0)},
          {"mc_i1", to_json(r.mc1)},
          {"mc_consistent", r.mc_consistent},
          {"passed", r.passed}};
}

ordered_json to_json(const ConvexReport& r) {
  return {{"metric", to_json(r.metric)},
          {"beta0", r.beta0},
          {"beta", r.beta},
          {"b_star", r.b_star},
          {"abs_diff", r.abs_diff},
          {"combined_error", r.combined_error},
          {"rel_diff", r.rel_diff},
          {"equality_holds", r.equality_holds},
          {"brunn_max_second_diff", r.brunn_max_second_diff},
          {"brunn_holds", r.brunn_holds},
          {"passed", r.passed}};
}

ordered_json to_json(const DensityCurve& d) {
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < d.radii.size(); ++i) {
    points.push_back({{"r", d.radii[i]}, {"value", d.values[i]}});
  }
  return {{"curve", points}, {"variation", d.variation}};
}

ordered_json to_json(const FedererDensity& f) {
  return {{"value", f.value},
          {"offset", f.offset},
          {"center", {f.center.x, f.center.y, f.center.t}},
          {"contains_point", f.contains_point}};
}

ordered_json to_json(const InscribedRectangle& r) {
  return {{"b", r.b}, {"u", r.u}, {"v", r.v}, {"fill", r.fill}};
}

ordered_json to_json(const CoverEstimate& c) {
  return {{"kind", cover_kind_name(c.kind)},
          {"radius", c.radius},
          {"b", c.b},
          {"tile", {{"u", c.u}, {"v", c.v}}},
          {"shear", c.shear},
          {"pitch", c.pitch},
          {"n_x", c.n_x},
          {"n_t", c.n_t},
          {"tile_count", c.tile_count},
          {"estimate", c.estimate}};
}

namespace {

ordered_json curve_json(const std::vector<CoverCurvePoint>& points) {
  ordered_json out = ordered_json::array();
  for (const auto& p : points) {
    out.push_back({{"r", p.r},
                   {"estimate", p.estimate},
                   {"halved_estimate", p.halved_estimate},
                   {"trend_ok", p.trend_ok},
                   {"above_target", p.above_target},
                   {"valid", p.valid}});
  }
  return out;
}

}  // namespace

ordered_json to_json(const CompareReport& r) {
  return {{"spherical_target", r.spherical_target},
          {"centered_target", r.centered_target},
          {"spherical_tile", to_json(r.spherical_tile)},
          {"centered_tile", to_json(r.centered_tile)},
          {"spherical", curve_json(r.spherical)},
          {"centered", curve_json(r.centered)},
          {"finest_radius", r.finest_radius},
          {"ratio", r.ratio},
          {"ratio_ok", r.ratio_ok},
          {"targets_ok", r.targets_ok},
          {"within_band", r.within_band},
          {"trend_ok", r.trend_ok},
          {"covers_valid", r.covers_valid},
          {"passed", r.passed}};
}

ordered_json to_json(const MetricContractReport& r) {
  return {{"triples", r.triples},
          {"max_triangle_excess", r.max_triangle_excess},
          {"max_homogeneity_error", r.max_homogeneity_error},
          {"max_invariance_error", r.max_invariance_error},
          {"max_symmetry_error", r.max_symmetry_error},
          {"passed", r.passed}};
}

ordered_json wrap_output(const ordered_json& config, const ordered_json& result) {
  return {{"version", version()}, {"config", config}, {"result", result}};
}

std::string provenance_line(const ordered_json& config) {
  return "# heisdens " + std::string(version()) + " " + config.dump() + "\n";
}

std::string compare_to_csv(const CompareReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "kind,r,estimate,halved_estimate,target\n";
  for (const auto& p : r.spherical) {
    out << "spherical," << p.r << ',' << p.estimate << ',' << p.halved_estimate << ','
        << r.spherical_target << '\n';
  }
  for (const auto& p : r.centered) {
    out << "centered," << p.r << ',' << p.estimate << ',' << p.halved_estimate << ','
        << r.centered_target << '\n';
  }
  return out.str();
}

}  // namespace heisdens
