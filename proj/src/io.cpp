// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/io.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace laakso {

ordered_json scaled_json(const ScaledDistance& d) {
  ordered_json j;
  j["value"] = d.value;
  j["unit_exponent"] = d.unit_exponent;
  j["decimal"] = d.to_double();
  return j;
}

ScaledDistance scaled_from_json(const nlohmann::json& j) {
  return ScaledDistance{j.at("value").get<std::int64_t>(), j.at("unit_exponent").get<std::int32_t>()};
}

ordered_json point_json(LaaksoFamily& family, const Point& p) {
  ordered_json j;
  j["level"] = p.level;
  j["label"] = family.label(p);
  return j;
}

Point point_from_json(LaaksoFamily& family, const nlohmann::json& j) {
  return family.point(j.at("level").get<int>(), j.at("label").get<std::string>());
}

Point parse_point(LaaksoFamily& family, std::string_view spec, int default_level) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return family.point(default_level, spec);
  int level = std::stoi(std::string(spec.substr(0, colon)));
  return family.point(level, spec.substr(colon + 1));
}

ordered_json graph_json(const LaaksoGraph& g) {
  ordered_json j;
  j["level"] = g.level();
  j["unit_exponent"] = g.unit_exponent();
  j["vertices"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.a), g.label(e.b)});
  j["edges"] = std::move(edges);
  j["endpoints"] = {g.label(g.endpoints().first), g.label(g.endpoints().second)};
  ordered_json cycles = ordered_json::array();
  for (const auto& c : g.edge_cycles()) {
    ordered_json corners = ordered_json::array();
    for (VertexId v : c.corners) corners.push_back(g.label(v));
    cycles.push_back(std::move(corners));
  }
  j["edge_cycles"] = std::move(cycles);
  return j;
}

std::string graph_dot(const LaaksoGraph& g) {
  std::set<std::uint32_t> cycle_edges;
  for (const auto& c : g.edge_cycles())
    for (std::uint32_t e : c.member_edges) cycle_edges.insert(e);
  std::ostringstream os;
  os << "graph laakso_" << g.level() << " {\n";
  os << "  \"" << g.label(g.endpoints().first) << "\" [shape=doublecircle];\n";
  os << "  \"" << g.label(g.endpoints().second) << "\" [shape=doublecircle];\n";
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    os << "  \"" << g.label(e.a) << "\" -- \"" << g.label(e.b) << "\"";
    if (cycle_edges.count(i)) os << " [color=firebrick, penwidth=2.0]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_edgelist(const LaaksoGraph& g) {
  std::ostringstream os;
  os << "# laakso level=" << g.level() << "\n";
  for (const auto& e : g.edges()) os << g.label(e.a) << " " << g.label(e.b) << "\n";
  return os.str();
}

std::string matrix_csv(const LaaksoGraph& g, const DistanceMatrix& m) {
  std::ostringstream os;
  os << "unit_exponent=" << m.unit_exponent() << "\n";
  for (VertexId v = 0; v < m.size(); ++v) os << "," << g.label(v);
  os << "\n";
  for (VertexId i = 0; i < m.size(); ++i) {
    os << g.label(i);
    auto row = m.row(i);
    for (VertexId j = 0; j < m.size(); ++j) os << "," << row[j];
    os << "\n";
  }
  return os.str();
}

ordered_json gap_json(LaaksoFamily& family, const GapCertificate& cert) {
  ordered_json j;
  j["from_level"] = cert.from_level;
  j["to_level"] = cert.to_level;
  j["max_gap"] = scaled_json(cert.max_gap);
  j["bound"] = scaled_json(cert.bound);
  j["witness"] = family.graph(cert.to_level).label(cert.witness);
  return j;
}

ordered_json doubling_json(const LaaksoGraph& g, const DoublingReport& report) {
  ordered_json j;
  j["level"] = report.level;
  j["max_cover_size"] = report.max_cover_size;
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json ej;
    ej["center"] = g.label(e.center);
    ej["radius"] = scaled_json(e.radius);
    ej["cover_size"] = e.cover_size;
    ej["method"] = e.exact ? "exact" : "greedy";
    entries.push_back(std::move(ej));
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json homogeneity_json(const LaaksoGraph& g, const HomogeneityFit& fit) {
  ordered_json j;
  j["level"] = g.level();
  j["exponent_s"] = fit.exponent_s;
  j["constant_M"] = fit.constant_M;
  j["residual"] = fit.residual;
  ordered_json samples = ordered_json::array();
  for (const auto& s : fit.samples) {
    ordered_json sj;
    sj["R"] = scaled_json(ScaledDistance::units(1, s.big_exponent).normalized());
    sj["rho"] = scaled_json(ScaledDistance::units(1, s.small_exponent));
    sj["N"] = s.count;
    sj["worst_center"] = s.whole_space ? "any" : g.label(s.worst_center);
    sj["method"] = s.exact ? "exact" : "greedy";
    samples.push_back(std::move(sj));
  }
  j["samples"] = std::move(samples);
  return j;
}

std::string homogeneity_csv(const LaaksoGraph& g, const HomogeneityFit& fit) {
  std::ostringstream os;
  os << "level,center,R_units,rho_units,N,method\n";
  for (const auto& s : fit.samples) {
    std::int64_t r_units = ScaledDistance::pow4(g.level() - s.big_exponent);
    std::int64_t rho_units = ScaledDistance::pow4(g.level() - s.small_exponent);
    os << g.level() << "," << (s.whole_space ? "any" : g.label(s.worst_center)) << "," << r_units
       << "," << rho_units << "," << s.count << "," << (s.exact ? "exact" : "greedy") << "\n";
  }
  return os.str();
}

ordered_json kuratowski_json(const KuratowskiReport& report) {
  ordered_json j;
  j["level"] = report.level;
  j["pairs_checked"] = report.pairs_checked;
  ordered_json v = ordered_json::array();
  for (const auto& [x, y] : report.violations) v.push_back({x, y});
  j["violations"] = std::move(v);
  return j;
}

ordered_json separation_family_json(LaaksoFamily& family, const SeparationFamily& fam) {
  ordered_json j;
  j["type"] = "separation_family";
  j["level"] = fam.level;
  j["r"] = scaled_json(fam.r);
  j["eval_level"] = fam.eval_level;
  ordered_json members = ordered_json::array();
  for (const auto& m : fam.members) {
    ordered_json mj;
    mj["cycle"] = m.cycle_address;
    mj["corners"] = m.cycle_corners;
    mj["x"] = point_json(family, m.x);
    mj["y"] = point_json(family, m.y);
    mj["norm"] = scaled_json(m.norm);
    members.push_back(std::move(mj));
  }
  j["members"] = std::move(members);
  j["min_pairwise"] = fam.min_pairwise ? scaled_json(*fam.min_pairwise) : ordered_json(nullptr);
  j["max_norm"] = scaled_json(fam.max_norm);
  return j;
}

ordered_json refutation_certificate_json(LaaksoFamily& family, const RefutationCertificate& cert) {
  ordered_json j;
  j["type"] = "refutation_certificate";
  j["level"] = cert.level;
  j["r"] = scaled_json(cert.r);
  j["eval_level"] = cert.eval_level;
  j["blocking"] = "center strictly within r of cycle corners";
  ordered_json centers = ordered_json::array();
  for (const auto& c : cert.centers) {
    ordered_json cj;
    cj["t"] = point_json(family, c.t);
    cj["s"] = point_json(family, c.s);
    centers.push_back(std::move(cj));
  }
  j["centers"] = std::move(centers);
  ordered_json fc;
  fc["address"] = cert.free_cycle_address;
  fc["corners"] = cert.free_cycle_corners;
  j["free_cycle"] = std::move(fc);
  ordered_json w;
  w["x"] = point_json(family, cert.witness.x);
  w["y"] = point_json(family, cert.witness.y);
  j["witness"] = std::move(w);
  j["norm"] = scaled_json(cert.witness_norm);
  ordered_json pc = ordered_json::array();
  for (const auto& p : cert.per_center) {
    ordered_json pj;
    pj["index"] = p.index;
    pj["z"] = point_json(family, p.z);
    pj["value"] = scaled_json(p.value);
    pc.push_back(std::move(pj));
  }
  j["per_center"] = std::move(pc);
  return j;
}

std::vector<CenterPair> centers_from_json(LaaksoFamily& family, const nlohmann::json& doc) {
  std::vector<CenterPair> centers;
  for (const auto& c : doc.at("centers")) {
    centers.push_back({point_from_json(family, c.at("t")), point_from_json(family, c.at("s"))});
  }
  return centers;
}

ordered_json growth_rows_json(const std::vector<GrowthRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["level"] = r.level;
    j["edge_cycles"] = r.edge_cycles;
    j["packing_lower_bound"] = r.packing_lower_bound;
    j["min_pairwise"] = r.min_pairwise ? scaled_json(*r.min_pairwise) : ordered_json(nullptr);
    j["max_norm"] = scaled_json(r.max_norm);
    j["doubling_max"] = r.doubling_max;
    j["refute_trials"] = r.refute_trials;
    j["refute_successes"] = r.refute_successes;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string growth_rows_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "level,edge_cycles,packing_lower_bound,min_pairwise,max_norm,doubling_max,"
        "refute_trials,refute_successes\n";
  for (const auto& r : rows) {
    os << r.level << "," << r.edge_cycles << "," << r.packing_lower_bound << ","
       << (r.min_pairwise ? std::to_string(r.min_pairwise->to_double()) : "") << ","
       << r.max_norm.to_double() << "," << r.doubling_max << "," << r.refute_trials << ","
       << r.refute_successes << "\n";
  }
  return os.str();
}

}  // namespace laakso
