// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "laakso/cli.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "laakso/covering.hpp"
#include "laakso/diffset.hpp"
#include "laakso/errors.hpp"
#include "laakso/family.hpp"
#include "laakso/io.hpp"
#include "laakso/metric.hpp"
#include "laakso/verify.hpp"

namespace laakso::cli {

namespace {

struct RunConfig {
  int cap = LaaksoFamily::kDefaultCap;
  int level = 0;
  int from_level = 0;
  int to_level = 0;
  int max_level = 0;
  std::uint64_t seed = 0;
  int trials = 1;
  std::uint64_t work_limit = 10'000'000;
  std::string format = "json";
  std::string output;
  std::string csv_output;
  std::string u_label, v_label;
  std::string x_spec, y_spec;
  std::string centers_file;
  std::string input_file;
  std::string pairs_spec;
  std::string radius_exponents;
  int random_centers = -1;
  int restrict_image_level = -1;
  bool all_pairs_flag = false;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + cfg.output + "'");
  f << text;
}

void emit_json(const RunConfig& cfg, const ordered_json& j, std::ostream& out) {
  emit(cfg, j.dump(2) + "\n", out);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f << text;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
  nlohmann::json doc;
  f >> doc;
  return doc;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& spec) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bad scale pair '" + item + "', want m1:m2");
    out.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
  }
  return out;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  const LaaksoGraph& g = family.graph(cfg.level);
  if (cfg.format == "json") {
    emit_json(cfg, graph_json(g), out);
  } else if (cfg.format == "dot") {
    emit(cfg, graph_dot(g), out);
  } else if (cfg.format == "edgelist") {
    emit(cfg, graph_edgelist(g), out);
  } else {
    throw std::runtime_error("build: unsupported format '" + cfg.format + "'");
  }
  return 0;
}

int cmd_dist(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  const LaaksoGraph& g = family.graph(cfg.level);
  if (cfg.all_pairs_flag) {
    emit(cfg, matrix_csv(g, all_pairs(g)), out);
    return 0;
  }
  ScaledDistance d = dist(g, g.require(cfg.u_label), g.require(cfg.v_label));
  ordered_json j;
  j["level"] = cfg.level;
  j["u"] = cfg.u_label;
  j["v"] = cfg.v_label;
  j["distance"] = scaled_json(d);
  emit_json(cfg, j, out);
  return 0;
}

int cmd_diam(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  ScaledDistance d = diameter(family.graph(cfg.level));
  emit_json(cfg, scaled_json(d), out);
  return 0;
}

int cmd_gh_gap(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  GapCertificate cert = hausdorff_gap(family, cfg.from_level, cfg.to_level);
  emit_json(cfg, gap_json(family, cert), out);
  return 0;
}

int cmd_doubling(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  const LaaksoGraph& g = family.graph(cfg.level);
  std::vector<int> radii = cfg.radius_exponents.empty() ? std::vector<int>{}
                                                        : parse_int_list(cfg.radius_exponents);
  if (radii.empty()) {
    radii.resize(cfg.level + 1);
    std::iota(radii.begin(), radii.end(), 0);
  }
  DoublingReport report = doubling_report(g, all_pairs(g), radii, cfg.work_limit);
  emit_json(cfg, doubling_json(g, report), out);
  return 0;
}

int cmd_assouad(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  const LaaksoGraph& g = family.graph(cfg.level);
  auto pairs = cfg.pairs_spec.empty() ? default_scale_pairs(cfg.level) : parse_pairs(cfg.pairs_spec);
  std::vector<VertexId> subset;
  if (cfg.restrict_image_level >= 0)
    subset = family.image_vertices(cfg.restrict_image_level, cfg.level);
  HomogeneityFit fit = assouad_fit(g, all_pairs(g), pairs, subset);
  if (!cfg.csv_output.empty()) write_file(cfg.csv_output, homogeneity_csv(g, fit));
  emit_json(cfg, homogeneity_json(g, fit), out);
  return 0;
}

int cmd_diffset_norm(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  DiffFn f{parse_point(family, cfg.x_spec, cfg.level), parse_point(family, cfg.y_spec, cfg.level)};
  ScaledDistance norm = linf_norm(family, f);
  ordered_json j;
  j["x"] = point_json(family, f.x);
  j["y"] = point_json(family, f.y);
  j["norm"] = scaled_json(norm);
  emit_json(cfg, j, out);
  return 0;
}

int cmd_diffset_separate(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  SeparationFamily fam = separated_family(family, cfg.level);
  emit_json(cfg, separation_family_json(family, fam), out);
  return 0;
}

int cmd_diffset_refute(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  bool randomized = cfg.random_centers >= 0;
  if (randomized == !cfg.centers_file.empty())
    throw std::runtime_error("diffset-refute: give exactly one of --centers or --random-centers");

  auto run_one = [&](const std::vector<CenterPair>& centers) -> ordered_json {
    RefuteOutcome outcome = refute_cover(family, cfg.level, centers);
    if (!outcome.certificate) {
      ordered_json j;
      j["type"] = "refutation_outcome";
      j["refuted"] = false;
      j["reason"] = outcome.not_refuted_reason;
      return j;
    }
    ordered_json j = refutation_certificate_json(family, *outcome.certificate);
    VerifyResult self = verify_document(j, family.cap());
    if (!self.ok) {
      std::string what = "emitted certificate failed self-verification";
      for (const auto& issue : self.issues) what += "; " + issue;
      throw math_check_error(what);
    }
    return j;
  };

  if (!randomized) {
    auto centers = centers_from_json(family, load_json(cfg.centers_file));
    emit_json(cfg, run_one(centers), out);
    return 0;
  }

  if (cfg.trials == 1) {
    auto centers = random_centers(family, cfg.level, cfg.random_centers, cfg.seed);
    ordered_json j = run_one(centers);
    j["seed"] = cfg.seed;
    emit_json(cfg, j, out);
    return 0;
  }
  ordered_json results = ordered_json::array();
  int refuted = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    auto centers = random_centers(family, cfg.level, cfg.random_centers,
                                  cfg.seed + static_cast<std::uint64_t>(t));
    ordered_json j = run_one(centers);
    if (j.value("type", "") == "refutation_certificate") ++refuted;
    results.push_back(std::move(j));
  }
  ordered_json summary;
  summary["type"] = "refutation_trials";
  summary["level"] = cfg.level;
  summary["seed"] = cfg.seed;
  summary["trials"] = cfg.trials;
  summary["centers_per_trial"] = cfg.random_centers;
  summary["refuted"] = refuted;
  summary["results"] = std::move(results);
  emit_json(cfg, summary, out);
  return 0;
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  auto rows = growth_probe(family, cfg.max_level, cfg.trials, cfg.seed);
  ordered_json j;
  j["type"] = "growth_probe";
  j["max_level"] = cfg.max_level;
  j["seed"] = cfg.seed;
  j["trials_per_level"] = cfg.trials;
  j["rows"] = growth_rows_json(rows);
  if (!cfg.csv_output.empty()) write_file(cfg.csv_output, growth_rows_csv(rows));
  emit_json(cfg, j, out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  nlohmann::json doc = load_json(cfg.input_file);
  VerifyResult res = verify_document(doc, cfg.cap);
  if (res.ok) {
    out << "OK " << doc.value("type", "document") << " verified\n";
    return 0;
  }
  for (const auto& issue : res.issues) err << "FAIL " << issue << "\n";
  return 2;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  LaaksoFamily family(cfg.cap);
  auto rows = growth_probe(family, cfg.max_level, /*trials=*/0, cfg.seed);
  ordered_json j;
  j["type"] = "report";
  j["max_level"] = cfg.max_level;
  ordered_json rj = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["level"] = r.level;
    row["doubling_max"] = r.doubling_max;
    row["packing_lower_bound"] = r.packing_lower_bound;
    row["ball_radius"] = scaled_json(ScaledDistance{2, r.level});  // packing lives in B(0, 2*4^-i)
    row["min_pairwise"] = r.min_pairwise ? scaled_json(*r.min_pairwise) : ordered_json(nullptr);
    row["max_norm"] = scaled_json(r.max_norm);
    rj.push_back(std::move(row));
  }
  j["rows"] = std::move(rj);
  if (!cfg.csv_output.empty()) {
    std::ostringstream os;
    os << "level,doubling_max,packing_lower_bound\n";
    for (const auto& r : rows)
      os << r.level << "," << r.doubling_max << "," << r.packing_lower_bound << "\n";
    write_file(cfg.csv_output, os.str());
  }
  emit_json(cfg, j, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for Laakso graphs and their sup-norm difference sets"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global options may follow the subcommand
  RunConfig cfg;
  try {
    cfg.cap = LaaksoFamily::env_cap();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  app.add_option("--cap", cfg.cap, "level cap (default LAAKSO_CAP or 6)");

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "write result to a file instead of stdout");
  };

  auto* build = app.add_subcommand("build", "construct a level graph");
  build->add_option("--level", cfg.level, "graph level")->required();
  build->add_option("--format", cfg.format, "json | dot | edgelist");
  add_output(build);

  auto* dist_cmd = app.add_subcommand("dist", "geodesic distance between two vertices");
  dist_cmd->add_option("--level", cfg.level)->required();
  dist_cmd->add_option("--u", cfg.u_label, "first vertex label");
  dist_cmd->add_option("--v", cfg.v_label, "second vertex label");
  dist_cmd->add_flag("--all-pairs", cfg.all_pairs_flag, "emit the full matrix as CSV");
  add_output(dist_cmd);

  auto* diam = app.add_subcommand("diam", "diameter of a level graph");
  diam->add_option("--level", cfg.level)->required();
  add_output(diam);

  auto* gh = app.add_subcommand("gh-gap", "Hausdorff gap certificate for a refinement");
  gh->add_option("--from", cfg.from_level)->required();
  gh->add_option("--to", cfg.to_level)->required();
  add_output(gh);

  auto* doubling = app.add_subcommand("doubling", "covering numbers N(B(x,r), r/2)");
  doubling->add_option("--level", cfg.level)->required();
  doubling->add_option("--radius-exponents", cfg.radius_exponents, "comma list of m in r=4^-m (default 0..level)");
  doubling->add_option("--work-limit", cfg.work_limit, "exact-cover node budget per instance");
  add_output(doubling);

  auto* assouad = app.add_subcommand("assouad", "homogeneity exponent fit");
  assouad->add_option("--level", cfg.level)->required();
  assouad->add_option("--pairs", cfg.pairs_spec, "scale pairs m1:m2,... (default diameter series)");
  assouad->add_option("--restrict-image", cfg.restrict_image_level,
                      "fit only the image of this coarser level");
  assouad->add_option("--samples-csv", cfg.csv_output, "also write samples as CSV");
  add_output(assouad);

  auto* dnorm = app.add_subcommand("diffset-norm", "sup norm of a difference function");
  dnorm->add_option("--level", cfg.level, "default level for bare labels")->required();
  dnorm->add_option("--x", cfg.x_spec, "point: label or LEVEL:label")->required();
  dnorm->add_option("--y", cfg.y_spec, "point: label or LEVEL:label")->required();
  add_output(dnorm);

  auto* dsep = app.add_subcommand("diffset-separate", "separated family, one member per edge cycle");
  dsep->add_option("--level", cfg.level)->required();
  add_output(dsep);

  auto* drefute = app.add_subcommand("diffset-refute", "refute a proposed r-ball cover of B(0,2r)");
  drefute->add_option("--level", cfg.level)->required();
  drefute->add_option("--centers", cfg.centers_file, "JSON file with center pairs");
  drefute->add_option("--random-centers", cfg.random_centers, "draw this many random level-vertex pairs");
  drefute->add_option("--seed", cfg.seed, "seed for random centers");
  drefute->add_option("--trials", cfg.trials, "number of seeded trials (with --random-centers)");
  add_output(drefute);

  auto* probe = app.add_subcommand("probe", "packing growth vs bounded doubling, per level");
  probe->add_option("--max-level", cfg.max_level)->required();
  probe->add_option("--trials", cfg.trials, "random refutation trials per level");
  probe->add_option("--seed", cfg.seed);
  probe->add_option("--csv", cfg.csv_output, "also write rows as CSV");
  add_output(probe);

  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("file", cfg.input_file, "certificate or family JSON")->required();

  auto* report = app.add_subcommand("report", "composite doubling vs packing table");
  report->add_option("--max-level", cfg.max_level)->required();
  report->add_option("--csv", cfg.csv_output, "also write rows as CSV");
  add_output(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) return cmd_build(cfg, out);
    if (dist_cmd->parsed()) return cmd_dist(cfg, out);
    if (diam->parsed()) return cmd_diam(cfg, out);
    if (gh->parsed()) return cmd_gh_gap(cfg, out);
    if (doubling->parsed()) return cmd_doubling(cfg, out);
    if (assouad->parsed()) return cmd_assouad(cfg, out);
    if (dnorm->parsed()) return cmd_diffset_norm(cfg, out);
    if (dsep->parsed()) return cmd_diffset_separate(cfg, out);
    if (drefute->parsed()) return cmd_diffset_refute(cfg, out);
    if (probe->parsed()) return cmd_probe(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (report->parsed()) return cmd_report(cfg, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const math_check_error& e) {
    err << "math check failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace laakso::cli
