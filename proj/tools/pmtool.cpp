#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "polymatroid/census.hpp"
#include "polymatroid/cone.hpp"
#include "polymatroid/extend.hpp"
#include "polymatroid/io.hpp"
#include "polymatroid/pipeline.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

std::vector<pm::RankFunction> read_inputs(const std::string& path) {
  if (path == "-") return pm::read_polymatroid_file(std::cin);
  std::ifstream in(path);
  if (!in) throw pm::FormatError("cannot open input file: " + path);
  return pm::read_polymatroid_file(in);
}

ordered_json violation_json(const pm::GroundSet& ground, const pm::Violation& v) {
  ordered_json out;
  out["rule"] = v.rule;
  out["subsets"] = ordered_json::array(
      {ground.subset_name(v.a), ground.subset_name(v.b)});
  out["slack"] = pm::format_rational(v.slack);
  return out;
}

std::string subset_pair(const pm::GroundSet& ground,
                        const std::pair<pm::SubsetId, pm::SubsetId>& pair) {
  return "(" + ground.subset_name(pair.first) + ", " + ground.subset_name(pair.second) +
         ")";
}

int cmd_validate(const std::string& input, const std::string& mode_name,
                 const std::string& format) {
  const auto ranks = read_inputs(input);
  if (ranks.empty()) throw pm::FormatError("no polymatroid lines in input");
  const pm::ValidationMode mode = mode_name == "facet" ? pm::ValidationMode::facet
                                                       : pm::ValidationMode::full;

  bool all_valid = true;
  ordered_json items = ordered_json::array();
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const auto report = pm::validate_polymatroid(ranks[k], mode);
    all_valid = all_valid && report.valid;
    if (format == "json") {
      ordered_json item;
      item["index"] = k;
      item["vector"] = pm::format_polymatroid(ranks[k]);
      item["valid"] = report.valid;
      ordered_json vs = ordered_json::array();
      for (const auto& v : report.violations)
        vs.push_back(violation_json(ranks[k].ground(), v));
      item["violations"] = std::move(vs);
      items.push_back(std::move(item));
    } else {
      std::cout << "polymatroid " << k + 1 << ": "
                << (report.valid ? "valid" : "INVALID") << "\n";
      for (const auto& v : report.violations) {
        std::cout << "  " << v.rule << " violated at ("
                  << ranks[k].ground().subset_name(v.a) << ", "
                  << ranks[k].ground().subset_name(v.b)
                  << "), slack " << pm::format_rational(v.slack) << "\n";
      }
    }
  }
  if (format == "json") {
    ordered_json out;
    out["mode"] = mode_name;
    out["polymatroids"] = std::move(items);
    out["all_valid"] = all_valid;
    std::cout << out.dump(2) << "\n";
  }
  return all_valid ? kExitOk : kExitInvalid;
}

int cmd_analyze(const std::string& input, const std::string& format) {
  const auto ranks = read_inputs(input);
  if (ranks.empty()) throw pm::FormatError("no polymatroid lines in input");
  const pm::RankFunction& rank = ranks.front();
  const pm::GroundSet& ground = rank.ground();

  const auto report = pm::validate_polymatroid(rank, pm::ValidationMode::full);
  if (!report.valid) {
    if (format == "json") {
      ordered_json out;
      out["valid"] = false;
      ordered_json vs = ordered_json::array();
      for (const auto& v : report.violations) vs.push_back(violation_json(ground, v));
      out["violations"] = std::move(vs);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "not a polymatroid (" << report.violations.size()
                << " violated inequalities)\n";
    }
    return kExitInvalid;
  }

  const pm::FlatSet fs = pm::flats(rank);
  const auto nonmodular = pm::nonmodular_flat_pairs(rank, false);
  const auto star = pm::check_star(rank);
  const auto linearity = pm::is_linear(rank);

  const char* star_name = star.status == pm::StarStatus::vacuous ? "vacuous"
                          : star.status == pm::StarStatus::witnessed ? "witnessed"
                                                                     : "violated";

  if (format == "json") {
    ordered_json out;
    out["vector"] = pm::format_polymatroid(rank);
    out["valid"] = true;
    ordered_json flist = ordered_json::array();
    for (pm::SubsetId f : fs.flats) flist.push_back(ground.subset_name(f));
    out["flats"] = std::move(flist);
    ordered_json pairs = ordered_json::array();
    for (const auto& p : nonmodular) {
      ordered_json item;
      item["pair"] =
          ordered_json::array({ground.subset_name(p.f1), ground.subset_name(p.f2)});
      item["defect"] = pm::format_rational(p.defect);
      item["intersecting"] = !pm::is_empty(pm::set_intersect(p.f1, p.f2));
      pairs.push_back(std::move(item));
    }
    out["nonmodular_flat_pairs"] = std::move(pairs);
    out["star"] = star_name;
    if (star.witness_pair) {
      out["star_witness_pair"] =
          ordered_json::array({ground.subset_name(star.witness_pair->first),
                               ground.subset_name(star.witness_pair->second)});
      ordered_json cut = ordered_json::array();
      for (pm::SubsetId f : star.witness_cut->members)
        cut.push_back(ground.subset_name(f));
      out["star_witness_cut"] = std::move(cut);
    }
    out["linear"] = linearity.linear;
    if (linearity.failing_pair)
      out["first_nonintersectable_pair"] = ordered_json::array(
          {ground.subset_name(linearity.failing_pair->first),
           ground.subset_name(linearity.failing_pair->second)});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "vector: " << pm::format_polymatroid(rank) << "\n";
    std::cout << "flats (" << fs.flats.size() << "):";
    for (pm::SubsetId f : fs.flats) std::cout << " " << ground.subset_name(f);
    std::cout << "\n";
    std::cout << "non-modular flat pairs: " << nonmodular.size() << "\n";
    for (const auto& p : nonmodular)
      std::cout << "  (" << ground.subset_name(p.f1) << ", " << ground.subset_name(p.f2)
                << ") defect " << pm::format_rational(p.defect) << "\n";
    std::cout << "star: " << star_name;
    if (star.witness_pair) {
      std::cout << "  witness " << subset_pair(ground, *star.witness_pair) << " cut {";
      bool first = true;
      for (pm::SubsetId f : star.witness_cut->members) {
        if (!first) std::cout << ", ";
        std::cout << ground.subset_name(f);
        first = false;
      }
      std::cout << "}";
    }
    std::cout << "\n";
    std::cout << "linear: " << (linearity.linear ? "yes" : "no");
    if (linearity.failing_pair)
      std::cout << "  first failing pair " << subset_pair(ground, *linearity.failing_pair);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_rays(int n, const std::optional<std::string>& import_path,
             const std::optional<std::string>& export_path, bool classify, bool filter,
             double budget_seconds, int jobs, const std::string& format) {
  const pm::FacetSystem fs = pm::facet_inequalities(n);
  std::vector<pm::ExtremeRay> rays;
  if (import_path) {
    rays = pm::import_rays_file(*import_path, n);
  } else {
    pm::EnumOptions eo;
    eo.budget_seconds = budget_seconds;
    eo.jobs = jobs;
    rays = pm::enumerate_extreme_rays(fs, eo);
  }

  if (export_path) {
    std::ofstream out(*export_path);
    if (!out) throw pm::FormatError("cannot open export file: " + *export_path);
    pm::export_rays(out, n, rays);
  }

  ordered_json out;
  out["n"] = n;
  out["dimension"] = fs.dim;
  out["facet_rows"] = static_cast<int>(fs.rows.size());
  out["ray_count"] = rays.size();
  if (format != "json") {
    std::cout << "n=" << n << ": " << rays.size() << " extreme rays ("
              << fs.rows.size() << " facets in dimension " << fs.dim << ")\n";
  }

  if (classify || filter) {
    const pm::GroundSet ground(n);
    const auto classes = pm::classify_isomorphism(n, rays);
    out["class_count"] = classes.size();
    if (format != "json")
      std::cout << classes.size() << " isomorphism classes\n";

    ordered_json class_list = ordered_json::array();
    for (const auto& cls : classes) {
      ordered_json c;
      std::string vec;
      bool first = true;
      for (pm::SubsetId s : pm::display_order(n)) {
        if (!first) vec += ",";
        vec += std::to_string(cls.representative.coords[s.bits - 1]);
        first = false;
      }
      c["vector"] = vec;
      c["orbit_size"] = cls.orbit_size;
      c["members"] = cls.member_count;
      class_list.push_back(std::move(c));
      if (format != "json" && !filter)
        std::cout << "  " << vec << "  (orbit " << cls.orbit_size << ")\n";
    }
    out["classes"] = std::move(class_list);

    if (filter) {
      const auto outcome = pm::lemma_filter(n, classes);
      out["survivor_count"] = outcome.survivors.size();
      ordered_json survivors = ordered_json::array();
      for (std::size_t idx : outcome.survivors) {
        std::string vec;
        bool first = true;
        for (pm::SubsetId s : pm::display_order(n)) {
          if (!first) vec += ",";
          vec += std::to_string(classes[idx].representative.coords[s.bits - 1]);
          first = false;
        }
        survivors.push_back(vec);
        if (format != "json") std::cout << "  survivor: " << vec << "\n";
      }
      out["survivors"] = std::move(survivors);
      ordered_json eliminated = ordered_json::array();
      for (const auto& e : outcome.eliminated) {
        ordered_json w;
        w["class_index"] = e.class_index;
        w["rule"] = e.rule == pm::ElimRule::intersecting_nonmodular
                        ? "intersecting-nonmodular-flats"
                        : "disjoint-nonprincipal-cut";
        w["flat_pair"] = ordered_json::array(
            {ground.subset_name(e.f1), ground.subset_name(e.f2)});
        if (e.cut) {
          ordered_json cut = ordered_json::array();
          for (pm::SubsetId f : e.cut->members) cut.push_back(ground.subset_name(f));
          w["cut"] = std::move(cut);
        }
        eliminated.push_back(std::move(w));
      }
      out["eliminated"] = std::move(eliminated);
      if (format != "json")
        std::cout << outcome.survivors.size() << " survivors, "
                  << outcome.eliminated.size() << " eliminated\n";
    }
  }

  if (format == "json") std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(int max_n, const std::optional<std::string>& rays_from,
               double budget_seconds, int jobs, const std::string& format) {
  pm::PipelineOptions options;
  options.max_n = max_n;
  options.rays_from = rays_from;
  options.budget_seconds = budget_seconds;
  options.jobs = jobs;
  const pm::PipelineResult result = pm::run_verification(options);

  if (format == "json") {
    std::cout << result.certificate.dump(2) << "\n";
  } else {
    for (const auto& section : result.certificate["sections"]) {
      std::cout << "n=" << section["n"].get<int>() << ": "
                << section["ray_count"].get<long>() << " rays, "
                << section["class_count"].get<long>() << " classes, "
                << section["survivor_count"].get<long>() << " survivors after filtering"
                << (section["section_ok"].get<bool>() ? "  [ok]" : "  [MISMATCH]")
                << "\n";
      for (const auto& [name, value] : section["checks"].items()) {
        if (value.is_boolean() && !value.get<bool>())
          std::cout << "  failed check: " << name << "\n";
      }
    }
    std::cout << "verdict: " << result.certificate["verdict"].get<std::string>() << "\n";
  }
  return result.pass ? kExitOk : kExitInvalid;
}

int cmd_linrep_check(const std::string& path, const std::optional<std::string>& expect,
                     const std::string& format) {
  std::ifstream in(path);
  if (!in) throw pm::FormatError("cannot open representation file: " + path);
  const pm::LinearRepresentation rep = pm::read_linrep(in);
  const pm::RankFunction rank = pm::rank_from_representation(rep);

  bool matches = true;
  std::optional<std::string> expected_vec;
  if (expect) {
    std::ifstream ein(*expect);
    if (!ein) throw pm::FormatError("cannot open expected file: " + *expect);
    const auto expected = pm::read_polymatroid_file(ein);
    if (expected.empty()) throw pm::FormatError("no polymatroid in expected file");
    expected_vec = pm::format_polymatroid(expected.front());
    matches = expected.front().ground() == rank.ground() && expected.front() == rank;
  }

  if (format == "json") {
    ordered_json out;
    out["field"] = rep.p;
    out["ambient_dimension"] = rep.d;
    out["vector"] = pm::format_polymatroid(rank);
    if (expected_vec) {
      out["expected"] = *expected_vec;
      out["matches"] = matches;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "GF(" << rep.p << "), dimension " << rep.d << "\n";
    std::cout << "induced ranks: " << pm::format_polymatroid(rank) << "\n";
    if (expected_vec)
      std::cout << "expected:      " << *expected_vec << "  ("
                << (matches ? "match" : "MISMATCH") << ")\n";
  }
  return matches ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic polymatroid toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string input = "-";
  std::string mode = "full";
  int rays_n = 3;
  std::optional<std::string> import_path, export_path, rays_from, expect_path;
  bool classify = false, filter = false;
  double budget_seconds = 3600.0;
  int jobs = 1;
  int max_n = 5;
  std::string linrep_path;

  auto* validate = app.add_subcommand("validate", "check the polymatroid axioms");
  validate->add_option("input", input, "input file of rank vectors ('-' for stdin)");
  validate->add_option("--mode", mode, "full or facet")
      ->check(CLI::IsMember({"full", "facet"}));
  validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* analyze =
      app.add_subcommand("analyze", "flats, modularity, star and linearity report");
  analyze->add_option("input", input, "input file with one rank vector");
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* rays = app.add_subcommand("rays", "enumerate or import extreme rays");
  rays->add_option("n", rays_n, "ground set size")->required()->check(CLI::Range(1, 6));
  rays->add_option("--import", import_path, "read rays from a file instead of enumerating");
  rays->add_option("--export", export_path, "write the rays to a file");
  rays->add_flag("--classify", classify, "group rays into isomorphism classes");
  rays->add_flag("--filter", filter, "also apply the elimination rules");
  rays->add_option("--budget-seconds", budget_seconds, "enumeration time budget");
  rays->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  rays->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand(
      "verify-paper", "reproduce the published five-element census end to end");
  verify->add_option("--max-n", max_n, "largest ground set size (2..5)")
      ->check(CLI::Range(2, 5));
  verify->add_option("--rays-from", rays_from, "precomputed ray file for the largest n");
  verify->add_option("--budget-seconds", budget_seconds, "enumeration time budget");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* linrep = app.add_subcommand("linrep-check",
                                    "verify a linear representation's rank function");
  linrep->add_option("file", linrep_path, "representation file")->required();
  linrep->add_option("--expect", expect_path, "polymatroid file the ranks must equal");
  linrep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(input, mode, format);
    if (analyze->parsed()) return cmd_analyze(input, format);
    if (rays->parsed())
      return cmd_rays(rays_n, import_path, export_path, classify, filter,
                      budget_seconds, jobs, format);
    if (verify->parsed())
      return cmd_verify(max_n, rays_from, budget_seconds, jobs, format);
    if (linrep->parsed()) return cmd_linrep_check(linrep_path, expect_path, format);
  } catch (const pm::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const pm::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "hint: run 'pmtool rays <n> --export FILE' on a bigger budget once, "
                 "then pass the file via --import/--rays-from\n";
    return kExitUsage;
  } catch (const pm::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
