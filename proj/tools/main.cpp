// Command-line entry point: fan ingestion, graded cohomology tables, tropical
// amoeba rendering and diagnostics, verification suites, and tree reports.

#include "CLI11.hpp"
#include "json.hpp"
#include "tmc/cech.hpp"
#include "tmc/chains.hpp"
#include "tmc/exact.hpp"
#include "tmc/hms.hpp"
#include "tmc/io.hpp"
#include "tmc/lattice.hpp"
#include "tmc/simp.hpp"
#include "tmc/trees.hpp"
#include "tmc/tropical.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace tmc;

SupportFunction to_support(const std::vector<long long>& v) {
  SupportFunction s;
  for (long long x : v) s.values.push_back(Int(x));
  return s;
}

std::string int_vec_str(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

std::string group_str(const CohGroup& g) {
  if (g.trivial()) return "0";
  std::string s;
  if (g.free_rank > 0) s = "Z^" + std::to_string(g.free_rank);
  for (const Int& t : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s;
}

// relative --out paths land under $TMC_OUT_DIR when it is set
std::string resolve_out(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("TMC_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string d = dir;
  if (d.back() != '/') d += '/';
  return d + path;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::string resolved = resolve_out(out_path);
  std::ofstream f(resolved);
  if (!f) throw std::runtime_error(resolved + ": cannot open for writing");
  f << content;
  std::cerr << "wrote " << resolved << "\n";
}

// "lo:hi,lo:hi,..." with one pair per ambient coordinate
std::vector<std::pair<long long, long long>> parse_box(const std::string& text, int dim) {
  std::vector<std::pair<long long, long long>> box;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("--box expects lo:hi pairs separated by commas, got \"" + part +
                               "\"");
    }
    box.emplace_back(std::stoll(part.substr(0, colon)), std::stoll(part.substr(colon + 1)));
    if (box.back().first > box.back().second) {
      throw std::runtime_error("--box pair \"" + part + "\" has lo > hi");
    }
  }
  if (static_cast<int>(box.size()) != dim) {
    throw std::runtime_error("--box needs exactly " + std::to_string(dim) + " lo:hi pairs");
  }
  return box;
}

struct CommonOpts {
  std::string fan_path;
  std::vector<long long> psi_override;
  std::string format = "text";
  std::string out_path;
};

std::pair<Fan, SupportFunction> load_fan(const CommonOpts& o) {
  FanFile ff = read_fan_file(o.fan_path);
  if (!o.psi_override.empty()) {
    if (o.psi_override.size() != ff.fan.rays.size()) {
      throw std::runtime_error("--psi needs one value per ray (" +
                               std::to_string(ff.fan.rays.size()) + ")");
    }
    return {ff.fan, to_support(o.psi_override)};
  }
  if (!ff.psi) {
    throw std::runtime_error(o.fan_path + ": no \"psi\" in file and no --psi given");
  }
  return {ff.fan, *ff.psi};
}

// ---- cohomology -------------------------------------------------------------

struct CohOpts : CommonOpts {
  std::vector<long long> l0, l1;
  std::string box;
};

int run_cohomology(const CohOpts& o) {
  auto [fan, psi] = load_fan(o);
  ToricContext ctx = make_context(fan, psi);
  size_t r = fan.rays.size();

  SupportFunction l0, l1;
  if (o.l0.empty()) {
    l0.values.assign(r, Int(0));
  } else if (o.l0.size() == r) {
    l0 = to_support(o.l0);
  } else {
    throw std::runtime_error("--l0 needs one value per ray (" + std::to_string(r) + ")");
  }
  if (o.l1.empty()) {
    l1 = psi;
  } else if (o.l1.size() == r) {
    l1 = to_support(o.l1);
  } else {
    throw std::runtime_error("--l1 needs one value per ray (" + std::to_string(r) + ")");
  }

  GradedHom gh;
  Int euler(0);
  bool certified = true;
  if (!o.box.empty()) {
    certified = false;
    auto box = parse_box(o.box, fan.dim);
    gh.diff = sub_support(l1, l0);
    IntVec u(fan.dim, Int(0));
    std::vector<long long> cur(fan.dim);
    for (int i = 0; i < fan.dim; ++i) cur[i] = box[i].first;
    bool done = false;
    while (!done) {
      for (int i = 0; i < fan.dim; ++i) u[i] = Int(cur[i]);
      CohomologyResult coh = cohomology(cech_complex(ctx, l0, l1, u));
      if (!coh.trivial()) {
        for (const auto& [deg, g] : coh.groups) {
          euler += (deg % 2 == 0 ? Int(g.free_rank) : Int(-g.free_rank));
        }
        gh.pieces[u] = std::move(coh);
      }
      int i = 0;
      for (; i < fan.dim; ++i) {
        if (cur[i] < box[i].second) {
          ++cur[i];
          break;
        }
        cur[i] = box[i].first;
      }
      done = (i == fan.dim);
    }
  } else {
    gh = graded_hom(ctx, l0, l1);
    euler = euler_characteristic(ctx, l0, l1);
  }

  std::ostringstream out;
  if (o.format == "json") {
    out << graded_hom_json(gh, euler, certified);
  } else {
    if (!certified) {
      out << "warning: weight box override in effect; enumeration not certified complete\n";
    }
    out << "difference: " << int_vec_str(gh.diff.values) << "\n";
    std::map<int, long> totals;
    for (const auto& [u, coh] : gh.pieces) {
      out << "u = " << int_vec_str(u) << ":";
      bool first = true;
      for (const auto& [deg, g] : coh.groups) {
        out << (first ? " " : ", ") << "H^" << deg << " = " << group_str(g);
        first = false;
        totals[deg] += g.free_rank;
      }
      out << "\n";
    }
    for (const auto& [deg, rank] : totals) {
      out << "total rank H^" << deg << " = " << rank << "\n";
    }
    out << "Euler characteristic: " << euler.str() << "\n";
  }
  emit(o.out_path, out.str());
  return 0;
}

// ---- amoeba -----------------------------------------------------------------

int run_amoeba(const CommonOpts& o) {
  auto [fan, psi] = load_fan(o);
  FanoReport report = fano_diagnostic(fan, psi);
  Skeleton sk;
  bool have_sk = false;
  if (fan.dim == 2) {
    sk = amoeba_skeleton_2d(report.w);
    have_sk = true;
  }

  std::ostringstream out;
  if (o.format == "svg") {
    if (!have_sk) throw std::runtime_error("svg rendering requires a 2-dimensional fan");
    out << export_svg(sk, polytope_from_support(fan, psi));
  } else if (o.format == "json") {
    out << amoeba_json(report, have_sk ? &sk : nullptr);
  } else {
    long full = 0;
    for (const Region& reg : report.all_regions) {
      if (reg.full_dim) ++full;
    }
    out << "regions: " << report.all_regions.size() << " total, " << full
        << " full-dimensional, " << report.bounded_full_dim.size() << " bounded\n";
    for (size_t i : report.bounded_full_dim) {
      out << "bounded region exponent: " << int_vec_str(report.all_regions[i].alpha) << "\n";
    }
    if (have_sk) {
      out << "skeleton: " << sk.vertices.size() << " vertices, " << sk.bounded_edges.size()
          << " bounded edges, " << sk.rays.size() << " rays\n";
    }
    bool consistent =
        !report.extra_bounded_region && report.c0_matches_polytope && report.warning.empty();
    if (consistent) {
      out << "diagnostic: Fano-consistent\n";
    } else {
      if (report.extra_bounded_region) out << "diagnostic: extra bounded region detected\n";
      if (!report.c0_matches_polytope) {
        out << "diagnostic: constant-term region differs from the moment polytope\n";
      }
      if (!report.warning.empty()) out << "warning: " << report.warning << "\n";
    }
  }
  emit(o.out_path, out.str());
  return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyOpts : CommonOpts {
  std::uint64_t seed = 42;
  int instances = 50;
  int range = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

SuiteResult verify_model_comparison(const ToricContext& ctx, int range) {
  SuiteResult res{"model-comparison", true, ""};
  size_t r = ctx.fan.rays.size();
  PatternCache pcache;
  CompareCache ccache;
  long diffs = 0, weights = 0;
  SupportFunction l0;
  l0.values.assign(r, Int(0));
  std::vector<long long> cur(r, -range);
  bool done = false;
  while (!done && res.pass) {
    SupportFunction l1;
    for (size_t i = 0; i < r; ++i) l1.values.push_back(Int(cur[i]));
    ++diffs;
    GradedHom gh = graded_hom(ctx, l0, l1, &pcache);
    for (const ChamberInfo& ch : gh.certificate) {
      for (const IntVec& u : ch.weights) {
        ModelComparison cm = compare_models(ctx, l0, l1, u, &ccache);
        ++weights;
        if (!cm.exact) {
          res.pass = false;
          res.detail = "difference " + int_vec_str(l1.values) + ", u " + int_vec_str(u) + ": " +
                       cm.discrepancy;
          break;
        }
      }
      if (!res.pass) break;
    }
    size_t i = 0;
    for (; i < r; ++i) {
      if (cur[i] < range) {
        ++cur[i];
        break;
      }
      cur[i] = -range;
    }
    done = (i == r);
  }
  if (res.pass) {
    res.detail = std::to_string(diffs) + " differences, " + std::to_string(weights) +
                 " certified weights, all exact";
  }
  return res;
}

SuiteResult verify_dg_axioms(const ToricContext& ctx, std::uint64_t seed, int instances) {
  SuiteResult res{"dg-axioms", true, ""};
  AxiomReport rep = dg_axioms_check(ctx, seed, instances);
  res.pass = rep.ok();
  std::ostringstream d;
  d << rep.instances << " instances, " << rep.d_squared_checks << " d^2, " << rep.leibniz_pairs
    << " Leibniz pairs, " << rep.assoc_triples << " associativity triples, " << rep.unit_checks
    << " unit checks, " << rep.cone_checks << " cone checks";
  if (!rep.ok()) {
    d << "; " << rep.failures << " failures";
    for (const std::string& n : rep.notes) d << "; " << n;
  }
  res.detail = d.str();
  return res;
}

// the dual-cell product relabels to the simplicial cup bit-exactly (d <= 3)
// and the intersection trichotomy is total and exclusive (d <= 4, geometric
// cross-check d <= 2)
SuiteResult verify_local_model() {
  SuiteResult res{"local-model", true, ""};
  for (int d = 0; d <= 3 && res.pass; ++d) {
    OrderedComplex oc = full_simplex(d);
    PlusSubcomplex none = full_subcomplex(oc.n_vertices, {});
    std::vector<std::vector<int>> faces;
    for (const auto& dim_list : oc.simplices) {
      for (const auto& s : dim_list) faces.push_back(s);
    }
    for (const auto& sigma : faces) {
      for (const auto& tau : faces) {
        Cochain a{{sigma, Int(1)}};
        Cochain b{{tau, Int(1)}};
        Cochain via_cells = cell_to_simp(cell_intersection_product(oc, a, b));
        Cochain via_cup = simp_cup(oc, a, b, none);
        if (via_cells != via_cup) {
          res.pass = false;
          res.detail = "cup square mismatch at d=" + std::to_string(d);
          break;
        }
      }
      if (!res.pass) break;
    }
  }
  for (int d = 0; d <= 4 && res.pass; ++d) {
    OrderedComplex oc = full_simplex(d);
    std::vector<std::vector<int>> faces;
    for (const auto& dim_list : oc.simplices) {
      for (const auto& s : dim_list) faces.push_back(s);
    }
    for (const auto& sigma : faces) {
      for (const auto& tau : faces) {
        PiResult pr = pi_intersect_collapse(oc, sigma, tau);
        int classes = (pr.tag == PiTag::empty ? 1 : 0) +
                      (pr.tag == PiTag::same_dimension ? 1 : 0) +
                      (pr.tag == PiTag::collapsed ? 1 : 0);
        bool ok = classes == 1;
        if (ok && pr.tag == PiTag::same_dimension) {
          ok = sigma.back() == tau.front();
        }
        if (ok && d <= 2) {
          bool geo = pi_cells_intersect_geometric(d, sigma, tau, Rat(1, 3));
          ok = geo == (pr.tag != PiTag::empty);
        }
        if (!ok) {
          res.pass = false;
          res.detail = "trichotomy failure at d=" + std::to_string(d);
          break;
        }
      }
      if (!res.pass) break;
    }
  }
  if (res.pass) res.detail = "cup square d<=3, trichotomy d<=4 with geometric cross-check d<=2";
  return res;
}

int run_verify(const VerifyOpts& o) {
  auto [fan, psi] = load_fan(o);
  ToricContext ctx = make_context(fan, psi);
  std::vector<SuiteResult> suites;
  suites.push_back(verify_model_comparison(ctx, o.range));
  suites.push_back(verify_dg_axioms(ctx, o.seed, o.instances));
  suites.push_back(verify_local_model());
  bool all = true;
  for (const SuiteResult& s : suites) all = all && s.pass;

  std::ostringstream out;
  if (o.format == "json") {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "verify";
    doc["seed"] = o.seed;
    json arr = json::array();
    for (const SuiteResult& s : suites) {
      json e;
      e["name"] = s.name;
      e["pass"] = s.pass;
      e["detail"] = s.detail;
      arr.push_back(e);
    }
    doc["suites"] = arr;
    doc["pass"] = all;
    out << doc.dump(2) << "\n";
  } else {
    for (const SuiteResult& s : suites) {
      out << "suite " << s.name << ": " << (s.pass ? "PASS" : "FAIL") << " (" << s.detail << ")\n";
    }
    out << "verify: " << (all ? "PASS" : "FAIL") << "\n";
  }
  emit(o.out_path, out.str());
  return all ? 0 : 1;
}

// ---- trees ------------------------------------------------------------------

struct TreesOpts {
  int d = 3;
  bool report = false;
  std::string format = "text";
  std::string out_path;
};

int run_trees(const TreesOpts& o) {
  int d = o.d;
  long total = static_cast<long>(enumerate_ribbon_trees(d, false).size());
  long trivalent = static_cast<long>(enumerate_ribbon_trees(d, true).size());
  long facets = d >= 2 ? static_cast<long>(stasheff_facets(d).size()) : 0;
  long facets_expected = d >= 2 ? d * (d - 1) / 2 - 1 : 0;

  long balance_ok = 0;
  for (const RibbonTree& t : enumerate_ribbon_trees(d, false)) {
    label_edges(t);  // throws on a balance violation
    ++balance_ok;
  }

  long walls_total = 0, walls_pass = 0;
  std::vector<std::string> wall_failures;
  if (d >= 3) {
    for (const WallCheck& w : wall_crossing_check(d)) {
      ++walls_total;
      if (w.pass) {
        ++walls_pass;
      } else {
        wall_failures.push_back(w.description);
      }
    }
  }
  ShrubBoundary sb = shrub_boundary_types(d);

  std::ostringstream out;
  if (o.format == "json") {
    json doc;
    doc["schema"] = 1;
    doc["kind"] = "trees";
    doc["d"] = d;
    doc["tree_count"] = total;
    doc["trivalent_count"] = trivalent;
    json fc;
    fc["count"] = facets;
    fc["expected"] = facets_expected;
    doc["stasheff_facets"] = fc;
    json wc;
    wc["total"] = walls_total;
    wc["pass"] = walls_pass;
    wc["failures"] = json(wall_failures);
    doc["wall_crossings"] = wc;
    doc["edge_label_balance_trees"] = balance_ok;
    json bd;
    bd["horizontal"] = json(sb.horizontal);
    bd["all_infinite_section"] = sb.all_infinite_section;
    bd["vertical"] = json(sb.vertical);
    doc["shrub_boundary"] = bd;
    out << doc.dump(2) << "\n";
  } else {
    out << "d = " << d << "\n";
    out << "ribbon trees: " << total << " total, " << trivalent << " trivalent\n";
    out << "Stasheff facets: " << facets << " (expected " << facets_expected << ": "
        << (facets == facets_expected ? "PASS" : "FAIL") << ")\n";
    if (d >= 3) {
      out << "wall crossings: " << walls_pass << "/" << walls_total << " "
          << (walls_pass == walls_total ? "PASS" : "FAIL") << "\n";
      for (const std::string& f : wall_failures) out << "  failed: " << f << "\n";
    }
    out << "edge-label balance: PASS (" << balance_ok << " trees)\n";
    out << "shrub boundary: " << sb.horizontal.size() << " horizontal strata + section, "
        << sb.vertical.size() << " vertical strata\n";
    if (o.report) {
      for (const StasheffFacet& f : stasheff_facets(d)) {
        out << "facet: d1=" << f.d1 << " d2=" << f.d2 << " i=" << f.i << "\n";
      }
      if (d >= 3) {
        for (const WallCheck& w : wall_crossing_check(d)) {
          out << "wall: " << (w.pass ? "PASS " : "FAIL ") << w.description << "\n";
        }
      }
    }
  }
  emit(o.out_path, out.str());
  bool ok = facets == facets_expected && walls_pass == walls_total;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial toric mirror toolkit"};
  app.require_subcommand(1);

  CohOpts coh;
  CLI::App* c = app.add_subcommand("cohomology", "graded Hom table for a pair of bundles");
  c->add_option("--fan", coh.fan_path, "fan JSON file")->required();
  c->add_option("--psi", coh.psi_override, "ample support values (overrides the file)")
      ->delimiter(',');
  c->add_option("--l0", coh.l0, "source bundle support values (default all zero)")->delimiter(',');
  c->add_option("--l1", coh.l1, "target bundle support values (default psi)")->delimiter(',');
  c->add_option("--box", coh.box, "weight box override lo:hi,lo:hi,... (not certified)");
  c->add_option("--format", coh.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  c->add_option("--out", coh.out_path, "output file (default stdout)");

  CommonOpts amo;
  CLI::App* a = app.add_subcommand("amoeba", "tropical skeleton, regions, Fano diagnostic");
  a->add_option("--fan", amo.fan_path, "fan JSON file")->required();
  a->add_option("--psi", amo.psi_override, "support values (overrides the file)")->delimiter(',');
  a->add_option("--format", amo.format, "text|json|svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  a->add_option("--out", amo.out_path, "output file (default stdout)");

  VerifyOpts ver;
  CLI::App* v = app.add_subcommand("verify", "model comparison, DG axioms, local model");
  v->add_option("--fan", ver.fan_path, "fan JSON file")->required();
  v->add_option("--psi", ver.psi_override, "support values (overrides the file)")->delimiter(',');
  v->add_option("--seed", ver.seed, "seed for the randomized axiom suite");
  v->add_option("--instances", ver.instances, "randomized instances")->check(CLI::PositiveNumber);
  v->add_option("--range", ver.range, "bundle coefficient range for the comparison sweep")
      ->check(CLI::NonNegativeNumber);
  v->add_option("--format", ver.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  v->add_option("--out", ver.out_path, "output file (default stdout)");

  TreesOpts tre;
  CLI::App* t = app.add_subcommand("trees", "tree enumeration, facets, wall crossings");
  t->add_option("--d", tre.d, "number of leaves")->required()->check(CLI::Range(1, 9));
  t->add_flag("--report", tre.report, "list facets and wall crossings individually");
  t->add_option("--format", tre.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  t->add_option("--out", tre.out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return run_cohomology(coh);
    if (a->parsed()) return run_amoeba(amo);
    if (v->parsed()) return run_verify(ver);
    if (t->parsed()) return run_trees(tre);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
