#include "tmc/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tmc {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return json(v.convert_to<long long>());
  }
  return json(v.str());
}

json int_vec_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

json rat_vec_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

std::string fmt4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

// vertices in counterclockwise order around the centroid, exact comparisons;
// fewer than three vertices are just sorted lexicographically
std::vector<RatVec> ordered_polygon(const std::vector<RatVec>& vs) {
  std::vector<RatVec> s = vs;
  std::sort(s.begin(), s.end());
  if (s.size() < 3) return s;
  RatVec c(2, Rat(0));
  for (const RatVec& v : s) {
    c[0] += v[0];
    c[1] += v[1];
  }
  c[0] /= Rat(static_cast<long>(s.size()));
  c[1] /= Rat(static_cast<long>(s.size()));
  auto half = [&](const RatVec& p) {
    Rat dx = p[0] - c[0];
    Rat dy = p[1] - c[1];
    if (dy > 0) return 0;
    if (dy < 0) return 1;
    return dx > 0 ? 0 : 1;
  };
  std::sort(s.begin(), s.end(), [&](const RatVec& a, const RatVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    if (cross != 0) return cross > 0;
    return a < b;
  });
  return s;
}

}  // namespace

FanFile parse_fan_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  auto fail = [&](const std::string& m) { return std::runtime_error(origin + ": " + m); };
  if (!j.is_object()) throw fail("top-level value must be an object");
  for (const char* k : {"dim", "rays", "max_cones"}) {
    if (!j.contains(k)) throw fail(std::string("missing required key \"") + k + "\"");
  }
  if (!j["dim"].is_number_integer()) throw fail("\"dim\" must be an integer");
  long long n = j["dim"].get<long long>();
  if (n < 1 || n > 16) throw fail("\"dim\" must be between 1 and 16");

  FanFile out;
  out.fan.dim = static_cast<int>(n);

  const json& rays = j["rays"];
  if (!rays.is_array() || rays.empty()) throw fail("\"rays\" must be a nonempty array");
  for (size_t i = 0; i < rays.size(); ++i) {
    const json& r = rays[i];
    if (!r.is_array() || r.size() != static_cast<size_t>(n)) {
      throw fail("\"rays\"[" + std::to_string(i) + "] must be an array of " + std::to_string(n) +
                 " integers");
    }
    IntVec v;
    for (size_t c = 0; c < r.size(); ++c) {
      if (!r[c].is_number_integer()) {
        throw fail("\"rays\"[" + std::to_string(i) + "][" + std::to_string(c) +
                   "] must be an integer");
      }
      v.push_back(Int(r[c].get<long long>()));
    }
    out.fan.rays.push_back(std::move(v));
  }

  const json& cones = j["max_cones"];
  if (!cones.is_array() || cones.empty()) throw fail("\"max_cones\" must be a nonempty array");
  for (size_t i = 0; i < cones.size(); ++i) {
    const json& c = cones[i];
    if (!c.is_array() || c.empty()) {
      throw fail("\"max_cones\"[" + std::to_string(i) + "] must be a nonempty array of ray indices");
    }
    std::vector<int> idx;
    for (size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_number_integer()) {
        throw fail("\"max_cones\"[" + std::to_string(i) + "][" + std::to_string(k) +
                   "] must be an integer");
      }
      long long x = c[k].get<long long>();
      if (x < 0 || x >= static_cast<long long>(out.fan.rays.size())) {
        throw fail("\"max_cones\"[" + std::to_string(i) + "][" + std::to_string(k) +
                   "] is not a valid ray index (have " + std::to_string(out.fan.rays.size()) +
                   " rays)");
      }
      idx.push_back(static_cast<int>(x));
    }
    out.fan.max_cones.push_back(std::move(idx));
  }

  if (j.contains("psi")) {
    const json& p = j["psi"];
    if (!p.is_array() || p.size() != out.fan.rays.size()) {
      throw fail("\"psi\" must be an array with one integer per ray (" +
                 std::to_string(out.fan.rays.size()) + ")");
    }
    SupportFunction sf;
    for (size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_number_integer()) {
        throw fail("\"psi\"[" + std::to_string(i) + "] must be an integer");
      }
      sf.values.push_back(Int(p[i].get<long long>()));
    }
    out.psi = std::move(sf);
  }
  return out;
}

FanFile read_fan_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_fan_json(ss.str(), path);
}

std::string fan_to_json(const Fan& fan, const std::optional<SupportFunction>& psi) {
  json doc;
  doc["dim"] = fan.dim;
  json rays = json::array();
  for (const IntVec& r : fan.rays) rays.push_back(int_vec_json(r));
  doc["rays"] = rays;
  json cones = json::array();
  for (const std::vector<int>& c : fan.max_cones) cones.push_back(json(c));
  doc["max_cones"] = cones;
  if (psi) doc["psi"] = int_vec_json(psi->values);
  return doc.dump(2) + "\n";
}

std::string rat_str(const Rat& r) { return r.str(); }

std::string graded_hom_json(const GradedHom& gh, const Int& euler, bool certified) {
  json doc;
  doc["schema"] = 1;
  doc["kind"] = "cohomology";
  doc["certified"] = certified;
  doc["difference"] = int_vec_json(gh.diff.values);
  json pieces = json::array();
  std::map<int, long> totals;
  for (const auto& [u, coh] : gh.pieces) {
    json p;
    p["u"] = int_vec_json(u);
    json gs = json::array();
    for (const auto& [deg, g] : coh.groups) {
      json e;
      e["degree"] = deg;
      e["rank"] = g.free_rank;
      json tor = json::array();
      for (const Int& t : g.torsion) tor.push_back(t.str());
      e["torsion"] = tor;
      gs.push_back(e);
      totals[deg] += g.free_rank;
    }
    p["groups"] = gs;
    pieces.push_back(p);
  }
  doc["pieces"] = pieces;
  json tr = json::object();
  for (const auto& [deg, r] : totals) tr[std::to_string(deg)] = r;
  doc["total_ranks"] = tr;
  doc["euler_characteristic"] = int_json(euler);
  return doc.dump(2) + "\n";
}

std::string amoeba_json(const FanoReport& report, const Skeleton* sk) {
  json doc;
  doc["schema"] = 1;
  doc["kind"] = "amoeba";
  long full = 0;
  for (const Region& r : report.all_regions) {
    if (r.full_dim) ++full;
  }
  json reg;
  reg["total"] = report.all_regions.size();
  reg["full_dim"] = full;
  reg["bounded_full_dim"] = report.bounded_full_dim.size();
  doc["regions"] = reg;
  json ba = json::array();
  for (size_t i : report.bounded_full_dim) ba.push_back(int_vec_json(report.all_regions[i].alpha));
  doc["bounded_alphas"] = ba;
  json diag;
  diag["fano_consistent"] =
      !report.extra_bounded_region && report.c0_matches_polytope && report.warning.empty();
  diag["extra_bounded_region"] = report.extra_bounded_region;
  diag["c0_matches_polytope"] = report.c0_matches_polytope;
  diag["warning"] = report.warning;
  doc["diagnostic"] = diag;
  if (sk != nullptr) {
    json s;
    json vs = json::array();
    for (const RatVec& v : sk->vertices) vs.push_back(rat_vec_json(v));
    s["vertices"] = vs;
    json es = json::array();
    for (const auto& [a, b] : sk->bounded_edges) {
      json e = json::array();
      e.push_back(rat_vec_json(a));
      e.push_back(rat_vec_json(b));
      es.push_back(e);
    }
    s["bounded_edges"] = es;
    json rs = json::array();
    for (const auto& [origin, dir] : sk->rays) {
      json r;
      r["origin"] = rat_vec_json(origin);
      r["direction"] = int_vec_json(dir);
      rs.push_back(r);
    }
    s["rays"] = rs;
    doc["skeleton"] = s;
  }
  return doc.dump(2) + "\n";
}

std::string export_svg(const Skeleton& sk, const Polytope& q) {
  if (q.dim != 2) throw std::invalid_argument("svg rendering requires ambient dimension 2");
  std::vector<RatVec> pts;
  for (const RatVec& v : sk.vertices) pts.push_back(v);
  for (const auto& [a, b] : sk.bounded_edges) {
    pts.push_back(a);
    pts.push_back(b);
  }
  for (const auto& [o, d] : sk.rays) pts.push_back(o);
  for (const RatVec& v : q.vertices) pts.push_back(v);

  Rat x0(-1), x1(1), y0(-1), y1(1);
  if (!pts.empty()) {
    x0 = x1 = pts[0][0];
    y0 = y1 = pts[0][1];
    for (const RatVec& p : pts) {
      x0 = std::min(x0, p[0]);
      x1 = std::max(x1, p[0]);
      y0 = std::min(y0, p[1]);
      y1 = std::max(y1, p[1]);
    }
    x0 -= 1;
    x1 += 1;
    y0 -= 1;
    y1 += 1;
  }

  const double width = 640.0;
  double sx = width / to_double(x1 - x0);
  double height = to_double(y1 - y0) * sx;
  auto X = [&](const Rat& x) { return fmt4(to_double(x - x0) * sx); };
  auto Y = [&](const Rat& y) { return fmt4(to_double(y1 - y) * sx); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" << fmt4(height)
      << "\" viewBox=\"0 0 640 " << fmt4(height) << "\">\n";
  svg << "<!-- viewport: [" << rat_str(x0) << "," << rat_str(x1) << "] x [" << rat_str(y0) << ","
      << rat_str(y1) << "] (vertex bounding box + unit margin); y axis points up -->\n";

  if (!q.vertices.empty()) {
    std::vector<RatVec> poly = ordered_polygon(q.vertices);
    svg << "<polygon class=\"polytope\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\" "
           "points=\"";
    for (size_t i = 0; i < poly.size(); ++i) {
      if (i) svg << " ";
      svg << X(poly[i][0]) << "," << Y(poly[i][1]);
    }
    svg << "\"/>\n";
  }

  for (const auto& [a, b] : sk.bounded_edges) {
    svg << "<line class=\"edge\" stroke=\"#d62728\" stroke-width=\"2\" x1=\"" << X(a[0])
        << "\" y1=\"" << Y(a[1]) << "\" x2=\"" << X(b[0]) << "\" y2=\"" << Y(b[1]) << "\"/>\n";
  }

  for (const auto& [o, d] : sk.rays) {
    // largest t >= 0 with o + t d still inside the viewport, exact
    bool has = false;
    Rat tmax(0);
    for (int i = 0; i < 2; ++i) {
      if (d[i] == 0) continue;
      Rat bound = d[i] > 0 ? (i == 0 ? x1 : y1) : (i == 0 ? x0 : y0);
      Rat t = Rat(bound - Rat(o[i])) / Rat(d[i]);
      if (!has || t < tmax) {
        tmax = t;
        has = true;
      }
    }
    if (!has || tmax < 0) continue;
    Rat ex = o[0] + tmax * Rat(d[0]);
    Rat ey = o[1] + tmax * Rat(d[1]);
    svg << "<line class=\"ray\" stroke=\"#1f77b4\" stroke-width=\"2\" x1=\"" << X(o[0])
        << "\" y1=\"" << Y(o[1]) << "\" x2=\"" << X(ex) << "\" y2=\"" << Y(ey) << "\"/>\n";
  }

  for (const RatVec& v : sk.vertices) {
    svg << "<circle class=\"vertex\" fill=\"#000000\" r=\"3\" cx=\"" << X(v[0]) << "\" cy=\""
        << Y(v[1]) << "\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tmc
