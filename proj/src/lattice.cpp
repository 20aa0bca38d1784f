#include "tmc/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tmc {

namespace {

void check_structure(const Fan& fan) {
  if (fan.dim <= 0) throw std::invalid_argument("fan: dimension must be positive");
  std::set<IntVec> seen;
  for (const IntVec& r : fan.rays) {
    if ((int)r.size() != fan.dim) throw std::invalid_argument("fan: ray of wrong dimension");
    if (is_zero_vec(r)) throw std::invalid_argument("fan: zero ray");
    if (vec_gcd(r) != 1) throw std::invalid_argument("fan: non-primitive ray");
    if (!seen.insert(r).second) throw std::invalid_argument("fan: duplicate ray");
  }
  if (fan.max_cones.empty()) throw std::invalid_argument("fan: no maximal cones");
  for (const auto& cone : fan.max_cones) {
    if ((int)cone.size() != fan.dim)
      throw std::invalid_argument("fan: maximal cone ray count differs from dimension");
    std::set<int> dedupe(cone.begin(), cone.end());
    if ((int)dedupe.size() != fan.dim) throw std::invalid_argument("fan: repeated ray in cone");
    for (int i : cone)
      if (i < 0 || i >= (int)fan.rays.size()) throw std::invalid_argument("fan: ray index out of range");
  }
}

std::vector<IntVec> cone_matrix(const Fan& fan, const std::vector<int>& cone) {
  std::vector<IntVec> m;
  for (int i : cone) m.push_back(fan.rays[i]);
  return m;
}

// walls: (dim-1)-subsets of maximal cones, as sorted ray index lists
std::map<std::vector<int>, std::vector<int>> wall_map(const Fan& fan) {
  std::map<std::vector<int>, std::vector<int>> walls;  // wall -> cone indices
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    std::vector<int> cone = fan.max_cones[c];
    std::sort(cone.begin(), cone.end());
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> wall;
      for (size_t i = 0; i < cone.size(); ++i)
        if (i != drop) wall.push_back(cone[i]);
      walls[wall].push_back((int)c);
    }
  }
  return walls;
}

// linear functional m with <m, v_rho> = psi_rho on the cone's rays
std::optional<RatVec> cone_functional(const Fan& fan, const SupportFunction& psi,
                                      const std::vector<int>& cone) {
  std::vector<IntVec> a;
  IntVec rhs;
  for (int i : cone) {
    a.push_back(fan.rays[i]);
    rhs.push_back(psi.values[i]);
  }
  return solve_linear(a, rhs);
}

}  // namespace

FanDiagnostics validate_fan(const Fan& fan, const SupportFunction& psi) {
  check_structure(fan);
  if (psi.values.size() != fan.rays.size())
    throw std::invalid_argument("support function: one value per ray required");

  FanDiagnostics d;

  d.smooth = true;
  for (const auto& cone : fan.max_cones) {
    Int det = det_int(cone_matrix(fan, cone));
    if (abs(det) != 1) {
      d.smooth = false;
      break;
    }
  }

  // completeness surrogate: every wall shared by exactly two maximal cones,
  // adjacency graph connected
  auto walls = wall_map(fan);
  d.complete = true;
  std::vector<std::vector<int>> adj(fan.max_cones.size());
  for (const auto& [wall, cones] : walls) {
    if (cones.size() != 2) {
      d.complete = false;
      break;
    }
    adj[cones[0]].push_back(cones[1]);
    adj[cones[1]].push_back(cones[0]);
  }
  if (d.complete) {
    std::vector<bool> seen(fan.max_cones.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int o : adj[c])
        if (!seen[o]) {
          seen[o] = true;
          stack.push_back(o);
        }
    }
    for (bool s : seen)
      if (!s) d.complete = false;
  }

  // strict convexity, wall-local: the functional of each cone undercuts psi on
  // the opposite ray of the neighbouring cone
  d.strictly_convex = d.complete;
  if (d.strictly_convex) {
    for (const auto& [wall, cones] : walls) {
      for (int side = 0; side < 2 && d.strictly_convex; ++side) {
        int c0 = cones[side], c1 = cones[1 - side];
        auto m = cone_functional(fan, psi, fan.max_cones[c0]);
        if (!m) {
          d.strictly_convex = false;
          break;
        }
        // opposite ray: the ray of c1 not on the wall
        for (int r : fan.max_cones[c1]) {
          if (std::find(wall.begin(), wall.end(), r) != wall.end()) continue;
          if (!(dot_rat(*m, fan.rays[r]) < Rat(psi.values[r]))) d.strictly_convex = false;
        }
      }
      if (!d.strictly_convex) break;
    }
  }
  return d;
}

IneqSystem Polytope::inequalities() const {
  IneqSystem sys;
  sys.dim = dim;
  for (size_t i = 0; i < normals.size(); ++i) sys.add(normals[i], bounds[i]);
  return sys;
}

Polytope polytope_from_support(const Fan& fan, const SupportFunction& psi) {
  check_structure(fan);
  if (psi.values.size() != fan.rays.size())
    throw std::invalid_argument("support function: one value per ray required");
  Polytope p;
  p.dim = fan.dim;
  p.normals = fan.rays;
  p.bounds = psi.values;

  auto satisfies_all = [&](const RatVec& u) {
    for (size_t i = 0; i < p.normals.size(); ++i)
      if (dot_rat(u, p.normals[i]) > Rat(p.bounds[i])) return false;
    return true;
  };

  std::vector<RatVec> verts;
  std::vector<int> vert_cone;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto u = cone_functional(fan, psi, fan.max_cones[c]);
    if (!u || !satisfies_all(*u)) continue;
    bool dup = false;
    for (const RatVec& w : verts)
      if (w == *u) {
        dup = true;
        break;
      }
    if (!dup) {
      verts.push_back(*u);
      vert_cone.push_back((int)c);
    }
  }
  p.vertices = std::move(verts);
  p.vertex_cone = std::move(vert_cone);
  p.feasible = !p.vertices.empty();
  if (!p.feasible && fm_feasible(p.inequalities()))
    throw std::runtime_error("polytope_from_support: nonempty polytope with no cone-cut vertex");
  return p;
}

bool FacePoset::leq(int sub, int sup) const {
  const auto& a = faces.at(sub).vertex_ids;
  const auto& b = faces.at(sup).vertex_ids;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> FacePoset::facets() const {
  std::vector<int> out;
  int top_dim = faces.at(top_id).dim;
  for (const Face& f : faces)
    if (f.dim == top_dim - 1) out.push_back(f.id);
  return out;
}

FacePoset face_poset(const Polytope& p) {
  if (!p.feasible || p.vertices.empty())
    throw std::invalid_argument("face_poset: empty polytope");

  const size_t nv = p.vertices.size();
  // active inequality sets per vertex
  std::vector<std::set<int>> active(nv);
  for (size_t v = 0; v < nv; ++v)
    for (size_t i = 0; i < p.normals.size(); ++i)
      if (dot_rat(p.vertices[v], p.normals[i]) == Rat(p.bounds[i])) active[v].insert((int)i);

  // faces are cut out by intersections of vertex active sets; close under
  // pairwise intersection, then canonicalize by vertex set
  std::set<std::set<int>> act_sets;
  for (const auto& a : active) act_sets.insert(a);
  act_sets.insert(std::set<int>{});  // the whole polytope
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<int>> snapshot(act_sets.begin(), act_sets.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::set<int> inter;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                              snapshot[j].end(), std::inserter(inter, inter.begin()));
        if (act_sets.insert(inter).second) grew = true;
      }
  }

  std::set<std::vector<int>> vertex_sets;
  for (const auto& s : act_sets) {
    std::vector<int> vs;
    for (size_t v = 0; v < nv; ++v)
      if (std::includes(active[v].begin(), active[v].end(), s.begin(), s.end()))
        vs.push_back((int)v);
    if (!vs.empty()) vertex_sets.insert(vs);
  }

  std::vector<Face> faces;
  for (const auto& vs : vertex_sets) {
    Face f;
    f.vertex_ids = vs;
    // canonical active set: inequalities tight on every vertex of the face
    std::set<int> act = active[vs[0]];
    for (size_t k = 1; k < vs.size(); ++k) {
      std::set<int> inter;
      std::set_intersection(act.begin(), act.end(), active[vs[k]].begin(), active[vs[k]].end(),
                            std::inserter(inter, inter.begin()));
      act = std::move(inter);
    }
    f.active.assign(act.begin(), act.end());
    std::vector<RatVec> pts;
    for (int v : vs) pts.push_back(p.vertices[v]);
    f.dim = affine_rank(pts);
    faces.push_back(std::move(f));
  }

  // total order refining dimension: (dim, lex on vertex ids)
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  FacePoset fp;
  fp.ambient_dim = p.dim;
  for (size_t i = 0; i < faces.size(); ++i) {
    faces[i].id = (int)i;
    fp.faces.push_back(faces[i]);
  }
  fp.top_id = (int)faces.size() - 1;
  // the top face is the full vertex set (unique maximal element)
  if (fp.faces[fp.top_id].vertex_ids.size() != nv)
    throw std::logic_error("face_poset: top face does not carry all vertices");
  return fp;
}

std::vector<IntVec> lattice_points(const Polytope& p) {
  if (!p.feasible) {
    // distinguish genuinely empty from unbounded-empty inputs
    if (p.vertices.empty()) return {};
  }
  IneqSystem sys = p.inequalities();
  if (!fm_bounded(sys)) throw std::invalid_argument("lattice_points: unbounded polyhedron");
  return integer_points(sys);
}

bool BoundaryPattern::any_positive() const {
  for (bool b : positive)
    if (b) return true;
  return false;
}

BoundaryPattern h_function(const Fan& fan, const SupportFunction& L, const IntVec& u) {
  if (L.values.size() != fan.rays.size())
    throw std::invalid_argument("h_function: bundle and fan mismatch");
  if ((int)u.size() != fan.dim) throw std::invalid_argument("h_function: weight dimension mismatch");
  BoundaryPattern bp;
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    Int h = dot(u, fan.rays[i]) - L.values[i];
    bp.positive.push_back(h > 0);
    bp.values.push_back(std::move(h));
  }
  return bp;
}

bool face_in_plus_boundary(const Face& tau, const std::vector<bool>& positive) {
  for (int i : tau.active)
    if (positive.at(i)) return true;
  return false;
}

SupportFunction sub_support(const SupportFunction& a, const SupportFunction& b) {
  return SupportFunction{vec_sub(a.values, b.values)};
}

SupportFunction add_support(const SupportFunction& a, const SupportFunction& b) {
  return SupportFunction{vec_add(a.values, b.values)};
}

}  // namespace tmc
