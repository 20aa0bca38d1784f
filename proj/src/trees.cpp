#include "tmc/trees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tmc {

namespace {

// recursive planar shape: empty kids = leaf
struct Shape {
  std::vector<Shape> kids;
};

// compositions of n into parts >= 1
void compositions(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
}

std::vector<Shape> shapes(int k, bool trivalent_only) {
  if (k == 1) return {Shape{}};
  std::vector<Shape> out;
  std::vector<std::vector<int>> comps;
  compositions(k, comps);
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    if (trivalent_only && comp.size() != 2) continue;
    // cartesian product of child shape choices
    std::vector<std::vector<Shape>> choices;
    for (int part : comp) choices.push_back(shapes(part, trivalent_only));
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
      Shape s;
      for (size_t c = 0; c < choices.size(); ++c) s.kids.push_back(choices[c][idx[c]]);
      out.push_back(std::move(s));
      size_t c = 0;
      while (c < choices.size()) {
        if (++idx[c] < choices[c].size()) break;
        idx[c] = 0;
        ++c;
      }
      if (c == choices.size()) break;
    }
  }
  return out;
}

void flatten_into(const Shape& s, int parent, RibbonTree& t, int& next_leaf) {
  int id = (int)t.vertices.size();
  t.vertices.push_back(RibbonTree::Vertex{parent, {}, 0});
  t.edges.push_back(EdgeLen{false, Rat(1)});
  if (parent >= 0) t.vertices[parent].children.push_back(id);
  if (s.kids.empty()) {
    t.vertices[id].leaf_index = ++next_leaf;
  } else {
    for (const Shape& kid : s.kids) flatten_into(kid, id, t, next_leaf);
  }
}

RibbonTree flatten(const Shape& s, int d) {
  RibbonTree t;
  t.d = d;
  int next_leaf = 0;
  flatten_into(s, -1, t, next_leaf);
  t.edges[0].infinite = true;  // outgoing edge
  t.edges[0].length = 0;
  return t;
}

Shape resolve_quad(const Shape& s, bool group_left, bool& found) {
  Shape out;
  if (!found && s.kids.size() == 3) {
    found = true;
    Shape inner;
    if (group_left) {
      inner.kids = {s.kids[0], s.kids[1]};
      out.kids = {inner, s.kids[2]};
    } else {
      inner.kids = {s.kids[1], s.kids[2]};
      out.kids = {s.kids[0], inner};
    }
    return out;
  }
  for (const Shape& kid : s.kids) {
    Shape r = kid.kids.empty() ? kid : resolve_quad(kid, group_left, found);
    out.kids.push_back(std::move(r));
  }
  return out;
}

int leaf_count(const Shape& s) {
  if (s.kids.empty()) return 1;
  int n = 0;
  for (const Shape& kid : s.kids) n += leaf_count(kid);
  return n;
}

}  // namespace

bool RibbonTree::trivalent() const {
  for (const Vertex& v : vertices)
    if (!v.children.empty() && v.children.size() != 2) return false;
  return true;
}

void validate_tree(const RibbonTree& t) {
  const int nv = (int)t.vertices.size();
  if (nv == 0 || t.edges.size() != t.vertices.size())
    throw std::invalid_argument("tree: vertex/edge count mismatch");
  if (t.vertices[0].parent != -1) throw std::invalid_argument("tree: vertex 0 must be the node");
  for (int v = 1; v < nv; ++v) {
    int p = t.vertices[v].parent;
    if (p < 0 || p >= nv) throw std::invalid_argument("tree: bad parent");
    const auto& ch = t.vertices[p].children;
    if (std::find(ch.begin(), ch.end(), v) == ch.end())
      throw std::invalid_argument("tree: child/parent mismatch");
  }
  int leaves = 0;
  for (int v = 0; v < nv; ++v) {
    const auto& vx = t.vertices[v];
    if (vx.children.empty()) {
      ++leaves;
      if (vx.leaf_index < 1 || vx.leaf_index > t.d)
        throw std::invalid_argument("tree: leaf index out of range");
    } else if (vx.children.size() < 2) {
      throw std::invalid_argument("tree: internal vertex with fewer than two children");
    }
    for (int c : vx.children)
      if (c <= 0 || c >= nv || t.vertices[c].parent != v)
        throw std::invalid_argument("tree: broken child link");
  }
  if (leaves != t.d) throw std::invalid_argument("tree: leaf count != d");
  // planar numbering: depth-first left-to-right order must read 1..d
  int expect = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (t.vertices[v].children.empty()) {
      if (t.vertices[v].leaf_index != ++expect)
        throw std::invalid_argument("tree: leaves not numbered in planar order");
      return;
    }
    for (int c : t.vertices[v].children) self(self, c);
  };
  dfs(dfs, 0);
}

std::vector<RibbonTree> enumerate_ribbon_trees(int d, bool trivalent_only) {
  if (d < 2) throw std::invalid_argument("enumerate_ribbon_trees: d must be at least 2");
  std::vector<RibbonTree> out;
  for (const Shape& s : shapes(d, trivalent_only)) {
    if (s.kids.empty()) continue;  // bare leaf cannot occur for d >= 2
    out.push_back(flatten(s, d));
  }
  return out;
}

std::vector<StasheffFacet> stasheff_facets(int d) {
  if (d < 2) throw std::invalid_argument("stasheff_facets: d must be at least 2");
  std::vector<StasheffFacet> out;
  for (int d1 = 2; d1 <= d - 1; ++d1) {
    int d2 = d + 1 - d1;
    for (int i = 1; i <= d1; ++i) out.push_back(StasheffFacet{d1, d2, i});
  }
  return out;
}

std::vector<EdgeLabel> label_edges(const RibbonTree& t) {
  validate_tree(t);
  const int nv = (int)t.vertices.size();
  std::vector<int> lo(nv, 0), hi(nv, 0);
  auto dfs = [&](auto&& self, int v) -> void {
    if (t.vertices[v].children.empty()) {
      lo[v] = hi[v] = t.vertices[v].leaf_index;
      return;
    }
    for (int c : t.vertices[v].children) self(self, c);
    lo[v] = lo[t.vertices[v].children.front()];
    hi[v] = hi[t.vertices[v].children.back()];
  };
  dfs(dfs, 0);
  // balance: children intervals telescope into the outgoing interval
  for (int v = 0; v < nv; ++v) {
    const auto& ch = t.vertices[v].children;
    for (size_t c = 0; c + 1 < ch.size(); ++c)
      if (hi[ch[c]] + 1 != lo[ch[c + 1]])
        throw std::logic_error("label_edges: edge labels do not telescope");
  }
  std::vector<EdgeLabel> labels(nv);
  for (int v = 0; v < nv; ++v) labels[v] = EdgeLabel{lo[v] - 1, hi[v]};
  return labels;
}

int dexterity(const RibbonTree& t, int e) {
  if (!t.trivalent()) throw std::invalid_argument("dexterity: tree must be trivalent");
  if (e < 0 || e >= (int)t.vertices.size()) throw std::invalid_argument("dexterity: no such edge");
  int r = 0;
  int cur = e;
  while (cur != 0) {
    int p = t.vertices[cur].parent;
    // ascending from the left child is a right turn
    if (t.vertices[p].children.at(0) == cur) ++r;
    cur = p;
  }
  return r;
}

ShrubOrientation shrub_orientation(const RibbonTree& t) {
  validate_tree(t);
  if (!t.trivalent()) throw std::invalid_argument("shrub_orientation: tree must be trivalent");
  // leaf vertex per incoming index
  std::vector<int> leaf_vertex(t.d + 1, -1);
  for (int v = 0; v < (int)t.vertices.size(); ++v)
    if (t.is_leaf(v)) leaf_vertex[t.vertices[v].leaf_index] = v;
  ShrubOrientation out;
  std::set<int> used;
  for (int i = 1; i <= t.d; ++i) {
    // path from the node up to leaf i, as edge ids ordered from the node
    std::vector<int> path;
    for (int cur = leaf_vertex[i]; cur != 0; cur = t.vertices[cur].parent) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    for (int e : path) {
      if (i >= 2 && t.is_leaf(e)) continue;  // incoming edges enter only through i = 1
      if (used.count(e)) continue;
      used.insert(e);
      out.edge_order.push_back(e);
      if (dexterity(t, e) % 2 == 1) out.sign = -out.sign;
    }
  }
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = (size_t)perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

std::vector<WallCheck> wall_crossing_check(int d) {
  if (d < 3) throw std::invalid_argument("wall_crossing_check: d must be at least 3");
  std::vector<WallCheck> out;
  for (const Shape& s : shapes(d, false)) {
    // exactly one quadrivalent vertex (three children), all others trivalent
    int quads = 0;
    bool ok_shape = true;
    auto scan = [&](auto&& self, const Shape& sh) -> void {
      if (sh.kids.empty()) return;
      if (sh.kids.size() == 3)
        ++quads;
      else if (sh.kids.size() != 2)
        ok_shape = false;
      for (const Shape& kid : sh.kids) self(self, kid);
    };
    scan(scan, s);
    if (!ok_shape || quads != 1) continue;

    bool found_l = false, found_r = false;
    RibbonTree tl = flatten(resolve_quad(s, true, found_l), d);
    RibbonTree tr = flatten(resolve_quad(s, false, found_r), d);
    ShrubOrientation ol = shrub_orientation(tl);
    ShrubOrientation orr = shrub_orientation(tr);

    auto labels_of = [](const RibbonTree& t, const std::vector<int>& order) {
      std::vector<EdgeLabel> all = label_edges(t);
      std::vector<std::pair<int, int>> out_l;
      for (int e : order) out_l.push_back({all[e].j, all[e].i});
      return out_l;
    };
    std::vector<std::pair<int, int>> ll = labels_of(tl, ol.edge_order);
    std::vector<std::pair<int, int>> lr = labels_of(tr, orr.edge_order);
    // the resolved edges carry the only labels not shared by both lists
    std::set<std::pair<int, int>> set_l(ll.begin(), ll.end()), set_r(lr.begin(), lr.end());
    std::pair<int, int> alpha_l{-1, -1}, alpha_r{-1, -1};
    for (const auto& lab : ll)
      if (!set_r.count(lab)) alpha_l = lab;
    for (const auto& lab : lr)
      if (!set_l.count(lab)) alpha_r = lab;
    WallCheck wc;
    wc.description = "d=" + std::to_string(d) + " wall with new edges (" +
                     std::to_string(alpha_l.first) + "," + std::to_string(alpha_l.second) +
                     ")/(" + std::to_string(alpha_r.first) + "," + std::to_string(alpha_r.second) +
                     ")";
    if (alpha_l.first < 0 || alpha_r.first < 0 || ll.size() != lr.size()) {
      wc.pass = false;
      out.push_back(std::move(wc));
      continue;
    }
    // substitute the collapsed-edge differential (one sign flip), then align
    std::map<std::pair<int, int>, int> pos_r;
    for (size_t p = 0; p < lr.size(); ++p) pos_r[lr[p]] = (int)p;
    std::vector<int> perm(ll.size());
    bool aligned = true;
    for (size_t p = 0; p < ll.size(); ++p) {
      std::pair<int, int> key = (ll[p] == alpha_l) ? alpha_r : ll[p];
      auto it = pos_r.find(key);
      if (it == pos_r.end()) {
        aligned = false;
        break;
      }
      perm[p] = it->second;
    }
    wc.pass = aligned && ol.sign * (-1) * permutation_sign(perm) == orr.sign;
    out.push_back(std::move(wc));
  }
  return out;
}

int maltese(int i, const std::vector<long>& degs) {
  if (i < 0 || (size_t)i > degs.size()) throw std::invalid_argument("maltese: bad prefix length");
  long s = i;
  for (int j = 0; j < i; ++j) s += degs[j];
  return (int)(((s % 2) + 2) % 2);
}

int sigma_twist(long deg_q, const std::vector<long>& degs_p, long dim_t, long m) {
  const long d = (long)degs_p.size();
  long sum = 0;
  long prefix = 0;
  for (long j = 0; j <= d; ++j) {
    sum += deg_q + prefix;
    if (j < d) prefix += degs_p[(size_t)j];
  }
  long total = (m + 1) * (sum + dim_t * (1 + m + d + deg_q));
  return (int)(((total % 2) + 2) % 2);
}

ShrubBoundary shrub_boundary_types(int d) {
  if (d < 1) throw std::invalid_argument("shrub_boundary_types: d must be positive");
  ShrubBoundary out;
  std::vector<std::vector<int>> comps;
  compositions(d, comps);
  for (const auto& comp : comps) {
    if ((int)comp.size() < d) out.horizontal.push_back(comp);
    bool nontrivial = false;
    for (int part : comp)
      if (part != 1) nontrivial = true;
    if (nontrivial) out.vertical.push_back(comp);
  }
  return out;
}

Shrub make_shrub(RibbonTree t) {
  validate_tree(t);
  if (!t.edges[0].infinite) throw std::invalid_argument("make_shrub: outgoing edge must be infinite");
  for (int v = 1; v < (int)t.vertices.size(); ++v)
    if (t.is_leaf(v) && t.edges[v].infinite)
      throw std::invalid_argument("make_shrub: incoming edges must be finite");
  Shrub s;
  s.tree = std::move(t);
  // distance from each incoming vertex to the node
  bool all_finite = true;
  std::vector<Rat> depths;
  for (int v = 1; v < (int)s.tree.vertices.size(); ++v) {
    if (!s.tree.is_leaf(v)) continue;
    Rat depth = 0;
    for (int cur = v; cur != 0; cur = s.tree.vertices[cur].parent) {
      if (s.tree.edges[cur].infinite) {
        all_finite = false;
        break;
      }
      depth += s.tree.edges[cur].length;
    }
    depths.push_back(depth);
  }
  s.equidistant = all_finite;
  for (size_t i = 1; i < depths.size() && s.equidistant; ++i)
    if (depths[i] != depths[0]) s.equidistant = false;
  return s;
}

void assign_equidistant_lengths(RibbonTree& t) {
  validate_tree(t);
  const int nv = (int)t.vertices.size();
  std::vector<int> depth(nv, 0);  // internal edges from the node
  int max_depth = 0;
  for (int v = 1; v < nv; ++v) {
    depth[v] = depth[t.vertices[v].parent] + 1;
    if (!t.is_leaf(v)) max_depth = std::max(max_depth, depth[v]);
  }
  t.edges[0].infinite = true;
  t.edges[0].length = 0;
  for (int v = 1; v < nv; ++v) {
    t.edges[v].infinite = false;
    if (t.is_leaf(v))
      t.edges[v].length = Rat(1 + max_depth - depth[t.vertices[v].parent]);
    else
      t.edges[v].length = 1;
  }
}

}  // namespace tmc
