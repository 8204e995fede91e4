#pragma once

// Explicit graph model of aligned cubic trees.  Vertices have degree 1
// (leaf) or 3 (node); every directed edge carries a direction d in Z6
// meaning the angle 270 + 60 d degrees counterclockwise, so d = 0 points
// South and opposite half-edges differ by 3.  At a node the three outgoing
// directions are {d, d+2, d+4}: all angles are 120 degrees and the cyclic
// counterclockwise order of incident edges is the order by direction.
//
// The worm walk ties the model to coding sequences: starting at the root
// leaf, after arriving at a vertex along an edge the worm departs along the
// next incident edge counterclockwise.  This visits the leaves in preorder
// and traverses every edge exactly twice.

#include <ctree/code.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctree {

inline int dir_mod6(int d) { return ((d % 6) + 6) % 6; }
inline int dir_reverse(int d) { return dir_mod6(d + 3); }

struct Ctree {
  struct Half {
    int to;
    int dir;  // direction of this outgoing half-edge
  };
  std::vector<std::vector<Half>> adj;  // per vertex, sorted by dir
  int root = -1;                       // designated root leaf, -1 if unrooted

  int vertex_count() const { return static_cast<int>(adj.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool is_leaf(int v) const { return degree(v) == 1; }

  int node_count() const {
    int n = 0;
    for (int v = 0; v < vertex_count(); ++v)
      if (degree(v) == 3) ++n;
    return n;
  }

  int new_vertex() {
    adj.emplace_back();
    return vertex_count() - 1;
  }

  void add_edge(int v, int w, int dir_vw) {
    adj[v].push_back({w, dir_mod6(dir_vw)});
    adj[w].push_back({v, dir_reverse(dir_vw)});
    auto by_dir = [](const Half& a, const Half& b) { return a.dir < b.dir; };
    std::sort(adj[v].begin(), adj[v].end(), by_dir);
    std::sort(adj[w].begin(), adj[w].end(), by_dir);
  }

  int dir_between(int v, int w) const {
    for (const Half& h : adj[v])
      if (h.to == w) return h.dir;
    throw std::invalid_argument("dir_between: vertices are not adjacent");
  }

  // Next incident edge counterclockwise after direction d (the worm rule).
  const Half& next_ccw(int v, int d) const {
    for (const Half& h : adj[v])
      if (h.dir > d) return h;
    return adj[v].front();
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < vertex_count(); ++v)
      for (const Half& h : adj[v])
        if (v < h.to) out.emplace_back(v, h.to);
    return out;
  }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
      if (is_leaf(v)) out.push_back(v);
    return out;
  }
};

// Build the rooted tree whose worm walk reproduces the code.  Vertex 0 is
// the root leaf; the remaining vertices appear in order of first visit.
inline Ctree from_code(const CtreeCode& code) {
  if (!is_valid_code(code))
    throw std::invalid_argument("from_code: invalid code " + format_code(code));
  Ctree t;
  if (code.is_edge_tree()) {
    t.new_vertex();
    t.new_vertex();
    t.add_edge(0, 1, code.rotation);
    t.root = 0;
    return t;
  }

  const std::vector<int>& u = code.gaps;
  const int n = code.node_count();
  t.root = t.new_vertex();
  int first = t.new_vertex();
  t.add_edge(t.root, first, code.rotation);

  struct Frame {
    int vertex;
    int dir_in;  // direction parent -> vertex
    int children = 0;
  };
  std::vector<Frame> stack{{first, code.rotation}};
  int gap = 0;
  long budget = u[0] + 2 - 1;  // root -> first already consumed one edge
  bool arrived_new = true;

  auto descend = [&](Frame& f) {
    // First child departs at dir_in + 5, second at dir_in + 1 (the fan at
    // the node is {dir_in + 3, dir_in + 5, dir_in + 1} in ccw order).
    int dir = dir_mod6(f.dir_in + (f.children == 0 ? 5 : 1));
    int child = t.new_vertex();
    t.add_edge(f.vertex, child, dir);
    ++f.children;
    --budget;
    stack.push_back({child, dir});
    arrived_new = true;
  };

  while (!stack.empty()) {
    if (arrived_new) {
      Frame& f = stack.back();
      if (budget == 0) {
        // The gap ends here: the vertex just created is a leaf.
        stack.pop_back();
        ++gap;
        if (gap >= n + 2) throw std::logic_error("from_code: walked past the last gap");
        budget = u[gap] + 2 - 1;  // bounce back towards the parent
        arrived_new = false;
      } else {
        descend(f);
      }
    } else {
      Frame& f = stack.back();
      if (f.children == 1) {
        descend(f);
      } else {
        stack.pop_back();
        --budget;
        if (stack.empty()) break;  // stepped back onto the root leaf
        if (budget <= 0) throw std::logic_error("from_code: gap ended at an internal node");
        arrived_new = false;
      }
    }
  }
  if (budget != 0 || gap != n + 1)
    throw std::logic_error("from_code: walk did not finish at the root");
  return t;
}

// Leaves in worm (preorder) order, starting at the given root leaf.
inline std::vector<int> preorder_leaves(const Ctree& t, int root_leaf) {
  if (!t.is_leaf(root_leaf)) throw std::invalid_argument("preorder_leaves: root must be a leaf");
  std::vector<int> order{root_leaf};
  if (t.vertex_count() == 2) {
    order.push_back(t.adj[root_leaf][0].to);
    return order;
  }
  int prev = root_leaf;
  int cur = t.adj[root_leaf][0].to;
  while (cur != root_leaf) {
    if (t.is_leaf(cur)) order.push_back(cur);
    const Ctree::Half& next = t.next_ccw(cur, t.dir_between(cur, prev));
    prev = cur;
    cur = next.to;
  }
  return order;
}

// Read the code off the tree by running the worm from the given leaf.
inline CtreeCode to_code(const Ctree& t, int root_leaf) {
  if (!t.is_leaf(root_leaf)) throw std::invalid_argument("to_code: root must be a leaf");
  CtreeCode code;
  code.rotation = t.adj[root_leaf][0].dir;
  if (t.vertex_count() == 2) return code;

  int prev = root_leaf;
  int cur = t.adj[root_leaf][0].to;
  long steps = 1;
  while (true) {
    if (t.is_leaf(cur)) {
      code.gaps.push_back(static_cast<int>(steps - 2));
      if (cur == root_leaf) break;
      steps = 0;
    }
    const Ctree::Half& next = t.next_ccw(cur, t.dir_between(cur, prev));
    prev = cur;
    cur = next.to;
    ++steps;
  }
  return code;
}

// Undirected edges in order of first traversal by the worm from the given
// root leaf.
inline std::vector<std::pair<int, int>> worm_edge_order(const Ctree& t, int root_leaf) {
  if (!t.is_leaf(root_leaf)) throw std::invalid_argument("worm_edge_order: root must be a leaf");
  auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<std::pair<int, int>> order;
  std::set<std::pair<int, int>> seen;
  int prev = root_leaf;
  int cur = t.adj[root_leaf][0].to;
  order.push_back(norm(prev, cur));
  seen.insert(order.back());
  while (cur != root_leaf) {
    const Ctree::Half& next = t.next_ccw(cur, t.dir_between(cur, prev));
    prev = cur;
    cur = next.to;
    if (seen.insert(norm(prev, cur)).second) order.push_back(norm(prev, cur));
  }
  return order;
}

enum class NodeClass { Leaf, Hidden, Exposed, Naked, StarkNaked };

inline NodeClass classify(const Ctree& t, int v) {
  if (t.is_leaf(v)) return NodeClass::Leaf;
  int leaf_neighbours = 0;
  for (const Ctree::Half& h : t.adj[v])
    if (t.is_leaf(h.to)) ++leaf_neighbours;
  switch (leaf_neighbours) {
    case 0: return NodeClass::Hidden;
    case 1: return NodeClass::Exposed;
    case 2: return NodeClass::Naked;
    default: return NodeClass::StarkNaked;
  }
}

struct ClassCensus {
  int hidden = 0;
  int exposed = 0;
  int naked = 0;
  int stark_naked = 0;
  friend bool operator==(const ClassCensus&, const ClassCensus&) = default;
};

inline ClassCensus class_census(const Ctree& t) {
  ClassCensus c;
  for (int v = 0; v < t.vertex_count(); ++v) {
    switch (classify(t, v)) {
      case NodeClass::Hidden: ++c.hidden; break;
      case NodeClass::Exposed: ++c.exposed; break;
      case NodeClass::Naked: ++c.naked; break;
      case NodeClass::StarkNaked: ++c.stark_naked; break;
      case NodeClass::Leaf: break;
    }
  }
  return c;
}

// BFS distance from a node to the nearest naked node (0 if naked itself).
inline int node_depth(const Ctree& t, int v) {
  if (t.node_count() < 2) throw std::domain_error("node_depth: requires n >= 2");
  if (t.is_leaf(v)) throw std::domain_error("node_depth: input is a leaf");
  std::vector<int> dist(t.vertex_count(), -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (classify(t, x) == NodeClass::Naked) return dist[x];
    for (const Ctree::Half& h : t.adj[x]) {
      if (t.is_leaf(h.to) || dist[h.to] >= 0) continue;
      dist[h.to] = dist[x] + 1;
      q.push(h.to);
    }
  }
  throw std::logic_error("node_depth: no naked node reachable");
}

struct CenterRef {
  bool is_node = false;
  int node = -1;
  std::pair<int, int> edge{-1, -1};  // endpoints, smaller id first

  static CenterRef at_node(int v) { return {true, v, {-1, -1}}; }
  static CenterRef at_edge(int a, int b) {
    return {false, -1, {std::min(a, b), std::max(a, b)}};
  }
  friend bool operator==(const CenterRef&, const CenterRef&) = default;
};

namespace detail {

// The center algorithms are purely graph-theoretic, so they run on plain
// adjacency lists; the bijection reuses them on contracted base trees.

// Center via peeling depths, computed without running the deletion process.
// For a directed edge v -> w let h(v,w) be the number of peeling rounds
// until everything beyond w is gone and w itself is a leaf: 0 if w is a
// leaf, else 1 + max over w's other branches (w turns into a leaf one round
// after it goes naked).  A node goes naked when its second branch closes,
// so its depth is the second largest of its three h values; the maximum is
// achieved at one node or at two adjacent ones.
inline CenterRef center_on_adjacency(const std::vector<std::vector<int>>& adj) {
  auto is_leaf = [&](int v) { return adj[v].size() == 1; };
  int n = 0;
  for (const auto& nbrs : adj)
    if (nbrs.size() == 3) ++n;
  if (n == 0) {
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (int w : adj[v])
        if (static_cast<int>(v) < w) return CenterRef::at_edge(static_cast<int>(v), w);
    throw std::logic_error("center: empty tree");
  }
  if (n == 1) {
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (!is_leaf(static_cast<int>(v))) return CenterRef::at_node(static_cast<int>(v));
  }
  std::map<std::pair<int, int>, int> memo;
  std::function<int(int, int)> branch = [&](int v, int w) -> int {
    if (is_leaf(w)) return 0;
    auto it = memo.find({v, w});
    if (it != memo.end()) return it->second;
    int worst = 0;
    for (int x : adj[w])
      if (x != v) worst = std::max(worst, branch(w, x));
    return memo[{v, w}] = 1 + worst;
  };
  auto depth_of = [&](int v) {
    std::array<int, 3> hs{};
    for (int i = 0; i < 3; ++i) hs[i] = branch(v, adj[v][i]);
    std::sort(hs.begin(), hs.end());
    return hs[1];  // second largest closes the second branch
  };
  int max_depth = -1;
  std::vector<int> deepest;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (is_leaf(static_cast<int>(v))) continue;
    int d = depth_of(static_cast<int>(v));
    if (d > max_depth) {
      max_depth = d;
      deepest.assign(1, static_cast<int>(v));
    } else if (d == max_depth) {
      deepest.push_back(static_cast<int>(v));
    }
  }
  if (deepest.size() == 1) return CenterRef::at_node(deepest[0]);
  if (deepest.size() == 2) {
    for (int w : adj[deepest[0]])
      if (w == deepest[1]) return CenterRef::at_edge(deepest[0], deepest[1]);
  }
  throw std::logic_error("center: max-depth nodes are not one node or one edge");
}

}  // namespace detail

inline CenterRef center(const Ctree& t) {
  std::vector<std::vector<int>> adj(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v)
    for (const Ctree::Half& h : t.adj[v]) adj[v].push_back(h.to);
  return detail::center_on_adjacency(adj);
}

// Alternative definition: repeatedly delete the leaves adjacent to naked
// nodes until the n = 0 or n = 1 case applies.
inline CenterRef center_by_pruning(const Ctree& t) {
  std::vector<bool> alive(t.vertex_count(), true);
  auto alive_degree = [&](int v) {
    int d = 0;
    for (const Ctree::Half& h : t.adj[v])
      if (alive[h.to]) ++d;
    return d;
  };
  for (;;) {
    std::vector<int> nodes;
    for (int v = 0; v < t.vertex_count(); ++v)
      if (alive[v] && alive_degree(v) == 3) nodes.push_back(v);
    if (nodes.empty()) {
      std::vector<int> rest;
      for (int v = 0; v < t.vertex_count(); ++v)
        if (alive[v]) rest.push_back(v);
      if (rest.size() != 2) throw std::logic_error("center_by_pruning: bad terminal state");
      return CenterRef::at_edge(rest[0], rest[1]);
    }
    if (nodes.size() == 1) return CenterRef::at_node(nodes[0]);
    std::vector<int> to_remove;
    for (int v : nodes) {
      int leaf_neighbours = 0;
      std::vector<int> mine;
      for (const Ctree::Half& h : t.adj[v])
        if (alive[h.to] && alive_degree(h.to) == 1) {
          ++leaf_neighbours;
          mine.push_back(h.to);
        }
      if (leaf_neighbours == 2)
        to_remove.insert(to_remove.end(), mine.begin(), mine.end());
    }
    if (to_remove.empty()) throw std::logic_error("center_by_pruning: no naked node found");
    for (int v : to_remove) alive[v] = false;
  }
}

// ---------------------------------------------------------------------------
// Aligned embedding on the triangular lattice.  Coordinates are integer
// pairs (a, b) meaning a*alpha + b*beta with alpha the 30-degree unit vector
// (sqrt(3)/2, 1/2) and beta the North unit vector (0, 1); every edge
// direction is an integer multiple of one of the six unit steps.

struct LatticePoint {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint dir_step(int d) {
  switch (dir_mod6(d)) {
    case 0: return {0, -1};   // South
    case 1: return {1, -1};   // 330 degrees
    case 2: return {1, 0};    // 30 degrees
    case 3: return {0, 1};    // North
    case 4: return {-1, 1};   // 150 degrees
    default: return {-1, 0};  // 210 degrees
  }
}

namespace geom {

// Sign of the cross product (p - o) x (q - o), computed wide.
inline int orient(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  __int128 c = static_cast<__int128>(p.a - o.a) * (q.b - o.b) -
               static_cast<__int128>(p.b - o.b) * (q.a - o.a);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

inline bool on_segment(const LatticePoint& p, const LatticePoint& q, const LatticePoint& x) {
  if (orient(p, q, x) != 0) return false;
  return std::min(p.a, q.a) <= x.a && x.a <= std::max(p.a, q.a) &&
         std::min(p.b, q.b) <= x.b && x.b <= std::max(p.b, q.b);
}

// True iff closed segments [p1,p2] and [q1,q2] share any point.
inline bool segments_touch(const LatticePoint& p1, const LatticePoint& p2,
                           const LatticePoint& q1, const LatticePoint& q2) {
  int d1 = orient(q1, q2, p1);
  int d2 = orient(q1, q2, p2);
  int d3 = orient(p1, p2, q1);
  int d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(q1, q2, p1)) || (d2 == 0 && on_segment(q1, q2, p2)) ||
         (d3 == 0 && on_segment(p1, p2, q1)) || (d4 == 0 && on_segment(p1, p2, q2));
}

}  // namespace geom

// Exact crossing check: edges sharing a vertex are allowed to meet only
// there; all other pairs must be disjoint.
inline bool embedding_has_crossings(const Ctree& t, const std::vector<LatticePoint>& pos) {
  auto es = t.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      int shared = -1;
      if (a == c || a == d) shared = a;
      if (b == c || b == d) shared = b;
      if (shared >= 0) {
        // Distinct fan directions keep adjacent edges apart except at the
        // shared vertex; verify the far endpoints stay off the other edge.
        int pa = (a == shared) ? b : a;
        int pc = (c == shared) ? d : c;
        if (geom::on_segment(pos[c], pos[d], pos[pa]) && pos[pa] != pos[shared]) return true;
        if (geom::on_segment(pos[a], pos[b], pos[pc]) && pos[pc] != pos[shared]) return true;
      } else if (geom::segments_touch(pos[a], pos[b], pos[c], pos[d])) {
        return true;
      }
    }
  return false;
}

// Deterministic aligned drawing: each edge keeps its direction and gets
// length base^(height of the subtree hanging below it).  The exponential
// separation keeps sibling subtrees in disjoint regions; the result is
// verified exactly and the base escalates on failure.
inline std::vector<LatticePoint> embed(const Ctree& t) {
  int root = t.root;
  if (root < 0) {
    for (int v = 0; v < t.vertex_count(); ++v)
      if (t.is_leaf(v)) {
        root = v;
        break;
      }
  }
  // Height of the subtree below each directed edge (parent -> child).
  std::map<std::pair<int, int>, int> height;
  std::function<int(int, int)> calc = [&](int parent, int v) -> int {
    int h = 0;
    for (const Ctree::Half& half : t.adj[v])
      if (half.to != parent) h = std::max(h, 1 + calc(v, half.to));
    height[{parent, v}] = h;
    return h;
  };
  calc(-1, root);

  for (int base = 3; base <= 12; ++base) {
    std::vector<LatticePoint> pos(t.vertex_count());
    std::function<void(int, int)> place = [&](int parent, int v) {
      for (const Ctree::Half& half : t.adj[v]) {
        if (half.to == parent) continue;
        long long len = 1;
        for (int i = 0; i < height[{v, half.to}]; ++i) len *= base;
        LatticePoint step = dir_step(half.dir);
        pos[half.to] = {pos[v].a + step.a * len, pos[v].b + step.b * len};
        place(v, half.to);
      }
    };
    place(-1, root);
    if (!embedding_has_crossings(t, pos)) return pos;
  }
  throw std::logic_error("embed: could not find a crossing-free drawing");
}

// ---------------------------------------------------------------------------
// Walk-around image and the deep-interior statistic of the underlying
// (unplanted) full binary tree.

// Dyck path of the planted tree: the worm walks counterclockwise and each
// non-planting edge is recorded when traversed upward, U for the first
// child edge in ccw order after the parent edge and D for the second.
inline std::string walk_around(const Ctree& t) {
  if (t.root < 0 || !t.is_leaf(t.root))
    throw std::domain_error("walk_around: tree has no designated root leaf");
  if (t.adj[t.root][0].dir != 0)
    throw std::domain_error("walk_around: planted trees have root direction 0");
  std::string path;
  if (t.vertex_count() == 2) return path;
  std::function<void(int, int)> visit = [&](int parent, int v) {
    int back = t.dir_between(v, parent);
    const Ctree::Half& c1 = t.next_ccw(v, back);
    const Ctree::Half& c2 = t.next_ccw(v, c1.dir);
    if (!t.is_leaf(c1.to)) visit(v, c1.to);
    path += 'U';
    if (!t.is_leaf(c2.to)) visit(v, c2.to);
    path += 'D';
  };
  visit(t.root, t.adj[t.root][0].to);
  return path;
}

// Vertices of the unplanted binary tree that are internal with no leaf
// neighbour (the planting edge and root leaf are ignored).
inline int deep_interior_count(const Ctree& t) {
  if (t.root < 0 || !t.is_leaf(t.root))
    throw std::domain_error("deep_interior_count: tree has no designated root leaf");
  int count = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v)) continue;
    bool deep = true;
    for (const Ctree::Half& h : t.adj[v])
      if (h.to != t.root && t.is_leaf(h.to)) deep = false;
    if (deep) ++count;
  }
  return count;
}

}  // namespace ctree
