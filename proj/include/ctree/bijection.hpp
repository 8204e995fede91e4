#pragma once

// (n,k)-configurations and the bijection onto n-ctrees with k hidden nodes.
//
// A configuration is a k-ctree base whose 2k+1 edges carry strips of
// labelled squares, n-2-2k squares in total, each marked L or R; if the
// base has a center edge whose strip has odd length, the first square is
// marked T or B instead.  Strips are listed in worm order of the base's
// canonical rooting.
//
// The forward map works outward from the base's center.  Each square
// becomes an exposed node inserted into its edge; travelling away from the
// center with arrival direction d, an L square hangs its leaf at d+1 and
// the path bends to d+5, an R square hangs its leaf at d+5 and bends to
// d+1.  A center edge with 2j squares keeps its direction and becomes an
// edge joining two exposed nodes, labels read from the bottom subtree to
// the top one.  A center edge with 2j+1 squares becomes a leaf edge
// pointing at the vertex named by the T/B square, with j exposed nodes on
// each branch of the new junction; the subtree from the now-leaf vertex
// goes to the end of the left branch (left relative to travel from the
// leaf), remaining labels consumed left branch first.  Non-center edges
// keep their direction at the center-side end, labels applied from the far
// end towards the center.  Finally every base leaf gains two edges and
// becomes a naked node.  Base nodes end up hidden, squares exposed, base
// leaves naked.
//
// The inverse strips each naked node's leaf pair, reads the exposed chains
// back into strips (recovering directions outward from the center of the
// contracted base), and reassembles the configuration.

#include <ctree/code.hpp>
#include <ctree/numbers.hpp>
#include <ctree/tree.hpp>

#include <json.hpp>

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctree {

struct Configuration {
  int target_nodes = 0;             // n
  CtreeCode base;                   // canonical k-ctree code
  std::vector<std::string> strips;  // 2k+1 strips over {L,R,T,B}, worm edge order

  int base_nodes() const { return base.node_count(); }
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// The 2k+1 edges of the base tree in worm order from the canonical root.
inline std::vector<std::pair<int, int>> base_edge_order(const CtreeCode& base) {
  Ctree t = from_code(base);
  return worm_edge_order(t, t.root);
}

inline std::string serialize_config(const Configuration& cfg) {
  nlohmann::ordered_json j;
  j["n"] = cfg.target_nodes;
  j["base"] = format_code(cfg.base);
  j["strips"] = cfg.strips;
  return j.dump();
}

inline Configuration parse_config(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  Configuration cfg;
  cfg.target_nodes = j.at("n").get<int>();
  cfg.base = parse_code(j.at("base").get<std::string>());
  cfg.strips = j.at("strips").get<std::vector<std::string>>();
  return cfg;
}

// Structured rule-by-rule check; an empty list means the configuration is
// well formed.
inline std::vector<std::string> validate_config(const Configuration& cfg) {
  std::vector<std::string> errors;
  if (!is_valid_code(cfg.base)) {
    errors.push_back("base is not a valid coding sequence");
    return errors;
  }
  if (cfg.base != canonical(cfg.base)) errors.push_back("base is not in canonical form");
  int k = cfg.base.node_count();
  int n = cfg.target_nodes;
  if (n < 2) errors.push_back("target size n must be at least 2");
  if (cfg.strips.size() != static_cast<std::size_t>(2 * k + 1))
    errors.push_back("expected " + std::to_string(2 * k + 1) + " strips, got " +
                     std::to_string(cfg.strips.size()));
  long total = 0;
  for (const std::string& s : cfg.strips) total += static_cast<long>(s.size());
  if (n >= 2 && total != n - 2 - 2 * k)
    errors.push_back("strips carry " + std::to_string(total) + " squares, expected " +
                     std::to_string(n - 2 - 2 * k));
  if (!errors.empty()) return errors;

  Ctree bt = from_code(cfg.base);
  CenterRef c = center(bt);
  auto order = worm_edge_order(bt, bt.root);
  std::size_t center_idx = order.size();
  if (!c.is_node)
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == c.edge) center_idx = i;
  for (std::size_t i = 0; i < cfg.strips.size(); ++i) {
    const std::string& s = cfg.strips[i];
    bool tb_slot = i == center_idx && s.size() % 2 == 1;
    for (std::size_t p = 0; p < s.size(); ++p) {
      char ch = s[p];
      if (p == 0 && tb_slot) {
        if (ch != 'T' && ch != 'B')
          errors.push_back("strip " + std::to_string(i) +
                           ": odd center-edge strip must start with T or B");
      } else if (ch != 'L' && ch != 'R') {
        errors.push_back("strip " + std::to_string(i) + " square " + std::to_string(p) +
                         ": expected L or R, got '" + std::string(1, ch) + "'");
      }
    }
  }
  return errors;
}

namespace detail {

inline std::pair<int, int> edge_key(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

inline bool dir_points_up(int d) { return d == 2 || d == 3 || d == 4; }

// Builds the n-ctree from a configuration, working outward from the base's
// center and tracking, per base vertex, the rotation its subtree picked up
// from the bends of the chain leading to it.
struct ForwardBuilder {
  const Ctree& base;
  const std::map<std::pair<int, int>, std::string>& strip_of;
  Ctree out;
  std::vector<int> pending_naked;  // images of base leaves, to sprout at the end

  // One exposed node at arrival direction *dir: hang its leaf per the
  // label and turn *dir into the continuation direction.
  void place_leaf_and_turn(int x, int* dir, char label) {
    int leaf = out.new_vertex();
    if (label == 'L') {
      out.add_edge(x, leaf, *dir + 1);
      *dir = dir_mod6(*dir + 5);
    } else {
      out.add_edge(x, leaf, *dir + 5);
      *dir = dir_mod6(*dir + 1);
    }
  }

  // Insert new exposed nodes from `from` outward, first edge at `dir`,
  // labels consumed in the given order.  Returns the last vertex and the
  // direction of the next edge to add.
  std::pair<int, int> grow_chain(int from, int dir, std::string_view labels) {
    int cur = from;
    for (char ch : labels) {
      int x = out.new_vertex();
      out.add_edge(cur, x, dir);
      place_leaf_and_turn(x, &dir, ch);
      cur = x;
    }
    return {cur, dir};
  }

  // Materialize base vertex `bq` at the end of a chain arriving with
  // direction `mu`; `old_arrival` is the direction its base edge used to
  // arrive with, fixing the subtree rotation.
  void attach_base_vertex(int cur, int mu, int bq, int old_arrival, int base_parent) {
    int img = out.new_vertex();
    out.add_edge(cur, img, mu);
    expand_from(img, bq, dir_mod6(mu - old_arrival), base_parent);
  }

  // Expand all of bq's base edges except the one towards base_parent.
  void expand_from(int img, int bq, int rho, int base_parent) {
    if (base.is_leaf(bq)) {
      pending_naked.push_back(img);
      return;
    }
    for (const Ctree::Half& h : base.adj[bq]) {
      if (h.to == base_parent) continue;
      const std::string& s = strip_of.at(edge_key(bq, h.to));
      std::string consume(s.rbegin(), s.rend());  // far-end label sits first in s
      auto [last, mu] = grow_chain(img, dir_mod6(h.dir + rho), consume);
      attach_base_vertex(last, mu, h.to, h.dir, bq);
    }
  }

  // Two extra edges per original leaf: fan {beta, beta+2, beta+4}.
  void sprout_naked() {
    for (int v : pending_naked) {
      int beta = out.adj[v][0].dir;
      out.add_edge(v, out.new_vertex(), beta + 2);
      out.add_edge(v, out.new_vertex(), beta + 4);
    }
  }
};

}  // namespace detail

inline CtreeCode forward(const Configuration& cfg) {
  {
    auto errors = validate_config(cfg);
    if (!errors.empty()) throw std::invalid_argument("forward: " + errors.front());
  }
  Ctree base = from_code(cfg.base);
  auto order = worm_edge_order(base, base.root);
  std::map<std::pair<int, int>, std::string> strip_of;
  for (std::size_t i = 0; i < order.size(); ++i) strip_of[order[i]] = cfg.strips[i];

  detail::ForwardBuilder b{base, strip_of, Ctree{}, {}};
  CenterRef c = center(base);

  if (c.is_node) {
    int img = b.out.new_vertex();
    b.expand_from(img, c.node, 0, -1);
  } else {
    const std::string& s = strip_of.at(c.edge);
    // Bottom vertex A, top vertex B, delta_up = dir(A -> B).
    int A = c.edge.first, B = c.edge.second;
    int delta_up = base.dir_between(A, B);
    if (!detail::dir_points_up(delta_up)) {
      std::swap(A, B);
      delta_up = dir_reverse(delta_up);
    }
    if (s.size() % 2 == 0) {
      int j = static_cast<int>(s.size()) / 2;
      if (j == 0) {
        int img_a = b.out.new_vertex();
        int img_b = b.out.new_vertex();
        b.out.add_edge(img_a, img_b, delta_up);
        b.expand_from(img_a, A, 0, B);
        b.expand_from(img_b, B, 0, A);
      } else {
        int c_a = b.out.new_vertex();
        int c_b = b.out.new_vertex();
        b.out.add_edge(c_a, c_b, delta_up);
        // A side: c_a is the innermost exposed node; labels run outward as
        // s[j-1], ..., s[0], then the bottom subtree attaches.
        int dir_a = dir_reverse(delta_up);
        b.place_leaf_and_turn(c_a, &dir_a, s[j - 1]);
        std::string rest_a(s.rend() - (j - 1), s.rend());  // s[j-2] .. s[0]
        auto [last_a, mu_a] = b.grow_chain(c_a, dir_a, rest_a);
        b.attach_base_vertex(last_a, mu_a, A, dir_reverse(delta_up), B);
        // B side: labels s[j], ..., s[2j-1] in order.
        int dir_b = delta_up;
        b.place_leaf_and_turn(c_b, &dir_b, s[j]);
        auto [last_b, mu_b] = b.grow_chain(c_b, dir_b, s.substr(j + 1));
        b.attach_base_vertex(last_b, mu_b, B, delta_up, A);
      }
    } else {
      int j = (static_cast<int>(s.size()) - 1) / 2;
      int delta_leaf = s[0] == 'B' ? dir_reverse(delta_up) : delta_up;
      int junction = b.out.new_vertex();
      int new_leaf = b.out.new_vertex();
      b.out.add_edge(junction, new_leaf, delta_leaf);
      int delta_arr = dir_reverse(delta_leaf);  // travel from the leaf
      auto [last_l, mu_l] = b.grow_chain(junction, dir_mod6(delta_arr + 1),
                                         std::string_view(s).substr(1, j));
      auto [last_r, mu_r] = b.grow_chain(junction, dir_mod6(delta_arr + 5),
                                         std::string_view(s).substr(1 + j, j));
      // The subtree from the now-leaf vertex goes to the end of the left
      // branch; old arrivals: into A along B->A (= reverse of delta_up),
      // into B along A->B.
      int left_base = s[0] == 'B' ? A : B;
      int right_base = s[0] == 'B' ? B : A;
      auto old_arrival = [&](int v) { return v == A ? dir_reverse(delta_up) : delta_up; };
      b.attach_base_vertex(last_l, mu_l, left_base, old_arrival(left_base),
                           left_base == A ? B : A);
      b.attach_base_vertex(last_r, mu_r, right_base, old_arrival(right_base),
                           right_base == A ? B : A);
    }
  }
  b.sprout_naked();

  int n = cfg.target_nodes;
  if (b.out.vertex_count() != 2 * n + 2)
    throw std::logic_error("forward: built " + std::to_string(b.out.vertex_count()) +
                           " vertices, expected " + std::to_string(2 * n + 2));
  for (int v = 0; v < b.out.vertex_count(); ++v)
    if (b.out.degree(v) != 1 && b.out.degree(v) != 3)
      throw std::logic_error("forward: vertex of degree " + std::to_string(b.out.degree(v)));
  return canonical(to_code(b.out, b.out.leaves().front()));
}

namespace detail {

// Reads an expanded chain of exposed nodes back into labels.  `exposed`
// lists the chain vertices in walk order starting next to `start`; returns
// the labels and the arrival direction into `end`.
struct LabelWalk {
  std::string labels;
  int mu = 0;
};

inline LabelWalk read_labels(const Ctree& t, int start, const std::vector<int>& exposed,
                             int end) {
  LabelWalk out;
  int prev = start;
  for (int x : exposed) {
    int delta = t.dir_between(prev, x);
    int leaf_dir = -1;
    for (const Ctree::Half& h : t.adj[x])
      if (t.is_leaf(h.to)) leaf_dir = h.dir;
    if (leaf_dir == dir_mod6(delta + 1))
      out.labels += 'L';
    else if (leaf_dir == dir_mod6(delta + 5))
      out.labels += 'R';
    else
      throw std::logic_error("inverse: leaf direction off the travel fan");
    prev = x;
  }
  out.mu = t.dir_between(prev, end);
  return out;
}

}  // namespace detail

// Recover the unique configuration producing this tree.  Any rooting of
// the tree may be passed; the configuration is a property of the unrooted
// ctree.
inline Configuration inverse(const CtreeCode& input) {
  if (!is_valid_code(input)) throw std::invalid_argument("inverse: invalid code");
  CtreeCode canon = canonical(input);
  Ctree t = from_code(canon);
  int n = t.node_count();
  if (n < 2) throw std::domain_error("inverse: requires n >= 2");

  std::vector<NodeClass> cls(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) cls[v] = classify(t, v);

  // Base vertices: hidden nodes stay nodes, naked nodes were base leaves.
  std::vector<int> base_vs;
  std::map<int, int> compact;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (cls[v] == NodeClass::Hidden || cls[v] == NodeClass::Naked) {
      compact[v] = static_cast<int>(base_vs.size());
      base_vs.push_back(v);
    }

  // Follow a chain of exposed vertices from bv through its node-neighbour
  // `first` to the next base vertex.
  auto walk_chain = [&](int bv, int first) {
    std::vector<int> exposed;
    int prev = bv, cur = first;
    while (cls[cur] == NodeClass::Exposed) {
      exposed.push_back(cur);
      int next = -1;
      for (const Ctree::Half& h : t.adj[cur])
        if (!t.is_leaf(h.to) && h.to != prev) next = h.to;
      prev = cur;
      cur = next;
    }
    return std::make_pair(exposed, cur);
  };

  // Contracted base structure, for the center computation.
  std::vector<std::vector<int>> contracted(base_vs.size());
  for (int bv : base_vs)
    for (const Ctree::Half& h : t.adj[bv]) {
      if (t.is_leaf(h.to)) continue;
      auto [exposed, end] = walk_chain(bv, h.to);
      contracted[compact.at(bv)].push_back(compact.at(end));
    }
  CenterRef bc = detail::center_on_adjacency(contracted);

  std::map<std::pair<int, int>, std::string> strip_of;  // by normalized T-id pair
  std::map<std::pair<int, int>, int> base_dir;          // oriented (u,v) -> dir(u->v)

  // Walk outward from the center: bv carries rotation rho; skip the chain
  // whose first vertex is `from` (the way back towards the center).
  std::function<void(int, int, int)> recover = [&](int bv, int rho, int from) {
    if (cls[bv] == NodeClass::Naked) return;
    for (const Ctree::Half& h : t.adj[bv]) {
      if (t.is_leaf(h.to) || h.to == from) continue;
      auto [exposed, end] = walk_chain(bv, h.to);
      detail::LabelWalk lw = detail::read_labels(t, bv, exposed, end);
      int delta_base = dir_mod6(h.dir - rho);
      strip_of[detail::edge_key(bv, end)] =
          std::string(lw.labels.rbegin(), lw.labels.rend());
      base_dir[{bv, end}] = delta_base;
      recover(end, dir_mod6(lw.mu - delta_base), exposed.empty() ? bv : exposed.back());
    }
  };

  if (bc.is_node) {
    recover(base_vs[bc.node], 0, -1);
  } else {
    int a_t = base_vs[bc.edge.first];
    int b_t = base_vs[bc.edge.second];
    // The full path in t between the two base endpoints.
    int first_towards_b = -1;
    for (const Ctree::Half& h : t.adj[a_t]) {
      if (t.is_leaf(h.to)) continue;
      auto [exposed, end] = walk_chain(a_t, h.to);
      if (end == b_t) first_towards_b = h.to;
    }
    auto [chain, chain_end] = walk_chain(a_t, first_towards_b);
    std::vector<int> path{a_t};
    path.insert(path.end(), chain.begin(), chain.end());
    path.push_back(b_t);
    int m = static_cast<int>(chain.size());

    if (m % 2 == 0) {
      // Case Even: the middle edge is the image of the center edge and
      // keeps its direction; the bottom side is where it points up from.
      int j = m / 2;
      int d0 = t.dir_between(path[j], path[j + 1]);
      if (!detail::dir_points_up(d0)) {
        std::reverse(path.begin(), path.end());
        d0 = dir_reverse(d0);
      }
      int delta_up = d0;
      int A = path.front(), B = path.back();
      // A side read outward from the middle, then reversed into strip order.
      std::vector<int> walk_a(path.rbegin() + (m + 1 - j), path.rend() - 1);
      detail::LabelWalk lw_a = detail::read_labels(t, path[j + 1], walk_a, A);
      std::vector<int> walk_b(path.begin() + j + 1, path.end() - 1);
      detail::LabelWalk lw_b = detail::read_labels(t, path[j], walk_b, B);
      strip_of[detail::edge_key(a_t, b_t)] =
          std::string(lw_a.labels.rbegin(), lw_a.labels.rend()) + lw_b.labels;
      base_dir[{A, B}] = delta_up;
      recover(A, dir_mod6(lw_a.mu - dir_reverse(delta_up)), path[1]);
      recover(B, dir_mod6(lw_b.mu - delta_up), path[m]);
    } else {
      // Case Odd: the middle exposed vertex is the junction; its leaf
      // points at the vertex that the T/B square turned into a leaf.
      int j = (m - 1) / 2;
      int f = path[j + 1];
      int leaf_dir = -1;
      for (const Ctree::Half& h : t.adj[f])
        if (t.is_leaf(h.to)) leaf_dir = h.dir;
      char first_square = (leaf_dir == 5 || leaf_dir == 0 || leaf_dir == 1) ? 'B' : 'T';
      int delta_up = first_square == 'B' ? dir_reverse(leaf_dir) : leaf_dir;
      int delta_arr = dir_reverse(leaf_dir);
      bool left_towards_a = t.dir_between(f, path[j]) == dir_mod6(delta_arr + 1);
      if (!left_towards_a && t.dir_between(f, path[j + 2]) != dir_mod6(delta_arr + 1))
        throw std::logic_error("inverse: junction branches off the travel fan");
      // Branch walks from the junction outward.
      std::vector<int> walk_to_a(path.rbegin() + (m + 1 - j), path.rend() - 1);
      std::vector<int> walk_to_b(path.begin() + j + 2, path.end() - 1);
      detail::LabelWalk lw_ta = detail::read_labels(t, f, walk_to_a, a_t);
      detail::LabelWalk lw_tb = detail::read_labels(t, f, walk_to_b, b_t);
      const detail::LabelWalk& lw_left = left_towards_a ? lw_ta : lw_tb;
      const detail::LabelWalk& lw_right = left_towards_a ? lw_tb : lw_ta;
      int left_base = left_towards_a ? a_t : b_t;
      int right_base = left_towards_a ? b_t : a_t;
      // 'B': the left branch carries the bottom subtree (A); 'T': the top.
      int A = first_square == 'B' ? left_base : right_base;
      int B = first_square == 'B' ? right_base : left_base;
      strip_of[detail::edge_key(a_t, b_t)] =
          std::string(1, first_square) + lw_left.labels + lw_right.labels;
      base_dir[{A, B}] = delta_up;
      int mu_a = A == left_base ? lw_left.mu : lw_right.mu;
      int mu_b = B == left_base ? lw_left.mu : lw_right.mu;
      recover(A, dir_mod6(mu_a - dir_reverse(delta_up)), A == a_t ? path[1] : path[m]);
      recover(B, dir_mod6(mu_b - delta_up), B == a_t ? path[1] : path[m]);
    }
  }

  // Rebuild the base tree with the recovered directions.
  Ctree base_rec;
  for (std::size_t i = 0; i < base_vs.size(); ++i) base_rec.new_vertex();
  for (const auto& [pair, dir] : base_dir)
    base_rec.add_edge(compact.at(pair.first), compact.at(pair.second), dir);

  // Canonical base code and its root leaf.
  CtreeCode best;
  int best_leaf = -1;
  for (int leaf : base_rec.leaves()) {
    CtreeCode cand = to_code(base_rec, leaf);
    if (best_leaf < 0 || cand < best) {
      best = cand;
      best_leaf = leaf;
    }
  }

  Configuration cfg;
  cfg.target_nodes = n;
  cfg.base = best;
  for (const auto& e : worm_edge_order(base_rec, best_leaf))
    cfg.strips.push_back(strip_of.at(detail::edge_key(base_vs[e.first], base_vs[e.second])));
  return cfg;
}

// All valid configurations for the class (n, k), deterministically ordered:
// bases ascending, square counts per edge in lexicographic order, then
// label words in binary order (T/L before B/R).
inline std::vector<Configuration> enumerate_configs(int n, int k) {
  if (n < 2) throw std::domain_error("enumerate_configs: requires n >= 2");
  if (k < 0 || 2 * k > n - 2) throw std::domain_error("enumerate_configs: requires 0 <= 2k <= n-2");
  int squares = n - 2 - 2 * k;
  int edges = 2 * k + 1;
  std::vector<Configuration> out;

  for (const CtreeCode& base : enumerate_unrooted(k)) {
    Ctree bt = from_code(base);
    auto order = worm_edge_order(bt, bt.root);
    CenterRef c = center(bt);
    std::size_t center_idx = order.size();
    if (!c.is_node)
      for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == c.edge) center_idx = i;

    std::vector<int> parts(edges, 0);
    std::function<void(int, int)> compose = [&](int idx, int remaining) {
      if (idx == edges - 1) {
        parts[idx] = remaining;
        for (long mask = 0; mask < (1L << squares); ++mask) {
          Configuration cfg;
          cfg.target_nodes = n;
          cfg.base = base;
          int sq = 0;
          for (int e = 0; e < edges; ++e) {
            std::string strip;
            for (int p = 0; p < parts[e]; ++p, ++sq) {
              bool second = (mask >> sq) & 1;
              bool tb = static_cast<std::size_t>(e) == center_idx && parts[e] % 2 == 1 && p == 0;
              strip += tb ? (second ? 'B' : 'T') : (second ? 'R' : 'L');
            }
            cfg.strips.push_back(strip);
          }
          out.push_back(std::move(cfg));
        }
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        parts[idx] = v;
        compose(idx + 1, remaining - v);
      }
    };
    compose(0, squares);
  }
  return out;
}

struct BijectionClassCheck {
  int k = 0;
  Exact expected;              // C(n-2,2k) 2^(n-2-2k) u_k
  long long config_count = 0;
  long long tree_count = 0;    // canonical n-ctrees with Hidden = k
  bool image_matches = false;  // forward image equals the census class
  bool round_trips = false;
  bool pass = false;
};

struct BijectionReport {
  int n = 0;
  std::vector<BijectionClassCheck> checks;
  bool pass = true;
};

inline BijectionReport verify_bijection(int n) {
  if (n < 2) throw std::domain_error("verify_bijection: requires n >= 2");
  std::map<int, std::set<CtreeCode>> trees_by_hidden;
  for (const CtreeCode& code : enumerate_unrooted(n))
    trees_by_hidden[class_census(from_code(code)).hidden].insert(code);

  BijectionReport report;
  report.n = n;
  for (int k = 0; 2 * k <= n - 2; ++k) {
    BijectionClassCheck check;
    check.k = k;
    check.expected = hidden_class_count(n, k);
    auto configs = enumerate_configs(n, k);
    check.config_count = static_cast<long long>(configs.size());
    const std::set<CtreeCode>& expected_trees = trees_by_hidden[k];
    check.tree_count = static_cast<long long>(expected_trees.size());

    std::set<CtreeCode> image;
    check.round_trips = true;
    for (const Configuration& cfg : configs) {
      CtreeCode tree = forward(cfg);
      image.insert(tree);
      if (!(inverse(tree) == cfg)) check.round_trips = false;
    }
    for (const CtreeCode& tree : expected_trees)
      if (!(forward(inverse(tree)) == tree)) check.round_trips = false;

    check.image_matches =
        image == expected_trees && image.size() == static_cast<std::size_t>(check.config_count);
    check.pass = check.image_matches && check.round_trips &&
                 Exact(check.config_count) == check.expected &&
                 Exact(check.tree_count) == check.expected;
    report.pass = report.pass && check.pass;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace ctree
