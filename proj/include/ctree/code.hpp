#pragma once

// Coding sequences for rooted aligned cubic trees.  A rooted n-ctree is a
// pair (r, u): r in Z6 is the angle of the root edge in 60-degree steps
// counterclockwise from South, and u = (u_1 .. u_{n+2}) records the leaf
// gaps of the counterclockwise preorder walk, u_i = v_i - 2 where v_i is
// the number of edges traversed between the i-th leaf and the next.
//
// Validity of u is decided by repeatedly pruning the first 0 (removing it
// and decrementing both cyclic neighbours) until the 1-ctree sequence
// (0,0,0) remains; growing is the inverse move and generates all coding
// sequences from (0,0,0).

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctree {

struct CtreeCode {
  int rotation = 0;        // r mod 6
  std::vector<int> gaps;   // u; empty encodes the 0-ctree (a single edge)

  int node_count() const { return gaps.empty() ? 0 : static_cast<int>(gaps.size()) - 2; }
  bool is_edge_tree() const { return gaps.empty(); }
  friend auto operator<=>(const CtreeCode&, const CtreeCode&) = default;
};

// Text form "r:u1,u2,...,uk"; the 0-ctree is written "r:-".
inline std::string format_code(const CtreeCode& code) {
  std::string out = std::to_string(code.rotation);
  out += ':';
  if (code.gaps.empty()) {
    out += '-';
    return out;
  }
  for (std::size_t i = 0; i < code.gaps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(code.gaps[i]);
  }
  return out;
}

namespace detail {

inline void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("bad code '" + text + "' at position " + std::to_string(pos) +
                              ": " + what);
}

}  // namespace detail

// Structural parse only; combinatorial validity is a separate check.
inline CtreeCode parse_code(const std::string& text) {
  std::size_t pos = 0;
  auto digits_from = [&](std::size_t start) {
    std::size_t p = start;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    if (p == start) detail::parse_fail(text, start, "expected a digit");
    return p;
  };

  std::size_t end_r = digits_from(0);
  long r = std::stol(text.substr(0, end_r));
  if (r < 0 || r > 5)
    throw std::out_of_range("bad code '" + text + "': rotation " + std::to_string(r) +
                            " outside 0..5");
  pos = end_r;
  if (pos >= text.size() || text[pos] != ':') detail::parse_fail(text, pos, "expected ':'");
  ++pos;

  CtreeCode code;
  code.rotation = static_cast<int>(r);
  if (pos < text.size() && text[pos] == '-') {
    if (pos + 1 != text.size()) detail::parse_fail(text, pos + 1, "trailing characters");
    return code;  // 0-ctree marker
  }
  for (;;) {
    std::size_t e = digits_from(pos);
    code.gaps.push_back(static_cast<int>(std::stol(text.substr(pos, e - pos))));
    pos = e;
    if (pos == text.size()) break;
    if (text[pos] != ',') detail::parse_fail(text, pos, "expected ','");
    ++pos;
  }
  return code;
}

// Remove the leftmost 0 and decrement both cyclic neighbours.
inline std::vector<int> prune_first_zero(const std::vector<int>& u) {
  if (u.size() < 4) throw std::domain_error("prune_first_zero: sequence shorter than 4");
  auto it = std::find(u.begin(), u.end(), 0);
  if (it == u.end()) throw std::domain_error("prune_first_zero: no zero entry");
  std::size_t z = static_cast<std::size_t>(it - u.begin());
  std::size_t prev = (z + u.size() - 1) % u.size();
  std::size_t next = (z + 1) % u.size();
  if (u[prev] == 0 || u[next] == 0)
    throw std::domain_error("prune_first_zero: cyclic neighbour of the first zero is 0");
  std::vector<int> out;
  out.reserve(u.size() - 1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i == z) continue;
    int v = u[i];
    if (i == prev || i == next) --v;
    out.push_back(v);
  }
  return out;
}

struct ValidationTrace {
  std::vector<std::vector<int>> steps;  // input first, terminal sequence last
  bool valid = false;
  std::string reason;                   // empty when valid
  int failing_index = -1;               // position relevant to the failure, -1 if none
};

// Pruning-based recognizer.  Invalidity is a verdict, not an error.
inline ValidationTrace validate(const std::vector<int>& u) {
  ValidationTrace trace;
  trace.steps.push_back(u);

  if (u.empty()) {  // the 0-ctree marker is a valid base case
    trace.valid = true;
    return trace;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0) {
      trace.reason = "negative entry";
      trace.failing_index = static_cast<int>(i);
      return trace;
    }
  }
  if (u.size() < 3) {
    trace.reason = "length must be at least 3";
    return trace;
  }
  long sum = 0;
  for (int v : u) sum += v;
  long n = static_cast<long>(u.size()) - 2;
  if (sum != 2 * n - 2) {
    trace.reason = "entries sum to " + std::to_string(sum) + ", expected " +
                   std::to_string(2 * n - 2);
    return trace;
  }

  std::vector<int> cur = u;
  while (cur.size() > 3) {
    auto it = std::find(cur.begin(), cur.end(), 0);
    if (it == cur.end()) {
      trace.reason = "no zero entry to prune";
      return trace;
    }
    std::size_t z = static_cast<std::size_t>(it - cur.begin());
    std::size_t prev = (z + cur.size() - 1) % cur.size();
    std::size_t next = (z + 1) % cur.size();
    if (cur[prev] == 0 || cur[next] == 0) {
      trace.reason = "cyclic neighbour of the first zero is 0";
      trace.failing_index = static_cast<int>(cur[prev] == 0 ? prev : next);
      return trace;
    }
    cur = prune_first_zero(cur);
    trace.steps.push_back(cur);
  }
  if (cur != std::vector<int>{0, 0, 0}) {
    trace.reason = "terminal sequence is not (0,0,0)";
    return trace;
  }
  trace.valid = true;
  return trace;
}

inline bool is_valid_code(const CtreeCode& code) {
  if (code.rotation < 0 || code.rotation > 5) return false;
  return validate(code.gaps).valid;
}

// Turn a leaf into a node: entries u_i, u_{i+1} (1-based, cyclic) become
// u_i + 1, 0, u_{i+1} + 1.  When the pair wraps around, the inserted 0 is
// written at the front of the result.
inline std::vector<int> grow_at(const std::vector<int>& u, int i) {
  long len = static_cast<long>(u.size());
  if (len == 0) throw std::domain_error("grow_at: cannot grow the 0-ctree marker");
  if (i < 1 || i > len) throw std::out_of_range("grow_at: index outside 1..length");
  std::size_t j = static_cast<std::size_t>(i - 1);
  std::vector<int> out;
  out.reserve(u.size() + 1);
  if (j + 1 < u.size()) {
    out.assign(u.begin(), u.begin() + j);
    out.push_back(u[j] + 1);
    out.push_back(0);
    out.push_back(u[j + 1] + 1);
    out.insert(out.end(), u.begin() + j + 2, u.end());
  } else {  // pair (u_last, u_first) wraps
    out.push_back(0);
    out.push_back(u.front() + 1);
    out.insert(out.end(), u.begin() + 1, u.end() - 1);
    out.push_back(u.back() + 1);
  }
  return out;
}

// Same unrooted tree rooted at the next leaf in preorder:
// r' = (2 + r - u_1) mod 6, u rotated left by one.
inline CtreeCode reroot(const CtreeCode& code) {
  CtreeCode out;
  if (code.is_edge_tree()) {
    out.rotation = (code.rotation + 3) % 6;
    return out;
  }
  out.rotation = ((2 + code.rotation - code.gaps.front()) % 6 + 6) % 6;
  out.gaps.assign(code.gaps.begin() + 1, code.gaps.end());
  out.gaps.push_back(code.gaps.front());
  return out;
}

// All n+2 rootings (2 for the 0-ctree), starting from the given one.
inline std::vector<CtreeCode> reroot_orbit(const CtreeCode& code) {
  std::vector<CtreeCode> orbit;
  int size = code.node_count() + 2;
  CtreeCode cur = code;
  for (int i = 0; i < size; ++i) {
    orbit.push_back(cur);
    cur = reroot(cur);
  }
  return orbit;
}

// Lexicographically least member of the reroot orbit (r first, then u).
inline CtreeCode canonical(const CtreeCode& code) {
  auto orbit = reroot_orbit(code);
  return *std::min_element(orbit.begin(), orbit.end());
}

// All valid gap sequences of length n+2, generated breadth-first by the
// growth rule from (0,0,0) with deduplication; lexicographically sorted.
// The composition space is exponentially larger than C_n.
inline std::vector<std::vector<int>> enumerate_planted(int n) {
  if (n < 0) throw std::domain_error("enumerate_planted: n must be nonnegative");
  if (n == 0) return {std::vector<int>{}};  // the 0-ctree marker
  std::set<std::vector<int>> level{{0, 0, 0}};
  for (int size = 1; size < n; ++size) {
    std::set<std::vector<int>> next;
    for (const auto& u : level)
      for (int i = 1; i <= static_cast<int>(u.size()); ++i) next.insert(grow_at(u, i));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

// Canonical forms of all 6 C_n rooted codes; cardinality 6 C_n / (n+2).
inline std::vector<CtreeCode> enumerate_unrooted(int n) {
  std::set<CtreeCode> out;
  for (const auto& u : enumerate_planted(n))
    for (int r = 0; r < 6; ++r) out.insert(canonical(CtreeCode{r, u}));
  return {out.begin(), out.end()};
}

}  // namespace ctree
