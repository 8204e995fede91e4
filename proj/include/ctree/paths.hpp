#pragma once

// Lattice-path statistics behind the m = 0 and m = 1 readings of the
// recurrence: DUU occurrences, inclines at odd/even locations, exhaustive
// family enumeration, and the term-by-term comparison of the brute-force
// distributions against the recurrence summands.  Paths are plain strings
// over {U, D}.

#include <ctree/numbers.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctree {

// Number of positions i with steps (i, i+1, i+2) = (D, U, U); overlaps count.
inline int duu_count(std::string_view path) {
  int count = 0;
  for (std::size_t i = 0; i + 2 < path.size(); ++i)
    if (path[i] == 'D' && path[i + 1] == 'U' && path[i + 2] == 'U') ++count;
  return count;
}

// 1-based positions i where step i equals step i+1 (an incline UU or DD).
inline std::vector<int> incline_locations(std::string_view path) {
  std::vector<int> locs;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (path[i] == path[i + 1]) locs.push_back(static_cast<int>(i + 1));
  return locs;
}

enum class Parity { Odd, Even };

inline int incline_parity_count(std::string_view path, Parity parity) {
  int count = 0;
  for (int loc : incline_locations(path))
    if ((loc % 2 == 1) == (parity == Parity::Odd)) ++count;
  return count;
}

enum class PathConstraint { None, Dyck, StartsUp };

// All paths with the given numbers of U and D steps satisfying the
// constraint, in lexicographic order with U < D.
inline std::vector<std::string> enumerate_paths(int ups, int downs, PathConstraint constraint) {
  if (ups < 0 || downs < 0) throw std::domain_error("enumerate_paths: negative step count");
  if (constraint == PathConstraint::Dyck && ups != downs)
    throw std::invalid_argument("enumerate_paths: Dyck paths need equal U and D counts");
  if (constraint == PathConstraint::StartsUp && ups == 0 && downs > 0)
    throw std::invalid_argument("enumerate_paths: cannot start up without an upstep");

  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int u, int d, int height) -> void {
    if (u == 0 && d == 0) {
      out.push_back(cur);
      return;
    }
    if (u > 0) {
      cur += 'U';
      self(self, u - 1, d, height + 1);
      cur.pop_back();
    }
    if (d > 0) {
      if (constraint == PathConstraint::Dyck && height == 0) return;
      if (constraint == PathConstraint::StartsUp && cur.empty()) return;
      cur += 'D';
      self(self, u, d - 1, height - 1);
      cur.pop_back();
    }
  };
  rec(rec, ups, downs, 0);
  return out;
}

enum class PathStat { Duu, OddInclinesHalved, EvenInclinesHalved };

struct PathFamily {
  int ups = 0;
  int downs = 0;
  PathConstraint constraint = PathConstraint::None;
};

// Histogram of the statistic over the family.  Incline counts are halved;
// a family member with an odd incline count of the requested parity is an
// invariant violation, not a verdict.
inline std::map<int, long long> statistic_distribution(const PathFamily& family, PathStat stat) {
  std::map<int, long long> hist;
  for (const std::string& p : enumerate_paths(family.ups, family.downs, family.constraint)) {
    int value;
    if (stat == PathStat::Duu) {
      value = duu_count(p);
    } else {
      Parity parity = stat == PathStat::OddInclinesHalved ? Parity::Odd : Parity::Even;
      int raw = incline_parity_count(p, parity);
      if (raw % 2 != 0)
        throw std::logic_error("statistic_distribution: odd incline count on path " + p);
      value = raw / 2;
    }
    ++hist[value];
  }
  return hist;
}

struct InterpretationCheck {
  int k = 0;
  Exact term;           // 2^(n-m-2k) C(n-m,2k) u_k
  long long duu = 0;    // brute-force DUU count at k
  long long incline = 0;  // brute-force halved incline count at k
  bool pass = false;
};

struct InterpretationReport {
  int m = 0;
  int n = 0;
  std::vector<InterpretationCheck> checks;
  bool pass = false;
};

// Compare, term by term in k, the brute-force distributions against the
// recurrence summands.  For m = 1 both statistics live on Dyck n-paths
// (inclines at even locations); for m = 0 the DUU statistic lives on
// (n, n-1) paths and the incline statistic at odd locations on (n, n)
// paths that start up.
inline InterpretationReport verify_interpretation(int m, int n) {
  if (m != 0 && m != 1) throw std::domain_error("verify_interpretation: m must be 0 or 1");
  if (n < 1) throw std::domain_error("verify_interpretation: n must be positive");

  PathFamily duu_family, incline_family;
  PathStat incline_stat;
  if (m == 1) {
    duu_family = {n, n, PathConstraint::Dyck};
    incline_family = duu_family;
    incline_stat = PathStat::EvenInclinesHalved;
  } else {
    duu_family = {n, n - 1, PathConstraint::None};
    incline_family = {n, n, PathConstraint::StartsUp};
    incline_stat = PathStat::OddInclinesHalved;
  }

  auto duu_hist = statistic_distribution(duu_family, PathStat::Duu);
  auto incline_hist = statistic_distribution(incline_family, incline_stat);

  InterpretationReport report;
  report.m = m;
  report.n = n;
  report.pass = true;
  int k_max = (n - m) / 2;
  int seen_max = k_max;
  if (!duu_hist.empty()) seen_max = std::max(seen_max, duu_hist.rbegin()->first);
  if (!incline_hist.empty()) seen_max = std::max(seen_max, incline_hist.rbegin()->first);
  for (int k = 0; k <= seen_max; ++k) {
    InterpretationCheck check;
    check.k = k;
    check.term = k <= k_max ? recurrence_term(m, n, k) : Exact(0);
    auto d = duu_hist.find(k);
    auto i = incline_hist.find(k);
    check.duu = d == duu_hist.end() ? 0 : d->second;
    check.incline = i == incline_hist.end() ? 0 : i->second;
    check.pass = Exact(check.duu) == check.term && Exact(check.incline) == check.term;
    report.pass = report.pass && check.pass;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace ctree
