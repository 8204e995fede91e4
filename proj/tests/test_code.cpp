#include <ctree/code.hpp>
#include <ctree/numbers.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace ctree;
using V = std::vector<int>;

TEST_CASE("parse and format") {
  CtreeCode c = parse_code("2:3,0,1,1,1,0");
  CHECK(c.rotation == 2);
  CHECK(c.gaps == V{3, 0, 1, 1, 1, 0});
  CHECK(c.node_count() == 4);
  CHECK(format_code(c) == "2:3,0,1,1,1,0");

  CtreeCode one = parse_code("0:0,0,0");
  CHECK(one.rotation == 0);
  CHECK(one.gaps == V{0, 0, 0});

  CtreeCode zero = parse_code("4:-");
  CHECK(zero.is_edge_tree());
  CHECK(zero.node_count() == 0);
  CHECK(format_code(zero) == "4:-");

  CHECK_THROWS_AS(parse_code("7:1,0"), std::out_of_range);
  CHECK_THROWS_AS(parse_code("2:1,,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_code("2:1, 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_code("x:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_code("2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_code("2:-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_code("2:"), std::invalid_argument);
}

TEST_CASE("prune_first_zero") {
  CHECK(prune_first_zero(V{1, 1, 2, 1, 0, 2, 3, 0}) == V{1, 1, 2, 0, 1, 3, 0});
  CHECK(prune_first_zero(V{1, 0, 1, 0}) == V{0, 0, 0});
  CHECK_THROWS_AS(prune_first_zero(V{1, 1, 0, 0}), std::domain_error);  // right neighbour is 0
  CHECK_THROWS_AS(prune_first_zero(V{1, 1, 1, 1}), std::domain_error);  // no zero
  CHECK_THROWS_AS(prune_first_zero(V{0, 0, 0}), std::domain_error);     // too short
}

TEST_CASE("validate reproduces the worked pruning chain") {
  auto trace = validate(V{1, 1, 2, 1, 0, 2, 3, 0});
  REQUIRE(trace.valid);
  std::vector<V> expected = {
      {1, 1, 2, 1, 0, 2, 3, 0}, {1, 1, 2, 0, 1, 3, 0}, {1, 1, 1, 0, 3, 0},
      {1, 1, 0, 2, 0},          {1, 0, 1, 0},          {0, 0, 0},
  };
  CHECK(trace.steps == expected);
}

TEST_CASE("validate verdicts") {
  auto t = validate(V{3, 0, 1, 1, 1, 0});
  REQUIRE(t.valid);
  std::vector<V> expected = {{3, 0, 1, 1, 1, 0}, {2, 0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 0}};
  CHECK(t.steps == expected);

  CHECK(validate(V{0, 0, 0}).valid);
  CHECK(validate(V{}).valid);  // 0-ctree marker

  auto bad = validate(V{0, 0, 0, 0});
  CHECK_FALSE(bad.valid);
  CHECK(bad.reason.find("sum") != std::string::npos);

  CHECK_FALSE(validate(V{1, 1}).valid);
  CHECK_FALSE(validate(V{2, 0, 0, 0}).valid);   // underflow during pruning
  CHECK_FALSE(validate(V{1, 1, 1, 1, 0}).valid);
  CHECK_FALSE(validate(V{0, 1, -1, 2}).valid);
}

TEST_CASE("grow_at") {
  CHECK(grow_at(V{0, 0, 0}, 1) == V{1, 0, 1, 0});
  CHECK(grow_at(V{0, 0, 0}, 2) == V{0, 1, 0, 1});
  CHECK(grow_at(V{0, 0, 0}, 3) == V{0, 1, 0, 1});  // wrapped pair, 0 written first
  CHECK_THROWS_AS(grow_at(V{0, 0, 0}, 0), std::out_of_range);
  CHECK_THROWS_AS(grow_at(V{0, 0, 0}, 4), std::out_of_range);
  CHECK_THROWS_AS(grow_at(V{}, 1), std::domain_error);
}

TEST_CASE("grow and prune are inverse where composable") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& u : enumerate_planted(n)) {
      for (int i = 1; i <= static_cast<int>(u.size()); ++i) {
        V grown = grow_at(u, i);
        CHECK(validate(grown).valid);
        // Whenever the inserted 0 is the first 0 of the grown sequence,
        // pruning undoes the growth exactly.
        std::size_t zero_pos = (i == static_cast<int>(u.size()))
                                   ? 0
                                   : static_cast<std::size_t>(i);
        auto first_zero = std::find(grown.begin(), grown.end(), 0) - grown.begin();
        if (static_cast<std::size_t>(first_zero) == zero_pos)
          CHECK(prune_first_zero(grown) == u);
      }
    }
  }
}

TEST_CASE("reroot") {
  CtreeCode c = parse_code("2:3,0,1,1,1,0");
  CHECK(reroot(c) == parse_code("1:0,1,1,1,0,3"));
  CHECK(reroot(parse_code("3:0,1,0,1")) == parse_code("5:1,0,1,0"));
  CHECK(reroot(parse_code("1:-")) == parse_code("4:-"));

  // n+2 rerootings return to the start.
  for (int n = 0; n <= 6; ++n)
    for (const auto& u : enumerate_planted(n))
      for (int r = 0; r < 6; ++r) {
        CtreeCode code{r, u};
        CtreeCode cur = code;
        for (int i = 0; i < n + 2; ++i) cur = reroot(cur);
        CHECK(cur == code);
      }
}

TEST_CASE("canonical forms") {
  CtreeCode c = parse_code("3:0,1,0,1");
  auto orbit = reroot_orbit(c);
  std::set<CtreeCode> orbit_set(orbit.begin(), orbit.end());
  std::set<CtreeCode> expected{parse_code("3:0,1,0,1"), parse_code("5:1,0,1,0"),
                               parse_code("0:0,1,0,1"), parse_code("2:1,0,1,0")};
  CHECK(orbit_set == expected);
  CHECK(canonical(c) == parse_code("0:0,1,0,1"));

  CHECK(canonical(parse_code("0:0,0,0")) == parse_code("0:0,0,0"));
  auto one_orbit = reroot_orbit(parse_code("0:0,0,0"));
  CHECK(one_orbit.size() == 3);
  CHECK(one_orbit[1].rotation == 2);
  CHECK(one_orbit[2].rotation == 4);

  for (int n = 0; n <= 7; ++n)
    for (const auto& u : enumerate_planted(n))
      for (int r = 0; r < 6; ++r) {
        CtreeCode code{r, u};
        CHECK(canonical(reroot(code)) == canonical(code));
      }
}

TEST_CASE("reroot orbits have full size n+2") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& u : enumerate_planted(n))
      for (int r = 0; r < 6; ++r) {
        auto orbit = reroot_orbit(CtreeCode{r, u});
        std::set<CtreeCode> distinct(orbit.begin(), orbit.end());
        CHECK(distinct.size() == static_cast<std::size_t>(n + 2));
      }
}

TEST_CASE("enumerate_planted") {
  CHECK(enumerate_planted(1) == std::vector<V>{{0, 0, 0}});
  CHECK(enumerate_planted(2) == std::vector<V>{{0, 1, 0, 1}, {1, 0, 1, 0}});
  CHECK(enumerate_planted(5).size() == 42);

  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_planted(n);
    CHECK(Exact(all.size()) == catalan(n));
    for (const auto& u : all) {
      long sum = 0;
      for (int v : u) sum += v;
      CHECK(sum == 2 * n - 2);
      CHECK(u.size() == static_cast<std::size_t>(n + 2));
    }
  }
}

TEST_CASE("recognizer accepts exactly the generated sequences") {
  // Every sequence of length n+2 with entries summing to 2n-2 is either
  // generated by growth (then validate says yes) or not (then no).
  for (int n = 1; n <= 7; ++n) {
    std::set<V> generated;
    for (const auto& u : enumerate_planted(n)) generated.insert(u);
    // Walk all compositions of 2n-2 into n+2 nonnegative parts.
    V comp(n + 2, 0);
    comp[0] = 2 * n - 2;
    for (;;) {
      CHECK(validate(comp).valid == (generated.count(comp) > 0));
      // next composition in colex-ish order
      int total = 2 * n - 2;
      int i = 0;
      while (i < n + 1 && comp[i] == 0) ++i;
      if (i == n + 1) break;
      int val = comp[i];
      comp[i] = 0;
      comp[0] = val - 1;
      comp[i + 1] += 1;
      (void)total;
    }
  }
}

TEST_CASE("enumerate_unrooted") {
  CHECK(enumerate_unrooted(0).size() == 3);
  CHECK(enumerate_unrooted(1).size() == 2);
  CHECK(enumerate_unrooted(2).size() == 3);
  CHECK(enumerate_unrooted(4).size() == 14);
  for (int n = 0; n <= 7; ++n) {
    auto all = enumerate_unrooted(n);
    CHECK(Exact(all.size()) == ctree_count(n, false));
    CHECK(Exact(all.size()) * Exact(n + 2) == ctree_count(n, true));
    for (const auto& c : all) CHECK(c == canonical(c));
  }
}
