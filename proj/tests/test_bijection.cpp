#include <ctree/bijection.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace ctree;

namespace {

Configuration make_config(int n, const std::string& base, std::vector<std::string> strips) {
  Configuration cfg;
  cfg.target_nodes = n;
  cfg.base = parse_code(base);
  cfg.strips = std::move(strips);
  return cfg;
}

}  // namespace

TEST_CASE("base_edge_order sizes") {
  CHECK(base_edge_order(parse_code("0:-")).size() == 1);
  CHECK(base_edge_order(parse_code("0:0,0,0")).size() == 3);
  CHECK(base_edge_order(parse_code("2:3,0,1,1,1,0")).size() == 9);
}

TEST_CASE("config serialization") {
  Configuration cfg = make_config(4, "0:0,0,0", {"", "", ""});
  std::string text = serialize_config(cfg);
  CHECK(text == R"({"n":4,"base":"0:0,0,0","strips":["","",""]})");
  CHECK(parse_config(text) == cfg);
}

TEST_CASE("validate_config accepts the worked (12,2) configuration") {
  // Base: the 2-node tree with a vertical middle edge; strips follow the
  // worm order of its canonical rooting.
  Configuration cfg = make_config(12, "1:1,0,1,0", {"", "BLL", "", "R", "RL"});
  CHECK(validate_config(cfg).empty());
}

TEST_CASE("validate_config rejections") {
  // Odd center strip must open with T or B.
  Configuration bad_tweak = make_config(12, "1:1,0,1,0", {"", "LLL", "", "R", "RL"});
  CHECK_FALSE(validate_config(bad_tweak).empty());

  // T/B outside the center edge.
  Configuration stray_tb = make_config(12, "1:1,0,1,0", {"T", "BLL", "", "R", "L"});
  CHECK_FALSE(validate_config(stray_tb).empty());

  // Square count off by one.
  Configuration bad_count = make_config(12, "1:1,0,1,0", {"", "BLL", "", "R", "RLL"});
  CHECK_FALSE(validate_config(bad_count).empty());

  // Wrong strip count.
  Configuration bad_strips = make_config(4, "0:0,0,0", {"", ""});
  CHECK_FALSE(validate_config(bad_strips).empty());

  // Non-canonical base.
  Configuration bad_base = make_config(4, "2:0,0,0", {"", "", ""});
  CHECK_FALSE(validate_config(bad_base).empty());

  // Even center strip may not carry T/B.
  Configuration even_tb = make_config(4, "0:-", {"TL"});
  CHECK_FALSE(validate_config(even_tb).empty());
}

TEST_CASE("enumerate_configs counts match the formula") {
  CHECK(enumerate_configs(2, 0).size() == 3);
  CHECK(enumerate_configs(4, 1).size() == 2);
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; 2 * k <= n - 2; ++k) {
      auto configs = enumerate_configs(n, k);
      CHECK(Exact(configs.size()) == hidden_class_count(n, k));
      for (const auto& cfg : configs) CHECK(validate_config(cfg).empty());
    }
  CHECK_THROWS_AS(enumerate_configs(3, 1), std::domain_error);
  CHECK_THROWS_AS(enumerate_configs(1, 0), std::domain_error);
}

TEST_CASE("T/B squares appear exactly on odd center-edge strips") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; 2 * k <= n - 2; ++k)
      for (const auto& cfg : enumerate_configs(n, k)) {
        Ctree bt = from_code(cfg.base);
        CenterRef c = center(bt);
        auto order = worm_edge_order(bt, bt.root);
        bool has_tb = false;
        for (const auto& s : cfg.strips)
          for (char ch : s) has_tb = has_tb || ch == 'T' || ch == 'B';
        bool expect_tb = false;
        if (!c.is_node)
          for (std::size_t i = 0; i < order.size(); ++i)
            if (order[i] == c.edge) expect_tb = cfg.strips[i].size() % 2 == 1;
        CHECK(has_tb == expect_tb);
      }
}

TEST_CASE("forward of the empty (2,0) configuration") {
  // South-edge base, no squares: the 2-ctree whose middle edge points South.
  CtreeCode out = forward(make_config(2, "0:-", {""}));
  CHECK(out == parse_code("1:1,0,1,0"));
  Ctree t = from_code(out);
  CHECK(class_census(t) == ClassCensus{0, 0, 2, 0});
}

TEST_CASE("forward of the (4,1) configurations") {
  std::set<CtreeCode> images;
  for (const auto& cfg : enumerate_configs(4, 1)) {
    CHECK(cfg.strips == std::vector<std::string>{"", "", ""});
    CtreeCode out = forward(cfg);
    Ctree t = from_code(out);
    CHECK(class_census(t) == ClassCensus{1, 0, 3, 0});
    images.insert(out);
  }
  std::set<CtreeCode> expected;
  for (const auto& code : enumerate_unrooted(4))
    if (class_census(from_code(code)).hidden == 1) expected.insert(code);
  CHECK(images == expected);
}

TEST_CASE("forward produces the right census classes, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; 2 * k <= n - 2; ++k)
      for (const auto& cfg : enumerate_configs(n, k)) {
        CtreeCode out = forward(cfg);
        CHECK(out == canonical(out));
        ClassCensus c = class_census(from_code(out));
        CHECK(c.hidden == k);
        CHECK(c.naked == k + 2);
        CHECK(c.exposed == n - 2 * k - 2);
      }
}

TEST_CASE("round trips, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; 2 * k <= n - 2; ++k)
      for (const auto& cfg : enumerate_configs(n, k))
        CHECK(inverse(forward(cfg)) == cfg);
    for (const auto& code : enumerate_unrooted(n))
      CHECK(forward(inverse(code)) == code);
  }
}

TEST_CASE("inverse of tiny trees") {
  for (const auto& code : enumerate_unrooted(2)) {
    Configuration cfg = inverse(code);
    CHECK(cfg.base.node_count() == 0);
    CHECK(cfg.strips == std::vector<std::string>{""});
  }

  // A 4-ctree with one hidden node contracts to a bare 1-ctree.
  for (const auto& code : enumerate_unrooted(4)) {
    if (class_census(from_code(code)).hidden != 1) continue;
    Configuration cfg = inverse(code);
    CHECK(cfg.base.node_count() == 1);
    CHECK(cfg.strips == std::vector<std::string>{"", "", ""});
  }

  // The worked 4-ctree example has no hidden nodes: 0-ctree base, 2 squares.
  Configuration cfg = inverse(parse_code("2:3,0,1,1,1,0"));
  CHECK(cfg.base.node_count() == 0);
  long total = 0;
  for (const auto& s : cfg.strips) total += static_cast<long>(s.size());
  CHECK(total == 2);
  CHECK(forward(cfg) == canonical(parse_code("2:3,0,1,1,1,0")));

  CHECK_THROWS_AS(inverse(parse_code("0:0,0,0")), std::domain_error);
}

TEST_CASE("verify_bijection small sizes") {
  auto r2 = verify_bijection(2);
  CHECK(r2.pass);
  REQUIRE(r2.checks.size() == 1);
  CHECK(r2.checks[0].config_count == 3);
  CHECK(r2.checks[0].tree_count == 3);

  auto r4 = verify_bijection(4);
  CHECK(r4.pass);
  REQUIRE(r4.checks.size() == 2);
  CHECK(r4.checks[0].config_count == 12);
  CHECK(r4.checks[1].config_count == 2);

  CHECK_THROWS_AS(verify_bijection(1), std::domain_error);
}
