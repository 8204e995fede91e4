// Command-line surface: enumeration, validation, recurrence checks, path
// statistics, the configuration bijection, and SVG rendering.  Exit codes:
// 0 all checks pass, 1 a verification failed, 2 usage or parse error.
// Machine output (stdout, text or JSON) is byte-deterministic; timing goes
// to stderr.  JSON serializes every count as a decimal string.

#include <ctree/bijection.hpp>
#include <ctree/code.hpp>
#include <ctree/numbers.hpp>
#include <ctree/paths.hpp>
#include <ctree/svg.hpp>
#include <ctree/tree.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace ctree;

std::string join_gaps(const std::vector<int>& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(u[i]);
  }
  return s.empty() ? "-" : s;
}

int cmd_numbers(long m, long max_n, bool check, bool as_json) {
  bool all_pass = true;
  json rows = json::array();
  for (long n = 0; n <= max_n; ++n) {
    Exact value = super_catalan(m, n);
    json row;
    row["n"] = n;
    row["value"] = to_decimal(value);
    std::string line = "n=" + std::to_string(n) + " u=" + to_decimal(value);
    if (check && n >= m) {
      Exact rhs = recurrence_rhs(m, n);
      bool ok = rhs == value;
      all_pass = all_pass && ok;
      row["recurrence"] = to_decimal(rhs);
      row["pass"] = ok;
      line += " recurrence=" + to_decimal(rhs) + (ok ? " ok" : " FAIL");
    }
    rows.push_back(row);
    if (!as_json) std::cout << line << "\n";
  }
  if (as_json) {
    json out;
    out["command"] = "numbers";
    out["m"] = m;
    out["rows"] = rows;
    out["pass"] = all_pass;
    std::cout << out.dump() << "\n";
  } else if (check) {
    std::cout << (all_pass ? "all rows pass" : "FAILURES above") << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_enumerate(int n, bool rooted, bool by_hidden, bool count_only, bool as_json) {
  json out;
  out["command"] = "enumerate";
  out["n"] = n;
  bool pass = true;

  if (by_hidden) {
    std::map<int, long long> census;
    for (const CtreeCode& code : enumerate_unrooted(n))
      ++census[class_census(from_code(code)).hidden];
    json rows = json::array();
    for (const auto& [k, cnt] : census) {
      json row;
      row["hidden"] = k;
      row["count"] = std::to_string(cnt);
      std::string line = "hidden=" + std::to_string(k) + " count=" + std::to_string(cnt);
      if (n >= 2) {
        Exact expect = hidden_class_count(n, k);
        bool ok = Exact(cnt) == expect;
        pass = pass && ok;
        row["formula"] = to_decimal(expect);
        row["pass"] = ok;
        line += " formula=" + to_decimal(expect) + (ok ? " ok" : " FAIL");
      }
      rows.push_back(row);
      if (!as_json) std::cout << line << "\n";
    }
    out["rows"] = rows;
    out["pass"] = pass;
    if (as_json) std::cout << out.dump() << "\n";
    return pass ? 0 : 1;
  }

  std::vector<std::string> codes;
  if (rooted) {
    for (const auto& u : enumerate_planted(n))
      for (int r = 0; r < 6; ++r) codes.push_back(format_code(CtreeCode{r, u}));
    std::sort(codes.begin(), codes.end());
  } else {
    for (const CtreeCode& code : enumerate_unrooted(n)) codes.push_back(format_code(code));
  }
  if (count_only) {
    out["count"] = std::to_string(codes.size());
    if (as_json)
      std::cout << out.dump() << "\n";
    else
      std::cout << codes.size() << "\n";
    return 0;
  }
  out["codes"] = codes;
  if (as_json) {
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& c : codes) std::cout << c << "\n";
  }
  return 0;
}

int cmd_validate(const std::string& text, bool as_json) {
  CtreeCode code = parse_code(text);  // parse errors surface as exit 2
  ValidationTrace trace = validate(code.gaps);
  if (as_json) {
    json out;
    out["command"] = "validate";
    out["code"] = format_code(code);
    json steps = json::array();
    for (const auto& step : trace.steps) steps.push_back(join_gaps(step));
    out["trace"] = steps;
    out["valid"] = trace.valid;
    if (!trace.valid) {
      out["reason"] = trace.reason;
      out["failing_index"] = trace.failing_index;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "code: " << format_code(code) << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
      std::cout << "step " << i << ": " << join_gaps(trace.steps[i]) << "\n";
    std::cout << "verdict: " << (trace.valid ? "valid" : "invalid") << "\n";
    if (!trace.valid) std::cout << "reason: " << trace.reason << "\n";
  }
  return trace.valid ? 0 : 1;
}

int cmd_bijection_forward(const std::string& path, bool as_json) {
  std::string text;
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read configuration file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Configuration cfg = parse_config(text);
  auto errors = validate_config(cfg);
  if (!errors.empty()) {
    for (const auto& e : errors) std::cerr << "invalid configuration: " << e << "\n";
    return 2;
  }
  CtreeCode tree = forward(cfg);
  if (as_json) {
    json out;
    out["command"] = "bijection forward";
    out["tree"] = format_code(tree);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << format_code(tree) << "\n";
  }
  return 0;
}

int cmd_bijection_inverse(const std::string& text, bool as_json) {
  Configuration cfg = inverse(parse_code(text));
  if (as_json) {
    json out;
    out["command"] = "bijection inverse";
    out["configuration"] = json::parse(serialize_config(cfg));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << serialize_config(cfg) << "\n";
  }
  return 0;
}

int cmd_bijection_verify(int min_n, int max_n, bool as_json) {
  bool pass = true;
  json reports = json::array();
  for (int n = min_n; n <= max_n; ++n) {
    BijectionReport report = verify_bijection(n);
    pass = pass && report.pass;
    for (const auto& c : report.checks) {
      json row;
      row["n"] = n;
      row["k"] = c.k;
      row["formula"] = to_decimal(c.expected);
      row["configs"] = std::to_string(c.config_count);
      row["trees"] = std::to_string(c.tree_count);
      row["image"] = c.image_matches;
      row["round_trips"] = c.round_trips;
      row["pass"] = c.pass;
      reports.push_back(row);
      if (!as_json)
        std::cout << "n=" << n << " k=" << c.k << " formula=" << to_decimal(c.expected)
                  << " configs=" << c.config_count << " trees=" << c.tree_count
                  << " image=" << (c.image_matches ? "ok" : "FAIL")
                  << " round-trips=" << (c.round_trips ? "ok" : "FAIL")
                  << (c.pass ? "" : "  <-- FAIL") << "\n";
    }
  }
  if (as_json) {
    json out;
    out["command"] = "bijection verify";
    out["rows"] = reports;
    out["pass"] = pass;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (pass ? "all classes pass" : "FAILURES above") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_paths(int m, int n, const std::string& stat, bool as_json) {
  if ((m == 1 && stat == "odd-inclines") || (m == 0 && stat == "even-inclines"))
    throw CLI::ValidationError("--stat", "odd-inclines pairs with m=0, even-inclines with m=1");

  InterpretationReport report = verify_interpretation(m, n);
  bool use_duu = stat == "duu";
  bool pass = true;
  json rows = json::array();
  for (const auto& c : report.checks) {
    long long count = use_duu ? c.duu : c.incline;
    bool ok = Exact(count) == c.term;
    pass = pass && ok;
    json row;
    row["k"] = c.k;
    row["count"] = std::to_string(count);
    row["term"] = to_decimal(c.term);
    row["pass"] = ok;
    rows.push_back(row);
    if (!as_json)
      std::cout << "k=" << c.k << " count=" << count << " term=" << to_decimal(c.term)
                << (ok ? " ok" : " FAIL") << "\n";
  }
  if (as_json) {
    json out;
    out["command"] = "paths";
    out["m"] = m;
    out["n"] = n;
    out["stat"] = stat;
    out["rows"] = rows;
    out["pass"] = pass;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (pass ? "distribution matches the recurrence terms" : "FAILURES above")
              << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_render(const std::string& text, const std::string& output, bool as_json) {
  Ctree tree = from_code(parse_code(text));
  std::string svg = svg_render(tree);
  std::ofstream out_file(output, std::ios::binary);
  if (!out_file) throw std::runtime_error("cannot write " + output);
  out_file << svg;
  out_file.close();
  if (as_json) {
    json out;
    out["command"] = "render";
    out["file"] = output;
    out["vertices"] = tree.vertex_count();
    out["edges"] = tree.edges().size();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "wrote " << output << " (" << tree.vertex_count() << " vertices, "
              << tree.edges().size() << " edges)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aligned cubic trees: exact counts, codes, statistics and the\n"
               "configuration bijection"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* numbers = app.add_subcommand("numbers", "super-Catalan table and recurrence check");
  long num_m = 2, num_max_n = 10;
  bool num_check = false;
  numbers->add_option("--m", num_m, "order m")->check(CLI::NonNegativeNumber);
  numbers->add_option("--max-n", num_max_n, "largest n")->check(CLI::NonNegativeNumber);
  numbers->add_flag("--check", num_check, "compare against the recurrence");
  add_format(numbers);

  auto* enumerate = app.add_subcommand("enumerate", "list aligned cubic trees by code");
  int enum_n = 2;
  bool enum_rooted = false, enum_by_hidden = false, enum_count_only = false;
  enumerate->add_option("--n", enum_n, "number of nodes")->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--rooted", enum_rooted, "list all rooted codes");
  enumerate->add_flag("--by-hidden", enum_by_hidden, "group counts by hidden nodes");
  enumerate->add_flag("--count-only", enum_count_only, "print the count only");
  add_format(enumerate);

  auto* validate_cmd = app.add_subcommand("validate", "pruning check of a coding sequence");
  std::string validate_code;
  validate_cmd->add_option("code", validate_code, "code in r:u1,u2,... form")->required();
  add_format(validate_cmd);

  auto* bijection = app.add_subcommand("bijection", "configuration <-> ctree bijection");
  bijection->require_subcommand(1);
  auto* bij_forward = bijection->add_subcommand("forward", "configuration file -> tree code");
  std::string bij_config;
  bij_forward->add_option("--config", bij_config, "configuration JSON file, or - for stdin")
      ->required();
  add_format(bij_forward);
  auto* bij_inverse = bijection->add_subcommand("inverse", "tree code -> configuration");
  std::string bij_code;
  bij_inverse->add_option("--code", bij_code, "tree code")->required();
  add_format(bij_inverse);
  auto* bij_verify = bijection->add_subcommand("verify", "exhaustive bijection check");
  int bij_min_n = 2, bij_max_n = 6;
  bij_verify->add_option("--min-n", bij_min_n, "first size")->check(CLI::PositiveNumber);
  bij_verify->add_option("--max-n", bij_max_n, "last size")->check(CLI::PositiveNumber);
  add_format(bij_verify);

  auto* paths_cmd = app.add_subcommand("paths", "lattice path statistics vs the recurrence");
  int paths_m = 1, paths_n = 3;
  std::string paths_stat = "duu";
  paths_cmd->add_option("--m", paths_m, "order, 0 or 1")->check(CLI::Range(0, 1));
  paths_cmd->add_option("--n", paths_n, "path size")->required()->check(CLI::PositiveNumber);
  paths_cmd->add_option("--stat", paths_stat, "statistic")
      ->check(CLI::IsMember({"duu", "odd-inclines", "even-inclines"}));
  add_format(paths_cmd);

  auto* render = app.add_subcommand("render", "draw a code as SVG");
  std::string render_code, render_out;
  render->add_option("code", render_code, "code in r:u1,u2,... form")->required();
  render->add_option("-o,--output", render_out, "output SVG path")->required();
  add_format(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool as_json = format == "json";
  auto started = std::chrono::steady_clock::now();
  int rc = 2;
  try {
    if (*numbers) {
      if (num_check && num_max_n < num_m)
        throw CLI::ValidationError("--max-n", "--check needs max-n >= m");
      rc = cmd_numbers(num_m, num_max_n, num_check, as_json);
    } else if (*enumerate) {
      rc = cmd_enumerate(enum_n, enum_rooted, enum_by_hidden, enum_count_only, as_json);
    } else if (*validate_cmd) {
      rc = cmd_validate(validate_code, as_json);
    } else if (*bij_forward) {
      rc = cmd_bijection_forward(bij_config, as_json);
    } else if (*bij_inverse) {
      rc = cmd_bijection_inverse(bij_code, as_json);
    } else if (*bij_verify) {
      if (bij_max_n < bij_min_n) throw CLI::ValidationError("--max-n", "needs max-n >= min-n");
      rc = cmd_bijection_verify(bij_min_n, bij_max_n, as_json);
    } else if (*paths_cmd) {
      rc = cmd_paths(paths_m, paths_n, paths_stat, as_json);
    } else if (*render) {
      rc = cmd_render(render_code, render_out, as_json);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed: " << static_cast<long>(elapsed.count()) << " ms\n";
  return rc;
}
