// Command-line front end: decompose Betti tables into chains of pure
// diagrams and run the Ferrers / monomial / Gorenstein constructions.

#include "betti/io.hpp"

#include "CLI11.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using namespace betti;
using nlohmann::json;

bool color_enabled() {
  const char* env = std::getenv("BETTI_FORGE_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string green(const std::string& text) { return paint(text, "32"); }
std::string red(const std::string& text) { return paint(text, "31"); }
std::string yellow(const std::string& text) { return paint(text, "33"); }

std::string decomposition_text(const Decomposition& d) {
  std::ostringstream out;
  for (const auto& term : d.terms) {
    out << rat_to_string(term.coeff) << " · π" << to_string(term.sequence) << '\n';
  }
  return out.str();
}

std::string sequence_list_text(const std::vector<long>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i];
  }
  out << ')';
  return out.str();
}

void warn_non_integral(const Decomposition& d) {
  if (!check_integrality(d)) {
    std::cout << yellow("note: decomposition has non-integer coefficients") << '\n';
  }
}

BettiTable load_table(const std::string& path) {
  std::string text = io::read_file(path);
  if (path.size() >= 5 && path.ends_with(".json")) return io::table_from_json(text);
  return io::parse_table_text(text);
}

int cmd_decompose(const std::string& path, const std::string& format) {
  BettiTable table = load_table(path);
  Decomposition d = greedy_decompose(table);
  if (format == "json") {
    std::cout << io::decomposition_to_json(d) << '\n';
  } else {
    std::cout << decomposition_text(d);
    warn_non_integral(d);
  }
  return 0;
}

int cmd_ferrers(const std::string& path, bool ideal, bool quotient, bool identity,
                bool alpha, const std::string& format) {
  FerrersHypergraph f = io::hypergraph_from_json(io::read_file(path));
  if (!ideal && !quotient && !identity && !alpha) ideal = true;
  json out;
  if (alpha) {
    std::vector<long> a = alpha_sequence(f);
    if (format == "json") {
      out["alpha"] = a;
    } else {
      std::cout << "alpha: " << sequence_list_text(a) << '\n';
    }
  }
  if (ideal) {
    BettiTable betti = ideal_betti(f);
    Decomposition d = ideal_decomposition(f);
    if (format == "json") {
      out["ideal"] = {{"betti", json::parse(io::table_to_json(betti))},
                      {"decomposition", json::parse(io::decomposition_to_json(d))}};
    } else {
      std::cout << "betti table of the ideal:\n" << io::render_table_text(betti);
      std::cout << "decomposition:\n" << decomposition_text(d);
      warn_non_integral(d);
    }
  }
  if (quotient) {
    BettiTable betti = quotient_betti(f);
    auto summands = quotient_summands(f);
    Decomposition d = quotient_decomposition(f);
    if (format == "json") {
      json rows = json::array();
      for (const auto& summand : summands) {
        rows.push_back({{"axis", summand.axis},
                        {"projection", summand.projection},
                        {"n", summand.n},
                        {"k", summand.k}});
      }
      out["quotient"] = {{"betti", json::parse(io::table_to_json(betti))},
                         {"summands", std::move(rows)},
                         {"decomposition", json::parse(io::decomposition_to_json(d))}};
    } else {
      std::cout << "betti table of the quotient:\n" << io::render_table_text(betti);
      std::cout << "summands:\n";
      for (const auto& summand : summands) {
        std::cout << "axis " << summand.axis << ": S=" << to_string(summand.projection)
                  << " n=" << summand.n << " k=" << summand.k << '\n';
      }
      std::cout << "decomposition:\n" << decomposition_text(d);
      warn_non_integral(d);
    }
  }
  if (identity) {
    Rat value = ferrers_identity(f);
    bool ok = value == f.uniformity();
    if (format == "json") {
      out["identity"] = {{"expected", f.uniformity()},
                         {"value", rat_to_string(value)},
                         {"ok", ok}};
    } else {
      std::cout << f.uniformity() << " = " << rat_to_string(value) << ' '
                << (ok ? green("OK") : red("FAIL")) << '\n';
    }
    if (!ok) return 1;  // unreachable for a valid hypergraph
  }
  if (format == "json") std::cout << out.dump() << '\n';
  return 0;
}

int cmd_gorenstein(bool stacked, int s, int t, int c, int d, const std::string& format) {
  Decomposition dec = stacked ? stacked_decomposition(c, d)
                              : gorenstein_decomposition(GorensteinParams(s, t, c));
  GorensteinParams params = stacked ? GorensteinParams(d, 1, c) : GorensteinParams(s, t, c);
  BettiTable betti = gorenstein_betti(params);
  std::vector<Int> h = gorenstein_h_vector(params);
  SelfDualPairing pairing = self_dual_pairing(dec, params.s + params.c);
  if (format == "json") {
    json hv = json::array();
    for (const Int& value : h) hv.push_back(value.get_str());
    json pairs = json::array();
    for (const auto& [a, b] : pairing.pairs) pairs.push_back({a, b});
    json out{{"h_vector", std::move(hv)},
             {"betti", json::parse(io::table_to_json(betti))},
             {"decomposition", json::parse(io::decomposition_to_json(dec))},
             {"pairing", {{"shift", pairing.shift}, {"pairs", std::move(pairs)}}}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "h-vector: (";
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (i > 0) std::cout << ", ";
      std::cout << h[i].get_str();
    }
    std::cout << ")\n";
    std::cout << "betti table:\n" << io::render_table_text(betti);
    std::cout << "decomposition:\n" << decomposition_text(dec);
    std::cout << "self-dual pairing (m = " << pairing.shift << "):";
    for (const auto& [a, b] : pairing.pairs) std::cout << " (" << a << "," << b << ")";
    std::cout << '\n';
  }
  return 0;
}

int cmd_monomial(const std::string& path, bool to_ferrers, bool betti,
                 const std::string& format) {
  MonomialIdeal ideal = io::ideal_from_json(io::read_file(path));
  bool stable = is_strongly_stable(ideal);
  bool all = !to_ferrers && !betti;
  json out;
  if (format == "json") {
    out["strongly_stable"] = stable;
  } else if (all) {
    std::cout << "strongly stable: " << (stable ? "yes" : "no") << '\n';
  }
  if (betti || all) {
    BettiTable table = ek_betti(ideal);  // rejects non-stable input
    if (format == "json") {
      out["betti"] = json::parse(io::table_to_json(table));
    } else {
      std::cout << "betti table:\n" << io::render_table_text(table);
    }
  }
  if (to_ferrers || all) {
    FerrersHypergraph f = strongly_stable_to_ferrers(ideal);
    if (format == "json") {
      out["ferrers"] = json::parse(io::hypergraph_to_json(f));
    } else {
      std::cout << "ferrers cells:";
      for (const Cell& cell : f.cells()) std::cout << ' ' << to_string(cell);
      std::cout << '\n';
    }
  }
  if (format == "json") std::cout << out.dump() << '\n';
  return 0;
}

// Bundled example fixtures with their expected exact results.
int cmd_check(const std::string& dir) {
  int failed = 0;
  bool io_failed = false;
  auto run_case = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      std::cout << green("ok") << "   " << name << '\n';
    } catch (const io::ParseError& e) {
      io_failed = true;
      ++failed;
      std::cout << red("FAIL") << ' ' << name << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
      ++failed;
      std::cout << red("FAIL") << ' ' << name << ": " << e.what() << '\n';
    }
  };
  auto expect = [](bool ok, const std::string& detail) {
    if (!ok) throw std::runtime_error(detail);
  };
  auto fixture = [&dir](const std::string& name) { return io::read_file(dir + "/" + name); };

  run_case("pure-diagram pure_0_2_3_5", [&] {
    BettiTable expected = pure_diagram({0, 2, 3, 5}).table;
    expect(io::parse_table_text(fixture("pure_0_2_3_5.table")) == expected,
           "text fixture differs from the closed form");
    expect(io::table_from_json(fixture("pure_0_2_3_5.json")) == expected,
           "json fixture differs from the closed form");
  });

  run_case("ferrers-ideal example3_3", [&] {
    FerrersHypergraph f = io::hypergraph_from_json(fixture("example3_3.json"));
    BettiTable betti = ideal_betti(f);
    expect(io::parse_table_text(fixture("example3_3.table")) == betti,
           "text fixture differs from the computed table");
    expect(io::table_from_json(fixture("example3_3_betti.json")) == betti,
           "json fixture differs from the computed table");
    Decomposition expected{{{Rat(4), {3, 4, 5}}, {Rat(3), {3, 4}}, {Rat(1), {3}}}};
    expect(ideal_decomposition(f) == expected, "closed-form decomposition is off");
    expect(greedy_decompose(betti) == expected, "greedy decomposition is off");
  });

  run_case("ferrers-quotient example3_9", [&] {
    FerrersHypergraph f = io::hypergraph_from_json(fixture("example3_3.json"));
    BettiTable betti = quotient_betti(f);
    expect(io::parse_table_text(fixture("example3_9.table")) == betti,
           "text fixture differs from the computed table");
    expect(io::table_from_json(fixture("example3_9_betti.json")) == betti,
           "json fixture differs from the computed table");
    Decomposition expected{{{Rat(20), {0, 3, 4, 5}}, {Rat(8), {0, 3, 4}}}};
    expect(quotient_decomposition(f) == expected, "closed-form decomposition is off");
    expect(greedy_decompose(betti) == expected, "greedy decomposition is off");
  });

  run_case("self-dual example4_5", [&] {
    BettiTable table = io::parse_table_text(fixture("example4_5.table"));
    expect(io::table_from_json(fixture("example4_5.json")) == table,
           "json fixture differs from the text fixture");
    Decomposition expected{
        {{Rat(8), {0, 3, 4}}, {Rat(6), {0, 3, 6}}, {Rat(8), {2, 3, 6}}}};
    expect(greedy_decompose(table) == expected, "greedy decomposition is off");
    expect(table_stats(table).duality_shift == 6, "duality shift is off");
    SelfDualPairing pairing = self_dual_pairing(expected, 6);
    expect(pairing.pairs == std::vector<std::pair<int, int>>{{1, 3}, {2, 2}},
           "pairing is off");
  });

  run_case("gorenstein example5_8", [&] {
    GorensteinParams p(3, 1, 4);
    BettiTable betti = gorenstein_betti(p);
    expect(io::parse_table_text(fixture("example5_8.table")) == betti,
           "text fixture differs from the closed form");
    expect(io::table_from_json(fixture("example5_8_betti.json")) == betti,
           "json fixture differs from the closed form");
    expect(io::params_from_json(fixture("example5_8_params.json")) == p,
           "parameter fixture is off");
    Decomposition expected{{{Rat(72), {0, 2, 3, 4, 7}},
                            {Rat(48), {0, 2, 3, 5, 7}},
                            {Rat(48), {0, 2, 4, 5, 7}},
                            {Rat(72), {0, 3, 4, 5, 7}}}};
    expect(gorenstein_decomposition(p) == expected, "closed-form decomposition is off");
    expect(stacked_decomposition(4, 3) == expected, "stacked decomposition is off");
    expect(greedy_decompose(betti) == expected, "greedy decomposition is off");
  });

  if (failed == 0) return 0;
  return io_failed ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Boij-Soderberg decompositions of graded Betti tables"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  std::string table_path;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "decompose a Betti table (text grid or JSON) into pure diagrams");
  decompose->add_option("table", table_path, "path to the table")->required();
  add_format(decompose);

  std::string hypergraph_path;
  bool opt_ideal = false, opt_quotient = false, opt_identity = false, opt_alpha = false;
  CLI::App* ferrers = app.add_subcommand(
      "ferrers", "Betti tables and decompositions of a Ferrers hypergraph");
  ferrers->add_option("hypergraph", hypergraph_path, "path to the hypergraph JSON")
      ->required();
  ferrers->add_flag("--ideal", opt_ideal, "table and decomposition of the Ferrers ideal");
  ferrers->add_flag("--quotient", opt_quotient,
                    "table, summand data, and decomposition of the quotient ring");
  ferrers->add_flag("--identity", opt_identity,
                    "evaluate the projection identity (must equal the uniformity)");
  ferrers->add_flag("--alpha", opt_alpha, "print the alpha-sequence");
  add_format(ferrers);

  bool opt_stacked = false;
  int opt_s = 0, opt_t = 0, opt_c = 0, opt_d = 0;
  CLI::App* gorenstein = app.add_subcommand(
      "gorenstein", "closed-form tables and decompositions of the two-strand family");
  gorenstein->add_flag("--stacked", opt_stacked,
                       "stacked-polytope specialization (uses --c and --d)");
  auto* s_opt = gorenstein->add_option("--s", opt_s, "socle-degree parameter");
  auto* t_opt = gorenstein->add_option("--t", opt_t, "strand-start parameter");
  auto* c_opt = gorenstein->add_option("--c", opt_c, "codimension / number of simplices");
  auto* d_opt = gorenstein->add_option("--d", opt_d, "simplex dimension (stacked only)");
  add_format(gorenstein);

  std::string ideal_path;
  bool opt_to_ferrers = false, opt_betti = false;
  CLI::App* monomial = app.add_subcommand(
      "monomial", "strongly stable ideals: Betti numbers and the Ferrers image");
  monomial->add_option("ideal", ideal_path, "path to the monomial ideal JSON")->required();
  monomial->add_flag("--to-ferrers", opt_to_ferrers, "print the Ferrers hypergraph image");
  monomial->add_flag("--betti", opt_betti, "print the Betti table");
  add_format(monomial);

  std::string fixture_dir = "fixtures";
  CLI::App* check = app.add_subcommand(
      "check", "run the bundled example fixtures and report pass/fail");
  check->add_option("dir", fixture_dir, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // bad flags count as invalid parameters
  }

  try {
    if (decompose->parsed()) return cmd_decompose(table_path, format);
    if (ferrers->parsed()) {
      return cmd_ferrers(hypergraph_path, opt_ideal, opt_quotient, opt_identity,
                         opt_alpha, format);
    }
    if (gorenstein->parsed()) {
      if (opt_stacked) {
        if (c_opt->count() == 0 || d_opt->count() == 0) {
          throw InvalidInput("--stacked needs --c and --d");
        }
      } else if (s_opt->count() == 0 || t_opt->count() == 0 || c_opt->count() == 0) {
        throw InvalidInput("gorenstein needs --s, --t, and --c (or --stacked)");
      }
      return cmd_gorenstein(opt_stacked, opt_s, opt_t, opt_c, opt_d, format);
    }
    if (monomial->parsed()) return cmd_monomial(ideal_path, opt_to_ferrers, opt_betti, format);
    if (check->parsed()) return cmd_check(fixture_dir);
  } catch (const io::ParseError& e) {
    std::cerr << red("parse error: ") << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << red("error: ") << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << red("error: ") << e.what() << '\n';
    return 2;
  }
  return 0;
}
