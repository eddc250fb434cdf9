#include "betti/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace betti::io {

namespace {

using nlohmann::json;

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + token + "'");
  }
  if (used != token.size()) {
    throw ParseError(std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

Rat parse_value(const std::string& token) {
  // printed tables often mark zeros with a middle dot
  if (token == "." || token == "·") return Rat(0);
  Rat value;
  try {
    value = rat_from_string(token);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
  if (value < 0) throw ParseError("negative table value '" + token + "'");
  return value;
}

std::string pad_left(const std::string& text, std::size_t width) {
  return std::string(width - text.size(), ' ') + text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
}

}  // namespace

BettiTable parse_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<int> columns;
  bool have_header = false;
  BettiTable table;
  while (std::getline(in, line)) {
    std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      std::set<int> seen;
      for (const std::string& token : tokens) {
        int column = parse_int(token, "homological degree");
        if (column < 0) throw ParseError("negative homological degree in header");
        if (!seen.insert(column).second) throw ParseError("duplicate header column");
        columns.push_back(column);
      }
      have_header = true;
      continue;
    }
    const std::string& label = tokens.front();
    if (label.size() < 2 || label.back() != ':') {
      throw ParseError("row label '" + label + "' must be an integer followed by ':'");
    }
    int row = parse_int(label.substr(0, label.size() - 1), "row label");
    if (tokens.size() - 1 > columns.size()) {
      throw ParseError("row " + std::to_string(row) + " has more entries than header columns");
    }
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      Rat value = parse_value(tokens[k]);
      if (value == 0) continue;
      int i = columns[k - 1];
      table.add(i, i + row, value);
    }
  }
  if (!have_header) throw ParseError("table text has no header row");
  return table;
}

std::string render_table_text(const BettiTable& table) {
  if (table.empty()) throw InvalidInput("cannot render an empty table");
  int projdim = table.projdim();
  int row_min = 0, row_max = 0;
  bool first = true;
  for (const auto& [key, value] : table.cells()) {
    int row = key.second - key.first;
    if (first || row < row_min) row_min = row;
    if (first || row > row_max) row_max = row;
    first = false;
  }

  std::vector<std::string> labels;
  for (int row = row_min; row <= row_max; ++row) labels.push_back(std::to_string(row) + ":");
  std::size_t label_width = 0;
  for (const std::string& label : labels) label_width = std::max(label_width, label.size());

  std::vector<std::vector<std::string>> grid(row_max - row_min + 1,
                                             std::vector<std::string>(projdim + 1, "."));
  for (const auto& [key, value] : table.cells()) {
    grid[key.second - key.first - row_min][key.first] = rat_to_string(value);
  }
  std::vector<std::size_t> widths(projdim + 1);
  for (int i = 0; i <= projdim; ++i) {
    widths[i] = std::to_string(i).size();
    for (const auto& row : grid) widths[i] = std::max(widths[i], row[i].size());
  }

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (int i = 0; i <= projdim; ++i) out << "  " << pad_left(std::to_string(i), widths[i]);
  out << '\n';
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out << pad_left(labels[r], label_width);
    for (int i = 0; i <= projdim; ++i) out << "  " << pad_left(grid[r][i], widths[i]);
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, value] : table.cells()) {
    entries.push_back({key.first, key.second, rat_to_string(value)});
  }
  return json{{"entries", std::move(entries)}}.dump();
}

BettiTable table_from_json(const std::string& text) {
  json root = parse_json(text);
  try {
    BettiTable table;
    for (const auto& entry : root.at("entries")) {
      int i = entry.at(0).get<int>();
      int j = entry.at(1).get<int>();
      Rat value = rat_from_string(entry.at(2).get<std::string>());
      if (value <= 0) throw ParseError("table entries must be positive");
      table.add(i, j, value);
    }
    return table;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad table json: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("bad table json: ") + e.what());
  }
}

std::string decomposition_to_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& term : d.terms) {
    terms.push_back({{"coeff", rat_to_string(term.coeff)},
                     {"sequence", term.sequence.degrees()}});
  }
  return json{{"terms", std::move(terms)}}.dump();
}

Decomposition decomposition_from_json(const std::string& text) {
  json root = parse_json(text);
  try {
    Decomposition d;
    for (const auto& item : root.at("terms")) {
      Rat coeff = rat_from_string(item.at("coeff").get<std::string>());
      if (coeff <= 0) throw ParseError("coefficients must be positive");
      DegreeSequence sequence(item.at("sequence").get<std::vector<int>>());
      d.terms.push_back({std::move(coeff), std::move(sequence)});
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad decomposition json: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("bad decomposition json: ") + e.what());
  }
}

std::string hypergraph_to_json(const FerrersHypergraph& f) {
  json cells = json::array();
  for (const Cell& cell : f.cells()) cells.push_back(cell);
  return json{{"d", f.uniformity()}, {"cells", std::move(cells)}}.dump();
}

FerrersHypergraph hypergraph_from_json(const std::string& text) {
  json root = parse_json(text);
  int d = 0;
  std::set<Cell> cells;
  try {
    d = root.at("d").get<int>();
    for (const auto& item : root.at("cells")) {
      cells.insert(item.get<Cell>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad hypergraph json: ") + e.what());
  }
  return from_cells(d, std::move(cells));  // domain errors propagate
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  json generators = json::array();
  for (const Monomial& u : ideal.generators()) {
    generators.push_back(u.dense(ideal.num_vars()));
  }
  return json{{"n", ideal.num_vars()}, {"generators", std::move(generators)}}.dump();
}

MonomialIdeal ideal_from_json(const std::string& text) {
  json root = parse_json(text);
  int num_vars = 0;
  std::set<Monomial> generators;
  try {
    num_vars = root.at("n").get<int>();
    for (const auto& item : root.at("generators")) {
      generators.insert(Monomial::from_dense(item.get<std::vector<int>>()));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad monomial ideal json: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("bad monomial ideal json: ") + e.what());
  }
  return MonomialIdeal(num_vars, std::move(generators));  // domain errors propagate
}

std::string params_to_json(const GorensteinParams& p) {
  return json{{"s", p.s}, {"t", p.t}, {"c", p.c}}.dump();
}

GorensteinParams params_from_json(const std::string& text) {
  json root = parse_json(text);
  int s = 0, t = 0, c = 0;
  try {
    s = root.at("s").get<int>();
    t = root.at("t").get<int>();
    c = root.at("c").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad parameter json: ") + e.what());
  }
  return GorensteinParams(s, t, c);  // domain errors propagate
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace betti::io
