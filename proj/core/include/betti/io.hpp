#pragma once

#include "betti/decompose.hpp"
#include "betti/ferrers.hpp"
#include "betti/gorenstein.hpp"
#include "betti/monomial.hpp"

#include <stdexcept>
#include <string>

namespace betti::io {

// Malformed input: unreadable file, bad text grid, bad JSON. The CLI exits
// with status 2 on these.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text grid format: a header row of homological degrees "0 1 2 ...", then
// rows "r: v0 v1 ..." where column i of row r holds the entry at (i, i+r).
// "." (or a middle dot) marks a zero; values are nonnegative integers or
// "p/q".
BettiTable parse_table_text(const std::string& text);

// Canonical rendering of the same grid; parse_table_text round-trips it.
std::string render_table_text(const BettiTable& table);

// {"entries": [[i, j, "p/q"], ...]}
std::string table_to_json(const BettiTable& table);
BettiTable table_from_json(const std::string& text);

// {"terms": [{"coeff": "p/q", "sequence": [d0, d1, ...]}, ...]}
std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

// {"d": 3, "cells": [[1,1,1], [1,1,2], ...]}
std::string hypergraph_to_json(const FerrersHypergraph& f);
FerrersHypergraph hypergraph_from_json(const std::string& text);

// {"n": 3, "generators": [[3,0,0], [2,1,0], ...]} (dense exponent vectors)
std::string ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const std::string& text);

// {"s": 3, "t": 1, "c": 4}
std::string params_to_json(const GorensteinParams& p);
GorensteinParams params_from_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace betti::io
