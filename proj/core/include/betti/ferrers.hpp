#pragma once

#include "betti/combinatorics.hpp"
#include "betti/decompose.hpp"

#include <set>
#include <vector>

namespace betti {

// d-tuple of positive (1-based) coordinates.
using Cell = std::vector<int>;

std::string to_string(const Cell& cell);  // "(1,2,2)"

class NotOrderIdeal : public DomainError {
 public:
  NotOrderIdeal(const std::string& what, Cell witness);

  // A cell with a missing componentwise predecessor.
  const Cell& witness() const { return witness_; }

 private:
  Cell witness_;
};

// d-uniform hypergraph whose cells are downward closed in the componentwise
// order. Immutable after construction.
class FerrersHypergraph {
 public:
  int uniformity() const { return d_; }
  const std::set<Cell>& cells() const { return cells_; }
  bool contains(const Cell& cell) const { return cells_.count(cell) > 0; }
  std::size_t size() const { return cells_.size(); }

  bool operator==(const FerrersHypergraph&) const = default;

  friend FerrersHypergraph from_cells(int d, std::set<Cell> cells);

 private:
  FerrersHypergraph(int d, std::set<Cell> cells)
      : d_(d), cells_(std::move(cells)) {}

  int d_;
  std::set<Cell> cells_;
};

// Validates the order-ideal property; throws NotOrderIdeal with a witness
// cell whose predecessor is missing.
FerrersHypergraph from_cells(int d, std::set<Cell> cells);

// alpha_k = number of cells with coordinate sum k + d; no internal zeros.
std::vector<long> alpha_sequence(const FerrersHypergraph& f);

// Single linear strand: entry (i, d+i) = sum_k alpha_k C(k, i).
BettiTable ideal_betti(const FerrersHypergraph& f);

// One term per k with alpha_k > 0: coefficient alpha_k * k! on the sequence
// (d, d+1, ..., d+k); chain-ordered (longest first).
Decomposition ideal_decomposition(const FerrersHypergraph& f);

// Entry (0,0) = 1 and (i, d+i-1) = sum over cells of C(sum - d, i-1).
BettiTable quotient_betti(const FerrersHypergraph& f);

// Projection data of one axis: n is the largest coordinate whose insertion
// at the axis yields a cell, k = n - d + sum(projection).
struct QuotientSummandData {
  int axis;         // 1-based
  Cell projection;  // the cell with the axis coordinate deleted
  int n;
  long k;

  bool operator==(const QuotientSummandData&) const = default;
};

// All (axis, projection) pairs, axis-major then ascending projection.
// Requires uniformity >= 2.
std::vector<QuotientSummandData> quotient_summands(const FerrersHypergraph& f);

// Aggregates summand data by k: coefficient k! * sum of n over summands
// with that k, on the sequence (0, d, d+1, ..., d+k). Requires
// uniformity >= 2.
Decomposition quotient_decomposition(const FerrersHypergraph& f);

// sum over axes and projections of n / C(d + k, d); equals the uniformity
// for every Ferrers hypergraph. Requires uniformity >= 2.
Rat ferrers_identity(const FerrersHypergraph& f);

// Realizes an O-sequence with h_1 <= d as the alpha-sequence of a d-uniform
// Ferrers hypergraph: cells are the lex order-ideal exponents shifted by 1.
FerrersHypergraph ferrers_from_o_sequence(const OSequence& h, int d);

}  // namespace betti
