#pragma once

#include "betti/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace betti {

class InvalidSequence : public DomainError {
 public:
  using DomainError::DomainError;
};

// Sparse table of graded Betti numbers. Keys are (homological degree i,
// internal degree j) with i >= 0; j may be negative. Stored values are
// strictly positive -- zeros are never stored, so two tables are equal
// exactly when their sparse maps are.
class BettiTable {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Rat>;

  BettiTable() = default;

  // Accumulates value at (i, j). value must be strictly positive.
  void add(int i, int j, const Rat& value);

  // Zero when the cell is not occupied.
  Rat get(int i, int j) const;

  const Map& cells() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Largest occupied homological degree; table must be nonempty.
  int projdim() const;

  // True when the occupied homological degrees are exactly 0..projdim().
  // Tables produced by raw arithmetic may fail this.
  bool gap_free() const;

  bool operator==(const BettiTable&) const = default;

 private:
  Map entries_;
};

BettiTable table_add(const BettiTable& a, const BettiTable& b);
BettiTable table_scale(const Rat& c, const BettiTable& a);  // c >= 0

// Strictly increasing, nonempty list of integers d_0 < d_1 < ... < d_s.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);
  DegreeSequence(std::initializer_list<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int operator[](std::size_t i) const { return degrees_[i]; }
  std::size_t size() const { return degrees_.size(); }
  int back() const { return degrees_.back(); }

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<int> degrees_;
};

// "(d0,d1,...)"
std::string to_string(const DegreeSequence& sigma);

// Partial order on pure diagrams: sigma <= tau iff sigma is at least as
// long as tau and entrywise <= tau on tau's positions.
bool sequence_leq(const DegreeSequence& sigma, const DegreeSequence& tau);

// (-d_s, ..., -d_1, -d_0)
DegreeSequence dual_sequence(const DegreeSequence& sigma);

// (m + d_0, ..., m + d_s)
DegreeSequence shift_sequence(int m, const DegreeSequence& sigma);

// Single-strand table with entry prod_{j != i} 1/|d_i - d_j| at (i, d_i).
struct PureDiagram {
  DegreeSequence sequence;
  BettiTable table;
};

PureDiagram pure_diagram(const DegreeSequence& sigma);

struct TableStats {
  int projdim;
  int regularity;      // max j - i over occupied cells
  int initial_degree;  // least j with (0, j) occupied
  int duality_shift;   // regularity + projdim + initial_degree

  bool operator==(const TableStats&) const = default;
};

// Requires a nonempty, gap-free table. The duality shift is meaningful for
// tables whose codimension equals the projective dimension.
TableStats table_stats(const BettiTable& table);

}  // namespace betti
