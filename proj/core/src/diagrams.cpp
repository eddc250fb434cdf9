#include "betti/diagrams.hpp"

#include <algorithm>
#include <sstream>

namespace betti {

void BettiTable::add(int i, int j, const Rat& value) {
  if (i < 0) throw InvalidInput("homological degree must be nonnegative");
  if (value <= 0) throw InvalidInput("table entries must be strictly positive");
  auto [it, inserted] = entries_.emplace(Key{i, j}, value);
  if (!inserted) it->second += value;
}

Rat BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rat(0) : it->second;
}

int BettiTable::projdim() const {
  if (entries_.empty()) throw InvalidInput("empty table has no projective dimension");
  return entries_.rbegin()->first.first;
}

bool BettiTable::gap_free() const {
  if (entries_.empty()) return false;
  int expected = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == expected) continue;
    if (key.first == expected + 1) {
      ++expected;
      continue;
    }
    return false;
  }
  return true;
}

BettiTable table_add(const BettiTable& a, const BettiTable& b) {
  BettiTable sum = a;
  for (const auto& [key, value] : b.cells()) sum.add(key.first, key.second, value);
  return sum;
}

BettiTable table_scale(const Rat& c, const BettiTable& a) {
  if (c < 0) throw InvalidInput("scale factor must be nonnegative");
  BettiTable scaled;
  if (c == 0) return scaled;
  for (const auto& [key, value] : a.cells()) scaled.add(key.first, key.second, c * value);
  return scaled;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw InvalidSequence("degree sequence must be nonempty");
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    if (degrees_[i - 1] >= degrees_[i]) {
      throw InvalidSequence("degree sequence must be strictly increasing: got " +
                            std::to_string(degrees_[i - 1]) + " before " +
                            std::to_string(degrees_[i]));
    }
  }
}

DegreeSequence::DegreeSequence(std::initializer_list<int> degrees)
    : DegreeSequence(std::vector<int>(degrees)) {}

std::string to_string(const DegreeSequence& sigma) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i > 0) out << ',';
    out << sigma[i];
  }
  out << ')';
  return out.str();
}

bool sequence_leq(const DegreeSequence& sigma, const DegreeSequence& tau) {
  if (sigma.size() < tau.size()) return false;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (sigma[i] > tau[i]) return false;
  }
  return true;
}

DegreeSequence dual_sequence(const DegreeSequence& sigma) {
  std::vector<int> reversed(sigma.degrees().rbegin(), sigma.degrees().rend());
  for (int& d : reversed) d = -d;
  return DegreeSequence(std::move(reversed));
}

DegreeSequence shift_sequence(int m, const DegreeSequence& sigma) {
  std::vector<int> shifted = sigma.degrees();
  for (int& d : shifted) d += m;
  return DegreeSequence(std::move(shifted));
}

PureDiagram pure_diagram(const DegreeSequence& sigma) {
  BettiTable table;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    Int denom = 1;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (j == i) continue;
      denom *= std::abs(sigma[i] - sigma[j]);
    }
    Rat value(Int(1), denom);
    table.add(static_cast<int>(i), sigma[i], value);
  }
  return PureDiagram{sigma, std::move(table)};
}

TableStats table_stats(const BettiTable& table) {
  if (table.empty()) throw InvalidInput("cannot compute stats of an empty table");
  if (!table.gap_free()) throw InvalidInput("table has a gap in its homological degrees");
  TableStats stats{};
  stats.projdim = table.projdim();
  stats.initial_degree = table.cells().begin()->first.second;  // least j at i = 0
  bool first = true;
  for (const auto& [key, value] : table.cells()) {
    int slope = key.second - key.first;
    if (first || slope > stats.regularity) stats.regularity = slope;
    first = false;
  }
  stats.duality_shift = stats.regularity + stats.projdim + stats.initial_degree;
  return stats;
}

}  // namespace betti
