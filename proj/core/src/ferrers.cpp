#include "betti/ferrers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace betti {

std::string to_string(const Cell& cell) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i > 0) out << ',';
    out << cell[i];
  }
  out << ')';
  return out.str();
}

NotOrderIdeal::NotOrderIdeal(const std::string& what, Cell witness)
    : DomainError(what), witness_(std::move(witness)) {}

FerrersHypergraph from_cells(int d, std::set<Cell> cells) {
  if (d < 1) throw InvalidInput("uniformity must be at least 1");
  for (const Cell& cell : cells) {
    if (static_cast<int>(cell.size()) != d) {
      throw InvalidInput("cell " + to_string(cell) + " does not have " +
                         std::to_string(d) + " coordinates");
    }
    for (int coordinate : cell) {
      if (coordinate < 1) {
        throw InvalidInput("cell " + to_string(cell) + " has a coordinate below 1");
      }
    }
  }
  for (const Cell& cell : cells) {
    for (int p = 0; p < d; ++p) {
      if (cell[p] == 1) continue;
      Cell predecessor = cell;
      predecessor[p] -= 1;
      if (cells.count(predecessor) == 0) {
        throw NotOrderIdeal("cell " + to_string(cell) + " is present but its predecessor " +
                                to_string(predecessor) + " is not",
                            cell);
      }
    }
  }
  return FerrersHypergraph(d, std::move(cells));
}

namespace {

long cell_sum(const Cell& cell) {
  return std::accumulate(cell.begin(), cell.end(), 0L);
}

void require_nonempty(const FerrersHypergraph& f) {
  if (f.cells().empty()) throw InvalidInput("hypergraph must be nonempty");
}

void require_quotient_supported(const FerrersHypergraph& f) {
  require_nonempty(f);
  if (f.uniformity() < 2) {
    throw InvalidInput("quotient constructions are unsupported for uniformity 1");
  }
}

DegreeSequence linear_strand_sequence(int d, long k) {
  std::vector<int> degrees;
  degrees.reserve(k + 1);
  for (long u = 0; u <= k; ++u) degrees.push_back(d + static_cast<int>(u));
  return DegreeSequence(std::move(degrees));
}

DegreeSequence quotient_strand_sequence(int d, long k) {
  std::vector<int> degrees;
  degrees.reserve(k + 2);
  degrees.push_back(0);
  for (long u = 0; u <= k; ++u) degrees.push_back(d + static_cast<int>(u));
  return DegreeSequence(std::move(degrees));
}

}  // namespace

std::vector<long> alpha_sequence(const FerrersHypergraph& f) {
  std::vector<long> alpha;
  for (const Cell& cell : f.cells()) {
    long k = cell_sum(cell) - f.uniformity();
    if (static_cast<std::size_t>(k) >= alpha.size()) alpha.resize(k + 1, 0);
    alpha[k] += 1;
  }
  return alpha;
}

BettiTable ideal_betti(const FerrersHypergraph& f) {
  require_nonempty(f);
  std::vector<long> alpha = alpha_sequence(f);
  int d = f.uniformity();
  BettiTable table;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Int total = 0;
    for (std::size_t k = i; k < alpha.size(); ++k) {
      total += alpha[k] * binomial(static_cast<long>(k), static_cast<long>(i));
    }
    if (total > 0) table.add(static_cast<int>(i), d + static_cast<int>(i), Rat(total));
  }
  return table;
}

Decomposition ideal_decomposition(const FerrersHypergraph& f) {
  require_nonempty(f);
  std::vector<long> alpha = alpha_sequence(f);
  int d = f.uniformity();
  Decomposition result;
  for (long k = static_cast<long>(alpha.size()) - 1; k >= 0; --k) {
    if (alpha[k] == 0) continue;
    Rat coeff(alpha[k] * factorial(k));
    result.terms.push_back({std::move(coeff), linear_strand_sequence(d, k)});
  }
  return result;
}

BettiTable quotient_betti(const FerrersHypergraph& f) {
  require_nonempty(f);
  int d = f.uniformity();
  BettiTable table;
  table.add(0, 0, 1);
  long top = 0;
  for (const Cell& cell : f.cells()) top = std::max(top, cell_sum(cell) - d);
  for (long i = 1; i <= top + 1; ++i) {
    Int total = 0;
    for (const Cell& cell : f.cells()) {
      total += binomial(cell_sum(cell) - d, i - 1);
    }
    if (total > 0) table.add(static_cast<int>(i), d + static_cast<int>(i) - 1, Rat(total));
  }
  return table;
}

std::vector<QuotientSummandData> quotient_summands(const FerrersHypergraph& f) {
  require_quotient_supported(f);
  int d = f.uniformity();
  std::vector<QuotientSummandData> result;
  for (int axis = 1; axis <= d; ++axis) {
    std::map<Cell, int> max_inserted;
    for (const Cell& cell : f.cells()) {
      Cell projection = cell;
      projection.erase(projection.begin() + (axis - 1));
      int& best = max_inserted[projection];
      best = std::max(best, cell[axis - 1]);
    }
    for (const auto& [projection, n] : max_inserted) {
      long k = n - d + cell_sum(projection);
      result.push_back({axis, projection, n, k});
    }
  }
  return result;
}

Decomposition quotient_decomposition(const FerrersHypergraph& f) {
  std::map<long, Int> weight_by_k;
  for (const QuotientSummandData& summand : quotient_summands(f)) {
    weight_by_k[summand.k] += summand.n;
  }
  int d = f.uniformity();
  Decomposition result;
  for (auto it = weight_by_k.rbegin(); it != weight_by_k.rend(); ++it) {
    const auto& [k, total_n] = *it;
    Rat coeff(total_n * factorial(k));
    result.terms.push_back({std::move(coeff), quotient_strand_sequence(d, k)});
  }
  return result;
}

Rat ferrers_identity(const FerrersHypergraph& f) {
  Rat total = 0;
  int d = f.uniformity();
  for (const QuotientSummandData& summand : quotient_summands(f)) {
    Rat term(Int(summand.n), binomial(d + summand.k, d));
    term.canonicalize();
    total += term;
  }
  return total;
}

FerrersHypergraph ferrers_from_o_sequence(const OSequence& h, int d) {
  std::set<Cell> cells;
  for (const std::vector<int>& exponents : lex_order_ideal(h, d)) {
    Cell cell = exponents;
    for (int& coordinate : cell) coordinate += 1;
    cells.insert(std::move(cell));
  }
  return from_cells(d, std::move(cells));
}

}  // namespace betti
