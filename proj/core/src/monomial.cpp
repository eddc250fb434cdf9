#include "betti/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace betti {

Monomial::Monomial(std::map<int, int> exponents) : exponents_(std::move(exponents)) {
  for (const auto& [variable, exponent] : exponents_) {
    if (variable < 1) throw InvalidInput("variable indices must be at least 1");
    if (exponent < 1) throw InvalidInput("stored exponents must be at least 1");
    degree_ += exponent;
  }
}

Monomial Monomial::from_dense(const std::vector<int>& exponents) {
  std::map<int, int> sparse;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0) throw InvalidInput("exponents must be nonnegative");
    if (exponents[k] > 0) sparse[static_cast<int>(k) + 1] = exponents[k];
  }
  return Monomial(std::move(sparse));
}

Monomial Monomial::from_factors(std::vector<int> variables) {
  std::map<int, int> sparse;
  for (int variable : variables) {
    if (variable < 1) throw InvalidInput("variable indices must be at least 1");
    sparse[variable] += 1;
  }
  return Monomial(std::move(sparse));
}

int Monomial::exponent(int variable) const {
  auto it = exponents_.find(variable);
  return it == exponents_.end() ? 0 : it->second;
}

int Monomial::max_var() const {
  return exponents_.empty() ? 0 : exponents_.rbegin()->first;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const auto& entry) { return entry.second == 1; });
}

std::vector<int> Monomial::factors() const {
  std::vector<int> result;
  result.reserve(degree_);
  for (const auto& [variable, exponent] : exponents_) {
    result.insert(result.end(), exponent, variable);
  }
  return result;
}

std::vector<int> Monomial::dense(int num_vars) const {
  if (num_vars < max_var()) throw InvalidInput("monomial does not fit in that many variables");
  std::vector<int> result(num_vars, 0);
  for (const auto& [variable, exponent] : exponents_) result[variable - 1] = exponent;
  return result;
}

Monomial Monomial::exchange(int from, int to) const {
  if (exponent(from) < 1) throw InvalidInput("exchange source does not divide the monomial");
  std::map<int, int> moved = exponents_;
  if (--moved[from] == 0) moved.erase(from);
  moved[to] += 1;
  return Monomial(std::move(moved));
}

std::string to_string(const Monomial& u) {
  if (u.exponents().empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [variable, exponent] : u.exponents()) {
    if (!first) out << ' ';
    out << 'x' << variable;
    if (exponent > 1) out << '^' << exponent;
    first = false;
  }
  return out.str();
}

MonomialIdeal::MonomialIdeal(int num_vars, std::set<Monomial> generators)
    : num_vars_(num_vars), degree_(0), generators_(std::move(generators)) {
  if (num_vars_ < 1) throw InvalidInput("need at least one variable");
  if (generators_.empty()) throw InvalidInput("need at least one generator");
  degree_ = generators_.begin()->degree();
  if (degree_ < 1) throw InvalidInput("generators must have positive degree");
  for (const Monomial& u : generators_) {
    if (u.degree() != degree_) {
      throw InvalidInput("generators must all have the same degree");
    }
    if (u.max_var() > num_vars_) {
      throw InvalidInput("generator " + to_string(u) + " uses a variable beyond x" +
                         std::to_string(num_vars_));
    }
  }
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.generators()) {
    for (const auto& [variable, exponent] : u.exponents()) {
      for (int j = 1; j < variable; ++j) {
        if (!ideal.contains_generator(u.exchange(variable, j))) return false;
      }
    }
  }
  return true;
}

bool is_squarefree_strongly_stable(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.generators()) {
    if (!u.is_squarefree()) {
      throw InvalidInput("generator " + to_string(u) + " is not squarefree");
    }
  }
  for (const Monomial& u : ideal.generators()) {
    for (const auto& [variable, exponent] : u.exponents()) {
      for (int j = 1; j < variable; ++j) {
        if (u.exponent(j) > 0) continue;
        if (!ideal.contains_generator(u.exchange(variable, j))) return false;
      }
    }
  }
  return true;
}

Monomial phi(const Monomial& u) {
  std::vector<int> stretched = u.factors();
  for (std::size_t p = 0; p < stretched.size(); ++p) {
    stretched[p] += static_cast<int>(p);
  }
  return Monomial::from_factors(std::move(stretched));
}

Cell psi(const Monomial& v) {
  if (v.degree() < 1) throw InvalidInput("cannot map the unit monomial to a cell");
  if (!v.is_squarefree()) {
    throw InvalidInput("monomial " + to_string(v) + " is not squarefree");
  }
  std::vector<int> indices = v.factors();  // strictly increasing
  Cell cell(indices.size());
  cell[0] = indices[0];
  for (std::size_t p = 1; p < indices.size(); ++p) {
    cell[p] = indices[p] - indices[p - 1];
  }
  return cell;
}

FerrersHypergraph strongly_stable_to_ferrers(const MonomialIdeal& ideal) {
  if (!is_strongly_stable(ideal)) {
    throw InvalidInput("ideal is not strongly stable");
  }
  std::set<Cell> cells;
  for (const Monomial& u : ideal.generators()) {
    cells.insert(psi(phi(u)));
  }
  return from_cells(ideal.degree(), std::move(cells));
}

BettiTable ek_betti(const MonomialIdeal& ideal) {
  if (!is_strongly_stable(ideal)) {
    throw InvalidInput("ideal is not strongly stable");
  }
  int top = 0;
  for (const Monomial& u : ideal.generators()) top = std::max(top, u.max_var());
  BettiTable table;
  for (int i = 0; i <= top - 1; ++i) {
    Int total = 0;
    for (const Monomial& u : ideal.generators()) {
      total += binomial(u.max_var() - 1, i);
    }
    if (total > 0) table.add(i, ideal.degree() + i, Rat(total));
  }
  return table;
}

}  // namespace betti
