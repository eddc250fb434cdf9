#include "betti/decompose.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace betti {

NotInCone::NotInCone(const std::string& what, Decomposition partial, BettiTable residual)
    : DomainError(what), partial_(std::move(partial)), residual_(std::move(residual)) {}

namespace {

BettiTable to_table(const BettiTable::Map& work) {
  BettiTable table;
  for (const auto& [key, value] : work) table.add(key.first, key.second, value);
  return table;
}

// Least occupied internal degree per homological degree 0..p; nullopt when
// some degree in that range is unoccupied (the residual has a gap).
std::optional<std::vector<int>> minimal_shifts(const BettiTable::Map& work, int p) {
  std::vector<int> shifts;
  shifts.reserve(p + 1);
  auto it = work.begin();
  for (int i = 0; i <= p; ++i) {
    if (it == work.end() || it->first.first != i) return std::nullopt;
    shifts.push_back(it->first.second);
    while (it != work.end() && it->first.first == i) ++it;
  }
  return shifts;
}

}  // namespace

Decomposition greedy_decompose(const BettiTable& table) {
  if (table.empty()) throw InvalidInput("cannot decompose an empty table");
  Decomposition result;
  BettiTable::Map work = table.cells();
  while (!work.empty()) {
    int p = work.rbegin()->first.first;
    auto shifts = minimal_shifts(work, p);
    if (!shifts) {
      throw NotInCone("residual table has a gap in its homological degrees",
                      result, to_table(work));
    }
    bool increasing = true;
    for (int i = 1; i <= p; ++i) {
      if ((*shifts)[i - 1] >= (*shifts)[i]) increasing = false;
    }
    if (!increasing) {
      throw NotInCone("minimal-shift sequence is not strictly increasing",
                      result, to_table(work));
    }
    DegreeSequence sigma(*shifts);
    PureDiagram pi = pure_diagram(sigma);

    // peel as much of the bottom strand as the table allows
    Rat coeff;
    bool first = true;
    for (int i = 0; i <= p; ++i) {
      Rat ratio = work.at({i, (*shifts)[i]}) / pi.table.get(i, (*shifts)[i]);
      if (first || ratio < coeff) coeff = ratio;
      first = false;
    }
    for (int i = 0; i <= p; ++i) {
      BettiTable::Key key{i, (*shifts)[i]};
      Rat rest = work.at(key) - coeff * pi.table.get(i, (*shifts)[i]);
      if (rest < 0) {
        throw NotInCone("peeling would produce a negative entry", result, to_table(work));
      }
      if (rest == 0) {
        work.erase(key);
      } else {
        work[key] = rest;
      }
    }
    if (!result.terms.empty()) {
      const DegreeSequence& prev = result.terms.back().sequence;
      if (!sequence_leq(prev, sigma) || prev == sigma) {
        throw NotInCone("peeled sequences do not form a strictly increasing chain",
                        result, to_table(work));
      }
    }
    result.terms.push_back({std::move(coeff), std::move(sigma)});
  }
  return result;
}

BettiTable recompose(const Decomposition& d) {
  BettiTable total;
  for (const auto& term : d.terms) {
    total = table_add(total, table_scale(term.coeff, pure_diagram(term.sequence).table));
  }
  return total;
}

bool check_integrality(const Decomposition& d) {
  return std::all_of(d.terms.begin(), d.terms.end(),
                     [](const Decomposition::Term& term) { return is_integer(term.coeff); });
}

SelfDualPairing self_dual_pairing(const Decomposition& d, int m) {
  const auto& terms = d.terms;
  if (terms.empty()) throw InvalidInput("cannot pair an empty decomposition");
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!sequence_leq(terms[i].sequence, terms[i + 1].sequence) ||
        terms[i].sequence == terms[i + 1].sequence) {
      throw InvalidInput("terms do not form a strictly increasing chain");
    }
  }
  int t = static_cast<int>(terms.size());
  SelfDualPairing pairing{m, {}};
  for (int i = 1; i <= t; ++i) {
    const auto& term = terms[i - 1];
    const auto& partner = terms[t - i];
    DegreeSequence expected = shift_sequence(m, dual_sequence(partner.sequence));
    if (!(term.sequence == expected)) {
      throw NotSelfDual("term " + std::to_string(i) + " is " + to_string(term.sequence) +
                        " but the shifted dual of term " + std::to_string(t + 1 - i) +
                        " is " + to_string(expected));
    }
    if (term.coeff != partner.coeff) {
      throw NotSelfDual("coefficients of terms " + std::to_string(i) + " and " +
                        std::to_string(t + 1 - i) + " differ");
    }
    if (i <= t + 1 - i) pairing.pairs.emplace_back(i, t + 1 - i);
  }
  return pairing;
}

}  // namespace betti
