#pragma once

#include "betti/diagrams.hpp"

#include <utility>
#include <vector>

namespace betti {

// Positive combination of pure diagrams whose sequences form a strictly
// increasing chain under sequence_leq (terms[0] is the smallest, i.e. the
// longest / lowest sequence).
struct Decomposition {
  struct Term {
    Rat coeff;  // strictly positive
    DegreeSequence sequence;

    bool operator==(const Term&) const = default;
  };

  std::vector<Term> terms;

  bool operator==(const Decomposition&) const = default;
};

// The greedy elimination cannot express the input as a positive chain of
// pure diagrams: the input is not the Betti table of a module up to
// rational scaling. Carries what was peeled so far and what remains.
class NotInCone : public DomainError {
 public:
  NotInCone(const std::string& what, Decomposition partial, BettiTable residual);

  const Decomposition& partial() const { return partial_; }
  const BettiTable& residual() const { return residual_; }

 private:
  Decomposition partial_;
  BettiTable residual_;
};

class NotSelfDual : public DomainError {
 public:
  using DomainError::DomainError;
};

// Repeatedly peels the minimal-shift pure diagram (the bottom strand) until
// the table is exhausted. Requires a nonempty table with gap-free
// homological degrees; throws NotInCone when the input leaves the cone.
Decomposition greedy_decompose(const BettiTable& table);

// Exact sum of coeff * pure_diagram(sequence) over the terms.
BettiTable recompose(const Decomposition& d);

// True iff every coefficient is an integer.
bool check_integrality(const Decomposition& d);

// Pairing of chain positions (1-based) with their duals under degree shift
// m: position i pairs with t+1-i.
struct SelfDualPairing {
  int shift;
  std::vector<std::pair<int, int>> pairs;  // a <= b, each index covered once

  bool operator==(const SelfDualPairing&) const = default;
};

// Verifies sigma_i = m + sigma_{t+1-i}^* (and matching coefficients) for
// every term of the chain; the middle term of an odd chain must be its own
// dual image. Throws NotSelfDual when some required equality fails.
SelfDualPairing self_dual_pairing(const Decomposition& d, int m);

}  // namespace betti
