#pragma once

#include "betti/ferrers.hpp"

#include <map>
#include <set>
#include <vector>

namespace betti {

// Monomial as a sparse map variable index (>= 1) -> exponent (>= 1).
class Monomial {
 public:
  Monomial() = default;  // the unit monomial
  explicit Monomial(std::map<int, int> exponents);

  // exponents[k] is the exponent of variable k+1.
  static Monomial from_dense(const std::vector<int>& exponents);

  // Variable indices with multiplicity, e.g. {1,1,3} -> x1^2 x3.
  static Monomial from_factors(std::vector<int> variables);

  int degree() const { return degree_; }
  int exponent(int variable) const;
  int max_var() const;  // largest variable index; 0 for the unit monomial
  bool is_squarefree() const;
  const std::map<int, int>& exponents() const { return exponents_; }
  std::vector<int> factors() const;  // ascending, with multiplicity
  std::vector<int> dense(int num_vars) const;

  // x_to * (this / x_from); x_from must divide this.
  Monomial exchange(int from, int to) const;

  bool operator==(const Monomial& other) const {
    return exponents_ == other.exponents_;
  }
  bool operator<(const Monomial& other) const {
    return exponents_ < other.exponents_;
  }

 private:
  std::map<int, int> exponents_;
  int degree_ = 0;
};

std::string to_string(const Monomial& u);  // "x1^2 x3"; "1" for the unit

// Monomial ideal whose minimal generators all have one degree d >= 1.
// Distinct equigenerated monomials never divide one another, so the
// generating set is automatically minimal.
class MonomialIdeal {
 public:
  MonomialIdeal(int num_vars, std::set<Monomial> generators);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const std::set<Monomial>& generators() const { return generators_; }
  bool contains_generator(const Monomial& u) const {
    return generators_.count(u) > 0;
  }

 private:
  int num_vars_;
  int degree_;
  std::set<Monomial> generators_;
};

// Closed under the exchange x_i -> x_j for j < i. Membership of the
// exchanged monomial reduces to generator equality because the generators
// share one degree.
bool is_strongly_stable(const MonomialIdeal& ideal);

// Squarefree analogue: the exchange is only required when x_j does not
// already divide the generator. All generators must be squarefree.
bool is_squarefree_strongly_stable(const MonomialIdeal& ideal);

// Stretches the sorted factors (i_1 <= i_2 <= ... <= i_k) to
// (i_1, i_2 + 1, ..., i_k + k - 1): a squarefree monomial of equal degree.
// Applied generator-wise it preserves graded Betti numbers.
Monomial phi(const Monomial& u);

// Consecutive differences (i_1, i_2 - i_1, ..., i_d - i_{d-1}) of the
// strictly increasing factor indices of a squarefree monomial: a Ferrers
// cell with positive coordinates.
Cell psi(const Monomial& v);

// psi(phi(u)) over the generators; the image is an order ideal with the
// same graded Betti numbers as the input.
FerrersHypergraph strongly_stable_to_ferrers(const MonomialIdeal& ideal);

// Eliahou-Kervaire count for an equigenerated strongly stable ideal:
// entry (i, d+i) = sum over generators u of C(max_var(u) - 1, i).
BettiTable ek_betti(const MonomialIdeal& ideal);

}  // namespace betti
