#pragma once

#include "betti/rational.hpp"

#include <vector>

namespace betti {

// Zero when k < 0 or n < k.
Int binomial(long n, long k);

Int factorial(long n);  // n >= 0

// Greedy expansion b = C(m_d, d) + C(m_{d-1}, d-1) + ... + C(m_e, e) with
// m_d > m_{d-1} > ... > m_e >= e >= 1; unique. The result runs front to
// back from position d down to e.
std::vector<long> macaulay_expansion(long b, int d);  // b >= 1, d >= 1

// Macaulay's growth bound b^<d>: zero when b = 0, otherwise the expansion
// with every binomial bumped by one in both arguments.
Int macaulay_growth(long b, int d);  // b >= 0, d >= 1

// Candidate Hilbert function values (h_0, h_1, ...); trailing zeros are
// harmless.
using OSequence = std::vector<long>;

// True iff nonempty, h_0 = 1, all values nonnegative, and
// h_{j+1} <= h_j^<j> for every j >= 1.
bool is_o_sequence(const OSequence& h);

// Exponent vectors (dense, length d) of the order ideal whose degree-j part
// consists of the h_j lex-least degree-j monomials in d variables. This is
// the complement of the lexsegment ideal realizing h, hence
// divisibility-closed. Sorted by degree, then ascending lex.
// Requires is_o_sequence(h) and h_1 <= d.
std::vector<std::vector<int>> lex_order_ideal(const OSequence& h, int d);

}  // namespace betti
