#pragma once

#include "betti/decompose.hpp"

#include <utility>
#include <vector>

namespace betti {

// Parameters of the two-strand family: total ring (0,0) and socle
// (c, s+c), with strands starting in degrees t+1 and s-t+1.
struct GorensteinParams {
  int s;  // socle-degree parameter
  int t;  // strand-start parameter
  int c;  // codimension

  GorensteinParams(int s, int t, int c);  // requires t >= 1, s >= 2t, c >= 2

  bool operator==(const GorensteinParams&) const = default;
};

// Closed-form table: (0,0) and (c, s+c) hold 1; for 1 <= i <= c-1 the
// strands hold a_i at (i, t+i) and a_{c-i} at (i, s-t+i), where
// a_i = C(c+t-1, i+t) C(t-1+i, t). Colliding positions (s = 2t) are summed.
BettiTable gorenstein_betti(const GorensteinParams& p);

// Symmetric h-vector (h_0, ..., h_s) of the family.
std::vector<Int> gorenstein_h_vector(const GorensteinParams& p);

// Closed-form chain: coefficient (s+1-t)(t+c-1)!/t! on the two extreme
// sequences and (s+1-2t)(t+c-1)!/t! on the middle ones, with
// sigma_j = (0, d_{j,1}, ..., d_{j,c-1}, s+c) and d_{j,k} = t+k for
// k <= c-j, s-t+k above. At s = 2t all sequences coincide and the terms
// merge into one.
Decomposition gorenstein_decomposition(const GorensteinParams& p);

// Boundary complex of c stacked d-simplices: the family at s = d, t = 1,
// giving coefficients d*c! on the extremes and (d-1)*c! in the middle.
Decomposition stacked_decomposition(int c, int d);  // c >= 2, d >= 2

// Both sides of
//   sum_{j=1}^m C(a,j)/C(a+b,j)
//     = a/(b+1) - (a+b-m) C(a,m+1) / ((b+1) C(a+b,m+1)),
// for 1 <= m <= a and b >= 1. The two returned values are always equal.
std::pair<Rat, Rat> telescoping_identity(long a, long b, long m);

}  // namespace betti
