#include "betti/gorenstein.hpp"

#include "betti/combinatorics.hpp"

namespace betti {

GorensteinParams::GorensteinParams(int s, int t, int c) : s(s), t(t), c(c) {
  if (t < 1) throw InvalidInput("strand-start parameter t must be positive");
  if (s < 2 * t) throw InvalidInput("socle-degree parameter needs s >= 2t");
  if (c < 2) throw InvalidInput("codimension must be at least 2");
}

namespace {

Int strand_multiplicity(const GorensteinParams& p, int i) {
  return binomial(p.c + p.t - 1, i + p.t) * binomial(p.t - 1 + i, p.t);
}

}  // namespace

BettiTable gorenstein_betti(const GorensteinParams& p) {
  BettiTable table;
  table.add(0, 0, 1);
  table.add(p.c, p.s + p.c, 1);
  for (int i = 1; i <= p.c - 1; ++i) {
    table.add(i, p.t + i, Rat(strand_multiplicity(p, i)));
    table.add(i, p.s - p.t + i, Rat(strand_multiplicity(p, p.c - i)));
  }
  return table;
}

std::vector<Int> gorenstein_h_vector(const GorensteinParams& p) {
  std::vector<Int> h;
  h.reserve(p.s + 1);
  for (int i = 0; i <= p.s; ++i) {
    if (i <= p.t) {
      h.push_back(binomial(p.c - 1 + i, p.c - 1));
    } else if (i <= p.s - p.t) {
      h.push_back(binomial(p.c - 1 + p.t, p.c - 1));
    } else {
      h.push_back(binomial(p.s - i + p.c - 1, p.c - 1));
    }
  }
  return h;
}

Decomposition gorenstein_decomposition(const GorensteinParams& p) {
  Int base = factorial(p.t + p.c - 1) / factorial(p.t);
  Rat edge(Int(p.s + 1 - p.t) * base);
  Rat middle(Int(p.s + 1 - 2 * p.t) * base);
  Decomposition result;
  for (int j = 1; j <= p.c; ++j) {
    std::vector<int> degrees{0};
    for (int k = 1; k <= p.c - 1; ++k) {
      degrees.push_back(k <= p.c - j ? p.t + k : p.s - p.t + k);
    }
    degrees.push_back(p.s + p.c);
    DegreeSequence sigma(std::move(degrees));
    Rat coeff = (j == 1 || j == p.c) ? edge : middle;
    if (!result.terms.empty() && result.terms.back().sequence == sigma) {
      // at s = 2t the two strands collide and every sigma_j coincides
      result.terms.back().coeff += coeff;
    } else {
      result.terms.push_back({std::move(coeff), std::move(sigma)});
    }
  }
  return result;
}

Decomposition stacked_decomposition(int c, int d) {
  if (d < 2) throw InvalidInput("stacked simplices must have dimension at least 2");
  return gorenstein_decomposition(GorensteinParams(d, 1, c));
}

std::pair<Rat, Rat> telescoping_identity(long a, long b, long m) {
  if (a < 1 || b < 1) throw InvalidInput("telescoping identity needs a >= 1 and b >= 1");
  if (m < 1 || m > a) throw InvalidInput("telescoping identity needs 1 <= m <= a");
  Rat lhs = 0;
  for (long j = 1; j <= m; ++j) {
    Rat term(binomial(a, j), binomial(a + b, j));
    term.canonicalize();
    lhs += term;
  }
  Rat head(Int(a), Int(b + 1));
  head.canonicalize();
  Rat tail(Int(a + b - m) * binomial(a, m + 1), Int(b + 1) * binomial(a + b, m + 1));
  tail.canonicalize();
  return {lhs, head - tail};
}

}  // namespace betti
