#include "betti/combinatorics.hpp"

#include <algorithm>

namespace betti {

Int binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the partial product is C(n-k+i, i)
  }
  return result;
}

Int factorial(long n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  Int result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

std::vector<long> macaulay_expansion(long b, int d) {
  if (b < 1 || d < 1) throw InvalidInput("macaulay expansion needs b >= 1 and d >= 1");
  std::vector<long> tops;
  long remainder = b;
  for (int pos = d; pos >= 1 && remainder > 0; --pos) {
    if (pos == 1) {
      tops.push_back(remainder);  // C(m, 1) = m
      remainder = 0;
      break;
    }
    // largest m with C(m, pos) <= remainder
    long m = pos;
    Int value = 1;
    while (true) {
      Int next = value * (m + 1) / (m + 1 - pos);
      if (next > remainder) break;
      value = next;
      ++m;
    }
    tops.push_back(m);
    remainder -= value.get_si();  // value <= remainder, so it fits
  }
  return tops;
}

Int macaulay_growth(long b, int d) {
  if (b < 0 || d < 1) throw InvalidInput("macaulay growth needs b >= 0 and d >= 1");
  if (b == 0) return 0;
  Int total = 0;
  int pos = d;
  for (long m : macaulay_expansion(b, d)) {
    total += binomial(m + 1, pos + 1);
    --pos;
  }
  return total;
}

bool is_o_sequence(const OSequence& h) {
  if (h.empty() || h[0] != 1) return false;
  for (long value : h) {
    if (value < 0) return false;
  }
  for (std::size_t j = 1; j + 1 < h.size(); ++j) {
    if (h[j + 1] > macaulay_growth(h[j], static_cast<int>(j))) return false;
  }
  return true;
}

namespace {

// Next exponent vector of the same total degree in ascending lex order
// (x1 > x2 > ...; the least vector is (0,...,0,j)). False when exhausted.
bool lex_successor(std::vector<int>& a) {
  int d = static_cast<int>(a.size());
  int z = d - 1;
  while (z >= 0 && a[z] == 0) --z;
  if (z < 0) return false;  // degree zero
  int pivot = (z == d - 1) ? d - 2 : z - 1;
  if (pivot < 0) return false;
  int tail = 0;
  for (int q = pivot + 1; q < d; ++q) {
    tail += a[q];
    a[q] = 0;
  }
  a[pivot] += 1;
  a[d - 1] = tail - 1;
  return true;
}

}  // namespace

std::vector<std::vector<int>> lex_order_ideal(const OSequence& h, int d) {
  if (d < 1) throw InvalidInput("lex order ideal needs d >= 1");
  if (!is_o_sequence(h)) throw InvalidInput("not an O-sequence");
  if (h.size() > 1 && h[1] > d) throw InvalidInput("h_1 exceeds the number of variables");
  std::vector<std::vector<int>> result;
  for (std::size_t j = 0; j < h.size(); ++j) {
    long count = h[j];
    if (count == 0) continue;
    std::vector<int> a(d, 0);
    a[d - 1] = static_cast<int>(j);
    for (long r = 0; r < count; ++r) {
      result.push_back(a);
      if (r + 1 < count && !lex_successor(a)) {
        // cannot happen: h_j <= dim of the degree-j piece for a valid input
        throw InvalidInput("degree count exceeds the monomial space");
      }
    }
  }
  return result;
}

}  // namespace betti
