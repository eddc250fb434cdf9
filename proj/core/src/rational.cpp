#include "betti/rational.hpp"

#include <cctype>

namespace betti {

namespace {

// Strict shape check: "-?[0-9]+(/[0-9]+)?". GMP itself skips whitespace and
// accepts other bases, which is too lenient for our formats.
bool well_formed(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) return false;
  if (pos == text.size()) return true;
  if (text[pos] != '/') return false;
  ++pos;
  digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  return digits > 0 && pos == text.size();
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& text) {
  if (!well_formed(text)) throw InvalidInput("unparseable rational '" + text + "'");
  Rat r(text, 10);
  if (r.get_den() == 0) throw InvalidInput("rational '" + text + "' has zero denominator");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

bool is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace betti
