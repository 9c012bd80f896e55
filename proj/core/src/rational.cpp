#include "lgr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lgr {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_frac(long p, long q) {
  if (q <= 0) throw std::invalid_argument("rat_frac: denominator must be positive");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  const size_t slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  size_t start = 0;
  if (!num.empty() && num[0] == '-') start = 1;
  if (!all_digits(num, start, num.size()))
    throw std::invalid_argument("rat_from_string: bad numerator in '" + s + "'");
  if (slash != std::string::npos) {
    const std::string den = s.substr(slash + 1);
    if (!all_digits(den, 0, den.size()))
      throw std::invalid_argument("rat_from_string: bad denominator in '" + s + "'");
    if (den.find_first_not_of('0') == std::string::npos)
      throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  }
  Rat r(s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace lgr
