#include "fkglab/rational.hpp"

namespace fkglab {

Rat parse_rat(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string text(s);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' ||
              (c == '-' && (i == 0 || text[i - 1] == '/'));
    if (!ok)
      throw std::invalid_argument("malformed rational: " + text);
  }
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_str();
}

double rat_double(const Rat& r) {
  return r.get_d();
}

Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace fkglab
