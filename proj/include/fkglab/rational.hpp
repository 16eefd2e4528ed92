#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fkglab {

using Rat = mpq_class;
using Int = mpz_class;

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p", "-p" and "p/q" with q != 0. Result is canonicalized.
Rat parse_rat(std::string_view s);

// Lowest-terms "p/q", or plain "p" when the denominator is 1.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

Int binom(unsigned long n, unsigned long k);

}  // namespace fkglab
