#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dgal {

// Exact rational; GMP keeps it reduced with a positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);

}  // namespace dgal
