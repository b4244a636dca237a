#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dgal/ratfunc.hpp"

namespace dgal {

// Seeded generator for property checks; identical seeds give identical data.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  Rat small_rat(int bound);  // p/q with |p| <= bound, 1 <= q <= bound
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Polynomial with integer coefficients in [-coef, coef], at most `terms`
// terms and total degree <= max_degree.
MPoly random_poly(Rng& rng, const std::vector<Var>& vars, int max_degree, int terms, int coef);

// Quotient of two random polynomials, the denominator guaranteed nonzero.
RatFunc random_ratfunc(Rng& rng, const std::vector<Var>& vars, int max_degree, int terms, int coef);

}  // namespace dgal
