#include "dgal/random.hpp"

namespace dgal {

Rat Rng::small_rat(int bound) {
  Rat r(uniform(-bound, bound), uniform(1, bound));
  r.canonicalize();
  return r;
}

MPoly random_poly(Rng& rng, const std::vector<Var>& vars, int max_degree, int terms, int coef) {
  std::vector<MPoly::Term> out;
  for (int t = 0; t < terms; ++t) {
    int deg = rng.uniform(0, max_degree);
    std::vector<std::pair<Var, int>> f;
    for (int k = 0; k < deg && !vars.empty(); ++k) f.emplace_back(vars[rng.uniform(0, static_cast<int>(vars.size()) - 1)], 1);
    out.emplace_back(Monomial::from_factors(f), Rat(rng.uniform(-coef, coef)));
  }
  return MPoly::from_terms(std::move(out));
}

RatFunc random_ratfunc(Rng& rng, const std::vector<Var>& vars, int max_degree, int terms, int coef) {
  MPoly num = random_poly(rng, vars, max_degree, terms, coef);
  MPoly den;
  while (den.is_zero()) den = random_poly(rng, vars, max_degree, terms, coef);
  return RatFunc(num, den);
}

}  // namespace dgal
