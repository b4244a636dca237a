// Seeded randomized checks of the bracket, sharp/flat and Spencer identities.
#include <string>

#include "dgal/random.hpp"
#include "recorder.hpp"

namespace dgal {
namespace {

using scen::Recorder;

struct Shape {
  int n, m, q;
};

std::string label(const char* suite, const Shape& s, const char* extra = "") {
  return std::string(suite) + " (n=" + std::to_string(s.n) + ", m=" + std::to_string(s.m) +
         ", q=" + std::to_string(s.q) + extra + ")";
}

JetContext context(const Shape& s) { return {s.n, s.m, s.q, 0}; }

JetSection lift_randomly(Rng& rng, const JetSection& s) {
  JetSection r = random_section(rng, s.dim(), s.order() + 1, s.over());
  for (const auto& [key, v] : s.components()) r.set(key.first, key.second, v);
  return r;
}

RatFunc random_phi(Rng& rng, const JetContext& ctx) {
  std::vector<Var> vars;
  for (int i = 1; i <= ctx.n; ++i) vars.push_back(Var::source(i));
  for (const auto& mu : MultiIndex::up_to(ctx.n, ctx.q))
    for (int k = 1; k <= ctx.m; ++k) vars.push_back(Var::jet(k, mu.dirs()));
  return RatFunc(random_poly(rng, vars, 3, 4, 5));
}

// Runs `trial` the requested number of times and records "<name>: k/N".
template <class F>
void tally(Recorder& r, const std::string& name, int trials, F trial) {
  int ok = 0;
  for (int t = 0; t < trials; ++t) ok += trial(t) ? 1 : 0;
  r.check(name + ": " + std::to_string(ok) + "/" + std::to_string(trials), ok == trials, Provenance::Trivial);
}

const Shape kBracketShapes[] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}};
const Shape kMorphismShapes[] = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}};

}  // namespace

Report run_property_suites(std::uint64_t seed, int trials) {
  Recorder r("properties");
  // Each suite draws from its own stream so suites stay reproducible in isolation.
  std::uint64_t stream = 0;
  auto rng_for = [&] { return Rng(seed * 1000003ULL + ++stream); };

  for (Base over : {Base::Source, Base::Target}) {
    const char* side = over == Base::Source ? ", source" : ", target";
    for (const Shape& s : kBracketShapes) {
      const int dim = over == Base::Source ? s.n : s.m;
      Rng rng = rng_for();
      tally(r, label("jacobi", s, side), trials, [&](int) {
        JetSection a = random_section(rng, dim, s.q, over), b = random_section(rng, dim, s.q, over),
                   c = random_section(rng, dim, s.q, over);
        JetSection cyc = algebroid_bracket(a, algebroid_bracket(b, c)) + algebroid_bracket(b, algebroid_bracket(c, a)) +
                         algebroid_bracket(c, algebroid_bracket(a, b));
        return cyc == JetSection(dim, s.q, over);
      });
      Rng lrng = rng_for();
      tally(r, label("lift independence", s, side), trials, [&](int) {
        JetSection a = random_section(lrng, dim, s.q, over), b = random_section(lrng, dim, s.q, over);
        return algebroid_bracket(a, b) == algebroid_bracket(a, b, lift_randomly(lrng, a), lift_randomly(lrng, b));
      });
    }
  }

  for (const Shape& s : kMorphismShapes) {
    const JetContext ctx = context(s);
    Rng rng = rng_for();
    tally(r, label("sharp is a bracket morphism", s), trials, [&](int) {
      JetSection a = random_section(rng, s.m, s.q, Base::Target), b = random_section(rng, s.m, s.q, Base::Target);
      return bracket_vf(sharp(a, ctx), sharp(b, ctx)) == sharp(algebroid_bracket(a, b), ctx);
    });
    Rng frng = rng_for();
    tally(r, label("flat is a bracket morphism", s), trials, [&](int) {
      JetSection a = random_section(frng, s.n, s.q, Base::Source), b = random_section(frng, s.n, s.q, Base::Source);
      return bracket_vf(flat(a, ctx), flat(b, ctx)) == flat(algebroid_bracket(a, b), ctx);
    });
    Rng crng = rng_for();
    tally(r, label("sharp and flat commute", s), trials, [&](int) {
      VectorField a = sharp(random_section(crng, s.m, s.q, Base::Target), ctx);
      VectorField b = flat(random_section(crng, s.n, s.q, Base::Source), ctx);
      return bracket_vf(a, b).is_zero();
    });
  }

  for (const Shape& s : kBracketShapes) {
    if (s.q > 1) continue;
    const JetContext ctx = context(s);
    Rng rng = rng_for();
    tally(r, label("d_x commutes with sharp and flat", s), trials, [&](int t) {
      RatFunc f = random_phi(rng, ctx);
      int i = 1 + t % s.n;
      return commutation_residual(f, random_section(rng, s.n, s.q + 1, Base::Source), i, ctx).is_zero() &&
             commutation_residual(f, random_section(rng, s.m, s.q + 1, Base::Target), i, ctx).is_zero();
    });
  }

  int two_term = 0, two_term_trials = 0;
  for (const Shape& s : kBracketShapes) {
    if (s.q > 1 || s.m != s.n) continue;
    Rng rng = rng_for();
    tally(r, label("spencer of a bracket", s), trials, [&](int t) {
      JetSection xi = random_section(rng, s.n, s.q + 1, Base::Source), eta = random_section(rng, s.n, s.q + 1, Base::Source);
      JetSection zeta = random_section(rng, s.n, 0, Base::Source, t % 2);
      JetSection lhs = interior_spencer(zeta, algebroid_bracket(xi, eta));
      JetSection rhs = algebroid_bracket(interior_spencer(zeta, xi), eta.truncated(s.q)) +
                       algebroid_bracket(xi.truncated(s.q), interior_spencer(zeta, eta));
      JetSection correction = interior_spencer(formal_lie_derivative(eta.truncated(1), zeta), xi) -
                              interior_spencer(formal_lie_derivative(xi.truncated(1), zeta), eta);
      ++two_term_trials;
      two_term += lhs == rhs ? 1 : 0;
      return lhs == rhs + correction;
    });
  }
  r.note("two-term expansion of the Spencer operator on a bracket held in " + std::to_string(two_term) + "/" +
         std::to_string(two_term_trials) + " trials; the identity checked above adds the formal Lie derivative terms");

  for (const Shape& s : kBracketShapes) {
    if (s.m != s.n) continue;
    Rng rng = rng_for();
    std::vector<Var> base;
    for (int i = 1; i <= s.n; ++i) base.push_back(Var::source(i));
    tally(r, label("spencer of a holonomic section", s), trials, [&](int) {
      std::vector<RatFunc> comps;
      for (int k = 0; k < s.n; ++k) comps.push_back(RatFunc(random_poly(rng, base, 3, 3, 5)));
      return spencer(JetSection::holonomic(comps, s.q, Base::Source)).is_zero();
    });
  }
  return r.report();
}

}  // namespace dgal
