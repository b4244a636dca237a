#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "dgal/numberfield.hpp"

namespace dgal {

namespace {

// ---------------------------------------------------------- mod p, small p

using Coef = long;
using PPoly = std::vector<Coef>;  // lowest first, trimmed, entries in [0, p)

struct Zp {
  Coef p;

  Coef mod(Coef a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  Coef inv(Coef a) const {
    Coef r = 1, b = mod(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  static void trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  PPoly sub(PPoly a, const PPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i]);
    trim(a);
    return a;
  }
  PPoly mul(const PPoly& a, const PPoly& b) const {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
  }
  std::pair<PPoly, PPoly> divmod(PPoly a, const PPoly& b) const {
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
    PPoly q(a.size() - b.size() + 1, 0);
    const Coef li = inv(b.back());
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      Coef t = a[i] * li % p;
      q[i - db] = t;
      if (t == 0) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - t * b[j]);
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
  }
  PPoly rem(const PPoly& a, const PPoly& b) const { return divmod(a, b).second; }
  PPoly monic(PPoly a) const {
    if (a.empty()) return a;
    Coef li = inv(a.back());
    for (auto& c : a) c = c * li % p;
    return a;
  }
  PPoly gcd(PPoly a, PPoly b) const {
    while (!b.empty()) {
      PPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // u a + v b = gcd
  void xgcd(const PPoly& a, const PPoly& b, PPoly& u, PPoly& v) const {
    PPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::exchange(r1, r);
      s0 = std::exchange(s1, sub(s0, mul(q, s1)));
      t0 = std::exchange(t1, sub(t0, mul(q, t1)));
    }
    Coef li = inv(r0.back());
    for (auto& c : s0) c = c * li % p;
    for (auto& c : t0) c = c * li % p;
    u = s0;
    v = t0;
  }
  PPoly powmod(PPoly base, const BigInt& e, const PPoly& m) const {
    PPoly result = {1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
  PPoly derivative(const PPoly& a) const {
    PPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mod(static_cast<Coef>(i) * a[i]));
    trim(d);
    return d;
  }

  // Distinct-degree factorisation of a monic squarefree polynomial.
  std::vector<std::pair<PPoly, int>> ddf(PPoly f) const {
    std::vector<std::pair<PPoly, int>> out;
    PPoly h = {0, 1};
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
      h = powmod(h, BigInt(p), f);
      PPoly g = gcd(sub(h, {0, 1}), f);
      if (g.size() > 1) {
        out.emplace_back(g, d);
        f = divmod(f, g).first;
        h = rem(h, f);
      }
    }
    if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
    return out;
  }

  // Equal-degree splitting (Cantor-Zassenhaus), p odd.
  void edf(const PPoly& g, int d, std::mt19937_64& rng, std::vector<PPoly>& out) const {
    const int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
      out.push_back(g);
      return;
    }
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<Coef> coin(0, p - 1);
    while (true) {
      PPoly a(n);
      for (auto& c : a) c = coin(rng);
      trim(a);
      if (a.size() <= 1) continue;
      PPoly b = sub(powmod(a, e, g), {1});
      PPoly u = gcd(b, g);
      if (u.size() > 1 && static_cast<int>(u.size()) - 1 < n) {
        edf(u, d, rng, out);
        edf(divmod(g, u).first, d, rng, out);
        return;
      }
    }
  }
};

// --------------------------------------------------------- integer polys

using ZPoly = std::vector<BigInt>;  // lowest first

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt zmod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

ZPoly zreduce(ZPoly a, const BigInt& m) {
  for (auto& c : a) c = zmod(c, m);
  ztrim(a);
  return a;
}

ZPoly zsymmetric(ZPoly a, const BigInt& m) {
  const BigInt half = m / 2;
  for (auto& c : a) {
    c = zmod(c, m);
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

BigInt content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly primitive(ZPoly a) {
  BigInt g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact quotient over Z, or empty optional.
std::optional<ZPoly> zdivide(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    if (!mpz_divisible_p(a[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    BigInt t = a[i] / b.back();
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (a[i] != 0) return std::nullopt;
  ztrim(q);
  return q;
}

PPoly to_p(const ZPoly& a, Coef p) {
  PPoly r;
  for (const auto& c : a) r.push_back(zmod(c, BigInt(p)).get_si());
  Zp::trim(r);
  return r;
}

ZPoly from_p(const PPoly& a) { return ZPoly(a.begin(), a.end()); }

// Lifts f ≡ g h (mod p), g monic, to modulus p^k.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Zp& zp, int k) {
  PPoly s, t;
  zp.xgcd(to_p(g, zp.p), to_p(h, zp.p), s, t);
  BigInt m = zp.p;
  for (int j = 1; j < k; ++j) {
    ZPoly diff = f;
    ZPoly gh = zmul(g, h);
    if (diff.size() < gh.size()) diff.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    BigInt mm = m * zp.p;
    diff = zreduce(diff, mm);
    for (auto& c : diff) c /= m;
    PPoly e = to_p(diff, zp.p);
    auto [q, r] = zp.divmod(zp.mul(t, e), to_p(g, zp.p));
    PPoly dh = zp.mul(s, e);
    PPoly qh = zp.mul(q, to_p(h, zp.p));
    if (dh.size() < qh.size()) dh.resize(qh.size(), 0);
    for (std::size_t i = 0; i < qh.size(); ++i) dh[i] = zp.mod(dh[i] + qh[i]);
    Zp::trim(dh);
    if (g.size() < r.size()) g.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) g[i] += m * r[i];
    if (h.size() < dh.size()) h.resize(dh.size(), 0);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += m * dh[i];
    g = zreduce(g, mm);
    h = zreduce(h, mm);
    m = mm;
  }
}

// Lifts all monic modular factors of f (leading coefficient lc) to p^k.
std::vector<ZPoly> hensel_all(ZPoly f, const std::vector<PPoly>& factors, const Zp& zp, int k, const BigInt& modulus) {
  std::vector<ZPoly> out;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ZPoly g = from_p(factors[i]);
    PPoly rest = {zp.mod(zmod(f.back(), BigInt(zp.p)).get_si())};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = zp.mul(rest, factors[j]);
    ZPoly h = from_p(rest);
    hensel_pair(f, g, h, zp, k);
    out.push_back(g);
    f = zreduce(h, modulus);
  }
  // Last factor: make monic modulo p^k.
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : f) c = zmod(c * inv, modulus);
  out.push_back(f);
  return out;
}

const std::vector<Coef>& small_primes() {
  static const std::vector<Coef> primes = [] {
    std::vector<Coef> ps;
    for (Coef n = 3; ps.size() < 400; n += 2) {
      bool prime = true;
      for (Coef d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

// Factors a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  struct Candidate {
    Coef p;
    std::vector<std::pair<PPoly, int>> ddf;
    int count;
  };
  std::vector<Candidate> cands;
  std::vector<bool> possible(n + 1, true);
  for (Coef p : small_primes()) {
    if (cands.size() >= 7) break;
    Zp zp{p};
    if (zmod(f.back(), BigInt(p)) == 0) continue;
    PPoly fp = zp.monic(to_p(f, p));
    if (zp.gcd(fp, zp.derivative(fp)).size() > 1) continue;
    auto d = zp.ddf(fp);
    int count = 0;
    std::vector<int> degs;
    for (const auto& [g, deg] : d) {
      const int c = (static_cast<int>(g.size()) - 1) / deg;
      count += c;
      for (int i = 0; i < c; ++i) degs.push_back(deg);
    }
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (int dg : degs)
      for (int s = n; s >= dg; --s) sums[s] = sums[s] || sums[s - dg];
    for (int s = 0; s <= n; ++s) possible[s] = possible[s] && sums[s];
    cands.push_back({p, std::move(d), count});
  }
  if (cands.empty()) throw std::logic_error("no suitable prime for factorisation");
  bool reducible = false;
  for (int s = 1; s < n; ++s) reducible = reducible || possible[s];
  if (!reducible) return {f};

  const Candidate& best = *std::min_element(cands.begin(), cands.end(),
                                            [](const Candidate& a, const Candidate& b) { return a.count < b.count; });
  Zp zp{best.p};
  std::mt19937_64 rng(0x5eed + best.p);
  std::vector<PPoly> modular;
  for (const auto& [g, d] : best.ddf) zp.edf(g, d, rng, modular);
  if (modular.size() == 1) return {f};

  // Coefficient bound for factors, times the leading coefficient.
  BigInt norm2 = 0, maxc = 0;
  for (const auto& c : f) {
    norm2 += c * c;
    maxc = std::max(maxc, BigInt(abs(c)));
  }
  BigInt root = sqrt(norm2) + 1;
  BigInt bound = (BigInt(1) << n) * root * abs(f.back()) * 2 + 1;
  int k = 1;
  BigInt modulus = zp.p;
  while (modulus <= bound) {
    modulus *= zp.p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_all(f, modular, zp, k, modulus);

  std::vector<ZPoly> found;
  std::vector<int> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
  bool pristine = true;
  for (int size = 1; 2 * size <= static_cast<int>(alive.size());) {
    bool progress = false;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      int deg = 0;
      for (int i : pick) deg += static_cast<int>(lifted[alive[i]].size()) - 1;
      if (!pristine || possible[deg]) {
        const BigInt lc = f.back();
        // Constant-term screen before the full product.
        BigInt c0 = lc;
        for (int i : pick) c0 = zmod(c0 * lifted[alive[i]][0], modulus);
        if (c0 > modulus / 2) c0 -= modulus;
        if (c0 == 0 || mpz_divisible_p(BigInt(lc * f[0]).get_mpz_t(), c0.get_mpz_t())) {
          ZPoly g = {lc};
          for (int i : pick) g = zsymmetric(zmul(g, lifted[alive[i]]), modulus);
          g = primitive(g);
          if (auto q = zdivide(f, g)) {
            found.push_back(g);
            f = *q;
            std::vector<int> rest;
            for (int i = 0; i < static_cast<int>(alive.size()); ++i)
              if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(alive[i]);
            alive = rest;
            pristine = false;
            progress = true;
            break;
          }
        }
      }
      // Next combination.
      int i = size - 1;
      while (i >= 0 && pick[i] == static_cast<int>(alive.size()) - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!progress) ++size;
  }
  if (f.size() > 1) found.push_back(primitive(f));
  return found;
}

// ---------------------------------------------------------------- helpers

UPoly to_upoly(const ZPoly& a) {
  std::vector<Rat> c(a.begin(), a.end());
  return UPoly::from_rationals(c);
}

ZPoly to_zpoly(const UPoly& a) {
  BigInt den = 1;
  for (const auto& c : a.coeffs()) den = lcm(den, BigInt(c.rational().get_den()));
  ZPoly z;
  for (const auto& c : a.coeffs()) {
    Rat v = c.rational() * den;
    z.push_back(v.get_num());
  }
  return primitive(z);
}

// Musser's squarefree decomposition; pairs (squarefree factor, multiplicity).
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly c = gcd(p, p.derivative());
  UPoly w = divmod(p, c).first;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  return out;
}

bool coeff_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    QVector x = a.coeff(i).absolute_coordinates(), y = b.coeff(i).absolute_coordinates();
    if (x != y) return x < y;
  }
  return false;
}

Factorization finish(const UPoly& p, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    if (coeff_less(a.poly, b.poly)) return true;
    if (coeff_less(b.poly, a.poly)) return false;
    return a.multiplicity < b.multiplicity;
  });
  Factorization out{p.lead(), std::move(factors)};
  if (!(out.product() == p)) throw std::logic_error("factorisation product check failed");
  return out;
}

// Norm of q ∈ F[y] down to the base of F, by interpolating resultants.
UPoly norm_down(const UPoly& q) {
  const FieldPtr& f = q.field();
  const FieldPtr& k = f->base();
  const int deg = q.degree() * f->degree();
  std::vector<NFElem> xs, ys;
  for (int t = 0; t <= deg; ++t) {
    NFElem at(k, t);
    // q(t) as a polynomial in the generator over k.
    NFElem value = q.evaluate(at.embed(f));
    UPoly in_gen(k, value.coeffs());
    xs.push_back(at);
    ys.push_back(resultant(f->minpoly(), in_gen));
  }
  // Newton interpolation.
  std::vector<NFElem> dd = ys;
  for (int j = 1; j <= deg; ++j)
    for (int i = deg; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UPoly result = UPoly::constant(k, dd[deg]);
  for (int i = deg - 1; i >= 0; --i)
    result = result * UPoly(k, {-xs[i], NFElem(k, 1)}) + UPoly::constant(k, dd[i]);
  return result;
}

// Trager's algorithm for a monic squarefree polynomial over an extension.
std::vector<UPoly> trager(const UPoly& p) {
  const FieldPtr& f = p.field();
  const NFElem alpha = NFElem::generator(f);
  for (int attempt = 0;; ++attempt) {
    const int s = attempt % 2 == 0 ? attempt / 2 : -(attempt + 1) / 2;
    UPoly shifted = p.compose(UPoly(f, {alpha * NFElem(-s), NFElem(f, 1)}));
    UPoly n = norm_down(shifted);
    if (gcd(n, n.derivative()).degree() > 0) continue;
    Factorization nf = factor_ext(n);
    std::vector<UPoly> out;
    if (nf.factors.size() == 1) return {p};
    UPoly back(f, {alpha * NFElem(s), NFElem(f, 1)});
    for (const auto& fac : nf.factors) {
      UPoly g = gcd(shifted, fac.poly.embed(f));
      out.push_back(g.compose(back).monic());
    }
    return out;
  }
}

}  // namespace

UPoly Factorization::product() const {
  FieldPtr f = unit.field();
  for (const auto& fac : factors)
    if (is_subfield(f, fac.poly.field())) f = fac.poly.field();
  UPoly acc = UPoly::constant(f, unit);
  for (const auto& fac : factors)
    for (int i = 0; i < fac.multiplicity; ++i) acc = acc * fac.poly;
  return acc;
}

Factorization factor_q(const UPoly& p) {
  if (p.field()) throw std::invalid_argument("factor_q expects rational coefficients");
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(p.monic())) {
    if (part.degree() == 1) {
      out.push_back({part, mult});
      continue;
    }
    for (const auto& z : zassenhaus(to_zpoly(part))) out.push_back({to_upoly(z).monic(), mult});
  }
  return finish(p, std::move(out));
}

Factorization factor_ext(const UPoly& p) {
  if (!p.field()) return factor_q(p);
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(p.monic())) {
    if (part.degree() == 1) {
      out.push_back({part, mult});
      continue;
    }
    for (const auto& g : trager(part)) out.push_back({g, mult});
  }
  return finish(p, std::move(out));
}

bool is_irreducible(const UPoly& p) {
  if (p.degree() < 1) return false;
  Factorization f = factor_ext(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace dgal
