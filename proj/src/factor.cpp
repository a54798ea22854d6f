// Copyright 2026 The modlie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Zassenhaus factorization of squarefree integer polynomials: factor modulo
// a small prime (distinct-degree then Cantor-Zassenhaus splitting), Hensel
// lift the factors past the Mignotte bound, then recombine subsets.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "modlie/poly.hpp"

namespace modlie {

namespace {

using ModPoly = std::vector<std::int64_t>;  // low to high, no trailing zeros

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  return pow_mod(a, p - 2, p);
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly sub(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

ModPoly add(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] + b[i], p);
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

void divmod(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& q,
            ModPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::int64_t inv = inv_mod(b.back(), p);
  for (int k = deg(r); k >= deg(b); --k) {
    const std::int64_t c = r[static_cast<std::size_t>(k)] * inv % p;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j) {
      auto& x = r[static_cast<std::size_t>(k - deg(b) + j)];
      x = mod(x - c * b[static_cast<std::size_t>(j)], p);
    }
  }
  trim(q);
  trim(r);
}

ModPoly rem(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly q, r;
  divmod(a, b, p, q, r);
  return r;
}

ModPoly quo(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly q, r;
  divmod(a, b, p, q, r);
  return q;
}

ModPoly make_monic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  const std::int64_t inv = inv_mod(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

// s a + t b = 1 for coprime a, b.
void bezout(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& s,
            ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("bezout: inputs not coprime");
  const std::int64_t inv = inv_mod(r0[0], p);
  s = mul(s0, ModPoly{inv}, p);
  t = mul(t0, ModPoly{inv}, p);
}

ModPoly derivative(const ModPoly& a, std::int64_t p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) {
    d.push_back(static_cast<std::int64_t>(i) % p * a[i] % p);
  }
  trim(d);
  return d;
}

ModPoly pow_mod_poly(ModPoly base, const mpz_class& e, const ModPoly& f,
                     std::int64_t p) {
  ModPoly result{1};
  base = rem(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), f, p);
  }
  return result;
}

// Equal-degree splitting of a monic product of irreducibles of degree d.
void split_equal_degree(const ModPoly& f, int d, std::int64_t p,
                        std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    ModPoly a(static_cast<std::size_t>(deg(f)));
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly g = gcd(a, f, p);
    if (deg(g) >= 1 && deg(g) < deg(f)) {
      split_equal_degree(g, d, p, rng, out);
      split_equal_degree(quo(f, g, p), d, p, rng, out);
      return;
    }
    ModPoly b = sub(pow_mod_poly(a, e, f, p), ModPoly{1}, p);
    g = gcd(b, f, p);
    if (deg(g) >= 1 && deg(g) < deg(f)) {
      split_equal_degree(g, d, p, rng, out);
      split_equal_degree(quo(f, g, p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial mod p.
std::vector<ModPoly> factor_mod_p(const ModPoly& monic_f, std::int64_t p) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(p));
  ModPoly f = monic_f;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = pow_mod_poly(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    ModPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) >= 1) {
      split_equal_degree(g, d, p, rng, out);
      f = quo(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (deg(f) >= 1) out.push_back(f);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

using ZPoly = std::vector<mpz_class>;  // low to high

ZPoly to_z(const Polynomial& f) {
  ZPoly z;
  for (const auto& c : f.coefficients()) {
    if (!c.is_integer()) throw std::invalid_argument("zassenhaus needs integer coefficients");
    z.push_back(c.num());
  }
  return z;
}

ModPoly reduce(const ZPoly& f, std::int64_t p) {
  ModPoly r;
  const mpz_class pz(static_cast<long>(p));
  for (const auto& c : f) {
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    r.push_back(m.get_si());
  }
  trim(r);
  return r;
}

ZPoly lift_poly(const ModPoly& a) {
  ZPoly z;
  for (auto c : a) z.emplace_back(static_cast<long>(c));
  return z;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

// Lifts monic factors u_i (mod p) of f with f = lc(f) prod u_i (mod p) to
// modulus p^k by linear Hensel steps along a balanced factor tree.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& us,
                               std::int64_t p, unsigned k) {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
  if (us.size() == 1) {
    mpz_class inv;
    mpz_class lc = f.back();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    return {zmod(g, pk)};
  }
  const std::size_t half = us.size() / 2;
  std::vector<ModPoly> a(us.begin(), us.begin() + static_cast<long>(half));
  std::vector<ModPoly> b(us.begin() + static_cast<long>(half), us.end());
  ModPoly g0 = reduce(ZPoly{f.back()}, p);
  for (const auto& u : a) g0 = mul(g0, u, p);
  ModPoly h0{1};
  for (const auto& u : b) h0 = mul(h0, u, p);
  ModPoly s, t;
  bezout(g0, h0, p, s, t);
  // Normalize so deg s < deg h and deg t < deg g.
  {
    ModPoly q, r;
    divmod(s, h0, p, q, r);
    s = r;
    t = quo(sub(ModPoly{1}, mul(s, g0, p), p), h0, p);
  }
  ZPoly g = lift_poly(g0);
  g.back() = f.back();  // keep the true leading coefficient
  ZPoly h = lift_poly(h0);
  const mpz_class pz(static_cast<long>(p));
  mpz_class pj = pz;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly e = zsub(f, zmul(g, h));
    for (auto& c : e) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
      if (r != 0) throw std::logic_error("hensel: congruence lost");
      c /= pj;
    }
    const ModPoly em = reduce(e, p);
    ModPoly q, r;
    divmod(mul(s, em, p), h0, p, q, r);
    const ModPoly dh = r;
    const ModPoly dg = add(mul(t, em, p), mul(q, g0, p), p);
    ZPoly dgz = lift_poly(dg), dhz = lift_poly(dh);
    for (auto& c : dgz) c *= pj;
    for (auto& c : dhz) c *= pj;
    if (dgz.size() > g.size()) g.resize(dgz.size());
    for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += dgz[i];
    if (dhz.size() > h.size()) h.resize(dhz.size());
    for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += dhz[i];
    pj *= pz;
    g = zmod(g, pj);
    h = zmod(h, pj);
  }
  auto left = hensel_lift(g, a, p, k);
  auto right = hensel_lift(h, b, p, k);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

Polynomial to_rational(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v, mpz_class(1));
  return Polynomial(std::move(c));
}

Polynomial primitive(const Polynomial& f) {
  mpz_class g = 0;
  for (const auto& c : f.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
  }
  if (f.leading().sign() < 0) g = -g;
  return Rational(mpz_class(1), g) * f;
}

}  // namespace

std::vector<Polynomial> zassenhaus(const Polynomial& input) {
  const ZPoly f = to_z(input);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return {};
  if (n == 1) return {primitive(input)};

  // Prime choice: among the first few admissible primes keep the one giving
  // the fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int admissible = 0;
  for (std::int64_t p = 3; admissible < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    ModPoly fp = reduce(f, p);
    if (deg(fp) != n) continue;
    if (deg(gcd(fp, derivative(fp, p), p)) != 0) continue;
    ++admissible;
    auto facs = factor_mod_p(make_monic(fp, p), p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw std::logic_error("zassenhaus: no admissible prime");
  if (best.size() == 1) return {primitive(input)};

  // Coefficient bound for any factor times the leading coefficient.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2 * abs(f.back());
  unsigned k = 1;
  mpz_class pk(static_cast<long>(best_p));
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, k);
  std::vector<Polynomial> out;
  Polynomial rest = input;
  const mpz_class half = pk / 2;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{rest.leading().num()};
      for (auto i : idx) g = zmod(zmul(g, lifted[i]), pk);
      for (auto& c : g) {
        if (c > half) c -= pk;
      }
      Polynomial cand = primitive(to_rational(g));
      if (cand.degree() >= 1 && (rest % cand).is_zero()) {
        out.push_back(cand);
        rest = primitive(rest / cand);
        for (std::size_t i = size; i-- > 0;) {
          lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
        }
        found = true;
        break;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == r - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() >= 1) out.push_back(primitive(rest));
  return out;
}

}  // namespace modlie
