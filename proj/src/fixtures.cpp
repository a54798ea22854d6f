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


#include "modlie/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "modlie/errors.hpp"
#include "modlie/poly.hpp"

namespace modlie {

RatMatrix jordan_block(std::size_t n) {
  RatMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

ModulePair lemma_v() {
  RatMatrix p(4, 4);
  p(2, 0) = 1;  // e1 -> e3
  p(3, 1) = 1;  // e2 -> e4
  return ModulePair(p, RatMatrix(4, 4), "lemma-v");
}

ModulePair lemma_w() {
  RatMatrix p(4, 4), q(4, 4);
  p(2, 0) = 1;  // e1 -> e3
  q(3, 0) = 1;  // e1 -> e4
  return ModulePair(p, q, "lemma-w");
}

LinearMap lemma_lie_map() {
  // Columns: images of s, t, e1..e4 in the basis s', t', w1, w2, b1, b2.
  RatMatrix m(6, 6);
  m(2, 0) = -1;
  m(3, 1) = -1;
  m(0, 2) = 1;
  m(1, 3) = 1;
  m(4, 4) = 1;
  m(5, 5) = 1;
  return LinearMap{m};
}

ModulePair cyclic_monomial(const std::vector<Monomial>& gens) {
  std::optional<unsigned> xa, yb;
  for (const auto& [a, b] : gens) {
    if (a == 0 && b == 0) throw InputError("monomial ideal is the whole ring");
    if (b == 0) xa = std::min(xa.value_or(a), a);
    if (a == 0) yb = std::min(yb.value_or(b), b);
  }
  if (!xa || !yb) throw InputError("monomial ideal must contain a power of x and of y");
  auto standard = [&](unsigned a, unsigned b) {
    return std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      return a >= g.first && b >= g.second;
    });
  };
  std::vector<Monomial> basis;
  for (unsigned a = 0; a < *xa; ++a) {
    for (unsigned b = 0; b < *yb; ++b) {
      if (standard(a, b)) basis.emplace_back(a, b);
    }
  }
  std::sort(basis.begin(), basis.end(), [](const Monomial& l, const Monomial& r) {
    if (l.first + l.second != r.first + r.second) {
      return l.first + l.second < r.first + r.second;
    }
    return l.second < r.second;
  });
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  const std::size_t n = basis.size();
  RatMatrix p(n, n), q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto [a, b] = basis[j];
    if (auto it = index.find({a + 1, b}); it != index.end()) p(it->second, j) = 1;
    if (auto it = index.find({a, b + 1}); it != index.end()) q(it->second, j) = 1;
  }
  return ModulePair(p, q);
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& name) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 6) {
    throw InputError("bad size in fixture name: " + name);
  }
  return std::stoul(s);
}

Monomial parse_monomial(const std::string& s, const std::string& name) {
  Monomial m{0, 0};
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    const char v = s[i++];
    if (v == '*') continue;
    if (v != 'x' && v != 'y') throw InputError("bad monomial in fixture name: " + name);
    unsigned e = 1;
    if (i < s.size() && s[i] == '^') {
      std::size_t j = ++i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      e = static_cast<unsigned>(parse_count(s.substr(i, j - i), name));
      i = j;
    }
    (v == 'x' ? m.first : m.second) += e;
    any = true;
  }
  if (!any) throw InputError("bad monomial in fixture name: " + name);
  return m;
}

}  // namespace

ModulePair fixture(const std::string& raw) {
  const std::string name = strip(raw);
  std::string base = name;
  std::vector<std::string> args;
  if (const auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw InputError("unknown fixture: " + raw);
    base = name.substr(0, open);
    args = split_args(name.substr(open + 1, name.size() - open - 2));
  }
  if (base == "lemma-v" && args.empty()) return lemma_v();
  if (base == "lemma-w" && args.empty()) return lemma_w();
  if (base == "nonisom-a") {
    if (args.size() > 2) throw InputError("unknown fixture: " + raw);
    const std::string side = args.empty() ? "left" : args[0];
    const std::size_t n = args.size() == 2 ? parse_count(args[1], raw) : 2;
    if (n == 0) throw InputError("nonisom-a needs a positive size");
    const RatMatrix a = jordan_block(n), z(n, n);
    if (side == "left") return ModulePair(a, z, name);
    if (side == "right") return ModulePair(z, a, name);
    throw InputError("nonisom-a side must be left or right: " + raw);
  }
  if (base == "jordan" && args.size() == 1) {
    const std::size_t n = parse_count(args[0], raw);
    if (n == 0) throw InputError("jordan needs a positive size");
    return ModulePair(jordan_block(n), RatMatrix(n, n), name);
  }
  if (base == "zero" && args.size() == 1) {
    return ModulePair::zero(parse_count(args[0], raw)).renamed(name);
  }
  if (base == "cyclic-monomial" && !args.empty()) {
    std::vector<Monomial> gens;
    for (const auto& a : args) gens.push_back(parse_monomial(a, raw));
    return cyclic_monomial(gens).renamed(name);
  }
  throw InputError("unknown fixture: " + raw);
}

std::string to_string(Profile p) {
  switch (p) {
    case Profile::kNilpotent: return "nilpotent";
    case Profile::kGeneric: return "generic";
    case Profile::kBlock: return "block";
  }
  return "generic";
}

Profile parse_profile(const std::string& s) {
  if (s == "nilpotent") return Profile::kNilpotent;
  if (s == "generic") return Profile::kGeneric;
  if (s == "block") return Profile::kBlock;
  throw InputError("unknown profile: " + s);
}

namespace {

Rational draw(Rng& rng, long range) { return Rational(static_cast<long>(rng.uniform(-range, range))); }

Polynomial random_poly(Rng& rng, std::size_t max_degree, bool constant_term, long range) {
  const auto deg = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_degree)));
  std::vector<Rational> c(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) c[i] = (i == 0 && !constant_term) ? Rational(0) : draw(rng, range);
  return Polynomial(std::move(c));
}

RatMatrix strictly_upper(std::size_t n, Rng& rng, long range) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = draw(rng, range);
  }
  return m;
}

// Random strictly upper triangular matrix commuting with p.
RatMatrix upper_commutant_element(const RatMatrix& p, Rng& rng, long range) {
  const std::size_t n = p.rows();
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) vars.emplace_back(i, j);
  }
  if (vars.empty()) return RatMatrix(n, n);
  RatMatrix sys(n * n, vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const auto [a, b] = vars[v];
    // (X P)_{a j} += P(b, j);  (P X)_{i b} += P(i, a)
    for (std::size_t j = 0; j < n; ++j) sys(a * n + j, v) += p(b, j);
    for (std::size_t i = 0; i < n; ++i) sys(i * n + b, v) -= p(i, a);
  }
  RatMatrix q(n, n);
  for (const Vector& k : kernel_basis(sys)) {
    const Rational c = draw(rng, range);
    for (std::size_t v = 0; v < vars.size(); ++v) q(vars[v].first, vars[v].second) += c * k[v];
  }
  return q;
}

}  // namespace

ModulePair random_pair(std::size_t dim, Profile profile, Rng& rng, const RandomConfig& config) {
  if (dim == 0) throw PreconditionViolated("random_pair needs dim >= 1");
  const long r = config.entry_range;
  const std::string name = "random-" + to_string(profile) + "-" + std::to_string(dim);
  switch (profile) {
    case Profile::kNilpotent: {
      const RatMatrix nil = strictly_upper(dim, rng, r);
      const RatMatrix p = evaluate(random_poly(rng, dim - 1, false, r), nil);
      const RatMatrix q = rng.coin() ? evaluate(random_poly(rng, dim - 1, false, r), nil)
                                     : upper_commutant_element(p, rng, r);
      return ModulePair(p, q, name);
    }
    case Profile::kGeneric: {
      RatMatrix m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = draw(rng, r);
      }
      const RatMatrix p = evaluate(random_poly(rng, dim - 1, true, r), m);
      const RatMatrix q = evaluate(random_poly(rng, dim - 1, true, r), m);
      return ModulePair(p, q, name);
    }
    case Profile::kBlock: {
      if (dim == 1) return random_pair(1, Profile::kGeneric, rng, config).renamed(name);
      const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(dim) - 1));
      const ModulePair a =
          random_pair(k, rng.coin() ? Profile::kNilpotent : Profile::kGeneric, rng, config);
      const ModulePair b =
          random_pair(dim - k, rng.coin() ? Profile::kNilpotent : Profile::kGeneric, rng, config);
      return direct_sum(a, b).renamed(name);
    }
  }
  throw PreconditionViolated("unknown profile");
}

ModulePair random_pair(std::size_t dim, Profile profile, std::uint64_t seed,
                       const RandomConfig& config) {
  Rng rng(seed);
  return random_pair(dim, profile, rng, config);
}

Twist random_twist(Rng& rng, long range) {
  for (;;) {
    const Rational a = draw(rng, range), b = draw(rng, range), c = draw(rng, range),
                   d = draw(rng, range);
    if (!(a * d - b * c).is_zero()) return Twist(a, b, c, d);
  }
}

RatMatrix random_invertible(std::size_t n, Rng& rng, long range) {
  for (;;) {
    RatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s(i, j) = draw(rng, range);
    }
    if (n == 0 || !det(s).is_zero()) return s;
  }
}

RatMatrix random_unimodular(std::size_t n, Rng& rng, long range) {
  RatMatrix l = RatMatrix::identity(n), u = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = draw(rng, range);
      u(j, i) = draw(rng, range);
    }
  }
  return l * u;
}

}  // namespace modlie
