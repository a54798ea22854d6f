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


#include "modlie/iso.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "modlie/errors.hpp"
#include "modlie/lie.hpp"
#include "modlie/poly.hpp"

namespace modlie {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::kYes: return "yes";
    case Answer::kNo: return "no";
    case Answer::kUnknown: return "unknown";
  }
  return "unknown";
}

HomSpace hom_space(const ModulePair& v, const ModulePair& w) {
  const std::size_t nv = v.dim();
  const std::size_t nw = w.dim();
  HomSpace h{nv, nw, {}};
  if (nv == 0 || nw == 0) return h;

  // Unknown x_{ab} sits at a * nv + b; one equation per entry of
  // X P_V - P_W X and of X Q_V - Q_W X.
  const std::size_t unknowns = nw * nv;
  RatMatrix sys(2 * unknowns, unknowns);
  for (int op = 0; op < 2; ++op) {
    const RatMatrix& pv = op == 0 ? v.P() : v.Q();
    const RatMatrix& pw = op == 0 ? w.P() : w.Q();
    for (std::size_t i = 0; i < nw; ++i) {
      for (std::size_t j = 0; j < nv; ++j) {
        const std::size_t row = op * unknowns + i * nv + j;
        for (std::size_t b = 0; b < nv; ++b) {
          if (!pv(b, j).is_zero()) sys(row, i * nv + b) += pv(b, j);
        }
        for (std::size_t a = 0; a < nw; ++a) {
          if (!pw(i, a).is_zero()) sys(row, a * nv + j) -= pw(i, a);
        }
      }
    }
  }
  for (const Vector& k : kernel_basis(sys)) h.basis.push_back(unflatten(k, nw, nv));
  return h;
}

HomSpace endo_algebra(const ModulePair& v) {
  HomSpace h = hom_space(v, v);
  std::vector<Vector> flat;
  flat.reserve(h.dim());
  for (const RatMatrix& b : h.basis) flat.push_back(flatten(b));
  const Subspace span(v.dim() * v.dim(), flat);
  for (const RatMatrix& a : h.basis) {
    for (const RatMatrix& b : h.basis) {
      if (!span.contains(flatten(a * b))) {
        throw std::logic_error("endomorphism basis is not closed under products");
      }
    }
  }
  return h;
}

bool intertwines(const ModulePair& v, const ModulePair& w, const RatMatrix& x) {
  if (x.rows() != w.dim() || x.cols() != v.dim()) return false;
  return x * v.P() == w.P() * x && x * v.Q() == w.Q() * x;
}

bool verify_iso_certificate(const ModulePair& v, const ModulePair& w,
                            const RatMatrix& x) {
  if (v.dim() != w.dim() || !intertwines(v, w, x)) return false;
  return v.dim() == 0 || !det(x).is_zero();
}

bool verify_weak_certificate(const ModulePair& v, const ModulePair& w,
                             const Twist& theta, const RatMatrix& x) {
  if (!verify_iso_certificate(twist_pair(v, theta), w, x)) return false;
  const LinearMap phi = build_lie_iso_from_module_iso(v, w, theta, x);
  return verify_lie_iso(build_lie(v), build_lie(w), phi).ok;
}

IsoOptions oracle_iso_options() {
  IsoOptions o;
  o.grid.random_probes = 0;
  o.grid.budget = UINT64_MAX;
  o.prefilter = false;
  o.refine_over_budget = false;
  o.identity_shortcut = false;
  o.allow_randomized = false;
  return o;
}

namespace {

constexpr const char* kFieldRobust =
    "field-robust: the verdict is the same over every extension field of the rationals";

Verdict refuted(std::string name, nlohmann::json left, nlohmann::json right) {
  Verdict out;
  out.answer = Answer::kNo;
  out.refutation = Refutation{std::move(name), std::move(left), std::move(right)};
  out.notes.push_back(kFieldRobust);
  return out;
}

std::vector<std::size_t> power_ranks(const RatMatrix& m) {
  std::vector<std::size_t> out;
  RatMatrix p = m;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    out.push_back(rank(p));
    if (out.size() >= 2 && out[out.size() - 1] == out[out.size() - 2]) break;
    p = p * m;
  }
  return out;
}

std::optional<Verdict> quick_refutation(const ModulePair& v, const ModulePair& w) {
  if (auto r = compare_quick(quick_profile(v), quick_profile(w))) {
    return refuted(r->invariant, r->left, r->right);
  }
  return std::nullopt;
}

// Scales a matrix by the lcm of its denominators.
RatMatrix integral(const RatMatrix& m) {
  mpz_class l = 1;
  for (const Rational& x : m.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  return Rational(l, mpz_class(1)) * m;
}

}  // namespace

QuickProfile quick_profile(const ModulePair& v) {
  QuickProfile q;
  q.char_p = char_poly(v.P());
  q.char_q = char_poly(v.Q());
  q.ranks_p = power_ranks(v.P());
  q.ranks_q = power_ranks(v.Q());
  q.ranks_sum = power_ranks(v.P() + v.Q());
  q.annihilator_dim = annihilator(v).dim();
  q.image_span_dim = image_span(v).dim();
  return q;
}

std::optional<Refutation> compare_quick(const QuickProfile& a, const QuickProfile& b) {
  if (a.char_p != b.char_p) return Refutation{"char poly P", a.char_p.str(), b.char_p.str()};
  if (a.char_q != b.char_q) return Refutation{"char poly Q", a.char_q.str(), b.char_q.str()};
  if (a.ranks_p != b.ranks_p) return Refutation{"ranks of powers of P", a.ranks_p, b.ranks_p};
  if (a.ranks_q != b.ranks_q) return Refutation{"ranks of powers of Q", a.ranks_q, b.ranks_q};
  if (a.ranks_sum != b.ranks_sum) {
    return Refutation{"ranks of powers of P+Q", a.ranks_sum, b.ranks_sum};
  }
  if (a.annihilator_dim != b.annihilator_dim) {
    return Refutation{"annihilator dim", a.annihilator_dim, b.annihilator_dim};
  }
  if (a.image_span_dim != b.image_span_dim) {
    return Refutation{"image span dim", a.image_span_dim, b.image_span_dim};
  }
  return std::nullopt;
}

WitnessSearch search_invertible(const HomSpace& hom, const GridConfig& config) {
  if (hom.source_dim != hom.target_dim) {
    throw PreconditionViolated("invertible elements need a square Hom space");
  }
  const std::size_t n = hom.source_dim;
  std::vector<RatMatrix> basis;
  basis.reserve(hom.dim());
  for (const RatMatrix& b : hom.basis) basis.push_back(integral(b));
  auto combine = [&](std::span<const Rational> t) {
    RatMatrix x(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!t[i].is_zero()) x += t[i] * basis[i];
    }
    return x;
  };
  const PolyEvaluator d = [&](std::span<const Rational> t) { return det(combine(t)); };
  WitnessSearch out;
  out.grid = grid_nonzero(d, static_cast<unsigned>(basis.size()), static_cast<unsigned>(n),
                          config);
  if (out.grid.status != GridStatus::kWitness) return out;
  std::vector<Rational> t = out.grid.witness;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (long c : {0L, 1L}) {
      if (t[i] == Rational(c)) break;
      const Rational keep = t[i];
      t[i] = Rational(c);
      if (!d(t).is_zero()) break;
      t[i] = keep;
    }
  }
  out.x = combine(t);
  return out;
}

Verdict iso_decide(const ModulePair& v, const ModulePair& w, const IsoOptions& options) {
  if (v.dim() != w.dim()) return refuted("dimension", v.dim(), w.dim());
  const std::size_t n = v.dim();
  if (n == 0) {
    Verdict out;
    out.answer = Answer::kYes;
    out.certificate = IsoCertificate{RatMatrix(0, 0)};
    out.notes.push_back(kFieldRobust);
    return out;
  }
  if (options.identity_shortcut && v == w) {
    Verdict out;
    out.answer = Answer::kYes;
    out.certificate = IsoCertificate{RatMatrix::identity(n)};
    out.notes.push_back(kFieldRobust);
    return out;
  }
  if (options.prefilter) {
    if (auto r = quick_refutation(v, w)) return *r;
  }

  const HomSpace hom = hom_space(v, w);
  auto end_mismatch = [&]() -> std::optional<Verdict> {
    const std::size_t end_dim = hom_space(v, v).dim();
    if (end_dim != hom.dim()) return refuted("hom dim vs end dim", end_dim, hom.dim());
    return std::nullopt;
  };
  if (hom.dim() == 0 || options.prefilter) {
    if (auto r = end_mismatch()) return *r;
  }

  const auto k = static_cast<unsigned>(hom.dim());
  const auto deg = static_cast<unsigned>(n);
  WitnessSearch ws = search_invertible(hom, options.grid);
  const GridResult& g = ws.grid;

  Verdict out;
  switch (g.status) {
    case GridStatus::kWitness: {
      RatMatrix x = std::move(*ws.x);
      if (!verify_iso_certificate(v, w, x)) {
        throw std::logic_error("iso_decide produced an invalid witness");
      }
      out.answer = Answer::kYes;
      out.certificate = IsoCertificate{std::move(x)};
      out.notes.push_back(kFieldRobust);
      return out;
    }
    case GridStatus::kCertifiedZero:
      out = refuted("det over hom basis",
                    "identically zero on the certifying grid {0.." + std::to_string(n) +
                        "}^" + std::to_string(k),
                    g.grid_evaluations);
      return out;
    case GridStatus::kBudgetExceeded:
      break;
  }
  if (options.refine_over_budget) {
    if (auto r = quick_refutation(v, w)) return *r;
    if (auto r = end_mismatch()) return *r;
  }
  if (!options.allow_randomized || g.random_probes_done == 0) {
    throw BudgetExceeded("certifying grid of " + std::to_string(grid_size(k, deg)) +
                         " points exceeds the budget of " +
                         std::to_string(options.grid.budget));
  }
  Rational bound = 1;
  const Rational ratio(mpz_class(static_cast<unsigned long>(n)),
                       mpz_class(static_cast<long>(options.grid.random_range)));
  for (unsigned s = 0; s < g.random_probes_done; ++s) bound *= ratio;
  out.answer = Answer::kNo;
  out.refutation = Refutation{"det over hom basis",
                              "vanished at every random probe", g.random_probes_done};
  out.confidence.exact = false;
  out.confidence.error_bound = bound.str();
  out.notes.push_back("randomized: " + std::to_string(g.random_probes_done) +
                      " probes over range " + std::to_string(options.grid.random_range) +
                      "; false-No probability at most (n/R)^s = " + bound.str());
  return out;
}

}  // namespace modlie
