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


#include "modlie/indec.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlie/errors.hpp"
#include "modlie/iso.hpp"
#include "modlie/poly.hpp"
#include "modlie/rng.hpp"

namespace modlie {

namespace {

std::vector<RatMatrix> as_matrices(const Subspace& s, std::size_t n) {
  std::vector<RatMatrix> out;
  for (const Vector& b : s.basis()) out.push_back(unflatten(b, n, n));
  return out;
}

Subspace flat_span(const std::vector<RatMatrix>& ms, std::size_t n) {
  std::vector<Vector> flat;
  for (const RatMatrix& m : ms) flat.push_back(flatten(m));
  return Subspace(n * n, flat);
}

// Span of the radical candidates if it is closed under products and
// nilpotent as an algebra.
bool nilpotent_ideal(const std::vector<RatMatrix>& j, std::size_t n) {
  const Subspace span = flat_span(j, n);
  for (const RatMatrix& a : j) {
    for (const RatMatrix& b : j) {
      if (!span.contains(flatten(a * b))) return false;
    }
  }
  std::vector<RatMatrix> cur = j;
  for (std::size_t step = 0; step <= n; ++step) {
    if (cur.empty()) return true;
    std::vector<RatMatrix> next;
    for (const RatMatrix& a : cur) {
      for (const RatMatrix& b : j) next.push_back(a * b);
    }
    cur = as_matrices(flat_span(next, n), n);
  }
  return cur.empty();
}

std::optional<LocalityCertificate> locality(const ModulePair& v, const HomSpace& end) {
  const std::size_t n = v.dim();
  const RatMatrix id = RatMatrix::identity(n);
  const Rational inv_n(mpz_class(1), mpz_class(static_cast<unsigned long>(n)));
  std::vector<RatMatrix> parts;
  for (const RatMatrix& e : end.basis) {
    RatMatrix nil = e - (trace(e) * inv_n) * id;
    if (!power(nil, static_cast<unsigned>(n)).is_zero()) return std::nullopt;
    parts.push_back(std::move(nil));
  }
  const auto radical = as_matrices(flat_span(parts, n), n);
  if (radical.size() + 1 != end.dim() || !nilpotent_ideal(radical, n)) return std::nullopt;
  return LocalityCertificate{end.dim(), radical};
}

Polynomial poly_power(const Polynomial& f, unsigned e) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * f;
  return out;
}

std::optional<IdempotentCertificate> fitting_split(const ModulePair& v, const RatMatrix& e) {
  const std::size_t n = v.dim();
  const Polynomial m = min_poly(e);
  const std::vector<Factor> facs = factor(m);
  if (facs.size() < 2) return std::nullopt;

  // Smallest-degree factor; ties go to the support with the smallest
  // canonical basis.
  int deg = facs.front().factor.degree();
  for (const Factor& f : facs) deg = std::min(deg, f.factor.degree());
  std::optional<Polynomial> a;
  Subspace support;
  for (const Factor& f : facs) {
    if (f.factor.degree() != deg) continue;
    const Polynomial fa = poly_power(f.factor, f.multiplicity);
    Subspace s = null_space(evaluate(fa, e));
    if (!a || s.pivots() < support.pivots() ||
        (s.pivots() == support.pivots() && s.basis() < support.basis())) {
      a = fa;
      support = std::move(s);
    }
  }
  const Polynomial b = m / *a;
  const ExtendedGcd g = extended_gcd(*a, b);
  if (g.g != Polynomial::constant(1)) return std::nullopt;
  RatMatrix idem = evaluate((g.t * b) % m, e);

  IdempotentCertificate cert;
  const Subspace kernel = null_space(idem);
  std::vector<Vector> cols = support.basis();
  cols.insert(cols.end(), kernel.basis().begin(), kernel.basis().end());
  cert.change_of_basis = RatMatrix::from_columns(cols, n);
  cert.image_block = restrict_to(v, support.basis());
  cert.kernel_block = restrict_to(v, kernel.basis());
  cert.idempotent = std::move(idem);
  if (!verify_idempotent_certificate(v, cert)) return std::nullopt;
  return cert;
}

}  // namespace

bool verify_idempotent_certificate(const ModulePair& v, const IdempotentCertificate& c) {
  const std::size_t n = v.dim();
  const RatMatrix& e = c.idempotent;
  if (e.rows() != n || e.cols() != n) return false;
  if (e * e != e || e.is_zero() || e == RatMatrix::identity(n)) return false;
  if (e * v.P() != v.P() * e || e * v.Q() != v.Q() * e) return false;
  const std::size_t r = c.image_block.dim();
  if (r + c.kernel_block.dim() != n || c.change_of_basis.rows() != n ||
      c.change_of_basis.cols() != n) {
    return false;
  }
  const auto inv = inverse(c.change_of_basis);
  if (!inv) return false;
  RatMatrix proj(n, n);
  for (std::size_t i = 0; i < r; ++i) proj(i, i) = 1;
  if (*inv * e * c.change_of_basis != proj) return false;
  return *inv * v.P() * c.change_of_basis ==
             RatMatrix::block_diagonal(c.image_block.P(), c.kernel_block.P()) &&
         *inv * v.Q() * c.change_of_basis ==
             RatMatrix::block_diagonal(c.image_block.Q(), c.kernel_block.Q());
}

bool verify_locality_certificate(const ModulePair& v, const LocalityCertificate& c) {
  const std::size_t n = v.dim();
  const HomSpace end = hom_space(v, v);
  if (end.dim() != c.end_dim || c.radical.size() + 1 != c.end_dim) return false;
  for (const RatMatrix& j : c.radical) {
    if (!intertwines(v, v, j)) return false;
  }
  if (!c.radical.empty() && !nilpotent_ideal(c.radical, n)) return false;
  std::vector<RatMatrix> gens = c.radical;
  gens.push_back(RatMatrix::identity(n));
  const Subspace span = flat_span(gens, n);
  for (const RatMatrix& b : end.basis) {
    if (!span.contains(flatten(b))) return false;
  }
  return true;
}

Verdict indecomposable_decide(const ModulePair& v, const IndecOptions& options) {
  const std::size_t n = v.dim();
  if (n == 0) throw PreconditionViolated("indecomposability of the zero module");
  const HomSpace end = endo_algebra(v);
  Verdict out;
  if (auto cert = locality(v, end)) {
    out.answer = Answer::kYes;
    out.notes.push_back(end.dim() == 1 ? "End(V) is one-dimensional"
                                       : "certified local: End(V) = scalars + nilpotent ideal");
    out.notes.push_back("field-robust: a local endomorphism algebra of this shape stays local");
    out.certificate = std::move(*cert);
    return out;
  }

  auto split = [&](const RatMatrix& e) -> bool {
    auto cert = fitting_split(v, e);
    if (!cert) return false;
    out.answer = Answer::kNo;
    out.refutation = Refutation{"idempotent rank", cert->image_block.dim(),
                                cert->kernel_block.dim()};
    out.notes.push_back("decomposable over the rationals: Fitting idempotent");
    out.notes.push_back("field-robust: the splitting persists over every extension");
    out.certificate = std::move(*cert);
    return true;
  };
  for (const RatMatrix& e : end.basis) {
    if (split(e)) return out;
  }
  Rng rng(options.seed);
  for (unsigned trial = 0; trial < options.random_trials; ++trial) {
    RatMatrix e(n, n);
    for (const RatMatrix& b : end.basis) e += Rational(static_cast<long>(rng.uniform(-3, 3))) * b;
    if (split(e)) return out;
  }
  out.answer = Answer::kUnknown;
  out.notes.push_back("no splitting endomorphism found and locality not certified");
  out.notes.push_back("End(V)/rad may be a non-trivial division algebra over the rationals");
  return out;
}

}  // namespace modlie
