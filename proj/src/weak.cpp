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


#include "modlie/weak.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "modlie/errors.hpp"
#include "modlie/iso.hpp"
#include "modlie/pencil.hpp"
#include "modlie/poly.hpp"

namespace modlie {

WeakInvariants weak_invariants(const ModulePair& v) {
  WeakInvariants inv;
  inv.dim = v.dim();
  inv.annihilator_dim = annihilator(v).dim();
  inv.image_span_dim = image_span(v).dim();
  inv.operator_span_dim = operator_span_dim(v);
  const PencilProfile prof = pencil_profile(v);
  inv.generic_rank = prof.generic_rank;
  inv.qbar_drop_counts = prof.qbar_drop_counts;
  inv.end_dim = hom_space(v, v).dim();
  inv.fingerprint = fingerprint(build_lie(v));
  return inv;
}

namespace {

nlohmann::json drops_json(const std::map<std::size_t, std::size_t>& counts) {
  nlohmann::json drops = nlohmann::json::array();
  for (const auto& [drop, count] : counts) drops.push_back({drop, count});
  return drops;
}

nlohmann::json fingerprint_json(const LieFingerprint& f) {
  return {{"dim", f.dim},
          {"lower_central", f.lower_central_dims},
          {"derived", f.derived_dims},
          {"center_dim", f.center_dim}};
}

// Per-side memo so the pencil profile is computed once.
struct ProbeCache {
  const ModulePair& v;
  std::optional<PencilProfile> pencil;
  std::optional<std::size_t> end_dim;
  const PencilProfile& profile() {
    if (!pencil) pencil = pencil_profile(v);
    return *pencil;
  }
};

using Probe = std::pair<const char*, std::function<nlohmann::json(ProbeCache&)>>;

// Same order and names as components(); evaluated lazily.
const std::vector<Probe>& probes() {
  static const std::vector<Probe> p = {
      {"dim", [](ProbeCache& c) -> nlohmann::json { return c.v.dim(); }},
      {"annihilator dim",
       [](ProbeCache& c) -> nlohmann::json { return annihilator(c.v).dim(); }},
      {"image span dim",
       [](ProbeCache& c) -> nlohmann::json { return image_span(c.v).dim(); }},
      {"operator span dim",
       [](ProbeCache& c) -> nlohmann::json { return operator_span_dim(c.v); }},
      {"generic rank",
       [](ProbeCache& c) -> nlohmann::json { return c.profile().generic_rank; }},
      {"qbar drop counts",
       [](ProbeCache& c) { return drops_json(c.profile().qbar_drop_counts); }},
      {"end dim",
       [](ProbeCache& c) -> nlohmann::json {
         c.end_dim = hom_space(c.v, c.v).dim();
         return *c.end_dim;
       }},
      {"fingerprint",
       [](ProbeCache& c) { return fingerprint_json(fingerprint(build_lie(c.v))); }},
  };
  return p;
}

}  // namespace

std::vector<std::pair<std::string, nlohmann::json>> components(const WeakInvariants& inv) {
  return {{"dim", inv.dim},
          {"annihilator dim", inv.annihilator_dim},
          {"image span dim", inv.image_span_dim},
          {"operator span dim", inv.operator_span_dim},
          {"generic rank", inv.generic_rank},
          {"qbar drop counts", drops_json(inv.qbar_drop_counts)},
          {"end dim", inv.end_dim},
          {"fingerprint", fingerprint_json(inv.fingerprint)}};
}

namespace {

using Vec4 = std::array<Rational, 4>;  // (a11, a12, a21, a22)

struct Equation {
  Vec4 a;
  Rational b;
};
using System = std::vector<Equation>;
using Family = std::vector<System>;  // alternatives

struct TypedPoint {
  ProjectivePoint p;
  std::vector<std::size_t> sig;  // drop of the k-th power pencil at p
};

std::vector<TypedPoint> typed_points(const std::vector<RationalDrops>& profs) {
  std::map<ProjectivePoint, std::vector<std::size_t>> m;
  for (std::size_t k = 0; k < profs.size(); ++k) {
    for (const auto& [point, drop] : profs[k].points) {
      auto& sig = m[point];
      sig.resize(profs.size(), 0);
      sig[k] = drop;
    }
  }
  std::vector<TypedPoint> out;
  for (auto& [p, sig] : m) out.push_back({p, sig});
  return out;
}

std::vector<std::vector<std::size_t>> signatures(const std::vector<TypedPoint>& pts) {
  std::vector<std::vector<std::size_t>> s;
  for (const auto& t : pts) s.push_back(t.sig);
  std::sort(s.begin(), s.end());
  return s;
}

RatMatrix combo(const Rational& u1, const Rational& u2, const ModulePair& v) {
  return u1 * v.P() + u2 * v.Q();
}

// tr((a0 + c a1)^k) for k = 1..n, as polynomials in c.
std::vector<Polynomial> trace_powers(const RatMatrix& a0, const RatMatrix& a1) {
  const std::size_t n = a0.rows();
  std::vector<Polynomial> out;
  const PolyMatrix base = linear_pencil(a1, a0);
  PolyMatrix cur = base;
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial tr;
    for (std::size_t i = 0; i < n; ++i) tr += cur[i][i];
    out.push_back(tr);
    if (k < n) cur = multiply(cur, base);
  }
  return out;
}

std::vector<Rational> target_traces(const RatMatrix& s) {
  std::vector<Rational> out;
  RatMatrix p = s;
  for (std::size_t k = 1; k <= s.rows(); ++k) {
    out.push_back(trace(p));
    if (k < s.rows()) p = p * s;
  }
  return out;
}

// Parameter values c where tr((a0 + c a1)^k) matches the targets for all k;
// nullopt when every value matches.
std::optional<std::vector<Rational>> matching_parameters(
    const std::vector<std::pair<std::vector<Polynomial>, std::vector<Rational>>>& rows) {
  Polynomial g;
  for (const auto& [polys, targets] : rows) {
    for (std::size_t k = 0; k < polys.size(); ++k) {
      const Polynomial f = polys[k] - Polynomial::constant(targets[k]);
      if (!f.is_zero()) g = gcd(g, f);
    }
  }
  if (g.is_zero()) return std::nullopt;
  if (g.degree() == 0) return std::vector<Rational>{};
  return rational_roots(g);
}

struct Affine {
  Vector base;
  std::vector<Vector> dirs;
};

std::optional<Affine> solve_affine(const std::vector<Vector>& rows, const Vector& rhs,
                                   std::size_t unknowns) {
  RatMatrix a(rows.size() + 1, unknowns);
  Vector b(rows.size() + 1, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) a(i, j) = rows[i][j];
    b[i] = rhs[i];
  }
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  return Affine{*x, kernel_basis(a)};
}

Vector at(const Affine& s, std::span<const Rational> c) {
  Vector x = s.base;
  for (std::size_t d = 0; d < s.dirs.size(); ++d) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += c[d] * s.dirs[d][j];
  }
  return x;
}

// Calls f on every point of {-r..r}^d.
void lattice(std::size_t d, long r, const std::function<void(std::span<const Rational>)>& f) {
  std::vector<long> digits(d, -r);
  std::vector<Rational> c(d);
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) c[i] = Rational(digits[i]);
    f(c);
    std::size_t i = 0;
    while (i < d && digits[i] == r) digits[i++] = -r;
    if (i == d) return;
    ++digits[i];
  }
}

class CandidateSet {
 public:
  explicit CandidateSet(std::size_t cap) : cap_(cap) {}

  // Returns false once the cap is reached.
  bool add(const Rational& a11, const Rational& a12, const Rational& a21,
           const Rational& a22) {
    if (full()) return false;
    if ((a11 * a22 - a12 * a21).is_zero()) return true;
    if (!seen_.insert({a11, a12, a21, a22}).second) return true;
    out_.emplace_back(a11, a12, a21, a22);
    if (out_.size() >= cap_) truncated_ = true;
    return !full();
  }
  bool add(const Twist& t) { return add(t.a11(), t.a12(), t.a21(), t.a22()); }
  bool full() const { return out_.size() >= cap_; }
  bool truncated() const { return truncated_; }
  std::vector<Twist> take() { return std::move(out_); }

 private:
  std::size_t cap_;
  std::set<Vec4> seen_;
  std::vector<Twist> out_;
  bool truncated_ = false;
};

class Generator {
 public:
  Generator(const ModulePair& v, const ModulePair& w, const WeakIsoOptions& o,
            CandidateSet& out)
      : v_(v), w_(w), opt_(o), out_(out),
        cp_s_(char_poly(w.P())), cp_t_(char_poly(w.Q())),
        tr_s_(target_traces(w.P())), tr_t_(target_traces(w.Q())) {}

  void run() {
    const std::size_t depth = std::max<std::size_t>(1, std::min(opt_.power_depth, v_.dim()));
    std::vector<RationalDrops> pv, pw;
    for (std::size_t k = 1; k <= depth; ++k) {
      pv.push_back(rational_drop_points(v_, k));
      pw.push_back(rational_drop_points(w_, k));
      if (pv.back().generic_rank != pw.back().generic_rank) return;
    }
    const auto tv = typed_points(pv);
    const auto tw = typed_points(pw);
    if (signatures(tv) != signatures(tw)) return;

    std::vector<Family> fams;
    fams.push_back(direction_family(w_.P(), pv, tv, 0));
    fams.push_back(direction_family(w_.Q(), pv, tv, 2));
    fams.push_back(drop_family(tv, tw));
    fams.push_back(spectrum_family());
    for (const auto& f : fams) {
      if (f.empty()) return;
    }

    System trace_eqs = {
        {{trace(v_.P()), trace(v_.Q()), 0, 0}, trace(w_.P())},
        {{0, 0, trace(v_.P()), trace(v_.Q())}, trace(w_.Q())}};
    std::vector<std::size_t> idx(fams.size(), 0);
    for (;;) {
      System sys = trace_eqs;
      for (std::size_t f = 0; f < fams.size(); ++f) {
        const System& alt = fams[f][idx[f]];
        sys.insert(sys.end(), alt.begin(), alt.end());
      }
      solve_system(sys);
      if (out_.full()) return;
      std::size_t f = 0;
      while (f < fams.size() && idx[f] + 1 == fams[f].size()) idx[f++] = 0;
      if (f == fams.size()) return;
      ++idx[f];
    }
  }

 private:
  // The pencil point of V carrying the W operator `s` must have the same
  // rank profile; `offset` 0 constrains (a11, a12), 2 constrains (a21, a22).
  Family direction_family(const RatMatrix& s, const std::vector<RationalDrops>& pv,
                          const std::vector<TypedPoint>& tv, std::size_t offset) {
    std::vector<std::size_t> sig;
    bool generic = true;
    RatMatrix p = s;
    for (std::size_t k = 0; k < pv.size(); ++k) {
      const std::size_t r = rank(p);
      if (r > pv[k].generic_rank) return {};
      sig.push_back(pv[k].generic_rank - r);
      if (sig.back() != 0) generic = false;
      p = p * s;
    }
    if (generic) return {System{}};
    Family fam;
    for (const auto& t : tv) {
      if (t.sig != sig) continue;
      Equation e{{0, 0, 0, 0}, 0};
      e.a[offset] = t.p.beta;
      e.a[offset + 1] = -t.p.alpha;
      fam.push_back({e});
    }
    return fam;
  }

  // theta^T maps W drop points to V drop points of the same type.
  Family drop_family(const std::vector<TypedPoint>& tv, const std::vector<TypedPoint>& tw) {
    const std::size_t m = std::min<std::size_t>(3, tw.size());
    Family fam;
    System cur;
    std::vector<bool> used(tv.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == m) {
        fam.push_back(cur);
        return;
      }
      const ProjectivePoint& wp = tw[i].p;
      for (std::size_t j = 0; j < tv.size(); ++j) {
        if (used[j] || tv[j].sig != tw[i].sig) continue;
        const ProjectivePoint& vp = tv[j].p;
        cur.push_back({{wp.alpha * vp.beta, -wp.alpha * vp.alpha, wp.beta * vp.beta,
                        -wp.beta * vp.alpha},
                       0});
        used[j] = true;
        rec(i + 1);
        used[j] = false;
        cur.pop_back();
      }
    };
    rec(0);
    return fam;
  }

  // theta maps joint eigenvalues of V to joint eigenvalues of W.
  Family spectrum_family() {
    auto nonzero = [](const ModulePair& x) {
      std::vector<JointEigenvalue> out;
      for (auto& e : rational_joint_spectrum(x)) {
        if (!e.lambda.is_zero() || !e.mu.is_zero()) out.push_back(e);
      }
      return out;
    };
    const auto sv = nonzero(v_);
    const auto sw = nonzero(w_);
    auto mults = [](const std::vector<JointEigenvalue>& s) {
      std::vector<std::size_t> m;
      for (const auto& e : s) m.push_back(e.multiplicity);
      std::sort(m.begin(), m.end());
      return m;
    };
    if (mults(sv) != mults(sw)) return {};
    if (sv.empty()) return {System{}};
    std::vector<std::size_t> pick = {0};
    for (std::size_t j = 1; j < sv.size(); ++j) {
      if (!(sv[0].lambda * sv[j].mu - sv[0].mu * sv[j].lambda).is_zero()) {
        pick.push_back(j);
        break;
      }
    }
    Family fam;
    auto eqs = [](const JointEigenvalue& p, const JointEigenvalue& q) {
      return System{{{p.lambda, p.mu, 0, 0}, q.lambda}, {{0, 0, p.lambda, p.mu}, q.mu}};
    };
    for (std::size_t a = 0; a < sw.size(); ++a) {
      if (sw[a].multiplicity != sv[pick[0]].multiplicity) continue;
      System s1 = eqs(sv[pick[0]], sw[a]);
      if (pick.size() == 1) {
        fam.push_back(s1);
        continue;
      }
      for (std::size_t b = 0; b < sw.size(); ++b) {
        if (b == a || sw[b].multiplicity != sv[pick[1]].multiplicity) continue;
        System s2 = s1;
        const System extra = eqs(sv[pick[1]], sw[b]);
        s2.insert(s2.end(), extra.begin(), extra.end());
        fam.push_back(s2);
      }
    }
    return fam;
  }

  bool row_ok(const Rational& u1, const Rational& u2, const Polynomial& cp) const {
    return char_poly(combo(u1, u2, v_)) == cp;
  }

  // Candidate rows (u1, u2) for one operator, from equations on that row.
  std::vector<std::pair<Rational, Rational>> row_candidates(const System& eqs,
                                                            std::size_t offset,
                                                            const Polynomial& cp,
                                                            const std::vector<Rational>& tr) {
    std::vector<Vector> rows;
    Vector rhs;
    for (const auto& e : eqs) {
      rows.push_back({e.a[offset], e.a[offset + 1]});
      rhs.push_back(e.b);
    }
    std::vector<std::pair<Rational, Rational>> out;
    const auto sol = solve_affine(rows, rhs, 2);
    if (!sol) return out;
    auto push = [&](std::span<const Rational> c) {
      const Vector u = at(*sol, c);
      if (!(u[0].is_zero() && u[1].is_zero()) && row_ok(u[0], u[1], cp)) {
        out.emplace_back(u[0], u[1]);
      }
    };
    if (sol->dirs.size() == 1) {
      const auto params = matching_parameters(
          {{trace_powers(combo(sol->base[0], sol->base[1], v_),
                         combo(sol->dirs[0][0], sol->dirs[0][1], v_)),
            tr}});
      if (params) {
        for (const Rational& c : *params) push(std::span<const Rational>(&c, 1));
        return out;
      }
    }
    lattice(sol->dirs.size(), 3, push);
    return out;
  }

  void solve_system(const System& sys) {
    bool separable = true;
    for (const auto& e : sys) {
      const bool first = !e.a[0].is_zero() || !e.a[1].is_zero();
      const bool second = !e.a[2].is_zero() || !e.a[3].is_zero();
      if (first && second) separable = false;
    }
    if (separable) {
      System r1, r2;
      for (const auto& e : sys) {
        if (!e.a[2].is_zero() || !e.a[3].is_zero()) {
          r2.push_back(e);
        } else {
          r1.push_back(e);
        }
      }
      const auto c1 = row_candidates(r1, 0, cp_s_, tr_s_);
      if (c1.empty()) return;
      const auto c2 = row_candidates(r2, 2, cp_t_, tr_t_);
      for (const auto& [a11, a12] : c1) {
        for (const auto& [a21, a22] : c2) {
          if (!out_.add(a11, a12, a21, a22)) return;
        }
      }
      return;
    }

    std::vector<Vector> rows;
    Vector rhs;
    for (const auto& e : sys) {
      rows.push_back(Vector(e.a.begin(), e.a.end()));
      rhs.push_back(e.b);
    }
    const auto sol = solve_affine(rows, rhs, 4);
    if (!sol) return;
    auto push = [&](std::span<const Rational> c) {
      const Vector t = at(*sol, c);
      if (row_ok(t[0], t[1], cp_s_) && row_ok(t[2], t[3], cp_t_)) {
        out_.add(t[0], t[1], t[2], t[3]);
      }
    };
    if (sol->dirs.size() == 1) {
      const Vector& b = sol->base;
      const Vector& d = sol->dirs[0];
      const auto params = matching_parameters(
          {{trace_powers(combo(b[0], b[1], v_), combo(d[0], d[1], v_)), tr_s_},
           {trace_powers(combo(b[2], b[3], v_), combo(d[2], d[3], v_)), tr_t_}});
      if (params) {
        for (const Rational& c : *params) push(std::span<const Rational>(&c, 1));
        return;
      }
    }
    lattice(sol->dirs.size(), sol->dirs.size() <= 2 ? 3 : 2, push);
  }

  const ModulePair& v_;
  const ModulePair& w_;
  const WeakIsoOptions& opt_;
  CandidateSet& out_;
  Polynomial cp_s_, cp_t_;
  std::vector<Rational> tr_s_, tr_t_;
};

}  // namespace

std::pair<std::vector<Twist>, bool> candidate_twists(const ModulePair& v,
                                                     const ModulePair& w,
                                                     const WeakIsoOptions& options) {
  CandidateSet set(std::max<std::size_t>(1, options.max_candidates));
  set.add(Twist::identity());
  set.add(Twist::swap());
  for (const Twist& t : options.extra_twists) set.add(t);
  if (!set.full() && v.dim() == w.dim() && v.dim() > 0) {
    Generator(v, w, options, set).run();
  }
  const bool truncated = set.truncated();
  return {set.take(), truncated};
}

Verdict weak_iso_decide(const ModulePair& v, const ModulePair& w,
                        const WeakIsoOptions& options) {
  Verdict out;
  ProbeCache cv{v, {}, {}}, cw{w, {}, {}};
  for (const auto& [name, probe] : probes()) {
    nlohmann::json left = probe(cv), right = probe(cw);
    if (left != right) {
      out.answer = Answer::kNo;
      out.refutation = Refutation{name, std::move(left), std::move(right)};
      out.notes.push_back(
          "field-robust: the refuting invariant is unchanged by extending the field");
      return out;
    }
  }

  const auto [cands, truncated] = candidate_twists(v, w, options);
  // W-side data is fixed across candidates. A twisted V isomorphic to W must
  // match W's quick profile and have Hom(U, W) of dimension dim End(W).
  const QuickProfile target = quick_profile(w);
  const std::size_t end_w = *cw.end_dim;
  GridConfig grid = options.grid;
  grid.budget = std::min<std::uint64_t>(options.grid.budget, 1 << 8);
  std::size_t tried = 0;
  for (const Twist& theta : cands) {
    ++tried;
    const ModulePair u = twist_pair(v, theta);
    std::optional<RatMatrix> found;
    if (u == w) {
      found = RatMatrix::identity(w.dim());
    } else {
      if (compare_quick(quick_profile(u), target)) continue;
      const HomSpace hom = hom_space(u, w);
      if (hom.dim() != end_w) continue;
      found = search_invertible(hom, grid).x;
      if (!found) continue;
    }
    RatMatrix x = std::move(*found);
    if (!verify_weak_certificate(v, w, theta, x)) {
      throw std::logic_error("weak isomorphism certificate failed verification");
    }
    out.answer = Answer::kYes;
    out.certificate = WeakIsoCertificate{theta, std::move(x)};
    out.notes.push_back("field-robust: the certificate is rational");
    out.notes.push_back("twist found after " + std::to_string(tried) + " candidate(s)");
    return out;
  }
  out.answer = Answer::kUnknown;
  out.notes.push_back("invariants agree; no rational twist among " +
                      std::to_string(cands.size()) + " candidate(s) gave an isomorphism");
  if (truncated) {
    out.notes.push_back("candidate budget of " + std::to_string(options.max_candidates) +
                        " exhausted");
  }
  out.notes.push_back("not field-robust: a twist over an extension field may still exist");
  return out;
}

}  // namespace modlie
