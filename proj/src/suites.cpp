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


#include "modlie/suites.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "modlie/errors.hpp"
#include "modlie/fixtures.hpp"
#include "modlie/indec.hpp"
#include "modlie/io.hpp"
#include "modlie/iso.hpp"
#include "modlie/lie.hpp"
#include "modlie/rng.hpp"

namespace modlie {

std::string digest(const std::vector<const ModulePair*>& pairs) {
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const ModulePair* v : pairs) {
    feed(std::to_string(v->dim()) + ";");
    for (const RatMatrix* m : {&v->P(), &v->Q()}) {
      for (const Rational& x : m->entries()) feed(x.str() + ",");
      feed(";");
    }
    feed("|");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const ModulePair& v) { return digest(std::vector<const ModulePair*>{&v}); }

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void record(SuiteReport& r, std::uint64_t seed, std::string digest,
            const std::optional<std::string>& failure) {
  if (failure) {
    r.failures.push_back({seed, std::move(digest), *failure});
  } else {
    ++r.passes;
  }
}

}  // namespace

std::optional<std::string> prop1_trial(const ModulePair& v, const Twist& theta,
                                       const RatMatrix& s) {
  const ModulePair w = twist_pair(v, theta).conjugate(s);
  const LieAlgebra lv = build_lie(v), lw = build_lie(w);
  if (fingerprint(lv) != fingerprint(lw)) return "fingerprint(L_V) = fingerprint(L_W)";
  const LinearMap phi = build_lie_iso_from_module_iso(v, w, theta, s);
  if (!verify_lie_iso(lv, lw, phi).ok) return "constructed Lie isomorphism verifies";
  const Verdict verdict = weak_iso_decide(v, w);
  if (verdict.answer == Answer::kNo) return "weak_iso_decide(V, W) != no";
  if (verdict.answer == Answer::kYes) {
    const auto& c = std::get<WeakIsoCertificate>(*verdict.certificate);
    if (!verify_weak_certificate(v, w, c.theta, c.x)) return "weak-iso certificate verifies";
  }
  return std::nullopt;
}

SuiteReport suite_prop1(std::size_t trials, std::size_t dim_max, std::uint64_t seed) {
  SuiteReport r;
  r.suite = "prop1";
  r.trials = trials;
  r.header = {
      "W = S twist_pair(V, theta) S^-1 for random V, theta, S; per-trial seed split(seed, i)",
      "entries drawn as integers in [-3, 3]",
      "generic profile: two polynomials in one matrix, so it never leaves a cyclic commutant"};
  if (trials > 0 && dim_max == 0) throw PreconditionViolated("dim_max must be positive");
  const Timer timer;
  std::map<std::string, std::size_t> profiles, answers;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = Rng::split(seed, i);
    Rng rng(s);
    const auto dim = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(dim_max)));
    const Profile profile = static_cast<Profile>(rng.uniform(0, 2));
    const ModulePair v = random_pair(dim, profile, rng);
    const Twist theta = random_twist(rng);
    const RatMatrix conj = random_invertible(dim, rng);
    const ModulePair w = twist_pair(v, theta).conjugate(conj);
    ++profiles[to_string(profile)];
    std::optional<std::string> failure;
    try {
      failure = prop1_trial(v, theta, conj);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    record(r, s, digest({&v, &w}), failure);
  }
  r.wall_seconds = timer.seconds();
  r.details["profiles"] = profiles;
  r.details["dim_max"] = dim_max;
  r.details["seed"] = seed;
  return r;
}

SuiteReport suite_counterexample() {
  SuiteReport r;
  r.suite = "counterexample";
  r.trials = 4;
  r.header = {"lemma pair: V with xv1 = a1, xv2 = a2; W with xw1 = b1, yw1 = b2"};
  const Timer timer;
  const ModulePair v = lemma_v(), w = lemma_w();
  const std::string dg = digest({&v, &w});
  const LieAlgebra lv = build_lie(v), lw = build_lie(w);
  const LinearMap phi = lemma_lie_map();

  auto guard = [&](const char* property, const std::function<bool()>& check) {
    std::optional<std::string> failure;
    try {
      if (!check()) failure = property;
    } catch (const std::exception& e) {
      failure = std::string(property) + " (exception: " + e.what() + ")";
    }
    record(r, 0, dg, failure);
  };

  guard("weak_iso_decide = no with annihilator dim 2 vs 3", [&] {
    const Verdict verdict = weak_iso_decide(v, w);
    r.details["weak_iso"] = verdict_to_json(verdict);
    return verdict.answer == Answer::kNo && verdict.refutation &&
           verdict.refutation->invariant == "annihilator dim" &&
           verdict.refutation->left == 2 && verdict.refutation->right == 3;
  });
  guard("explicit map passes verify_lie_iso", [&] {
    const LieIsoCheck c = verify_lie_iso(lv, lw, phi);
    r.details["lie_iso"] = c.ok ? "verified" : c.reason;
    return c.ok;
  });
  guard("fingerprint(L_V) = fingerprint(L_W)", [&] {
    r.details["fingerprint"] = {fingerprint_to_json(fingerprint(lv)),
                                fingerprint_to_json(fingerprint(lw))};
    return fingerprint(lv) == fingerprint(lw);
  });
  guard("cores of dim 4 <= 6 with trivial complements; V splits", [&] {
    const IsoShape shape = analyze_lie_iso(v, w, phi);
    const Verdict indec = indecomposable_decide(v);
    r.details["shape"] = {{"case", to_string(shape.kind)},
                          {"v_core_dim", shape.v_core_dim},
                          {"w_core_dim", shape.w_core_dim},
                          {"v_complement_dim", shape.v_complement_dim},
                          {"w_complement_dim", shape.w_complement_dim}};
    r.details["indecomposable_v"] = verdict_to_json(indec);
    const bool split =
        indec.answer == Answer::kNo && indec.certificate &&
        verify_idempotent_certificate(v, std::get<IdempotentCertificate>(*indec.certificate));
    return shape.v_core_dim == 4 && shape.w_core_dim == 4 && shape.v_core_dim <= 6 &&
           shape.v_complement_dim == 0 && shape.w_complement_dim == 0 && split;
  });
  r.details["annihilator_dims"] = {annihilator(v).dim(), annihilator(w).dim()};
  r.wall_seconds = timer.seconds();
  return r;
}

std::vector<std::string> theorem2_pool() {
  return {"jordan(7)",
          "jordan(8)",
          "jordan(9)",
          "cyclic-monomial(x^4,xy,y^4)",
          "cyclic-monomial(x^2,y^4)",
          "cyclic-monomial(x^3,y^3)",
          "cyclic-monomial(x^3,x^2y,y^3)"};
}

SuiteReport suite_theorem2(std::size_t trials, std::uint64_t seed) {
  SuiteReport r;
  r.suite = "theorem2";
  r.trials = trials;
  r.header = {
      "pairs twist_pair(F, theta) conjugated by random unimodular S, F from the pool",
      "forward: same-fixture pairs get theta = theta2 theta1^-1, X = S2 S1^-1",
      "consistency: differing fingerprints never meet a yes verdict",
      "the converse direction is not checked mechanically"};
  const Timer timer;
  const auto names = theorem2_pool();
  std::vector<ModulePair> pool;
  std::vector<bool> indecomposable;
  json certified = json::object();
  for (const auto& name : names) {
    pool.push_back(fixture(name));
    const Verdict v = indecomposable_decide(pool.back());
    indecomposable.push_back(v.answer == Answer::kYes);
    certified[name] = to_string(v.answer);
  }
  r.details["pool_indecomposable"] = certified;

  std::map<std::string, std::size_t> answers;
  std::size_t constructed = 0, no_same_fp = 0, no_diff_fp = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = Rng::split(seed, i);
    Rng rng(s);
    const auto last = static_cast<long>(pool.size()) - 1;
    const auto a = static_cast<std::size_t>(rng.uniform(0, last));
    const auto b = rng.coin() ? a : static_cast<std::size_t>(rng.uniform(0, last));
    Twist t1 = Twist::identity(), t2 = Twist::identity();
    switch (rng.uniform(0, 3)) {
      case 0: break;
      case 1: t2 = Twist::swap(); break;
      default:
        t1 = random_twist(rng);
        t2 = random_twist(rng);
    }
    const RatMatrix s1 = random_unimodular(pool[a].dim(), rng);
    const RatMatrix s2 = random_unimodular(pool[b].dim(), rng);
    const ModulePair u = twist_pair(pool[a], t1).conjugate(s1);
    const ModulePair w = twist_pair(pool[b], t2).conjugate(s2);

    std::optional<std::string> failure;
    try {
      if (!indecomposable[a] || !indecomposable[b]) {
        failure = "fixture certified indecomposable";
      }
      if (!failure && a == b) {
        ++constructed;
        const Twist theta = t2.after(t1.inverse());
        const RatMatrix x = s2 * *inverse(s1);
        if (!verify_lie_iso(build_lie(u), build_lie(w),
                            build_lie_iso_from_module_iso(u, w, theta, x))
                 .ok) {
          failure = "constructed weak isomorphism yields a verified Lie isomorphism";
        }
      }
      if (!failure) {
        const Verdict verdict = weak_iso_decide(u, w);
        ++answers[to_string(verdict.answer)];
        const bool same_fp = fingerprint(build_lie(u)) == fingerprint(build_lie(w));
        if (verdict.answer == Answer::kYes && !same_fp) {
          failure = "fingerprints differ but weak_iso_decide = yes";
        } else if (verdict.answer == Answer::kNo && a == b) {
          failure = "weak_iso_decide refuted a constructed weak isomorphism";
        } else if (verdict.answer == Answer::kNo) {
          ++(same_fp ? no_same_fp : no_diff_fp);
        }
      }
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    record(r, s, digest({&u, &w}), failure);
  }
  r.wall_seconds = timer.seconds();
  r.details["answers"] = answers;
  r.details["constructed_weak_isos"] = constructed;
  r.details["no_with_equal_fingerprints"] = no_same_fp;
  r.details["no_with_different_fingerprints"] = no_diff_fp;
  r.details["seed"] = seed;
  return r;
}

std::vector<CensusRow> census(std::size_t dim, std::size_t trials, std::uint64_t seed,
                              const std::vector<ModulePair>& injected, std::size_t dim_cap) {
  if (dim > dim_cap) {
    throw PreconditionViolated("census dimension " + std::to_string(dim) + " exceeds the cap " +
                               std::to_string(dim_cap));
  }
  std::map<WeakInvariants, CensusRow> buckets;
  auto add = [&](const ModulePair& v) {
    WeakInvariants key = weak_invariants(v);
    auto [it, fresh] = buckets.try_emplace(key);
    if (fresh) {
      it->second.key = std::move(key);
      it->second.representative = digest(v);
    }
    ++it->second.count;
  };
  for (const ModulePair& v : injected) add(v);
  if (dim > 0) {
    for (std::size_t i = 0; i < trials; ++i) {
      Rng rng(Rng::split(seed, i));
      const Profile profile = static_cast<Profile>(rng.uniform(0, 2));
      add(random_pair(dim, profile, rng));
    }
  }
  std::vector<CensusRow> rows;
  for (auto& [key, row] : buckets) rows.push_back(std::move(row));
  return rows;
}

json report_to_json(const SuiteReport& r, bool timing) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"seed", f.seed}, {"digest", f.digest}, {"property", f.property}});
  }
  json out = {{"suite", r.suite},     {"trials", r.trials},   {"passes", r.passes},
              {"failures", failures}, {"header", r.header}, {"details", r.details}};
  if (timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

std::string report_table(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& h : r.header) os << "# " << h << "\n";
  os << "suite    " << r.suite << "\n"
     << "trials   " << r.trials << "\n"
     << "passes   " << r.passes << "\n"
     << "failures " << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    os << "  seed " << f.seed << "  digest " << f.digest << "  " << f.property << "\n";
  }
  return os.str();
}

json census_to_json(const std::vector<CensusRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({{"key", invariants_to_json(row.key)},
                   {"count", row.count},
                   {"representative", row.representative}});
  }
  return out;
}

std::string census_table(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "count  dim ann img ops rank end  qbar-drops  fingerprint(lcs/derived/z)  rep\n";
  for (const auto& row : rows) {
    const auto& k = row.key;
    os << row.count << "  " << k.dim << " " << k.annihilator_dim << " " << k.image_span_dim
       << " " << k.operator_span_dim << " " << k.generic_rank << " " << k.end_dim << "  ";
    for (const auto& [d, c] : k.qbar_drop_counts) os << d << ":" << c << " ";
    os << " ";
    for (auto x : k.fingerprint.lower_central_dims) os << x << ",";
    os << "/";
    for (auto x : k.fingerprint.derived_dims) os << x << ",";
    os << "/" << k.fingerprint.center_dim << "  " << row.representative << "\n";
  }
  return os.str();
}

}  // namespace modlie
