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


// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures. Every check is exact; the only numeric limits are wall times.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <variant>

#include "modlie/fixtures.hpp"
#include "modlie/indec.hpp"
#include "modlie/io.hpp"
#include "modlie/iso.hpp"
#include "modlie/lie.hpp"
#include "modlie/rng.hpp"
#include "modlie/suites.hpp"
#include "modlie/weak.hpp"

namespace {

using namespace modlie;

// Wall-time limits in seconds.
constexpr double kFastLimit = 1.0;
constexpr double kProp1Limit = 30.0;
constexpr double kTheorem2Limit = 120.0;

constexpr std::size_t kProp1Trials = 200, kProp1DimMax = 6;
constexpr std::uint64_t kProp1Seed = 42;
constexpr std::size_t kTheorem2Trials = 100;
constexpr std::uint64_t kTheorem2Seed = 7;
constexpr std::size_t kOracleTrials = 50, kOracleDimMax = 3;
constexpr std::size_t kStructureTrials = 100;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Reports kept for the determinism check.
std::string prop1_json, theorem2_json;

Outcome counterexample() {
  const auto t0 = std::chrono::steady_clock::now();
  const ModulePair v = lemma_v(), w = lemma_w();
  const Verdict weak = weak_iso_decide(v, w);
  const bool no = weak.answer == Answer::kNo && weak.refutation &&
                  weak.refutation->invariant == "annihilator dim" &&
                  weak.refutation->left == 2 && weak.refutation->right == 3;
  const LieAlgebra lv = build_lie(v), lw = build_lie(w);
  const bool phi = verify_lie_iso(lv, lw, lemma_lie_map()).ok;
  const bool fp = fingerprint(lv) == fingerprint(lw);
  const SuiteReport r = suite_counterexample();
  const double t = seconds_since(t0);
  Outcome o;
  o.ok = no && phi && fp && r.passes == 4 && r.failures.empty() && t < kFastLimit;
  o.detail = "annihilator " + (weak.refutation ? weak.refutation->left.dump() + " vs " +
                                                     weak.refutation->right.dump()
                                               : std::string("?")) +
             ", lie map " + (phi ? "verified" : "rejected") + ", fingerprints " +
             (fp ? "equal" : "differ") + ", suite " + std::to_string(r.passes) + "/4, " +
             secs(t);
  return o;
}

Outcome nonisom() {
  const auto t0 = std::chrono::steady_clock::now();
  const ModulePair left = fixture("nonisom-a(left)"), right = fixture("nonisom-a(right)");
  const Verdict iso = iso_decide(left, right);
  const Verdict weak = weak_iso_decide(left, right);
  bool swap = false;
  if (weak.answer == Answer::kYes) {
    const auto& c = std::get<WeakIsoCertificate>(*weak.certificate);
    swap = c.theta == Twist::swap() && c.x == RatMatrix::identity(2) &&
           verify_weak_certificate(left, right, c.theta, c.x);
  }
  const double t = seconds_since(t0);
  Outcome o;
  o.ok = iso.answer == Answer::kNo && iso.confidence.exact && swap && t < kFastLimit;
  o.detail = "iso " + to_string(iso.answer) + ", weak " + to_string(weak.answer) +
             (swap ? " via swap with X = I" : "") + ", " + secs(t);
  return o;
}

Outcome prop1() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport r = suite_prop1(kProp1Trials, kProp1DimMax, kProp1Seed);
  const double t = seconds_since(t0);
  prop1_json = report_to_json(r).dump();
  Outcome o;
  o.ok = r.trials == kProp1Trials && r.passes == kProp1Trials && r.failures.empty() &&
         t < kProp1Limit;
  o.detail = std::to_string(r.passes) + "/" + std::to_string(r.trials) + ", " + secs(t);
  return o;
}

Outcome shape() {
  const ModulePair v = lemma_v(), w = lemma_w();
  const IsoShape s = analyze_lie_iso(v, w, lemma_lie_map());
  const Verdict indec = indecomposable_decide(v);
  const bool split =
      indec.answer == Answer::kNo && indec.certificate &&
      std::holds_alternative<IdempotentCertificate>(*indec.certificate) &&
      verify_idempotent_certificate(v, std::get<IdempotentCertificate>(*indec.certificate));
  Outcome o;
  o.ok = s.kind == IsoShape::Case::kOperatorsIntoIdeal && s.v_core_dim == 4 &&
         s.w_core_dim == 4 && s.v_core_dim <= 6 && s.v_complement_dim == 0 &&
         s.w_complement_dim == 0 && split;
  o.detail = to_string(s.kind) + ", cores " + std::to_string(s.v_core_dim) + "/" +
             std::to_string(s.w_core_dim) + ", complements " +
             std::to_string(s.v_complement_dim) + "/" + std::to_string(s.w_complement_dim) +
             ", lemma-v " + (split ? "splits (idempotent verified)" : "not split");
  return o;
}

Outcome theorem2() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport r = suite_theorem2(kTheorem2Trials, kTheorem2Seed);
  const double t = seconds_since(t0);
  theorem2_json = report_to_json(r).dump();
  Outcome o;
  o.ok = r.trials == kTheorem2Trials && r.passes == kTheorem2Trials && r.failures.empty() &&
         t < kTheorem2Limit;
  o.detail = std::to_string(r.passes) + "/" + std::to_string(r.trials) + ", " + secs(t);
  return o;
}

Outcome oracle() {
  Rng rng(2024);
  std::size_t agree = 0, yes = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < kOracleTrials; ++i) {
    const std::size_t n = 1 + i % kOracleDimMax;
    const Profile p = static_cast<Profile>(i % 3);
    const ModulePair v = random_pair(n, p, rng);
    // Half conjugates, half independent draws from the same profile.
    const ModulePair w =
        i % 2 == 0 ? v.conjugate(random_invertible(n, rng)) : random_pair(n, p, rng);
    const Verdict fast = iso_decide(v, w);
    const Verdict full = iso_decide(v, w, oracle_iso_options());
    if (fast.answer == full.answer && full.confidence.exact) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = " (first disagreement at trial " + std::to_string(i) + ")";
    }
    if (full.answer == Answer::kYes) ++yes;
  }
  Outcome o;
  o.ok = agree == kOracleTrials;
  o.detail = std::to_string(agree) + "/" + std::to_string(kOracleTrials) + " agree, " +
             std::to_string(yes) + " yes" + first_bad;
  return o;
}

Outcome structure() {
  Rng rng(77);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < kStructureTrials; ++i) {
    const ModulePair v = random_pair(1 + i % 6, static_cast<Profile>(i % 3), rng);
    const LieAlgebra l = build_lie(v);
    const std::size_t d = l.dim();
    std::vector<Rational> c(d * d * d);
    bool anti = true;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t k = 0; k < d; ++k) {
          c[(a * d + b) * d + k] = l.c(a, b, k);
          if (l.c(a, b, k) != -l.c(b, a, k)) anti = false;
        }
    const bool jacobi = !LieAlgebra::jacobi_violation(d, c).has_value();
    const LieFingerprint f = fingerprint(l);
    const bool derived = f.derived_dims.size() > 1 && f.derived_dims[1] == image_span(v).dim();
    const bool centre = f.center_dim == annihilator(v).dim() + (2 - operator_span_dim(v));
    if (anti && jacobi && derived && centre) ++ok;
  }
  Outcome o;
  o.ok = ok == kStructureTrials;
  o.detail = std::to_string(ok) + "/" + std::to_string(kStructureTrials) + " pairs";
  return o;
}

Outcome determinism() {
  const std::string a = report_to_json(suite_prop1(kProp1Trials, kProp1DimMax, kProp1Seed)).dump();
  const std::string b = report_to_json(suite_theorem2(kTheorem2Trials, kTheorem2Seed)).dump();
  Outcome o;
  o.ok = !prop1_json.empty() && a == prop1_json && !theorem2_json.empty() && b == theorem2_json;
  o.detail = std::string("prop1 ") + (a == prop1_json ? "identical" : "differs") +
             ", theorem2 " + (b == theorem2_json ? "identical" : "differs");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"counterexample reproduction", counterexample},
      {"nonisom example", nonisom},
      {"weak iso implies lie iso, 200 trials", prop1},
      {"structure theorem shape", shape},
      {"indecomposable consistency, 100 trials", theorem2},
      {"randomized path matches full grid", oracle},
      {"structural invariants", structure},
      {"deterministic reports", determinism},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s %d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
