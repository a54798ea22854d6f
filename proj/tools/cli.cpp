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


#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "modlie/errors.hpp"
#include "modlie/fixtures.hpp"
#include "modlie/grid.hpp"
#include "modlie/indec.hpp"
#include "modlie/io.hpp"
#include "modlie/iso.hpp"
#include "modlie/lie.hpp"
#include "modlie/pencil.hpp"
#include "modlie/suites.hpp"
#include "modlie/weak.hpp"

namespace modlie::cli {

namespace {

constexpr const char* kFixturePrefix = "fixture:";

ModulePair load(const std::string& input) {
  if (input.rfind(kFixturePrefix, 0) == 0) return fixture(input.substr(8));
  return parse_pair_file(input);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

Twist parse_twist(const std::string& s) {
  std::vector<Rational> a;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) a.push_back(Rational::parse(tok));
  if (a.size() != 4) throw ParseError("a twist is a11,a12,a21,a22: " + s);
  return Twist(a[0], a[1], a[2], a[3]);
}

std::string verdict_table(const Verdict& v) {
  std::ostringstream os;
  os << "answer       " << to_string(v.answer) << "\n";
  if (v.refutation) {
    os << "refutation   " << v.refutation->invariant << ": " << v.refutation->left.dump()
       << " vs " << v.refutation->right.dump() << "\n";
  }
  if (v.certificate) {
    const json c = verdict_to_json(v)["certificate"];
    os << "certificate  " << c["kind"].get<std::string>() << "\n";
    if (c.contains("theta")) os << "theta        " << c["theta"].dump() << "\n";
  }
  os << "exact        " << (v.confidence.exact ? "yes" : "no") << "\n";
  if (v.confidence.error_bound) os << "error bound  " << *v.confidence.error_bound << "\n";
  for (const auto& n : v.notes) os << "note         " << n << "\n";
  return os.str();
}

std::string invariants_table(const WeakInvariants& inv) {
  std::ostringstream os;
  for (const auto& [name, value] : components(inv)) os << name << ": " << value.dump() << "\n";
  return os.str();
}

struct Emitter {
  std::ostream& out;
  bool table;

  void operator()(const json& j, const std::string& text) const {
    if (table) {
      out << text;
    } else {
      out << j.dump(2) << "\n";
    }
  }
  void operator()(const json& j) const { (*this)(j, j.dump(2) + "\n"); }
};

// Re-checks a printed verdict against the inputs. A certificate is verified
// directly; a bare refutation is recomputed.
bool verify_verdict(const json& printed, const std::function<Verdict()>& recompute,
                    const std::function<bool(const Certificate&)>& check) {
  if (printed.contains("certificate")) return check(certificate_from_json(printed));
  if (!printed.contains("refutation")) return false;
  const Verdict again = recompute();
  if (!again.refutation) return false;
  const json r = verdict_to_json(again)["refutation"];
  return r == printed["refutation"] && printed.value("answer", "") == to_string(again.answer);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modlie: commuting matrix pairs, their Lie algebras and weak isomorphism"};
  app.require_subcommand(1);
  app.fallthrough();
  bool table = false, timing = false;
  app.add_flag("--table", table, "Human-readable tables instead of JSON");
  app.add_flag("--timing", timing, "Include wall time in suite reports");

  std::string in_a, in_b, out_path, verify_path, name;
  auto* validate = app.add_subcommand("validate", "Parse and validate a pair");
  validate->add_option("input", in_a, "Pair file or fixture:<name>")->required();

  auto* lie = app.add_subcommand("lie", "Export the associated Lie algebra");
  lie->add_option("input", in_a)->required();
  lie->add_option("--out", out_path, "Write JSON here");

  auto* invariants = app.add_subcommand("invariants", "Weak-isomorphism invariants");
  invariants->add_option("input", in_a)->required();

  bool exact = false;
  auto* iso = app.add_subcommand("iso", "Decide module isomorphism");
  iso->add_option("a", in_a)->required();
  iso->add_option("b", in_b)->required();
  iso->add_flag("--exact", exact, "Never answer a randomized no; exit 3 over budget");
  iso->add_option("--verify", verify_path, "Re-validate a printed verdict");

  std::size_t max_candidates = 10000;
  std::vector<std::string> twists;
  auto* weak = app.add_subcommand("weak-iso", "Semi-decide weak isomorphism");
  weak->add_option("a", in_a)->required();
  weak->add_option("b", in_b)->required();
  weak->add_option("--max-candidates", max_candidates, "Candidate twist cap");
  weak->add_option("--twist", twists, "Extra candidate twist a11,a12,a21,a22");
  weak->add_option("--verify", verify_path, "Re-validate a printed verdict");

  auto* indec = app.add_subcommand("indec", "Semi-decide indecomposability");
  indec->add_option("input", in_a)->required();
  indec->add_option("--verify", verify_path, "Re-validate a printed verdict");

  auto* fix = app.add_subcommand("fixture", "Print a named fixture");
  fix->add_option("name", name)->required();
  fix->add_option("--out", out_path, "Write JSON here");

  std::optional<std::size_t> trials, dim_max;
  std::optional<std::uint64_t> seed;
  auto* suite = app.add_subcommand("suite", "Run a property suite");
  suite->add_option("name", name)->required()->check(
      CLI::IsMember({"prop1", "counterexample", "theorem2"}));
  suite->add_option("--trials", trials);
  suite->add_option("--seed", seed);
  suite->add_option("--dim-max", dim_max);

  std::size_t census_dim = 0, census_trials = 0;
  std::uint64_t census_seed = 0;
  std::vector<std::string> inject;
  auto* cen = app.add_subcommand("census", "Bucket random pairs by weak invariants");
  cen->add_option("--dim", census_dim)->required();
  cen->add_option("--trials", census_trials)->required();
  cen->add_option("--seed", census_seed)->required();
  cen->add_option("--inject", inject, "Extra pairs counted first");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const Emitter emit{out, table};
  try {
    if (validate->parsed()) {
      const ModulePair v = load(in_a);
      json j = {{"valid", true}, {"dim", v.dim()}};
      if (!v.name().empty()) j["name"] = v.name();
      emit(j, "valid, dim " + std::to_string(v.dim()) + "\n");
    } else if (lie->parsed()) {
      const LieAlgebra l = build_lie(load(in_a));
      const json j = lie_to_json(l);
      if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
        emit({{"out", out_path}, {"dim", l.dim()}});
      } else {
        emit(j);
      }
    } else if (invariants->parsed()) {
      const ModulePair v = load(in_a);
      const WeakInvariants inv = weak_invariants(v);
      json spectrum = json::array();
      for (const auto& e : rational_joint_spectrum(v)) {
        spectrum.push_back({{"lambda", e.lambda.str()}, {"mu", e.mu.str()},
                            {"multiplicity", e.multiplicity}});
      }
      emit({{"weak_invariants", invariants_to_json(inv)},
            {"pencil", pencil_to_json(pencil_profile(v))},
            {"joint_spectrum", spectrum}},
           invariants_table(inv));
    } else if (iso->parsed()) {
      const ModulePair a = load(in_a), b = load(in_b);
      IsoOptions opt;
      opt.grid = grid_config_from_env();
      opt.allow_randomized = !exact;
      if (!verify_path.empty()) {
        const bool ok = verify_verdict(
            read_json_file(verify_path), [&] { return iso_decide(a, b, opt); },
            [&](const Certificate& c) {
              const auto* x = std::get_if<IsoCertificate>(&c);
              return x && verify_iso_certificate(a, b, x->x);
            });
        emit({{"verified", ok}}, ok ? "verified\n" : "verification failed\n");
        return ok ? kExitOk : kExitFailed;
      }
      const Verdict v = iso_decide(a, b, opt);
      emit(verdict_to_json(v), verdict_table(v));
    } else if (weak->parsed()) {
      const ModulePair a = load(in_a), b = load(in_b);
      WeakIsoOptions opt;
      opt.grid = grid_config_from_env();
      opt.max_candidates = max_candidates;
      for (const auto& t : twists) opt.extra_twists.push_back(parse_twist(t));
      if (!verify_path.empty()) {
        const bool ok = verify_verdict(
            read_json_file(verify_path), [&] { return weak_iso_decide(a, b, opt); },
            [&](const Certificate& c) {
              const auto* x = std::get_if<WeakIsoCertificate>(&c);
              return x && verify_weak_certificate(a, b, x->theta, x->x);
            });
        emit({{"verified", ok}}, ok ? "verified\n" : "verification failed\n");
        return ok ? kExitOk : kExitFailed;
      }
      const Verdict v = weak_iso_decide(a, b, opt);
      emit(verdict_to_json(v), verdict_table(v));
    } else if (indec->parsed()) {
      const ModulePair v = load(in_a);
      if (!verify_path.empty()) {
        const bool ok = verify_verdict(
            read_json_file(verify_path), [&] { return indecomposable_decide(v); },
            [&](const Certificate& c) {
              if (const auto* x = std::get_if<IdempotentCertificate>(&c)) {
                return verify_idempotent_certificate(v, *x);
              }
              if (const auto* x = std::get_if<LocalityCertificate>(&c)) {
                return verify_locality_certificate(v, *x);
              }
              return false;
            });
        emit({{"verified", ok}}, ok ? "verified\n" : "verification failed\n");
        return ok ? kExitOk : kExitFailed;
      }
      const Verdict v2 = indecomposable_decide(v);
      emit(verdict_to_json(v2), verdict_table(v2));
    } else if (fix->parsed()) {
      const json j = pair_to_json(fixture(name));
      if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
        emit({{"out", out_path}, {"dim", j["dim"]}});
      } else {
        emit(j);
      }
    } else if (suite->parsed()) {
      SuiteReport r;
      if (name == "prop1") {
        r = suite_prop1(trials.value_or(200), dim_max.value_or(6), seed.value_or(42));
      } else if (name == "theorem2") {
        r = suite_theorem2(trials.value_or(100), seed.value_or(7));
      } else {
        r = suite_counterexample();
      }
      std::string text = report_table(r);
      if (timing) text += "wall     " + std::to_string(r.wall_seconds) + " s\n";
      emit(report_to_json(r, timing), text);
    } else if (cen->parsed()) {
      std::vector<ModulePair> extra;
      for (const auto& in : inject) extra.push_back(load(in));
      const auto rows = census(census_dim, census_trials, census_seed, extra);
      emit(census_to_json(rows), census_table(rows));
    }
  } catch (const NonCommuting& e) {
    err << "error: " << e.what() << "\n";
    out << json({{"error", "NonCommuting"},
                 {"message", e.what()},
                 {"commutator", matrix_to_json(e.commutator())}})
               .dump(2)
        << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace modlie::cli
