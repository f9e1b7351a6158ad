// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   acceptance --cli <path to gammatop>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "support.hpp"

using namespace gammatop;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few mismatches for a criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o{failures_ == 0, summary + ", " + std::to_string(checks_) + " checks"};
    if (failures_) {
      o.detail += ", " + std::to_string(failures_) + " mismatches";
      for (const auto& n : notes_) o.detail += "; " + n;
    }
    return o;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::string mask_str(PointSet s) { return std::to_string(s.mask()); }

Outcome ac1_reference_family_and_nbds() {
  Tally t;
  const GammaContext ctx = reference_context();
  t.check(to_vector(ctx.gamma_open_family()) == F({"", "b", "ab", "ac", "abc"}), "gamma-open family");
  t.check(gamma_nbd_system(ctx, 0).gamma_open_nbds == F({"ab", "ac", "abc"}), "nbd system at a");
  t.check(gamma_nbd_system(ctx, 1).gamma_open_nbds == F({"b", "ab", "abc"}), "nbd system at b");
  t.check(gamma_nbd_system(ctx, 2).gamma_open_nbds == F({"ac", "abc"}), "nbd system at c");
  return t.outcome("gamma-open family and three nbd systems");
}

Outcome ac2_reference_local_compactness() {
  Tally t;
  const GammaContext ctx = reference_context();
  const auto lc = is_gamma_locally_compact(ctx);
  t.check(lc.holds, "verdict");
  for (std::size_t x = 0; x < 3; ++x) {
    const auto& w = lc.witnesses[x];
    t.check(w.has_value(), "witness exists at point " + std::to_string(x));
    if (!w) continue;
    const auto nbds = gamma_nbd_system(ctx, x).gamma_open_nbds;
    t.check(std::find(nbds.begin(), nbds.end(), *w) != nbds.end(), "witness is a gamma-open nbd");
    t.check(is_gamma0_compact_subspace(ctx, *w), "witness is gamma0-compact");
  }
  return t.outcome("locally compact with a witness per point");
}

Outcome ac3_identity_reduction() {
  Tally t;
  for (const auto& s : enumerate_topologies(3)) {
    const GammaContext ctx = with_op(s, OperationKind::identity);
    t.check(to_vector(ctx.gamma_open_family()) == to_vector(s.opens()), "family equals topology");
    for_each_subset(s.full(), [&](PointSet a) {
      t.check(ctx.closure(a) == closure(s, a), "closure of " + mask_str(a));
      t.check(ctx.interior(a) == interior(s, a), "interior of " + mask_str(a));
    });
    t.check(is_gamma_T2(ctx) == is_T2(s), "gamma-T2 vs T2");
    for (auto v : {ClosedVariant::jankovic, ClosedVariant::kasahara}) {
      t.check(is_gamma_star_regular(ctx, v) == is_regular(s), "gamma*-regular vs regular");
      t.check(is_gamma_normal(ctx, v) == is_normal(s), "gamma-normal vs normal");
    }
  }
  return t.outcome("29 topologies with the identity operation");
}

Outcome ac4_operator_laws() {
  Tally t;
  std::size_t contexts = 0;
  for_each_exhaustive_context(3, [&](const GammaContext& ctx) {
    ++contexts;
    const PointSet x = ctx.space().full();
    for_each_subset(x, [&](PointSet a) {
      const PointSet in = ctx.interior(a);
      const PointSet cl = ctx.closure(a);
      t.check(in.subset_of(a) && a.subset_of(cl), "int ⊆ A ⊆ cl");
      t.check(ctx.closure(x - a) == x - in, "duality");
      for_each_subset(x, [&](PointSet b) {
        if (!a.subset_of(b)) return;
        t.check(in.subset_of(ctx.interior(b)) && cl.subset_of(ctx.closure(b)), "monotonicity");
      });
    });
    const auto family = ctx.gamma_open_family();
    for (PointSet u : family) {
      for (PointSet v : family) t.check(ctx.is_gamma_open(u | v), "union of gamma-open sets");
    }
  });
  t.check(contexts == 9048, "context count");
  return t.outcome(std::to_string(contexts) + " three-point contexts");
}

Outcome ac5_regular_intersections() {
  Tally t;
  std::size_t regular = 0;
  for_each_exhaustive_context(3, [&](const GammaContext& ctx) {
    if (!classify_operation(ctx).regular) return;
    ++regular;
    const auto family = ctx.gamma_open_family();
    for (PointSet u : family) {
      for (PointSet v : family) t.check(ctx.is_gamma_open(u & v), "intersection of gamma-open sets");
    }
  });
  return t.outcome(std::to_string(regular) + " contexts with a regular operation");
}

Outcome ac6_set_cover_exactness() {
  Tally t;
  std::mt19937_64 rng(20240611);
  std::vector<std::vector<FiniteSpace>> tops;
  for (std::size_t n = 1; n <= 4; ++n) tops.push_back(enumerate_topologies(n));
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const FiniteSpace& s = tops[n - 1][rng() % tops[n - 1].size()];
    const GammaContext ctx(s, sample_operation(s, 99, static_cast<std::uint64_t>(trial), 0));
    const auto family = ctx.gamma_open_family();
    const std::size_t members = 1 + rng() % 12;
    std::vector<PointSet> cover;
    PointSet covered;
    for (std::size_t i = 0; i < members; ++i) {
      cover.push_back(family[rng() % family.size()]);
      covered |= cover.back();
    }
    if (covered != s.full()) cover.back() = s.full();
    const PointSet target(static_cast<PointSet::Mask>(rng() & s.full().mask()));

    std::vector<oracle::Mask> closures;
    for (PointSet c : cover) closures.push_back(oracle::g_closure(to_model(ctx), c.mask()));
    bool coverable = false;
    const std::size_t best = oracle::min_cover_size(closures, target.mask(), coverable);
    t.check(coverable, "target inside closures");
    const auto cert = minimal_gamma0_subcover(ctx, cover, target);
    t.check(cert.chosen_indices.size() == best, "trial " + std::to_string(trial) + " cardinality");
    t.check(target.subset_of(cert.covered), "trial " + std::to_string(trial) + " covers target");
  }
  return t.outcome("200 random instances against brute force");
}

Outcome ac7_theorem_audit() {
  Tally t;
  std::size_t verdicts = 0;
  std::uint64_t failures = 0;
  std::size_t rechecked = 0;
  auto run = [&](std::size_t n, bool maps) {
    Json first = Json::array();
    for (const auto& spec : theorem_registry()) {
      if (spec.instance_kind == InstanceKind::map && !maps) continue;
      for (const auto& v : audit_sweep(spec.id, n, {}, PoolSpec{}, 2)) {
        ++verdicts;
        failures += v.failure_total;
        for (const auto& f : v.failures) {
          ++rechecked;
          t.check(recheck_failure(spec.id, v.variants, f), std::string(spec.name) + " failure rechecks");
        }
        first.push_back(v.to_json());
      }
    }
    Json second = Json::array();
    for (const auto& spec : theorem_registry()) {
      if (spec.instance_kind == InstanceKind::map && !maps) continue;
      for (const auto& v : audit_sweep(spec.id, n, {}, PoolSpec{}, 1)) second.push_back(v.to_json());
    }
    t.check(first.dump() == second.dump(), "verdicts at n=" + std::to_string(n) + " are deterministic");
  };
  run(2, true);
  run(3, false);
  for (const auto& v : audit_sweep(TheoremId::T6, 3)) {
    t.check(v.hyp_held > 0 && v.failure_total == 0, "T6 at n=3 has no failures");
  }
  t.check(audit(TheoremId::L32, 1, Variants{}).failure_total == 0, "L32 at n=1 has no failures");
  return t.outcome(std::to_string(verdicts) + " verdicts, " + std::to_string(failures) + " failures, " +
                   std::to_string(rechecked) + " reported failures rechecked");
}

Outcome ac8_example_adjudication() {
  Tally t;
  const WorkedExamplesReport r = audit_worked_examples();
  const oracle::Model m = to_model(reference_context());
  t.check(r.gamma_normal_jankovic == oracle::g_normal(m, false), "jankovic verdict matches brute force");
  t.check(r.gamma_normal_kasahara == oracle::g_normal(m, true), "kasahara verdict matches brute force");
  const Json j = r.to_json();
  t.check(j["gamma_normal"]["jankovic"].is_boolean() && j["gamma_normal"]["kasahara"].is_boolean(),
          "single verdict per variant");
  bool conflict = false;
  bool stray = false;
  for (const auto& f : r.flags) {
    conflict = conflict || f.rfind("conflict: identical space and operation, opposite gamma-normality claims", 0) == 0;
    stray = stray || (f.find("{d}") != std::string::npos);
  }
  t.check(conflict, "contradiction flagged");
  t.check(stray, "stray point flagged");
  return t.outcome(std::string("gamma-normal: ") + (r.gamma_normal_jankovic ? "true" : "false") + " (jankovic), " +
                   (r.gamma_normal_kasahara ? "true" : "false") + " (kasahara)");
}

Outcome ac9_enumeration_counts() {
  Tally t;
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto tops = enumerate_topologies(n);
    const auto brute = oracle::all_topologies(n);
    t.check(tops.size() == (n == 3 ? 29u : 355u), "closure-search count at n=" + std::to_string(n));
    t.check(brute.size() == tops.size(), "brute-force count at n=" + std::to_string(n));
    std::set<std::vector<oracle::Mask>> a;
    std::set<std::vector<oracle::Mask>> b(brute.begin(), brute.end());
    for (const auto& s : tops) {
      std::vector<oracle::Mask> fam;
      for (PointSet o : s.opens()) fam.push_back(o.mask());
      std::sort(fam.begin(), fam.end());
      a.insert(fam);
    }
    t.check(a == b, "same families at n=" + std::to_string(n));
  }
  const ContextPool pool(3, PoolSpec{});
  for (std::size_t i = 0; i < pool.topologies().size(); ++i) {
    const auto& s = pool.topologies()[i];
    std::uint64_t product = 1;
    for (PointSet v : s.opens()) product *= std::uint64_t{1} << (s.size() - v.size());
    t.check(pool.count_for(i) == product, "pool size");
    t.check(operation_count(s) == product, "closed-form count");
  }
  for (const auto& s : enumerate_topologies(4)) {
    std::uint64_t product = 1;
    for (PointSet v : s.opens()) product *= std::uint64_t{1} << (s.size() - v.size());
    t.check(operation_count(s) == product, "closed-form count at n=4");
  }
  return t.outcome("29 and 355 by two strategies, pool sizes match the product formula");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome ac10_determinism(const std::string& cli, const std::filesystem::path& data) {
  Tally t;
  if (cli.empty()) {
    t.check(false, "no --cli given");
    return t.outcome("CLI determinism");
  }
  const auto dir = std::filesystem::temp_directory_path() / "gammatop_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::string> commands{
      "analyze \"" + (data / "reference.json").string() + "\"",
      "analyze \"" + (data / "swap_map.json").string() + "\"",
      "audit all --n 2",
      "audit T7 T14 --n 3 --jobs 4",
      "audit T9 --n 4 --samples 100 --seed 5",
      "counterexample \"gamma_normal,!normal\" --n 3",
      "counterexample \"T2,!T2\" --n 3",
      "paper-examples",
      "paper-examples --format text",
      "enumerate --n 4",
  };
  std::size_t i = 0;
  for (const auto& c : commands) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto file = dir / ("out" + std::to_string(i) + "_" + std::to_string(rep));
      const std::string line = "\"" + cli + "\" " + c + " --out \"" + file.string() + "\"";
      const int rc = std::system(line.c_str());
      t.check(rc != -1 && WEXITSTATUS(rc) <= 1, "'" + c + "' ran");
      outputs[rep] = slurp(file);
    }
    t.check(!outputs[0].empty() && outputs[0] == outputs[1], "'" + c + "' byte-identical");
    ++i;
  }
  std::filesystem::remove_all(dir);
  return t.outcome(std::to_string(commands.size()) + " commands run twice");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::filesystem::path data = GAMMATOP_DATA_DIR;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    if (std::string(argv[i]) == "--data") data = argv[i + 1];
  }

  struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "reference gamma-open family and nbd systems", 1, ac1_reference_family_and_nbds},
      {"AC2", "reference local compactness with witnesses", 1, ac2_reference_local_compactness},
      {"AC3", "identity operation reduces to the topology", 10, ac3_identity_reduction},
      {"AC4", "operator laws on every three-point context", 300, ac4_operator_laws},
      {"AC5", "regular operations give intersection-closed families", 300, ac5_regular_intersections},
      {"AC6", "minimal subcover matches brute force", 60, ac6_set_cover_exactness},
      {"AC7", "theorem audit suite", 1800, ac7_theorem_audit},
      {"AC8", "gamma-normality adjudication of the worked examples", 1, ac8_example_adjudication},
      {"AC9", "enumeration counts and pool sizes", 60, ac9_enumeration_counts},
      {"AC10", "byte-identical CLI output", 300, [&] { return ac10_determinism(cli, data); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_seconds);
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [" << o.detail << "; " << timing
              << (in_time ? "" : ", over budget") << "]\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
