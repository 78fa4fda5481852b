// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "lqca/affine.hpp"
#include "lqca/border.hpp"
#include "lqca/check.hpp"
#include "lqca/evolution.hpp"
#include "lqca/transfer.hpp"
#include "test_support.hpp"

using namespace lqca;
using namespace lqca::testing;

namespace {

// Pinned tolerances.
constexpr double kBorderTol = 1e-9;
constexpr double kInnerTol = 1e-9;
constexpr double kRowNormTol = 1e-12;
constexpr double kClosureTol = 1e-6;
constexpr double kPathTol = 1e-6;
constexpr double kNormTol = 1e-10;
constexpr double kStepTol = 1e-12;
constexpr double kRankEps = 1e-10;
constexpr double kCliSeconds = 1.0;
// scalar multiplications per basis request: at most c * D * (D - d + 1)
constexpr std::uint64_t kBudgetConstant = 4;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  const CliResult r = run_cli("check " + fixture_arg("qflip"));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {r.exit_code == 0 && secs < kCliSeconds,
          "exit " + std::to_string(r.exit_code) + ", " + fmt("%.3f s", secs)};
}

Outcome ac2() {
  const CliResult r = run_cli("--format json check " + fixture_arg("xor"));
  std::string witness = "?";
  try {
    const auto j = nlohmann::json::parse(r.out);
    if (j["witness"].is_string()) witness = j["witness"].get<std::string>();
  } catch (const std::exception&) {
  }
  return {r.exit_code == 1 && witness == "1", "exit " + std::to_string(r.exit_code) + ", witness " + witness};
}

Outcome ac3() {
  const CliResult r = run_cli("--format json borders " + fixture_arg("qflip"));
  try {
    const auto j = nlohmann::json::parse(r.out);
    const double la = j["l"]["a"], lb = j["l"]["b"], ra = j["r"]["a"], rb = j["r"]["b"];
    const double err = std::max({std::abs(la - 1), std::abs(lb - 1), std::abs(ra - 1), std::abs(rb)});
    return {err <= kBorderTol, "max error " + fmt("%.2e", err)};
  } catch (const std::exception& e) {
    return {false, std::string("unparsable output: ") + e.what()};
  }
}

Outcome ac4() {
  double worst = 0.0;
  for (const char* name : {"qflip", "xor", "shift", "identity"}) {
    const BorderVectors b = border_vectors(fixture(name));
    worst = std::max(worst, std::abs(b.l.dot(b.r) - 1.0));
  }
  return {worst <= kInnerTol, "max |<l|r> - 1| " + fmt("%.2e", worst)};
}

Outcome ac5() {
  const Automaton q = fixture("qflip");
  const Configuration d(-1, {1});
  double worst = 0.0;
  for (int K = 1; K <= 12; ++K) {
    worst = std::max(worst, std::abs(truncated_row_norm(q, d, Interval{-K, 0}) - (1.0 - std::ldexp(1.0, -K))));
  }
  const BorderVectors b = border_vectors(q);
  const double exact = row_norm_squared(build_transfer_operators(q), b.l, b.r, d);
  const bool pass = worst <= kRowNormTol && std::abs(exact - 1.0) <= kRowNormTol;
  return {pass, "max truncation error " + fmt("%.2e", worst) + ", exact " + fmt("%.12f", exact)};
}

Outcome ac6() {
  std::mt19937_64 rng(2024);
  const Family families[] = {Family::border_finite, Family::right_local, Family::left_local, Family::sum_mod};
  int tested = 0;
  int disagreements = 0;
  for (int t = 0; tested < 240 && t < 5000; ++t) {
    const std::size_t k = 2 + t % 2;
    const Automaton a = random_automaton(k, 2, families[t % 4], rng);
    const BorderVectors b = border_vectors(a);
    if (b.any_infinite) continue;
    const double lr = b.l.dot(b.r);
    if (lr <= 1e-6) continue;
    const Eigen::VectorXd r = b.r / lr;
    const auto ops = build_transfer_operators(a);
    const ClosureVerdict v = decide_closed(b.l, r, ops);
    bool brute = true;
    for_each_word(k, a.border_dim() + 1, [&](const Word& w) {
      const Eigen::VectorXd img = apply_word(ops, w, b.l);
      if (std::abs(img.dot(r) - 1.0) > kClosureTol * std::max(1.0, img.norm() * r.norm())) brute = false;
    });
    ++tested;
    if (v.closed != brute) ++disagreements;
  }
  return {tested >= 200 && disagreements == 0,
          std::to_string(tested) + " automata, " + std::to_string(disagreements) + " disagreements"};
}

Outcome ac7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 0.9);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<Eigen::Index>(1 + t % 6);
    Eigen::MatrixXd a(n, n);
    for (auto& x : a.reshaped()) x = u(rng);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double s = a.row(i).sum();
      if (s > 0.6) a.row(i) *= 0.6 / s;
    }
    WeightMatrix w(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) w(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = ExtReal(a(i, j));
    const WeightMatrix k = kleene_all_pairs(w);
    const Eigen::MatrixXd p = path_power_sums(a, 40);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const ExtReal x = k(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        worst = std::max(worst, x.is_infinite() ? INFINITY : std::abs(x.value() - p(i, j)));
      }
  }
  WeightMatrix cycle(3);
  cycle(0, 1) = ExtReal(1.0);
  cycle(1, 0) = ExtReal(1.0);
  cycle(2, 0) = ExtReal(0.5);
  const WeightMatrix c = kleene_all_pairs(cycle);
  const bool diverges = c(0, 0).is_infinite() && c(2, 1).is_infinite() && c(0, 2).value() == 0.0;
  return {worst <= kPathTol && diverges,
          "max error " + fmt("%.2e", worst) + ", unit cycle " + (diverges ? "diverges" : "finite")};
}

Outcome ac8() {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  std::bernoulli_distribution dependent(0.35);
  int mismatches = 0;
  int over_budget = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t D = 1 + t % 20;
    DynamicBasis basis(D);
    std::vector<Eigen::VectorXd> accepted;
    for (std::size_t s = 0; s < D + 3; ++s) {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(D));
      if (!accepted.empty() && dependent(rng)) {
        for (const auto& v : accepted) u += g(rng) * v;
      } else {
        for (auto& x : u) x = g(rng);
      }
      Eigen::MatrixXd m(static_cast<Eigen::Index>(accepted.size() + 1), static_cast<Eigen::Index>(D));
      for (std::size_t i = 0; i < accepted.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = accepted[i].transpose();
      m.row(m.rows() - 1) = u.transpose();
      const bool oracle = elimination_rank(m, kRankEps) == accepted.size();
      const std::size_t d = basis.dim();
      const std::uint64_t budget = kBudgetConstant * D * (D - d + 1);
      auto before = basis.multiplications();
      const bool member = basis.member(u);
      if (basis.multiplications() - before > budget) ++over_budget;
      if (member != oracle) ++mismatches;
      if (!member) {
        before = basis.multiplications();
        basis.add(u);
        if (basis.multiplications() - before > budget) ++over_budget;
        accepted.push_back(u);
      }
    }
  }
  return {mismatches == 0 && over_budget == 0,
          std::to_string(mismatches) + " membership mismatches, " + std::to_string(over_budget) +
              " requests over budget"};
}

Outcome ac9() {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  double worst = 0.0;
  int runs = 0;
  for (const char* name : {"qflip", "shift", "identity", "qflip_shifted", "qflip_gap", "local_hadamard"}) {
    const Automaton a = fixture(name);
    std::uniform_int_distribution<std::size_t> letter(0, a.alphabet_size() - 1);
    std::uniform_int_distribution<int> len(1, 5);
    for (int t = 0; t < 50; ++t) {
      Superposition u;
      for (int term = 0; term < 5; ++term) {
        std::vector<StateIndex> cells(static_cast<std::size_t>(len(rng)));
        for (auto& c : cells) c = letter(rng);
        u.add(Configuration(len(rng) - 3, cells), {g(rng), g(rng)});
      }
      u *= 1.0 / u.norm();
      worst = std::max(worst, std::abs(step(a, u).norm() - 1.0));
      ++runs;
    }
  }
  return {worst <= kNormTol, std::to_string(runs) + " superpositions, max deviation " + fmt("%.2e", worst)};
}

Outcome ac10() {
  const Automaton a = fixture("qflip_gap");
  const Automaton e = expand_to_simple(a);
  const VerdictReport ra = check(a);
  const VerdictReport re = check(e);
  double worst = 0.0;
  bool same_support = true;
  for_each_configuration(2, Interval{0, 5}, [&](const Configuration& c) {
    const Superposition x = step(a, Superposition::pure(c));
    const Superposition y = step(e, Superposition::pure(c));
    if (x.size() != y.size()) same_support = false;
    for (const auto& [d, amp] : x.terms()) worst = std::max(worst, std::abs(y.amplitude(d) - amp));
  });
  const bool pass = ra.verdict == re.verdict && same_support && worst <= kStepTol &&
                    std::abs(ra.expansion_factor - 4.0 / 3.0) <= 1e-12;
  return {pass, std::string(to_string(ra.verdict)) + " / " + std::string(to_string(re.verdict)) +
                    ", max step difference " + fmt("%.2e", worst) + ", e = " + fmt("%.6f", ra.expansion_factor)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "qflip check exits 0 within 1 s", ac1},
      {"AC2", "xor check exits 1 with witness 1", ac2},
      {"AC3", "qflip border vectors l = (1,1), r = (1,0)", ac3},
      {"AC4", "<l|r> = 1 on reference automata", ac4},
      {"AC5", "qflip truncated row norms 1 - 2^-K and exact norm 1", ac5},
      {"AC6", "closure matches word brute force on random automata", ac6},
      {"AC7", "path closure matches power sums; unit cycles diverge", ac7},
      {"AC8", "dynamic basis matches elimination within the multiplication budget", ac8},
      {"AC9", "unitary fixtures preserve norms", ac9},
      {"AC10", "expansion preserves verdict and steps; e = 4/3", ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
