// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion holds. Usage: chebstab_acceptance <path-to-chebstab-cli>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chebstab/chebyshev.hpp"
#include "chebstab/metrics.hpp"
#include "chebstab/rng.hpp"
#include "chebstab/verify.hpp"

namespace {

using namespace chebstab;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

PointCloud cloud(Rng& rng, std::size_t dim, std::size_t n) { return gen_cloud(rng, dim, n, -10.0, 10.0); }

Outcome campaign_outcome(const CheckReport& r, double seconds) {
  return {r.passed(), "trials=" + std::to_string(r.trials_run) +
                          " violations=" + std::to_string(r.violation_count) +
                          " max_ratio=" + fmt(r.max_ratio.value) + " time=" + fmt(seconds) + "s"};
}

template <typename F>
std::pair<CheckReport, double> timed(F f) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = f();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {std::move(r), elapsed.count()};
}

Outcome ac1() {
  CampaignConfig cfg;
  cfg.trials = 10000;
  auto [r, s] = timed([&] { return check_theorem2(cfg); });
  Outcome o = campaign_outcome(r, s);
  o.pass = o.pass && r.max_ratio.value <= 2.0 + 1e-9 && s <= 60.0;
  return o;
}

Outcome ac2() {
  CampaignConfig cfg;
  auto [r, s] = timed([&] { return tightness_search(cfg); });
  const double fam = r.stats.at("family_min_ratio");
  const double search = r.stats.at("search_max_ratio");
  bool family_exact = true;
  for (const TrialRow& row : r.rows) {
    if (row.trial < 3) family_exact = family_exact && std::abs(row.ratio - 2.0) <= 1e-12;
  }
  return {r.passed() && family_exact && search <= 2.0 + 1e-9,
          "family_min_ratio=" + fmt(fam) + " search_max_ratio=" + fmt(search) +
              " violations=" + std::to_string(r.violation_count)};
}

Outcome ac3() {
  Rng rng(mix_seed(kDefaultCampaignSeed, 3));
  double worst_radius = 0.0;
  double worst_box = 0.0;
  for (int k = 0; k < 200; ++k) {
    const PointCloud m = cloud(rng, rng.between(1, 3), rng.between(1, 16));
    const ChebResultBox box = cheb_linf(m);
    const OracleResult o = cheb_numeric_oracle(m, Norm::linf);
    worst_radius = std::max(worst_radius, std::abs(box.radius - o.objective));
    worst_box = std::max(worst_box, box_dist_linf(o.argmin, box.center_set));
  }
  return {worst_radius <= 1e-6 && worst_box <= 1e-5,
          "max_radius_gap=" + fmt(worst_radius) + " max_box_dist=" + fmt(worst_box)};
}

Outcome ac4() {
  Rng rng(mix_seed(kDefaultCampaignSeed, 4));
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t d = rng.between(1, 4);
    const std::size_t n = rng.between(1, 7);
    const PointCloud m = cloud(rng, d, n);
    const PointCloud w = cloud(rng, d, n);
    const Norm norm = k % 2 == 0 ? Norm::linf : Norm::l2;
    worst = std::max(worst, std::abs(nnet_dist(m, w, norm) - nnet_dist_bruteforce(m, w, norm)));
  }
  return {worst <= 1e-12, "pairs=1000 max_gap=" + fmt(worst)};
}

Outcome ac5() {
  Rng rng(mix_seed(kDefaultCampaignSeed, 5));
  double worst = 0.0;
  std::size_t with_duplicates = 0;
  std::size_t unequal = 0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t d = rng.between(1, 4);
    const PointCloud base = cloud(rng, d, rng.between(1, 12));
    // Every other pair repeats some points.
    std::vector<Vector> pts(base.begin(), base.end());
    if (k % 2 == 0) {
      const std::size_t extra = rng.between(1, 4);
      for (std::size_t e = 0; e < extra; ++e) pts.push_back(base[rng.below(base.size())]);
      ++with_duplicates;
    }
    const PointCloud m(std::move(pts));
    const PointCloud w = cloud(rng, d, rng.between(1, 12));
    unequal += m.size() != w.size();
    for (Norm norm : {Norm::linf, Norm::l2}) {
      worst = std::max(worst, std::abs(hausdorff_via_correspondence(m, w, norm) - hausdorff(m, w, norm)));
    }
  }
  return {worst <= 1e-12, "pairs=1000 with_duplicates=" + std::to_string(with_duplicates) +
                              " unequal_sizes=" + std::to_string(unequal) + " max_gap=" + fmt(worst)};
}

Outcome ac6() {
  CampaignConfig cfg;
  cfg.trials = 1000;
  auto [r, s] = timed([&] { return check_alpha_le_alphahat(cfg); });
  return campaign_outcome(r, s);
}

Outcome ac7() {
  CampaignConfig cfg;
  cfg.trials = 10000;
  auto [r, s] = timed([&] { return check_radius_lipschitz(cfg); });
  return campaign_outcome(r, s);
}

Outcome ac8() {
  CampaignConfig cfg;
  cfg.trials = 10000;
  auto [r, s] = timed([&] { return check_lemma0(cfg); });
  return campaign_outcome(r, s);
}

Outcome ac9() {
  CampaignConfig cfg;
  cfg.trials = 4000;
  auto [r, s] = timed([&] { return check_lemma2(cfg); });
  Outcome o = campaign_outcome(r, s);
  const double retained = r.stats.at("retained");
  o.pass = o.pass && retained >= 1000.0;
  o.detail += " retained=" + fmt(retained) + " retention_rate=" + fmt(r.stats.at("retention_rate"));
  return o;
}

Outcome ac10() {
  CampaignConfig cfg;
  cfg.trials = 100;
  cfg.lemma1_steps = 64;
  auto [r, s] = timed([&] { return check_lemma1_stability(cfg); });
  Outcome o = campaign_outcome(r, s);
  o.detail += " steps=" + fmt(r.stats.at("steps"));
  return o;
}

Outcome ac11() {
  Rng rng(mix_seed(kDefaultCampaignSeed, 11));
  double worst_outside = -1.0;
  double worst_oracle = 0.0;
  std::size_t thin_support = 0;
  for (int k = 0; k < 1000; ++k) {
    const PointCloud m = cloud(rng, rng.between(1, 8), rng.between(1, 64));
    const ChebResultBall b = cheb_l2(m);
    std::size_t on_sphere = 0;
    for (const Vector& p : m) {
      const double d = dist(p, b.center, Norm::l2);
      worst_outside = std::max(worst_outside, d - b.radius);
      on_sphere += std::abs(d - b.radius) <= 1e-7;
    }
    // A single point (or all-equal cloud) has radius 0 and just one distinct support point.
    if (diameter(m, Norm::l2) > 0.0 && on_sphere < 2) ++thin_support;
    worst_oracle = std::max(worst_oracle, std::abs(b.radius - cheb_numeric_oracle(m, Norm::l2).objective));
  }
  return {worst_outside <= 1e-9 && thin_support == 0 && worst_oracle <= 1e-6,
          "max_excess=" + fmt(worst_outside) + " clouds_with_<2_support=" + std::to_string(thin_support) +
              " max_oracle_gap=" + fmt(worst_oracle)};
}

int run_command(const std::string& cmd) {
  const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome ac12(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "chebstab_acceptance";
  fs::create_directories(dir);
  const std::string q = "'" + cli + "'";
  std::ofstream(dir / "good.csv") << "0,0\n0,2\n";
  std::ofstream(dir / "bad.csv") << "0,0\n0,oops\n";
  std::ofstream(dir / "one.csv") << "0.5\n";
  std::ofstream(dir / "two.csv") << "0\n1\n";

  std::vector<std::string> failures;
  const auto expect = [&](const std::string& args, int code) {
    const int got = run_command(q + " " + args);
    if (got != code) failures.push_back("'" + args + "' exit " + std::to_string(got));
  };
  const std::string d = dir.string() + "/";
  expect("center " + d + "good.csv", 0);
  expect("center " + d + "bad.csv", 2);
  expect("nnet-dist " + d + "two.csv " + d + "one.csv", 2);
  expect("verify theorem2 --trials 200", 0);
  expect("verify tightness --trials 20 --margin 1e-6", 1);
  expect("verify bogus", 2);
  expect("plot-data theorem2 --trials 0 --out " + d + "empty.csv", 0);

  for (int k = 1; k <= 2; ++k) {
    expect("verify all --trials 200 --seed 42 --out " + d + "report" + std::to_string(k) + ".json", 0);
  }
  const std::string r1 = slurp(dir / "report1.json");
  const bool identical = !r1.empty() && r1 == slurp(dir / "report2.json");
  if (!identical) failures.push_back("reports differ");
  fs::remove_all(dir);

  std::string detail = "commands=10 identical_reports=" + std::string(identical ? "yes" : "no");
  for (const std::string& f : failures) detail += "; " + f;
  return {failures.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <chebstab-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 centre-set Lipschitz bound, 10000 pairs", ac1},
      {"AC2 tightness family and search", ac2},
      {"AC3 l-inf centre oracle equivalence", ac3},
      {"AC4 bottleneck vs brute force", ac4},
      {"AC5 correspondence vs Hausdorff", ac5},
      {"AC6 alpha <= alpha-hat", ac6},
      {"AC7 radius 1-Lipschitz, both norms", ac7},
      {"AC8 Euclidean 2-net sandwich", ac8},
      {"AC9 Euclidean centre bound, disjoint balls", ac9},
      {"AC10 stability traces", ac10},
      {"AC11 minimum enclosing ball validity", ac11},
      {"AC12 CLI exit codes and reproducible reports", [&] { return ac12(cli); }},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
