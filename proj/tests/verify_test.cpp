#include "chebstab/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "chebstab/chebyshev.hpp"
#include "chebstab/metrics.hpp"
#include "chebstab/serialize.hpp"
#include "oracles.hpp"

namespace chebstab {
namespace {

CampaignConfig small_config(std::size_t trials = 120) {
  CampaignConfig cfg;
  cfg.trials = trials;
  cfg.points_max = 12;
  cfg.dim_max = 5;
  return cfg;
}

TEST(GenCloudTest, DeterministicAndInRange) {
  Rng a(5);
  Rng b(5);
  const PointCloud x = gen_cloud(a, 3, 10, -2.0, 2.0);
  const PointCloud y = gen_cloud(b, 3, 10, -2.0, 2.0);
  ASSERT_EQ(x.size(), 10u);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i], y[i]);
    for (double v : x[i].coords()) {
      EXPECT_GE(v, -2.0);
      EXPECT_LE(v, 2.0);
    }
  }
  Rng c(5);
  const PointCloud flat = gen_cloud(c, 2, 4, 1.5, 1.5);
  for (const Vector& p : flat) EXPECT_EQ(p, (Vector{1.5, 1.5}));
}

TEST(GenPerturbationTest, StaysWithinEps) {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const PointCloud m = testing::random_cloud(rng, rng.between(1, 6), rng.between(1, 16));
    const double eps = rng.uniform(0.0, 2.0);
    for (Norm n : {Norm::linf, Norm::l2}) {
      const PointCloud w = gen_perturbation(m, eps, rng, n);
      ASSERT_EQ(w.size(), m.size());
      for (std::size_t i = 0; i < m.size(); ++i) EXPECT_LE(dist(m[i], w[i], n), eps + 1e-12);
      EXPECT_LE(hausdorff(m, w, n), eps + 1e-12);
    }
  }
  Rng zero(1);
  const PointCloud m{{1.0, 2.0}, {3.0, -4.0}};
  const PointCloud same = gen_perturbation(m, 0.0, zero, Norm::l2);
  for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(same[i], m[i]);
}

TEST(TightnessPairTest, ClosedForm) {
  for (double delta : {1.0, 0.1}) {
    const auto [m, w] = tightness_pair(delta);
    EXPECT_NEAR(hausdorff(m, w, Norm::linf), delta, 1e-15);
    const ChebResultBox cw = cheb_linf(w);
    EXPECT_NEAR(cw.radius, 1.0 + delta, 1e-15);
    EXPECT_NEAR(cw.center_set[0].lo, -1.0, 1e-15);
    EXPECT_NEAR(cw.center_set[0].hi, 1.0 + 2.0 * delta, 1e-15);
    EXPECT_NEAR(box_hausdorff_linf(cheb_linf(m).center_set, cw.center_set), 2.0 * delta, 1e-15);
    EXPECT_NEAR(evaluate_check("theorem2", m, w, "", 0.0).ratio, 2.0, 1e-12);
  }
}

TEST(EvaluateCheckTest, Examples) {
  const PointCloud m{{0.0, 0.0}, {2.0, 0.0}};
  const PointCloud z{{0.0, 0.0}, {0.0, 2.0}};
  // centres (1,0) and (0,1); alpha = 2; diameters 2 and 2
  const Sides lower = evaluate_check("lemma0", m, z, "lower", 0.0);
  EXPECT_NEAR(lower.lhs, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(lower.rhs, 2.0);
  const Sides upper = evaluate_check("lemma0", m, z, "upper", 0.0);
  EXPECT_EQ(upper.lhs, 2.0);
  EXPECT_NEAR(upper.rhs, std::sqrt(2.0) + 2.0, 1e-12);
  EXPECT_THROW(evaluate_check("lemma0", m, z, "middle", 0.0), InputError);

  const Sides hat = evaluate_check("alpha-le-alphahat", PointCloud{Vector{0.0}, Vector{10.0}},
                                   PointCloud{Vector{5.0}, Vector{5.0}}, "", 0.0);
  EXPECT_EQ(hat.lhs, 5.0);
  EXPECT_EQ(hat.rhs, 5.0);

  // radii 1 and 0, alpha 1
  const Sides radius = evaluate_check("radius-lipschitz", m, PointCloud{{1.0, 0.0}}, "l2", 0.0);
  EXPECT_NEAR(radius.lhs, 1.0, 1e-12);
  EXPECT_NEAR(radius.rhs, 1.0, 1e-12);

  const Sides far = evaluate_check("lemma2", PointCloud{{0.0, 0.0}}, PointCloud{{10.0, 0.0}}, "", 0.0);
  EXPECT_EQ(far.lhs, 10.0);
  EXPECT_EQ(far.rhs, 20.0);

  EXPECT_THROW(evaluate_check("bogus", m, z, "", 0.0), InputError);
}

TEST(CampaignConfigTest, Validation) {
  CampaignConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), InputError);
  EXPECT_NO_THROW(cfg.validate(true));
  cfg = CampaignConfig{};
  cfg.dim_min = 5;
  cfg.dim_max = 4;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = CampaignConfig{};
  cfg.points_min = 0;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = CampaignConfig{};
  cfg.coord = -1.0;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = CampaignConfig{};
  cfg.threads = 0;
  EXPECT_THROW(cfg.validate(), InputError);
}

TEST(CampaignTest, EveryCheckPassesOnSmallRuns) {
  for (const std::string& name : check_names()) {
    const CheckReport r = run_check(name, small_config());
    EXPECT_TRUE(r.passed()) << name << " violations=" << r.violation_count;
    EXPECT_EQ(r.check_name, name);
    EXPECT_GT(r.trials_run, 0u);
  }
  EXPECT_THROW(run_check("nope", small_config()), InputError);
}

TEST(CampaignTest, ReportsAreDeterministicAndThreadIndependent) {
  for (const std::string& name : check_names()) {
    CampaignConfig one = small_config(60);
    CampaignConfig four = one;
    four.threads = 4;
    const std::string a = dump_document(report_to_json(run_check(name, one)));
    const std::string b = dump_document(report_to_json(run_check(name, one)));
    const std::string c = dump_document(report_to_json(run_check(name, four)));
    EXPECT_EQ(a, b) << name;
    EXPECT_EQ(a, c) << name;
  }
}

TEST(CampaignTest, SeedChangesTheDraws) {
  CampaignConfig a = small_config(40);
  CampaignConfig b = a;
  b.seed = 7;
  EXPECT_NE(run_check("theorem2", a).max_ratio.value, run_check("theorem2", b).max_ratio.value);
}

TEST(CampaignTest, MaxRatioWitnessReplays) {
  for (const std::string& name : check_names()) {
    const CheckReport r = run_check(name, small_config());
    if (!r.max_ratio.witness) continue;
    const Witness& w = *r.max_ratio.witness;
    const Sides direct = replay_witness(name, w);
    EXPECT_NEAR(direct.lhs, w.lhs, 1e-12) << name;
    EXPECT_NEAR(direct.rhs, w.rhs, 1e-12) << name;
    // Through the serialized form too.
    const Witness back = witness_from_json(Json::parse(dump_document(witness_to_json(w))));
    const Sides again = replay_witness(name, back);
    EXPECT_NEAR(again.lhs, w.lhs, 1e-12) << name;
    EXPECT_NEAR(again.rhs, w.rhs, 1e-12) << name;
  }
}

TEST(CampaignTest, TightnessFamilyHitsTwo) {
  const CheckReport r = tightness_search(small_config(10));
  EXPECT_NEAR(r.stats.at("family_min_ratio"), 2.0, 1e-12);
  EXPECT_LE(r.stats.at("search_max_ratio"), 2.0 + 1e-9);
  EXPECT_NEAR(r.max_ratio.value, 2.0, 1e-12);
}

TEST(CampaignTest, StabilityTracesStayUnderBound) {
  CampaignConfig cfg = small_config(20);
  const CheckReport r = check_lemma1_stability(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.trials_run, 20u);
  EXPECT_EQ(r.stats.at("trace_tail_above_bound"), 0.0);
}

TEST(CampaignTest, DisjointBallFilterRetainsSomePairs) {
  const CheckReport r = check_lemma2(small_config(400));
  EXPECT_GT(r.stats.at("retained"), 0.0);
  EXPECT_LT(r.stats.at("retained"), 400.0);
  EXPECT_NEAR(r.stats.at("retention_rate"), r.stats.at("retained") / 400.0, 1e-15);
  for (const TrialRow& row : r.rows) EXPECT_LE(row.lhs, 2.0 * row.alpha + 1e-9);
}

}  // namespace
}  // namespace chebstab
