#include "chebstab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "chebstab/chebyshev.hpp"
#include "chebstab/metrics.hpp"

namespace chebstab {

void CampaignConfig::validate(bool allow_zero_trials) const {
  if (trials == 0 && !allow_zero_trials) throw InputError("trials must be >= 1");
  if (dim_min < 1 || dim_min > dim_max) throw InputError("dimension range is empty");
  if (points_min < 1 || points_min > points_max) throw InputError("point-count range is empty");
  if (!(coord >= 0.0) || !std::isfinite(coord)) throw InputError("coordinate range must be finite and >= 0");
  if (!(eps_max > 0.0) || !std::isfinite(eps_max)) throw InputError("eps must be finite and > 0");
  if (lemma1_steps < 1) throw InputError("lemma1 steps must be >= 1");
  if (threads < 1) throw InputError("threads must be >= 1");
  if (!(margin >= 0.0) || !std::isfinite(margin)) throw InputError("margin must be finite and >= 0");
}

PointCloud gen_cloud(Rng& rng, std::size_t dim, std::size_t n, double lo, double hi) {
  std::vector<Vector> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(dim);
    for (double& v : c) v = rng.uniform(lo, hi);
    pts.emplace_back(std::move(c));
  }
  return PointCloud(std::move(pts));
}

PointCloud gen_perturbation(const PointCloud& cloud, double eps, Rng& rng, Norm norm) {
  const std::size_t d = cloud.dim();
  std::vector<Vector> out;
  out.reserve(cloud.size());
  for (const Vector& p : cloud) {
    std::vector<double> step(d);
    if (norm == Norm::linf) {
      for (double& s : step) s = eps * (2.0 * rng.uniform01() - 1.0);
    } else {
      // Gaussian direction (Box-Muller), radius uniform in [0, eps).
      double len2 = 0.0;
      for (double& s : step) {
        const double u1 = 1.0 - rng.uniform01();
        const double u2 = rng.uniform01();
        s = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        len2 += s * s;
      }
      const double scale = len2 > 0.0 ? eps * rng.uniform01() / std::sqrt(len2) : 0.0;
      for (double& s : step) s *= scale;
    }
    std::vector<double> c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = p[j] + step[j];
    out.emplace_back(std::move(c));
  }
  return PointCloud(std::move(out));
}

std::pair<PointCloud, PointCloud> tightness_pair(double delta) {
  PointCloud m{Vector{0.0, 0.0}, Vector{0.0, 2.0}};
  PointCloud w{Vector{delta, -delta}, Vector{delta, 2.0 + delta}};
  return {std::move(m), std::move(w)};
}

namespace {

double ratio_of(double lhs, double alpha) { return alpha > 0.0 ? lhs / alpha : 0.0; }

Sides lipschitz_sides(double lhs, double alpha, double constant, double tol) {
  return {lhs, constant * alpha, alpha, ratio_of(lhs, alpha), tol};
}

Sides theorem2_sides(const PointCloud& m, const PointCloud& w) {
  const double centers = box_hausdorff_linf(cheb_linf(m).center_set, cheb_linf(w).center_set);
  return lipschitz_sides(centers, hausdorff(m, w, Norm::linf), 2.0, kInequalityTol);
}

Sides corollary_sides(const PointCloud& m, const PointCloud& w) {
  const double centers = box_hausdorff_linf(cheb_linf(m).center_set, cheb_linf(w).center_set);
  return lipschitz_sides(centers, nnet_dist(m, w, Norm::linf), 2.0, kInequalityTol);
}

Sides alpha_le_alphahat_sides(const PointCloud& m, const PointCloud& w) {
  return lipschitz_sides(hausdorff(m, w, Norm::linf), nnet_dist(m, w, Norm::linf), 1.0,
                         kIdentityTol);
}

Sides radius_sides(const PointCloud& m, const PointCloud& w, Norm norm) {
  const double rm = norm == Norm::linf ? cheb_radius_linf(m) : cheb_l2(m).radius;
  const double rw = norm == Norm::linf ? cheb_radius_linf(w) : cheb_l2(w).radius;
  return lipschitz_sides(std::abs(rm - rw), hausdorff(m, w, norm), 1.0, kInequalityTol);
}

Sides lemma0_sides(const PointCloud& m, const PointCloud& z, bool upper) {
  const double centers = dist(cheb_l2(m).center, cheb_l2(z).center, Norm::l2);
  const double alpha = hausdorff(m, z, Norm::l2);
  if (!upper) return lipschitz_sides(centers, alpha, 1.0, kInequalityTol);
  const double bound = centers + 0.5 * (diameter(m, Norm::l2) + diameter(z, Norm::l2));
  return {alpha, bound, bound, ratio_of(alpha, bound), kInequalityTol};
}

Sides lemma1_sides(const PointCloud& moved, const PointCloud& base, double eps) {
  const double d = directed_box_hausdorff_linf(cheb_linf(moved).center_set,
                                               cheb_linf(base).center_set);
  const double alpha = hausdorff(moved, base, Norm::linf);
  return {d, 2.0 * eps, alpha, ratio_of(d, alpha), kInequalityTol};
}

Sides lemma2_sides(const PointCloud& m, const PointCloud& w) {
  const double centers = dist(cheb_l2(m).center, cheb_l2(w).center, Norm::l2);
  return lipschitz_sides(centers, hausdorff(m, w, Norm::l2), 2.0, kInequalityTol);
}

Witness make_witness(std::size_t trial, std::string label, double param, const PointCloud& m,
                     const PointCloud& w, const Sides& s) {
  return Witness{trial, std::move(label), param, m, w, s.lhs, s.rhs, s.ratio, s.rhs - s.lhs};
}

bool violates(const Sides& s) { return s.lhs > s.rhs + s.tol; }

struct TrialOutcome {
  std::vector<Witness> evaluated;
  std::vector<bool> violated;
  std::vector<TrialRow> rows;
  std::map<std::string, double> counters;

  void add(Witness w, const Sides& s) {
    violated.push_back(violates(s));
    evaluated.push_back(std::move(w));
  }
};

void absorb(CheckReport& report, TrialOutcome& outcome, double margin) {
  for (std::size_t k = 0; k < outcome.evaluated.size(); ++k) {
    Witness& w = outcome.evaluated[k];
    if (outcome.violated[k] || (margin > 0.0 && w.lhs > w.rhs - margin)) {
      ++report.violation_count;
      if (report.violations.size() < kMaxStoredViolations) report.violations.push_back(w);
    }
    if (!report.max_ratio.witness || w.ratio > report.max_ratio.value) {
      report.max_ratio.value = w.ratio;
      report.max_ratio.witness = std::move(w);
    }
  }
  for (const TrialRow& r : outcome.rows) report.rows.push_back(r);
  for (const auto& [key, v] : outcome.counters) report.stats[key] += v;
}

// Runs trial_fn(trial, rng) for every trial, each with its own stream
// derived from (seed, trial), and reduces in trial order so the report does
// not depend on the thread count. `prelude` is absorbed ahead of the random
// trials.
template <typename TrialFn>
CheckReport run_campaign(std::string name, const CampaignConfig& cfg, TrialFn trial_fn,
                         TrialOutcome prelude = {}) {
  std::vector<TrialOutcome> outcomes(cfg.trials);
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < cfg.trials; t += stride) {
      Rng rng(mix_seed(cfg.seed, t));
      outcomes[t] = trial_fn(t, rng);
    }
  };
  const std::size_t threads = std::min<std::size_t>(cfg.threads, std::max<std::size_t>(cfg.trials, 1));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t k = 0; k < threads; ++k) {
        pool.emplace_back([&, k] {
          try {
            work(k, threads);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  CheckReport report;
  report.check_name = std::move(name);
  report.seed = cfg.seed;
  report.trials_run = cfg.trials;
  absorb(report, prelude, cfg.margin);
  for (TrialOutcome& o : outcomes) absorb(report, o, cfg.margin);
  return report;
}

std::size_t draw_dim(Rng& rng, const CampaignConfig& cfg, std::size_t floor) {
  return rng.between(std::max(cfg.dim_min, floor), std::max(cfg.dim_max, floor));
}

std::size_t draw_points(Rng& rng, const CampaignConfig& cfg) {
  return rng.between(cfg.points_min, cfg.points_max);
}

double draw_eps(Rng& rng, const CampaignConfig& cfg) {
  return cfg.eps_max * (1.0 - rng.uniform01());
}

// Even trials: independent clouds; odd trials: a perturbation of m.
// equal_size forces |w| == |m|.
std::pair<PointCloud, std::string> draw_partner(std::size_t trial, Rng& rng,
                                                const CampaignConfig& cfg, const PointCloud& m,
                                                Norm norm, bool equal_size) {
  if (trial % 2 == 0) {
    const std::size_t n = equal_size ? m.size() : draw_points(rng, cfg);
    return {gen_cloud(rng, m.dim(), n, -cfg.coord, cfg.coord), "independent"};
  }
  return {gen_perturbation(m, draw_eps(rng, cfg), rng, norm), "perturbation"};
}

TrialRow row_of(std::size_t trial, const Sides& s) { return {trial, s.alpha, s.lhs, s.ratio}; }

}  // namespace

CheckReport check_theorem2(const CampaignConfig& cfg) {
  return run_campaign("theorem2", cfg, [&](std::size_t t, Rng& rng) {
    TrialOutcome out;
    const std::size_t dim = draw_dim(rng, cfg, 2);
    PointCloud m = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord);
    auto [w, label] = draw_partner(t, rng, cfg, m, Norm::linf, false);
    const Sides s = theorem2_sides(m, w);
    out.rows.push_back(row_of(t, s));
    out.add(make_witness(t, label, 0.0, m, w, s), s);
    return out;
  });
}

CheckReport check_corollary(const CampaignConfig& cfg) {
  return run_campaign("corollary", cfg, [&](std::size_t t, Rng& rng) {
    TrialOutcome out;
    const std::size_t dim = draw_dim(rng, cfg, 2);
    PointCloud m = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord);
    auto [w, label] = draw_partner(t, rng, cfg, m, Norm::linf, true);
    const Sides s = corollary_sides(m, w);
    out.rows.push_back(row_of(t, s));
    out.add(make_witness(t, label, 0.0, m, w, s), s);
    return out;
  });
}

CheckReport check_alpha_le_alphahat(const CampaignConfig& cfg) {
  return run_campaign("alpha-le-alphahat", cfg, [&](std::size_t t, Rng& rng) {
    TrialOutcome out;
    const std::size_t dim = draw_dim(rng, cfg, 1);
    PointCloud m = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord);
    auto [w, label] = draw_partner(t, rng, cfg, m, Norm::linf, true);
    const Sides s = alpha_le_alphahat_sides(m, w);
    out.rows.push_back(row_of(t, s));
    out.add(make_witness(t, label, 0.0, m, w, s), s);
    return out;
  });
}

CheckReport check_radius_lipschitz(const CampaignConfig& cfg) {
  return run_campaign("radius-lipschitz", cfg, [&](std::size_t t, Rng& rng) {
    TrialOutcome out;
    const std::size_t dim = draw_dim(rng, cfg, 1);
    PointCloud m = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord);
    for (Norm norm : {Norm::linf, Norm::l2}) {
      auto [w, mode] = draw_partner(t, rng, cfg, m, norm, false);
      const Sides s = radius_sides(m, w, norm);
      out.rows.push_back(row_of(t, s));
      out.add(make_witness(t, std::string(to_string(norm)), 0.0, m, w, s), s);
    }
    return out;
  });
}

CheckReport check_lemma0(const CampaignConfig& cfg) {
  return run_campaign("lemma0", cfg, [&](std::size_t t, Rng& rng) {
    TrialOutcome out;
    const std::size_t dim = draw_dim(rng, cfg, 1);
    PointCloud m = gen_cloud(rng, dim, 2, -cfg.coord, cfg.coord);
    PointCloud z = t % 2 == 0 ? gen_cloud(rng, dim, 2, -cfg.coord, cfg.coord)
                              : gen_perturbation(m, draw_eps(rng, cfg), rng, Norm::l2);
    const Sides lower = lemma0_sides(m, z, false);
    const Sides upper = lemma0_sides(m, z, true);
    out.rows.push_back(row_of(t, lower));
    out.add(make_witness(t, "lower", 0.0, m, z, lower), lower);
    out.add(make_witness(t, "upper", 0.0, m, z, upper), upper);
    return out;
  });
}

CheckReport check_lemma1_stability(const CampaignConfig& cfg) {
  CheckReport report = run_campaign("lemma1", cfg, [&](std::size_t t, Rng& rng) {
    TrialOutcome out;
    const std::size_t dim = draw_dim(rng, cfg, 2);
    PointCloud base = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord);
    // One fixed direction field, scaled by 1/n: M_n = M + U / n.
    const std::uint64_t direction_seed = rng.next();
    double previous = 0.0;
    for (std::size_t n = 1; n <= cfg.lemma1_steps; ++n) {
      const double eps = 1.0 / static_cast<double>(n);
      Rng direction(direction_seed);
      PointCloud moved = gen_perturbation(base, eps, direction, Norm::linf);
      const Sides s = lemma1_sides(moved, base, eps);
      if (n > 1 && s.lhs > previous + kInequalityTol) out.counters["trace_increases"] += 1.0;
      previous = s.lhs;
      out.rows.push_back(row_of(t, s));
      out.add(make_witness(t, "n=" + std::to_string(n), eps, moved, base, s), s);
    }
    out.counters["steps"] += static_cast<double>(cfg.lemma1_steps);
    if (previous > 2.0 / static_cast<double>(cfg.lemma1_steps) + kInequalityTol) {
      out.counters["trace_tail_above_bound"] += 1.0;
    }
    return out;
  });
  for (const char* key : {"steps", "trace_increases", "trace_tail_above_bound"}) {
    report.stats.try_emplace(key, 0.0);
  }
  return report;
}

CheckReport check_lemma2(const CampaignConfig& cfg) {
  CheckReport report = run_campaign("lemma2", cfg, [&](std::size_t t, Rng& rng) {
    TrialOutcome out;
    const std::size_t dim = draw_dim(rng, cfg, 1);
    PointCloud m = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord);
    // Shift the partner by a random offset of length up to 4 * coord so a
    // useful share of pairs has disjoint enclosing balls.
    std::vector<double> offset(dim);
    double len2 = 0.0;
    for (double& o : offset) {
      o = rng.uniform(-1.0, 1.0);
      len2 += o * o;
    }
    const double len = 4.0 * cfg.coord * rng.uniform01();
    for (double& o : offset) o = len2 > 0.0 ? o * len / std::sqrt(len2) : 0.0;
    PointCloud w = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord)
                       .translated(Vector(std::move(offset)));
    out.counters["retained"] += 0.0;
    if (!enclosing_balls_disjoint(m, w)) return out;
    out.counters["retained"] += 1.0;
    const Sides s = lemma2_sides(m, w);
    out.rows.push_back(row_of(t, s));
    out.add(make_witness(t, "disjoint", 0.0, m, w, s), s);
    return out;
  });
  const double retained = report.stats["retained"];
  report.stats["retention_rate"] =
      report.trials_run > 0 ? retained / static_cast<double>(report.trials_run) : 0.0;
  return report;
}

CheckReport tightness_search(const CampaignConfig& cfg) {
  constexpr std::size_t kFamily = 3;
  constexpr double kDeltas[kFamily] = {1.0, 0.1, 0.01};
  constexpr std::size_t kClimbSteps = 48;

  // The analytic family goes first, as trials 0..2.
  TrialOutcome family;
  double family_min = 2.0;
  for (std::size_t k = 0; k < kFamily; ++k) {
    const auto [m, w] = tightness_pair(kDeltas[k]);
    const Sides s = theorem2_sides(m, w);
    family_min = std::min(family_min, s.ratio);
    family.rows.push_back(row_of(k, s));
    family.evaluated.push_back(make_witness(k, "family", kDeltas[k], m, w, s));
    family.violated.push_back(violates(s) || std::abs(s.ratio - 2.0) > kIdentityTol);
  }

  CheckReport report = run_campaign(
      "tightness", cfg,
      [&](std::size_t t, Rng& rng) {
        TrialOutcome out;
        const std::size_t trial = t + kFamily;
        const std::size_t dim = draw_dim(rng, cfg, 2);
        const PointCloud m = gen_cloud(rng, dim, draw_points(rng, cfg), -cfg.coord, cfg.coord);
        PointCloud best_w = gen_perturbation(m, draw_eps(rng, cfg), rng, Norm::linf);
        Sides best = theorem2_sides(m, best_w);
        for (std::size_t k = 0; k < kClimbSteps; ++k) {
          const double step = cfg.eps_max * std::pow(0.5, static_cast<double>(k) / 8.0);
          std::vector<Vector> pts(best_w.begin(), best_w.end());
          const std::size_t i = rng.between(0, pts.size() - 1);
          std::vector<double> c(pts[i].coords().begin(), pts[i].coords().end());
          for (double& v : c) v += step * (2.0 * rng.uniform01() - 1.0);
          pts[i] = Vector(std::move(c));
          PointCloud candidate(std::move(pts));
          const Sides s = theorem2_sides(m, candidate);
          if (s.alpha > 1e-6 && s.ratio > best.ratio) {
            best = s;
            best_w = std::move(candidate);
          }
        }
        out.rows.push_back(row_of(trial, best));
        out.add(make_witness(trial, "hill-climb", 0.0, m, best_w, best), best);
        return out;
      },
      std::move(family));
  report.stats["family_min_ratio"] = family_min;
  double search_max = 0.0;
  for (const TrialRow& r : report.rows) {
    if (r.trial >= kFamily) search_max = std::max(search_max, r.ratio);
  }
  report.stats["search_max_ratio"] = search_max;
  return report;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "theorem2", "corollary", "alpha-le-alphahat", "radius-lipschitz",
      "lemma0",   "lemma1",    "lemma2",            "tightness"};
  return names;
}

bool is_check_name(std::string_view name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckReport run_check(std::string_view name, const CampaignConfig& cfg) {
  if (name == "theorem2") return check_theorem2(cfg);
  if (name == "corollary") return check_corollary(cfg);
  if (name == "alpha-le-alphahat") return check_alpha_le_alphahat(cfg);
  if (name == "radius-lipschitz") return check_radius_lipschitz(cfg);
  if (name == "lemma0") return check_lemma0(cfg);
  if (name == "lemma1") return check_lemma1_stability(cfg);
  if (name == "lemma2") return check_lemma2(cfg);
  if (name == "tightness") return tightness_search(cfg);
  throw InputError("unknown check '" + std::string(name) + "'");
}

Sides evaluate_check(std::string_view name, const PointCloud& m, const PointCloud& w,
                     std::string_view label, double param) {
  if (name == "theorem2" || name == "tightness") return theorem2_sides(m, w);
  if (name == "corollary") return corollary_sides(m, w);
  if (name == "alpha-le-alphahat") return alpha_le_alphahat_sides(m, w);
  if (name == "radius-lipschitz") return radius_sides(m, w, parse_norm(label));
  if (name == "lemma0") {
    if (label != "lower" && label != "upper") throw InputError("lemma0 label must be lower or upper");
    return lemma0_sides(m, w, label == "upper");
  }
  if (name == "lemma1") return lemma1_sides(m, w, param);
  if (name == "lemma2") return lemma2_sides(m, w);
  throw InputError("unknown check '" + std::string(name) + "'");
}

Sides replay_witness(std::string_view name, const Witness& witness) {
  return evaluate_check(name, witness.m, witness.w, witness.label, witness.param);
}

}  // namespace chebstab
