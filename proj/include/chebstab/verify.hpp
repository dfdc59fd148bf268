#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebstab/geometry.hpp"
#include "chebstab/rng.hpp"

namespace chebstab {

inline constexpr std::uint64_t kDefaultCampaignSeed = 42;

// Absolute slack for inequality certifications.
inline constexpr double kInequalityTol = 1e-9;
// Slack for the closed-form identities (alpha <= alpha-hat, the tightness
// family).
inline constexpr double kIdentityTol = 1e-12;

struct CampaignConfig {
  std::uint64_t seed = kDefaultCampaignSeed;
  std::size_t trials = 1000;
  std::size_t dim_min = 2;
  std::size_t dim_max = 8;
  std::size_t points_min = 1;
  std::size_t points_max = 32;
  double coord = 10.0;      // coordinates drawn from [-coord, coord]
  double eps_max = 1.0;     // perturbation sizes drawn from (0, eps_max]
  std::size_t lemma1_steps = 64;
  unsigned threads = 1;
  // Extra margin demanded on top of each check: an instance also counts as
  // a violation when lhs > rhs - margin. Never loosens a check.
  double margin = 0.0;

  // Throws InputError on empty ranges. Zero trials are accepted only when
  // allow_zero_trials is set.
  void validate(bool allow_zero_trials = false) const;
};

// One evaluated instance of a check: the inequality lhs <= rhs for the pair
// (m, w). `label` and `param` carry whatever the check needs to replay it
// (norm, which side of a sandwich, the perturbation size, ...).
struct Witness {
  std::size_t trial = 0;
  std::string label;
  double param = 0.0;
  PointCloud m;
  PointCloud w;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double slack = 0.0;  // rhs - lhs
};

// Plot row: the set distance, the left-hand quantity, and their ratio.
struct TrialRow {
  std::size_t trial;
  double alpha;
  double lhs;
  double ratio;
};

struct MaxRatio {
  double value = 0.0;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::string check_name;
  std::uint64_t seed = 0;
  std::size_t trials_run = 0;
  std::size_t violation_count = 0;
  std::vector<Witness> violations;  // first kMaxStoredViolations, by trial
  MaxRatio max_ratio;
  std::map<std::string, double> stats;
  std::vector<TrialRow> rows;

  bool passed() const { return violation_count == 0; }
};

inline constexpr std::size_t kMaxStoredViolations = 64;

// Left/right sides of one check instance.
struct Sides {
  double lhs;
  double rhs;
  double alpha;  // the set distance the ratio is taken against
  double ratio;  // lhs / alpha, defined as 0 when alpha == 0
  double tol;
};

PointCloud gen_cloud(Rng& rng, std::size_t dim, std::size_t n, double lo, double hi);

// Moves every point by at most eps in the given norm.
PointCloud gen_perturbation(const PointCloud& cloud, double eps, Rng& rng, Norm norm);

// The analytic pair M = {(0,0),(0,2)}, W = {(d,-d),(d,2+d)}.
std::pair<PointCloud, PointCloud> tightness_pair(double delta);

CheckReport check_theorem2(const CampaignConfig& cfg);
CheckReport check_corollary(const CampaignConfig& cfg);
CheckReport check_alpha_le_alphahat(const CampaignConfig& cfg);
CheckReport check_radius_lipschitz(const CampaignConfig& cfg);
CheckReport check_lemma0(const CampaignConfig& cfg);
CheckReport check_lemma1_stability(const CampaignConfig& cfg);
CheckReport check_lemma2(const CampaignConfig& cfg);
CheckReport tightness_search(const CampaignConfig& cfg);

// CLI-facing names: theorem2, corollary, alpha-le-alphahat,
// radius-lipschitz, lemma0, lemma1, lemma2, tightness.
const std::vector<std::string>& check_names();
bool is_check_name(std::string_view name);
CheckReport run_check(std::string_view name, const CampaignConfig& cfg);

// Recomputes both sides of a recorded witness through the library
// operations.
Sides evaluate_check(std::string_view name, const PointCloud& m, const PointCloud& w,
                     std::string_view label, double param);
Sides replay_witness(std::string_view name, const Witness& witness);

}  // namespace chebstab
