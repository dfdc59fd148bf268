#include "chebstab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "chebstab/chebyshev.hpp"
#include "chebstab/cloud_io.hpp"
#include "chebstab/metrics.hpp"
#include "chebstab/serialize.hpp"
#include "chebstab/verify.hpp"

namespace chebstab {

namespace {

struct Range {
  std::size_t lo;
  std::size_t hi;
};

std::size_t parse_count(std::string_view text, std::string_view flag) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError(std::string(flag) + ": '" + std::string(text) + "' is not a count");
  }
  return v;
}

// "a:b" or a single "a".
Range parse_range(const std::string& text, std::string_view flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const std::size_t v = parse_count(text, flag);
    return {v, v};
  }
  return {parse_count(std::string_view(text).substr(0, colon), flag),
          parse_count(std::string_view(text).substr(colon + 1), flag)};
}

struct CampaignFlags {
  std::uint64_t seed = kDefaultCampaignSeed;
  std::size_t trials = 1000;
  std::string dims = "2:8";
  std::string points = "1:32";
  double coord = 10.0;
  double eps = 1.0;
  std::size_t steps = 64;
  unsigned threads = 1;
  double margin = 0.0;
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Campaign seed")->capture_default_str();
    cmd->add_option("--trials", trials, "Number of randomized trials")->capture_default_str();
    cmd->add_option("--dim", dims, "Dimension range min:max")->capture_default_str();
    cmd->add_option("--points", points, "Points-per-cloud range min:max")->capture_default_str();
    cmd->add_option("--coord", coord, "Coordinates drawn from [-coord, coord]")->capture_default_str();
    cmd->add_option("--eps", eps, "Largest perturbation size")->capture_default_str();
    cmd->add_option("--steps", steps, "Sequence length for lemma1 traces")->capture_default_str();
    cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    cmd->add_option("--margin", margin, "Extra margin each inequality must clear")->capture_default_str();
    cmd->add_option("--out", out_path, "Output path");
  }

  CampaignConfig config(bool allow_zero_trials) const {
    CampaignConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    const Range d = parse_range(dims, "--dim");
    const Range p = parse_range(points, "--points");
    cfg.dim_min = d.lo;
    cfg.dim_max = d.hi;
    cfg.points_min = p.lo;
    cfg.points_max = p.hi;
    cfg.coord = coord;
    cfg.eps_max = eps;
    cfg.lemma1_steps = steps;
    cfg.threads = threads;
    cfg.margin = margin;
    cfg.validate(allow_zero_trials);
    return cfg;
  }
};

std::vector<std::string> requested_checks(const std::string& name) {
  if (name == "all") return check_names();
  if (!is_check_name(name)) {
    std::string known;
    for (const std::string& n : check_names()) known += n + ", ";
    throw InputError("unknown check '" + name + "' (expected one of " + known + "all)");
  }
  return {name};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
  if (!f) throw InputError("failed writing '" + path + "'");
}

std::string summary_line(const CheckReport& r) {
  return r.check_name + ": " + (r.passed() ? "PASS" : "FAIL") +
         " trials=" + std::to_string(r.trials_run) +
         " violations=" + std::to_string(r.violation_count) +
         " max_ratio=" + format_number(r.max_ratio.value);
}

Json center_document(const PointCloud& cloud, Norm norm, std::uint64_t seed) {
  if (norm == Norm::linf) {
    const ChebResultBox box = cheb_linf(cloud);
    Json intervals = Json::array();
    for (const Interval& iv : box.center_set.intervals()) intervals.push_back({iv.lo, iv.hi});
    return {{"norm", "linf"}, {"radius", box.radius}, {"center_set", std::move(intervals)}};
  }
  const ChebResultBall ball = cheb_l2(cloud, seed);
  Json center = Json::array();
  for (double c : ball.center.coords()) center.push_back(c);
  return {{"norm", "l2"},
          {"radius", ball.radius},
          {"center", std::move(center)},
          {"support", ball.support}};
}

std::string center_rows(const Json& doc) {
  std::string out = format_number(doc.at("radius").get<double>()) + '\n';
  if (doc.contains("center_set")) {
    for (const Json& iv : doc.at("center_set")) {
      out += format_number(iv[0].get<double>()) + ',' + format_number(iv[1].get<double>()) + '\n';
    }
  } else {
    const Json& c = doc.at("center");
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j > 0) out += ',';
      out += format_number(c[j].get<double>());
    }
    out += '\n';
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev centres, Hausdorff and bottleneck metrics, and stability campaigns"};
  app.name("chebstab");
  app.require_subcommand(1);

  std::string norm_name = "linf";
  std::string format_name = "doc";
  std::uint64_t ball_seed = kDefaultBallSeed;
  const auto add_norm = [&](CLI::App* cmd) {
    cmd->add_option("--norm", norm_name, "linf or l2")->capture_default_str();
  };

  std::string cloud_path;
  auto* center = app.add_subcommand("center", "Chebyshev radius and centre set of a cloud");
  center->add_option("cloud", cloud_path, "Cloud file")->required();
  add_norm(center);
  center->add_option("--seed", ball_seed, "Point-order seed for the l2 ball")->capture_default_str();
  center->add_option("--format", format_name, "doc or rows")->capture_default_str();

  auto* radius = app.add_subcommand("radius", "Chebyshev radius of a cloud");
  radius->add_option("cloud", cloud_path, "Cloud file")->required();
  add_norm(radius);
  radius->add_option("--seed", ball_seed, "Point-order seed for the l2 ball")->capture_default_str();

  std::string path_a;
  std::string path_b;
  std::string variant = "alpha";
  auto* haus = app.add_subcommand("hausdorff", "Hausdorff (alpha) or bottleneck (alphahat) distance");
  haus->add_option("a", path_a, "First cloud file")->required();
  haus->add_option("b", path_b, "Second cloud file")->required();
  add_norm(haus);
  haus->add_option("--variant", variant, "alpha or alphahat")->capture_default_str();

  auto* nnet = app.add_subcommand("nnet-dist", "Bottleneck distance between equal-size clouds");
  nnet->add_option("a", path_a, "First cloud file")->required();
  nnet->add_option("b", path_b, "Second cloud file")->required();
  add_norm(nnet);

  std::string check_name;
  CampaignFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Run verification campaigns and write a report");
  verify->add_option("check", check_name, "Check name or 'all'")->required();
  verify_flags.attach(verify);

  CampaignFlags plot_flags;
  std::string plot_format = "rows";
  auto* plot = app.add_subcommand("plot-data", "Emit per-trial rows of a campaign");
  plot->add_option("check", check_name, "Check name or 'all'")->required();
  plot_flags.attach(plot);
  plot->add_option("--format", plot_format, "rows or doc")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*center) {
      const Norm norm = parse_norm(norm_name);
      const CloudFormat format = parse_cloud_format(format_name);
      const Json doc = center_document(read_cloud_file(cloud_path), norm, ball_seed);
      out << (format == CloudFormat::doc ? dump_document(doc) : center_rows(doc));
      return kExitOk;
    }
    if (*radius) {
      const Norm norm = parse_norm(norm_name);
      const PointCloud cloud = read_cloud_file(cloud_path);
      const double r = norm == Norm::linf ? cheb_radius_linf(cloud) : cheb_l2(cloud, ball_seed).radius;
      out << format_number(r) << '\n';
      return kExitOk;
    }
    if (*haus || *nnet) {
      const Norm norm = parse_norm(norm_name);
      if (*haus && variant != "alpha" && variant != "alphahat") {
        throw InputError("unknown variant '" + variant + "' (expected alpha or alphahat)");
      }
      const PointCloud a = read_cloud_file(path_a);
      const PointCloud b = read_cloud_file(path_b);
      require_same_dim(a.dim(), b.dim(), "clouds");
      const bool bottleneck = *nnet || variant == "alphahat";
      out << format_number(bottleneck ? nnet_dist(a, b, norm) : hausdorff(a, b, norm)) << '\n';
      return kExitOk;
    }
    if (*verify) {
      const std::vector<std::string> names = requested_checks(check_name);
      const CampaignConfig cfg = verify_flags.config(false);
      bool all_passed = true;
      Json docs = Json::array();
      for (const std::string& name : names) {
        const CheckReport report = run_check(name, cfg);
        all_passed = all_passed && report.passed();
        out << summary_line(report) << '\n';
        docs.push_back(report_to_json(report));
      }
      if (!verify_flags.out_path.empty()) {
        write_file(verify_flags.out_path, dump_document(names.size() == 1 ? docs[0] : docs));
      }
      return all_passed ? kExitOk : kExitViolations;
    }
    if (*plot) {
      const std::vector<std::string> names = requested_checks(check_name);
      const CampaignConfig cfg = plot_flags.config(true);
      const CloudFormat format = parse_cloud_format(plot_format);
      std::string text;
      if (format == CloudFormat::rows) {
        text = kCsvHeader;
        for (const std::string& name : names) text += rows_to_csv(name, run_check(name, cfg).rows);
      } else {
        Json doc = Json::object();
        for (const std::string& name : names) doc[name] = rows_to_json(run_check(name, cfg).rows);
        text = dump_document(doc);
      }
      if (plot_flags.out_path.empty()) {
        out << text;
      } else {
        write_file(plot_flags.out_path, text);
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace chebstab
