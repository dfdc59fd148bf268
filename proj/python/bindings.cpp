#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chebstab/chebyshev.hpp"
#include "chebstab/cli.hpp"
#include "chebstab/geometry.hpp"
#include "chebstab/metrics.hpp"
#include "chebstab/serialize.hpp"
#include "chebstab/verify.hpp"

namespace py = pybind11;
using namespace chebstab;

namespace {

using Rows = std::vector<std::vector<double>>;

Vector to_vector(const std::vector<double>& coords) { return Vector(coords); }

PointCloud to_cloud(const Rows& rows) {
  std::vector<Vector> pts;
  pts.reserve(rows.size());
  for (const auto& r : rows) pts.emplace_back(r);
  return PointCloud(std::move(pts));
}

std::vector<double> from_vector(const Vector& v) {
  return {v.coords().begin(), v.coords().end()};
}

std::vector<std::pair<double, double>> from_box(const AxisBox& box) {
  std::vector<std::pair<double, double>> out;
  for (const Interval& iv : box.intervals()) out.emplace_back(iv.lo, iv.hi);
  return out;
}

AxisBox to_box(const std::vector<std::pair<double, double>>& intervals) {
  std::vector<Interval> ivs;
  for (const auto& [lo, hi] : intervals) ivs.push_back({lo, hi});
  return AxisBox(std::move(ivs));
}

}  // namespace

PYBIND11_MODULE(_chebstab, m) {
  m.doc() = "Chebyshev centres, Hausdorff and bottleneck metrics, stability campaigns";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::enum_<Norm>(m, "Norm").value("linf", Norm::linf).value("l2", Norm::l2);

  m.def("dist", [](const std::vector<double>& x, const std::vector<double>& y, Norm n) {
    return dist(to_vector(x), to_vector(y), n);
  }, py::arg("x"), py::arg("y"), py::arg("norm") = Norm::linf);
  m.def("point_to_set_dist", [](const std::vector<double>& x, const Rows& z, Norm n) {
    return point_to_set_dist(to_vector(x), to_cloud(z), n);
  }, py::arg("x"), py::arg("cloud"), py::arg("norm") = Norm::linf);
  m.def("farthest_dist", [](const Rows& cloud, const std::vector<double>& x, Norm n) {
    return farthest_dist(to_cloud(cloud), to_vector(x), n);
  }, py::arg("cloud"), py::arg("x"), py::arg("norm") = Norm::linf);
  m.def("diameter", [](const Rows& cloud, Norm n) { return diameter(to_cloud(cloud), n); },
        py::arg("cloud"), py::arg("norm") = Norm::linf);
  m.def("midpoint", [](const std::vector<double>& x, const std::vector<double>& y) {
    return from_vector(midpoint(to_vector(x), to_vector(y)));
  });
  m.def("box_dist_linf", [](const std::vector<double>& x,
                            const std::vector<std::pair<double, double>>& box) {
    return box_dist_linf(to_vector(x), to_box(box));
  });

  m.def("directed_hausdorff", [](const Rows& a, const Rows& b, Norm n) {
    return directed_hausdorff(to_cloud(a), to_cloud(b), n);
  }, py::arg("a"), py::arg("b"), py::arg("norm") = Norm::linf);
  m.def("hausdorff", [](const Rows& a, const Rows& b, Norm n) {
    return hausdorff(to_cloud(a), to_cloud(b), n);
  }, py::arg("a"), py::arg("b"), py::arg("norm") = Norm::linf);
  m.def("hausdorff_via_correspondence", [](const Rows& a, const Rows& b, Norm n) {
    return hausdorff_via_correspondence(to_cloud(a), to_cloud(b), n);
  }, py::arg("a"), py::arg("b"), py::arg("norm") = Norm::linf);
  m.def("nnet_dist", [](const Rows& a, const Rows& b, Norm n) {
    return nnet_dist(to_cloud(a), to_cloud(b), n);
  }, py::arg("a"), py::arg("b"), py::arg("norm") = Norm::linf);
  m.def("nnet_dist_bruteforce", [](const Rows& a, const Rows& b, Norm n) {
    return nnet_dist_bruteforce(to_cloud(a), to_cloud(b), n);
  }, py::arg("a"), py::arg("b"), py::arg("norm") = Norm::linf);
  m.def("box_hausdorff_linf", [](const std::vector<std::pair<double, double>>& a,
                                 const std::vector<std::pair<double, double>>& b) {
    return box_hausdorff_linf(to_box(a), to_box(b));
  });

  m.def("cheb_linf", [](const Rows& cloud) {
    const ChebResultBox r = cheb_linf(to_cloud(cloud));
    return py::make_tuple(r.radius, from_box(r.center_set));
  }, "Returns (radius, [(lo, hi), ...]).");
  m.def("cheb_radius_linf", [](const Rows& cloud) { return cheb_radius_linf(to_cloud(cloud)); });
  m.def("cheb_l2", [](const Rows& cloud, std::uint64_t seed) {
    const ChebResultBall r = cheb_l2(to_cloud(cloud), seed);
    return py::make_tuple(r.radius, from_vector(r.center), r.support);
  }, py::arg("cloud"), py::arg("seed") = kDefaultBallSeed,
     "Returns (radius, center, support indices).");
  m.def("cheb_numeric_oracle", [](const Rows& cloud, Norm n) {
    const OracleResult r = cheb_numeric_oracle(to_cloud(cloud), n);
    return py::make_tuple(r.objective, from_vector(r.argmin));
  }, py::arg("cloud"), py::arg("norm") = Norm::linf);
  m.def("enclosing_balls_disjoint", [](const Rows& a, const Rows& b) {
    return enclosing_balls_disjoint(to_cloud(a), to_cloud(b));
  });

  py::class_<CampaignConfig>(m, "CampaignConfig")
      .def(py::init<>())
      .def_readwrite("seed", &CampaignConfig::seed)
      .def_readwrite("trials", &CampaignConfig::trials)
      .def_readwrite("dim_min", &CampaignConfig::dim_min)
      .def_readwrite("dim_max", &CampaignConfig::dim_max)
      .def_readwrite("points_min", &CampaignConfig::points_min)
      .def_readwrite("points_max", &CampaignConfig::points_max)
      .def_readwrite("coord", &CampaignConfig::coord)
      .def_readwrite("eps_max", &CampaignConfig::eps_max)
      .def_readwrite("lemma1_steps", &CampaignConfig::lemma1_steps)
      .def_readwrite("threads", &CampaignConfig::threads)
      .def_readwrite("margin", &CampaignConfig::margin);

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("check_name", &CheckReport::check_name)
      .def_readonly("seed", &CheckReport::seed)
      .def_readonly("trials_run", &CheckReport::trials_run)
      .def_readonly("violation_count", &CheckReport::violation_count)
      .def_readonly("stats", &CheckReport::stats)
      .def_property_readonly("passed", &CheckReport::passed)
      .def_property_readonly("max_ratio", [](const CheckReport& r) { return r.max_ratio.value; })
      .def("to_json", [](const CheckReport& r) { return dump_document(report_to_json(r)); });

  m.def("check_names", &check_names);
  m.def("run_check", [](const std::string& name, const CampaignConfig& cfg) {
    cfg.validate(true);
    py::gil_scoped_release release;
    return run_check(name, cfg);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
