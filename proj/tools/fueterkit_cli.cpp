// fueterkit command-line tool.

#include <CLI11.hpp>

#include <Eigen/Eigenvalues>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "fueterkit/contour.hpp"
#include "fueterkit/error.hpp"
#include "fueterkit/io.hpp"
#include "fueterkit/kernels.hpp"
#include "fueterkit/operator_calculus.hpp"
#include "fueterkit/verify.hpp"

namespace fk = fueterkit;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct ContourFlags {
  std::optional<double> radius;
  double center = 0.0;
  std::optional<double> annulus_inner;
  std::string J = "1,0,0";
  std::optional<int> nodes;
};

void add_contour_flags(CLI::App* cmd, ContourFlags& c) {
  cmd->add_option("--radius", c.radius, "outer contour radius (default: encloses the spectrum)");
  cmd->add_option("--center", c.center, "contour centre on the real axis");
  cmd->add_option("--annulus", c.annulus_inner, "inner radius; makes the domain an annulus");
  cmd->add_option("--J", c.J, "imaginary unit of the slice, \"x,y,z\"");
  cmd->add_option("--nodes", c.nodes, "trapezoid nodes per circle");
}

int default_nodes() {
  if (const char* env = std::getenv("FUETERKIT_NODES")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 3 || n > 1'000'000) {
      throw fk::Error(fk::ErrorCode::InvalidArgument, "FUETERKIT_NODES must be an integer >= 3");
    }
    return static_cast<int>(n);
  }
  return fk::kDefaultNodes;
}

fk::SliceContour build_contour(const ContourFlags& c, const fk::CommutingOperator* T) {
  const fk::ImaginaryUnit J = fk::io::parse_imaginary_unit(c.J);
  const int nodes = c.nodes ? *c.nodes : default_nodes();
  if (!c.radius) {
    if (c.annulus_inner) throw fk::Error(fk::ErrorCode::InvalidArgument, "--annulus needs --radius");
    if (!T) throw fk::Error(fk::ErrorCode::InvalidArgument, "--radius is required");
    return fk::default_calculus_contour(*T, J, nodes);
  }
  if (c.annulus_inner) return fk::SliceContour::annulus(c.center, *c.annulus_inner, *c.radius, J, nodes);
  return fk::SliceContour::disk(c.center, *c.radius, J, nodes);
}

fk::CommutingOperator load_operator(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return fk::io::parse_operator_json(arg);
  return fk::io::read_operator_file(arg);
}

bool components_have_real_spectrum(const fk::CommutingOperator& T) {
  for (int i = 0; i < 4; ++i) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(T.component(i), false);
    const double scale = 1.0 + T.component(i).norm();
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      if (std::abs(es.eigenvalues()(k).imag()) > 1e-8 * scale) return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice hyperholomorphic kernels and the polyanalytic functional calculus"};
  app.require_subcommand(1);

  std::string op_arg;
  auto* spectrum = app.add_subcommand("spectrum", "S-spectrum of an operator as CSV");
  spectrum->add_option("--op", op_arg, "operator JSON file or inline JSON")->required();

  std::string kind_arg;
  std::string s_arg;
  std::string q_arg;
  auto* kernel = app.add_subcommand("kernel", "evaluate a kernel at (s, q)");
  kernel->add_option("--kind", kind_arg, "SL, SR, FL, FR, P2L or P2R")->required();
  kernel->add_option("--s", s_arg, "quaternion s")->required();
  kernel->add_option("--q", q_arg, "quaternion q")->required();

  std::string which_arg;
  std::string f_arg;
  std::string coeffs_arg;
  std::string chirality_arg = "left";
  double series_radius = std::numeric_limits<double>::infinity();
  ContourFlags contour_flags;
  auto* calc = app.add_subcommand("calc", "apply the S-, F- or P2-functional calculus");
  calc->add_option("--which", which_arg, "S, F or P2")->required();
  auto* f_opt = calc->add_option("--f", f_arg, "one, powN, exp, poly:c0,c1,.. or rational:n0,../d0,..");
  auto* c_opt = calc->add_option("--coeffs", coeffs_arg, "JSON list of series coefficients");
  f_opt->excludes(c_opt);
  calc->add_option("--chirality", chirality_arg, "left or right");
  calc->add_option("--series-radius", series_radius, "radius of convergence of --coeffs");
  calc->add_option("--op", op_arg, "operator JSON file or inline JSON")->required();
  add_contour_flags(calc, contour_flags);

  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "all, symbolic, kernel, series, contour, operator or pde");
  verify->add_option("--seed", seed, "seed for the random property checks");

  double tol = 1e-12;
  std::string side_arg = "left";
  std::string series_arg = "dbar";
  auto* compare = app.add_subcommand("series-compare", "closed form versus truncated series");
  compare->add_option("--s", s_arg, "quaternion s")->required();
  auto* q_cmp = compare->add_option("--q", q_arg, "quaternion q");
  auto* op_cmp = compare->add_option("--op", op_arg, "operator JSON file or inline JSON");
  q_cmp->excludes(op_cmp);
  compare->add_option("--tol", tol, "truncation tolerance");
  compare->add_option("--side", side_arg, "left or right");
  compare->add_option("--series", series_arg, "dbar, appell, cauchy or fresolvent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (spectrum->parsed()) {
      std::cout << fk::io::spectrum_csv(fk::s_spectrum(load_operator(op_arg)));
      return 0;
    }

    if (kernel->parsed()) {
      const fk::KernelKind kind = fk::parse_kernel_kind(kind_arg);
      const fk::Quaternion s = fk::io::parse_quaternion(s_arg);
      const fk::Quaternion q = fk::io::parse_quaternion(q_arg);
      std::cout << fk::io::quaternion_json(fk::kernel_eval(kind, s, q)) << '\n';
      return 0;
    }

    if (calc->parsed()) {
      const fk::Calculus which = fk::parse_calculus(which_arg);
      const fk::Side side = fk::io::parse_side(chirality_arg);
      if (f_arg.empty() && coeffs_arg.empty()) {
        throw fk::Error(fk::ErrorCode::InvalidArgument, "calc needs --f or --coeffs");
      }
      const fk::SliceFunction f = coeffs_arg.empty()
                                      ? fk::io::parse_function(f_arg).with_chirality(side)
                                      : fk::io::parse_series_json(coeffs_arg, side, series_radius);
      const fk::CommutingOperator T = load_operator(op_arg);
      if (which == fk::Calculus::F && !components_have_real_spectrum(T)) {
        std::cerr << "warning: operator components do not all have real spectrum\n";
      }
      const fk::SliceContour contour = build_contour(contour_flags, &T);
      std::cout << fk::io::matrix_json(fk::calculus_apply(which, f, T, contour)) << '\n';
      return 0;
    }

    if (verify->parsed()) {
      const fk::VerifyReport report = fk::run_verify(suite, seed);
      std::cout << fk::report_json(report) << '\n';
      return report.pass() ? 0 : kExitNumerical;
    }

    if (compare->parsed()) {
      const fk::Quaternion s = fk::io::parse_quaternion(s_arg);
      const fk::Side side = fk::io::parse_side(side_arg);
      const bool left = side == fk::Side::Left;
      if (q_arg.empty() == op_arg.empty()) {
        throw fk::Error(fk::ErrorCode::InvalidArgument, "series-compare needs exactly one of --q or --op");
      }
      if (!op_arg.empty()) {
        const fk::CommutingOperator T = load_operator(op_arg);
        fk::OperatorSeriesValue sv;
        fk::QuaternionMatrix exact;
        if (series_arg == "dbar" || series_arg == "appell") {
          sv = series_arg == "dbar" ? fk::series_oracle(fk::OperatorSeries::DbarKernel, side, s, T, tol)
                                    : fk::appell_operator_series(side, s, T, tol);
          exact = fk::resolvent_eval(left ? fk::KernelKind::P2L : fk::KernelKind::P2R, s, T);
        } else if (series_arg == "fresolvent") {
          sv = fk::series_oracle(fk::OperatorSeries::FResolvent, side, s, T, tol);
          exact = fk::resolvent_eval(left ? fk::KernelKind::FL : fk::KernelKind::FR, s, T);
        } else {
          throw fk::Error(fk::ErrorCode::InvalidArgument, "operator series must be dbar, appell or fresolvent");
        }
        std::cout << "{\"closed_form\":" << fk::io::matrix_json(exact, 0.0)
                  << ",\"series\":" << fk::io::matrix_json(sv.value, 0.0) << ",\"terms\":" << sv.terms
                  << ",\"tail_bound\":" << fk::io::format_number(sv.tail_bound)
                  << ",\"deviation\":" << fk::io::format_number((sv.value - exact).norm()) << "}\n";
        return 0;
      }
      const fk::Quaternion q = fk::io::parse_quaternion(q_arg);
      fk::SeriesValue sv;
      fk::Quaternion exact;
      if (series_arg == "dbar") {
        sv = fk::dbar_kernel_series(side, s, q, tol);
        exact = fk::kernel_eval(left ? fk::KernelKind::P2L : fk::KernelKind::P2R, s, q);
      } else if (series_arg == "appell") {
        sv = fk::appell_kernel_series(side, s, q, tol);
        exact = fk::kernel_eval(left ? fk::KernelKind::P2L : fk::KernelKind::P2R, s, q);
      } else if (series_arg == "cauchy") {
        sv = fk::cauchy_kernel_series(side, s, q, tol);
        exact = fk::kernel_eval(left ? fk::KernelKind::SL : fk::KernelKind::SR, s, q);
      } else {
        throw fk::Error(fk::ErrorCode::InvalidArgument, "scalar series must be dbar, appell or cauchy");
      }
      std::cout << "{\"closed_form\":" << fk::io::quaternion_json(exact)
                << ",\"series\":" << fk::io::quaternion_json(sv.value) << ",\"terms\":" << sv.terms
                << ",\"tail_bound\":" << fk::io::format_number(sv.tail_bound)
                << ",\"deviation\":" << fk::io::format_number((sv.value - exact).norm()) << "}\n";
      return 0;
    }
  } catch (const fk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fk::is_validation_error(e.code()) ? kExitValidation : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitValidation;
}
