#include "fueterkit/numdiff.hpp"

#include <algorithm>
#include <array>

#include "fueterkit/error.hpp"

namespace fueterkit {

namespace {

constexpr std::array<Quaternion, 4> kUnits = {Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0),
                                              Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)};

// d_0 f +- sum e_i d_i f with e_i on the requested side; sign = +1 for D, -1 for Dbar.
Quaternion first_order(const QFunction& f, const Quaternion& q, double h, double sign, Side side) {
  Quaternion acc = fd_partial(f, q, 0, h);
  for (int i = 1; i < 4; ++i) {
    const Quaternion d = fd_partial(f, q, i, h);
    acc += sign * (side == Side::Left ? kUnits[i] * d : d * kUnits[i]);
  }
  return acc;
}

}  // namespace

FDConfig FDConfig::at(const Quaternion& q) {
  const double scale = 1.0 + q.norm();
  return {1e-5 * scale, 1e-3 * scale};
}

Quaternion fd_partial(const QFunction& f, const Quaternion& q, int axis, double h) {
  const Quaternion step = h * kUnits.at(axis);
  return (f(q + step) - f(q - step)) / (2.0 * h);
}

Quaternion fd_apply(FDOperator op, const QFunction& f, const Quaternion& q, const FDConfig& cfg,
                    Side side) {
  switch (op) {
    case FDOperator::D:
      return first_order(f, q, cfg.h1, 1.0, side);
    case FDOperator::Dbar:
      return first_order(f, q, cfg.h1, -1.0, side);
    case FDOperator::Delta: {
      const Quaternion centre = f(q);
      Quaternion acc;
      for (const Quaternion& e : kUnits) {
        acc += f(q + cfg.h2 * e) - 2.0 * centre + f(q - cfg.h2 * e);
      }
      return acc / (cfg.h2 * cfg.h2);
    }
    case FDOperator::D2: {
      const double h = cfg.h2;
      const QFunction inner = [&](const Quaternion& p) { return first_order(f, p, h, 1.0, side); };
      return first_order(inner, q, h, 1.0, side);
    }
  }
  return {};
}

Quaternion fd_apply(FDOperator op, const QFunction& f, const Quaternion& q, Side side) {
  return fd_apply(op, f, q, FDConfig::at(q), side);
}

std::pair<AxialFunction, AxialFunction> axial_parts(const QFunction& f, const ImaginaryUnit& w) {
  const Quaternion omega = w.value();
  AxialFunction a = [f, omega](double q0, double r) {
    return 0.5 * (f(Quaternion(q0) + r * omega) + f(Quaternion(q0) - r * omega));
  };
  AxialFunction b = [f, omega](double q0, double r) {
    return -0.5 * (omega * (f(Quaternion(q0) + r * omega) - f(Quaternion(q0) - r * omega)));
  };
  return {std::move(a), std::move(b)};
}

std::pair<Quaternion, Quaternion> vekua2_residual(const AxialFunction& A, const AxialFunction& B,
                                                  double q0, double r, const FDConfig& cfg) {
  if (!(r > 0.0)) throw Error(ErrorCode::NonPositiveRadius, "Vekua residual needs r > 0");
  const double h1 = cfg.h1;
  const double h2 = std::min(cfg.h2, 0.5 * r);

  auto d0 = [&](const AxialFunction& g) { return (g(q0 + h1, r) - g(q0 - h1, r)) / (2 * h1); };
  auto dr = [&](const AxialFunction& g) { return (g(q0, r + h1) - g(q0, r - h1)) / (2 * h1); };
  auto d00 = [&](const AxialFunction& g) {
    return (g(q0 + h2, r) - 2.0 * g(q0, r) + g(q0 - h2, r)) / (h2 * h2);
  };
  auto drr = [&](const AxialFunction& g) {
    return (g(q0, r + h2) - 2.0 * g(q0, r) + g(q0, r - h2)) / (h2 * h2);
  };
  auto d0r = [&](const AxialFunction& g) {
    return (g(q0 + h2, r + h2) - g(q0 + h2, r - h2) - g(q0 - h2, r + h2) + g(q0 - h2, r - h2)) /
           (4 * h2 * h2);
  };

  const Quaternion first = d00(A) - 2.0 * d0r(B) - (4.0 / r) * d0(B) - drr(A) - (2.0 / r) * dr(A);
  const Quaternion second =
      d00(B) + 2.0 * d0r(A) - drr(B) - 2.0 * (r * dr(B) - B(q0, r)) / (r * r);
  return {first, second};
}

std::pair<Quaternion, Quaternion> vekua2_residual(const AxialFunction& A, const AxialFunction& B,
                                                  double q0, double r) {
  return vekua2_residual(A, B, q0, r, FDConfig::at(Quaternion(q0, r, 0, 0)));
}

std::string_view to_string(ResidualKind kind) {
  switch (kind) {
    case ResidualKind::Monogenic: return "monogenic";
    case ResidualKind::Polyanalytic2: return "polyanalytic2";
    case ResidualKind::Harmonic: return "harmonic";
  }
  return "?";
}

ResidualReport residual_suite(const QFunction& f, ResidualKind kind,
                              const std::vector<Quaternion>& samples, Side side) {
  ResidualReport report;
  report.kind = kind;
  report.samples = samples.size();
  const FDOperator op = kind == ResidualKind::Monogenic       ? FDOperator::D
                        : kind == ResidualKind::Polyanalytic2 ? FDOperator::D2
                                                              : FDOperator::Delta;
  for (const Quaternion& q : samples) {
    const double scale = 1.0 + f(q).norm() + q.norm();
    const double r = fd_apply(op, f, q, side).norm() / scale;
    if (r >= report.max_residual) {
      report.max_residual = r;
      report.worst_point = q;
    }
  }
  return report;
}

}  // namespace fueterkit
