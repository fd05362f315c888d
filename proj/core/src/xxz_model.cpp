#include "qse/xxz_model.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qse/tolerances.hpp"

namespace qse {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// The integrand decays like exp(-|t|); beyond this the contribution is
// below double precision.
constexpr double kCutoff = 50.0;

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
using cplx = std::complex<double>;

double integrate_checked(const std::function<double(double)>& f) {
  double err = 0.0;
  const double value = GK::integrate(f, -kCutoff, kCutoff, 15, 1e-15, &err);
  // The integrand magnitude grows like 1/xi toward the branch ends, so the
  // convergence check has to be relative to the result's scale.
  if (err > tol::quadrature_fail * std::max(1.0, std::abs(value)))
    throw std::runtime_error("Bethe quadrature did not converge (error estimate " +
                             std::to_string(err) + ")");
  return value;
}

void assert_imaginary_part_vanishes(const std::function<double(double)>& f_imag,
                                    double scale) {
  // The contour x = t + i/2 makes the integrand satisfy f(-t) = conj(f(t)),
  // so the imaginary part must integrate to zero (relative to the real
  // part's magnitude).
  double err = 0.0;
  const double im = GK::integrate(f_imag, -kCutoff, kCutoff, 15, 1e-12, &err);
  if (std::abs(im) > tol::quadrature_fail * std::max(1.0, std::abs(scale)))
    throw std::runtime_error("contour integral has non-vanishing imaginary part");
}

// -1 < Delta < 1, Delta = cos(pi xi):
//   e = Delta/4 + sin(pi xi)/(2 pi) * Int dx cosh(xi x)/(sinh(x) sinh(xi x))
// along Im(x) = 1/2.
double energy_gapless(double delta) {
  const double xi = std::acos(delta) / kPi;
  auto f = [xi](double t) {
    const cplx x(t, 0.5);
    return std::cosh(xi * x) / (std::sinh(x) * std::sinh(xi * x));
  };
  const double integral = integrate_checked([&](double t) { return f(t).real(); });
  assert_imaginary_part_vanishes([&](double t) { return f(t).imag(); }, integral);
  return delta / 4.0 + std::sin(kPi * xi) / (2.0 * kPi) * integral;
}

// Delta > 1 via xi = i phi, Delta = cosh(pi phi):
//   sin(pi xi) -> i sinh(pi phi), cosh(xi x)/sinh(xi x) -> cos(phi x)/(i sin(phi x)),
// so the prefactor and integrand stay real after the two i's cancel.
double energy_antiferro(double delta) {
  const double phi = std::acosh(delta) / kPi;
  auto f = [phi](double t) {
    const cplx x(t, 0.5);
    return std::cos(phi * x) / (std::sinh(x) * std::sin(phi * x));
  };
  const double integral = integrate_checked([&](double t) { return f(t).real(); });
  assert_imaginary_part_vanishes([&](double t) { return f(t).imag(); }, integral);
  return delta / 4.0 + std::sinh(kPi * phi) / (2.0 * kPi) * integral;
}

double ground_energy_uncached(double delta) {
  if (delta <= -1.0) return -delta / 4.0;
  if (delta == 1.0) return 0.25 - kLn2;
  // Hug the boundaries: evaluate at the clamped offset instead of feeding
  // the quadrature a near-singular xi.
  if (delta < 1.0) {
    const double clamped = std::clamp(delta, -1.0 + tol::critical_clamp,
                                      1.0 - tol::critical_clamp);
    return energy_gapless(clamped);
  }
  return energy_antiferro(std::max(delta, 1.0 + tol::critical_clamp));
}

// Memo cache keyed by Delta.  Idempotent fills; behaves as if absent.
double ground_energy_cached(double delta) {
  static std::map<double, double> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(delta);
    if (it != cache.end()) return it->second;
  }
  const double value = ground_energy_uncached(delta);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(delta, value);
  return value;
}

// Central difference with two Richardson halvings; error O(h^6) plus
// quadrature noise amplified by 1/h.
double central_derivative(double delta, double h) {
  auto d = [&](double hh) {
    return (ground_energy_cached(delta + hh) - ground_energy_cached(delta - hh)) /
           (2.0 * hh);
  };
  const double d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d3 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

// One-sided five-point stencil (direction = +1 forward, -1 backward)
// with one Richardson halving; error O(h^5).
double one_sided_derivative(double delta, double h, int direction) {
  auto d = [&](double hh) {
    const double s = direction * hh;
    return (-25.0 * ground_energy_cached(delta) +
            48.0 * ground_energy_cached(delta + s) -
            36.0 * ground_energy_cached(delta + 2 * s) +
            16.0 * ground_energy_cached(delta + 3 * s) -
            3.0 * ground_energy_cached(delta + 4 * s)) /
           (12.0 * s);
  };
  const double d1 = d(h), d2 = d(h / 2);
  return (16.0 * d2 - d1) / 15.0;
}

}  // namespace

Phase phase_of(double delta) {
  if (delta < -1.0) return Phase::ferromagnetic;
  if (delta == -1.0) return Phase::first_order_point;
  if (delta < 1.0) return Phase::gapless;
  if (delta == 1.0) return Phase::kt_point;
  return Phase::antiferromagnetic;
}

double ground_energy(double delta) {
  if (!std::isfinite(delta))
    throw std::domain_error("anisotropy must be finite");
  return ground_energy_cached(delta);
}

DerivativeInfo zz_correlator_info(double delta) {
  if (!std::isfinite(delta))
    throw std::domain_error("anisotropy must be finite");
  const double h = 1e-4;
  DerivativeInfo info;

  // Snap near-critical inputs to the clamped offset so the stencil nodes
  // and the cached energy evaluations agree on where they are.
  if (delta != 1.0 && std::abs(delta - 1.0) < tol::critical_clamp) {
    delta = delta < 1.0 ? 1.0 - tol::critical_clamp : 1.0 + tol::critical_clamp;
    info.clamped = true;
  }
  if (delta > -1.0 && delta < -1.0 + tol::critical_clamp) {
    delta = -1.0 + tol::critical_clamp;
    info.clamped = true;
  }

  if (delta < -1.0 - tol::critical_guard) {
    info.value = -1.0;  // analytic: 4 d(-Delta/4)/dDelta
    return info;
  }
  if (delta <= -1.0) {
    info.value = -1.0;
    info.side = CriticalSide::left;
    return info;
  }
  if (delta < -1.0 + tol::critical_guard) {
    info.value = 4.0 * one_sided_derivative(delta, h, +1);
    info.side = CriticalSide::right;
    return info;
  }
  if (delta < 1.0 - tol::critical_guard) {
    info.value = 4.0 * central_derivative(delta, h);
    return info;
  }
  if (delta <= 1.0) {
    info.value = 4.0 * one_sided_derivative(delta, h, -1);
    info.side = CriticalSide::left;
    return info;
  }
  if (delta < 1.0 + tol::critical_guard) {
    info.value = 4.0 * one_sided_derivative(delta, h, +1);
    info.side = CriticalSide::right;
    return info;
  }
  info.value = 4.0 * central_derivative(delta, h);
  return info;
}

double zz_correlator(double delta) {
  const double zz = zz_correlator_info(delta).value;
  if (std::abs(zz) > 1.0 + tol::degenerate_b)
    throw std::runtime_error("zz correlator left [-1, 1]; derivative pipeline bug");
  return zz;
}

double xx_correlator(double delta) {
  return 0.5 * (4.0 * ground_energy(delta) - delta * zz_correlator(delta));
}

CorrelatorTriple correlators(double delta) {
  CorrelatorTriple c;
  c.zz = zz_correlator(delta);
  c.xx = 0.5 * (4.0 * ground_energy(delta) - delta * c.zz);
  c.yy = c.xx;
  return c;
}

TwoQubitState nn_density_matrix(double delta) {
  const CorrelatorTriple c = correlators(delta);
  const double u = (1.0 + c.zz) / 4.0;
  const double w = (1.0 - c.zz) / 4.0;
  const double y = (c.xx + c.yy) / 4.0;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = u;
  rho(1, 1) = w;
  rho(2, 2) = w;
  rho(3, 3) = u;
  rho(1, 2) = y;
  rho(2, 1) = y;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::quadrature_fail)
    throw std::runtime_error("nearest-neighbor density matrix not PSD; "
                             "correlator pipeline bug");
  return TwoQubitState(rho);
}

DirectedSemiaxes semiaxes(double delta) {
  const CorrelatorTriple c = correlators(delta);
  return {std::abs(c.xx), std::abs(c.yy), std::abs(c.zz)};
}

}  // namespace qse
