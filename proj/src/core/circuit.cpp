#include "core/circuit.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace labbench {

CircuitParams default_circuit() {
  CircuitParams c;
  c.nmos = {2.0, 0.12, 0.6};
  c.pmos = {0.8, 0.008, 0.6};
  c.g_leak = 1e-7;
  c.noise_sigma = 8.58e-7;
  return c;
}

double nmos_current(double vgs, double vds, const MosfetParams& p) {
  if (vgs <= p.vt) return 0.0;
  double vov = vgs - p.vt;
  double mod = 1.0 + p.lambda * vds;
  if (vds >= vov) return 0.5 * p.k * vov * vov * mod;
  return p.k * (vov * vds - 0.5 * vds * vds) * mod;
}

double pmos_current(double vsg, double vsd, const MosfetParams& p) {
  // Same piecewise form in source-referenced polarities.
  return nmos_current(vsg, vsd, p);
}

double node_residual(double v, const OperatingPoint& op,
                     const CircuitParams& c) {
  double pull_down = nmos_current(op.vin, v, c.nmos);
  double pull_up = pmos_current(op.vdd - op.vbias, op.vdd - v, c.pmos);
  return pull_down + c.g_leak * v - pull_up;
}

double solve_vout(const OperatingPoint& op, const CircuitParams& c) {
  if (!(op.vdd > 0.0) || !std::isfinite(op.vin) || !std::isfinite(op.vbias) ||
      !std::isfinite(op.vdd)) {
    throw UsageError("solve_vout: invalid operating point");
  }
  double lo = 0.0;
  double hi = op.vdd;
  if (node_residual(lo, op, c) == 0.0) return lo;
  if (node_residual(hi, op, c) == 0.0) return hi;
  // g_leak > 0 makes the residual strictly increasing, so [0, vdd] always
  // brackets the unique root. Bisect until both the residual and the bracket
  // width are small; stopping on |f| <= 1e-12 alone would leave the root
  // ~1e-5 V off where the local slope is just g_leak.
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    double fm = node_residual(mid, op, c);
    if (fm == 0.0) return mid;
    if (fm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-12 && std::abs(fm) <= 1e-12) break;
  }
  return mid;
}

std::vector<CurvePoint> transfer_curve(double vbias, double vdd,
                                       const std::vector<double>& vin_grid,
                                       const CircuitParams& c) {
  std::vector<CurvePoint> out;
  out.reserve(vin_grid.size());
  for (double vin : vin_grid) {
    out.push_back({vin, solve_vout({vin, vbias, vdd}, c)});
  }
  return out;
}

}  // namespace labbench
