#pragma once

#include <vector>

namespace labbench {

// Square-law MOSFET with channel-length modulation. vt is a magnitude for
// both polarities; the PMOS is evaluated in source-referenced coordinates.
struct MosfetParams {
  double vt = 0.0;      // threshold voltage, V
  double k = 0.0;       // transconductance coefficient, A/V^2
  double lambda = 0.0;  // channel-length modulation, 1/V
};

struct CircuitParams {
  MosfetParams nmos;
  MosfetParams pmos;
  double g_leak = 1e-7;       // output node to ground, S
  double noise_sigma = 8.58e-7;  // DMM read noise std, V
};

struct OperatingPoint {
  double vin = 0.0;
  double vbias = 0.0;
  double vdd = 0.0;
};

struct CurvePoint {
  double vin = 0.0;
  double vout = 0.0;
};

// Bench defaults. Chosen so the inverter family stays under the 0.1 A supply
// limit, pulls fully to the rails, and keeps the steepest transition wide
// enough to resolve with a 100-point sweep.
CircuitParams default_circuit();

double nmos_current(double vgs, double vds, const MosfetParams& p);
double pmos_current(double vsg, double vsd, const MosfetParams& p);

// Residual of the output-node current balance at node voltage v; strictly
// increasing in v, with f(0) <= 0 <= f(vdd) for any valid operating point.
double node_residual(double v, const OperatingPoint& op,
                     const CircuitParams& c);

// Unique root of node_residual on [0, vdd], noiseless.
// Throws UsageError on vdd <= 0 or non-finite inputs.
double solve_vout(const OperatingPoint& op, const CircuitParams& c);

// solve_vout over a strictly increasing vin grid at fixed (vbias, vdd).
std::vector<CurvePoint> transfer_curve(double vbias, double vdd,
                                       const std::vector<double>& vin_grid,
                                       const CircuitParams& c);

}  // namespace labbench
