#pragma once

namespace mcasim {

/// Current-driven domain-wall MTJ strip. The wall position x moves linearly
/// with injected current and the read conductance interpolates linearly
/// between the two fixed resistive states.
struct DWParams {
    double strip_length = 100e-9;    // m
    double strip_width = 20e-9;      // m
    double strip_thickness = 2e-9;   // m
    double dw_width = 15e-9;         // m, metadata only
    double mgo_thickness = 1.1e-9;   // m, metadata only
    double m_sat = 6.8e5;            // A/m, metadata only
    double r_low = 10e3;             // Ohm, parallel state
    double r_high = 20e3;            // Ohm, antiparallel state
    double v_bias = 0.1;             // V, read bias across the MTJ
    double mobility = 100e-9 / (35e-6 * 2e-9);  // m/(s*A), edge-to-edge in 2 ns at 35 uA

    void validate() const;

    double i_low() const { return v_bias / r_low; }    // current at x = L
    double i_high() const { return v_bias / r_high; }  // current at x = 0
    double i_center() const { return 0.5 * (i_low() + i_high()); }
};

struct DWState {
    double x = 50e-9;  // m, wall position in [0, strip_length]
};

/// Mobility that moves the wall across the full strip in t_traverse at
/// drive current i_drive.
double calibrate_dw_mobility(double strip_length, double i_drive, double t_traverse);

/// Puts the wall at the strip center.
DWState reset(const DWState& state, const DWParams& params);

/// Moves the wall by mobility * I * dt, clamped to the strip.
DWState drive(const DWState& state, double current, double dt, const DWParams& params);

/// Read current under v_bias. Conductance is linear in position:
/// G(x) = (1 - x/L)/R_H + (x/L)/R_L, so the center current is exactly
/// (I_H + I_L)/2.
double read_dw_current(const DWState& state, const DWParams& params);

}  // namespace mcasim
