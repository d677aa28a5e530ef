#pragma once

#include "mcasim/spintronic.hpp"

namespace mcasim {

/// Phase durations of the three non-overlapping clocks driving one neuron
/// cycle: reset the wall to center, write the current difference, read out.
struct ClockSchedule {
    double t_reset = 2e-9;  // s, Clk1
    double t_write = 2e-9;  // s, Clk2
    double t_read = 1e-9;   // s, Clk3

    double period() const { return t_reset + t_write + t_read; }
};

struct ScheduleReport {
    double period = 0.0;
    bool equal_duty_warning = false;  // all three phases share one duration
};

/// Throws on any non-positive phase; equal duty cycles are legal but flagged.
ScheduleReport validate_schedule(const ClockSchedule& schedule);

/// Neuron front-end: input mirror attenuation, DW write/read cycle, bias
/// subtraction, output mirror gain.
struct IMParams {
    double s_in = 1.0;    // input mirror attenuation
    double g_out = 1.0;   // output mirror gain
    double i_0 = 0.0;     // A, center-position bias current, (I_H + I_L)/2
    ClockSchedule schedule;
    DWParams dw;
};

/// Builds params with i_0 derived from the DW read constants.
IMParams make_im_params(const DWParams& dw, const ClockSchedule& schedule = {});

/// One full clock period: reset, drive with s_in*(i_plus - i_minus) for
/// t_write, read, return g_out*(read - i_0). Odd, monotone, linear up to the
/// position clamp and saturated beyond it.
double evaluate(double i_plus, double i_minus, const IMParams& im);

/// Smallest |i_plus - i_minus| that drives the wall to a strip edge.
double saturation_current(const IMParams& im);

/// Output-per-input slope in the unsaturated region.
double linear_gain(const IMParams& im);

/// Sets s_in so saturation_current equals max_delta_current and g_out so the
/// saturated output equals k * activation_halfscale.
IMParams calibrate(double max_delta_current, double activation_halfscale,
                   IMParams im, double k = 4.0);

}  // namespace mcasim
