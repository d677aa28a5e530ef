#include "mcasim/interface_module.hpp"

#include "mcasim/errors.hpp"

namespace mcasim {

ScheduleReport validate_schedule(const ClockSchedule& s) {
    if (s.t_reset <= 0.0 || s.t_write <= 0.0 || s.t_read <= 0.0)
        throw argument_error("schedule: all phase durations must be positive");
    ScheduleReport report;
    report.period = s.period();
    report.equal_duty_warning = (s.t_reset == s.t_write && s.t_write == s.t_read);
    return report;
}

IMParams make_im_params(const DWParams& dw, const ClockSchedule& schedule) {
    dw.validate();
    validate_schedule(schedule);
    IMParams im;
    im.schedule = schedule;
    im.dw = dw;
    im.i_0 = dw.i_center();
    return im;
}

double evaluate(double i_plus, double i_minus, const IMParams& im) {
    if (i_plus < 0.0 || i_minus < 0.0)
        throw argument_error("evaluate: column currents must be non-negative");
    DWState s = reset(DWState{}, im.dw);
    s = drive(s, im.s_in * (i_plus - i_minus), im.schedule.t_write, im.dw);
    return im.g_out * (read_dw_current(s, im.dw) - im.i_0);
}

double saturation_current(const IMParams& im) {
    return (0.5 * im.dw.strip_length) /
           (im.dw.mobility * im.schedule.t_write) / im.s_in;
}

double linear_gain(const IMParams& im) {
    return im.g_out * im.s_in * im.dw.mobility * im.schedule.t_write *
           im.dw.v_bias * (1.0 / im.dw.r_low - 1.0 / im.dw.r_high) /
           im.dw.strip_length;
}

IMParams calibrate(double max_delta_current, double activation_halfscale,
                   IMParams im, double k) {
    if (max_delta_current <= 0.0 || activation_halfscale <= 0.0 || k <= 0.0)
        throw argument_error("calibrate: arguments must be positive");
    im.s_in = (0.5 * im.dw.strip_length) /
              (im.dw.mobility * im.schedule.t_write * max_delta_current);
    // Saturated read swing is half the I_L - I_H gap.
    const double swing = 0.5 * im.dw.v_bias * (1.0 / im.dw.r_low - 1.0 / im.dw.r_high);
    im.g_out = k * activation_halfscale / swing;
    return im;
}

}  // namespace mcasim
