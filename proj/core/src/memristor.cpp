#include "mcasim/memristor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcasim/errors.hpp"

namespace mcasim {

namespace {

constexpr double kMaxEulerStep = 1e-9;  // s

double state_velocity(double v, const MemristorParams& p) {
    if (v > p.v_off) {
        return p.k_off * std::pow(v / p.v_off - 1.0, p.alpha_off);
    }
    if (v < p.v_on) {
        return p.k_on * std::pow(v / p.v_on - 1.0, p.alpha_on);
    }
    return 0.0;
}

double read_threshold(const MemristorParams& p) {
    return std::min(std::abs(p.v_on), p.v_off);
}

}  // namespace

void MemristorParams::validate() const {
    if (!(r_on < r_off)) throw argument_error("memristor: r_on must be < r_off");
    if (!(w_on < w_off)) throw argument_error("memristor: w_on must be < w_off");
    if (!(v_on < 0.0 && 0.0 < v_off))
        throw argument_error("memristor: thresholds must satisfy v_on < 0 < v_off");
}

MemristorParams MemristorParams::make_default() {
    MemristorParams p;
    return calibrate_switching(p, 100e-9, 1.0);
}

double memristance(const MemristorState& state, const MemristorParams& params) {
    const double frac = (state.w - params.w_on) / (params.w_off - params.w_on);
    return params.r_on + frac * (params.r_off - params.r_on);
}

MemristorState step_state(const MemristorState& state, double v, double dt,
                          const MemristorParams& params) {
    if (dt < 0.0) throw argument_error("step_state: dt must be non-negative");
    if (dt == 0.0) return state;

    const double velocity = state_velocity(v, params);
    if (velocity == 0.0) return state;

    const int nsteps = static_cast<int>(std::ceil(dt / kMaxEulerStep));
    const double h = dt / nsteps;
    double w = state.w;
    for (int i = 0; i < nsteps; ++i) {
        w = std::clamp(w + velocity * h, params.w_on, params.w_off);
    }
    return MemristorState{w};
}

MemristorParams calibrate_switching(MemristorParams params, double t_switch,
                                    double v_prog) {
    params.validate();
    if (t_switch <= 0.0) throw argument_error("calibrate_switching: t_switch must be positive");
    const double v = std::abs(v_prog);
    if (v <= params.v_off || -v >= params.v_on)
        throw numeric_error("calibrate_switching: programming voltage inside dead zone");

    // Constant drive makes dw/dt constant, so the traversal time inverts in
    // closed form: t = range / (k * (v/v_th - 1)^alpha).
    const double range = params.w_off - params.w_on;
    params.k_off = range / (t_switch * std::pow(v / params.v_off - 1.0, params.alpha_off));
    params.k_on = -range / (t_switch * std::pow(-v / params.v_on - 1.0, params.alpha_on));
    return params;
}

double read_current(const MemristorState& state, double v_read,
                    const MemristorParams& params) {
    if (std::abs(v_read) >= read_threshold(params))
        throw argument_error("read_current: read voltage would disturb the state");
    return v_read / memristance(state, params);
}

double mlc_conductance(int magnitude, const MemristorParams& params) {
    if (magnitude < 0 || magnitude > kLevelCount)
        throw argument_error("mlc_conductance: magnitude out of range 0..31");
    const double g_on = 1.0 / params.r_on;
    const double g_off = 1.0 / params.r_off;
    return g_off + (static_cast<double>(magnitude) / kLevelCount) * (g_on - g_off);
}

double level_spacing(const MemristorParams& params) {
    return (1.0 / params.r_on - 1.0 / params.r_off) / kLevelCount;
}

int nearest_level(double conductance, const MemristorParams& params) {
    const double g_off = 1.0 / params.r_off;
    const double raw = (conductance - g_off) / level_spacing(params);
    const int level = static_cast<int>(std::lround(raw));
    return std::clamp(level, 0, kLevelCount);
}

void WriteController::validate(const MemristorParams& params) const {
    if (std::abs(verify_voltage) >= read_threshold(params))
        throw argument_error("write controller: verify voltage is disturbing");
    if (verify_voltage == 0.0)
        throw argument_error("write controller: verify voltage must be nonzero");
    if (max_pulses < 1) throw argument_error("write controller: max_pulses must be >= 1");
    if (pulse_width <= 0.0) throw argument_error("write controller: pulse_width must be positive");
}

ProgramResult program_to_level(const MemristorState& state, int target_level,
                               const WriteController& ctrl,
                               const MemristorParams& params) {
    if (target_level < 0 || target_level > kLevelCount)
        throw argument_error("program_to_level: level out of range 0..31");
    ctrl.validate(params);

    const double g_target = mlc_conductance(target_level, params);
    const double tol = ctrl.tolerance * level_spacing(params);

    auto measure = [&](const MemristorState& s) {
        return read_current(s, ctrl.verify_voltage, params) / ctrl.verify_voltage;
    };

    MemristorState s = state;
    if (std::abs(measure(s) - g_target) <= tol) return {s, 0};

    double width = ctrl.pulse_width;
    int prev_direction = 0;
    for (int pulse = 1; pulse <= ctrl.max_pulses; ++pulse) {
        // Conductance rises toward w_on, so too-low conductance needs a
        // negative (SET-direction) pulse.
        const double g = measure(s);
        const int direction = (g < g_target) ? -1 : +1;
        if (prev_direction != 0 && direction != prev_direction) width *= 0.5;
        prev_direction = direction;

        s = step_state(s, direction * ctrl.pulse_voltage, width, params);
        if (std::abs(measure(s) - g_target) <= tol) return {s, pulse};
    }
    throw numeric_error("program_to_level: no convergence to level " +
                        std::to_string(target_level) + " within " +
                        std::to_string(ctrl.max_pulses) + " pulses");
}

}  // namespace mcasim
