#pragma once

#include <utility>

namespace mcasim {

// Number of nonzero weight magnitudes stored per multi-level cell.
inline constexpr int kLevelCount = 31;

/// Voltage-controlled threshold memristor (VTEAM-style).
/// State velocity is zero between v_on and v_off and polynomial in the
/// over-threshold voltage outside that band. The internal state variable w
/// moves between w_on and w_off with a hard clamp at the boundaries.
struct MemristorParams {
    double r_on = 5e3;       // Ohm, resistance at w = w_on
    double r_off = 5e6;      // Ohm, resistance at w = w_off
    double v_on = -0.7;      // V, negative threshold (SET direction)
    double v_off = 0.7;      // V, positive threshold (RESET direction)
    double k_on = -0.635;    // m/s, state velocity coefficient, v < v_on (negative)
    double k_off = 0.635;    // m/s, state velocity coefficient, v > v_off
    double alpha_on = 3.0;
    double alpha_off = 3.0;
    double w_on = 0.0;       // m, state lower bound
    double w_off = 5e-9;     // m, state upper bound
    double length = 5e-9;    // m, device length

    /// Parameters with k_on/k_off calibrated for full-range switching in
    /// 100 ns under a constant +-1 V drive.
    static MemristorParams make_default();

    void validate() const;
};

struct MemristorState {
    double w = 5e-9;  // m, in [w_on, w_off]; default off-state
};

/// Closed-loop program-and-verify controller. pulse_width is the initial
/// pulse duration; the loop shrinks it whenever the drive direction flips.
struct WriteController {
    double pulse_voltage = 1.0;   // V, magnitude of program pulses
    double pulse_width = 2e-9;    // s, initial pulse duration
    double verify_voltage = 0.5;  // V, non-disturbing read-back voltage
    double tolerance = 0.5;       // fraction of one level spacing in conductance
    int max_pulses = 100;

    void validate(const MemristorParams& params) const;
};

struct ProgramResult {
    MemristorState state;
    int pulses_used = 0;
};

/// Linear state-to-resistance map: r_on at w_on, r_off at w_off.
double memristance(const MemristorState& state, const MemristorParams& params);

/// Integrates the state equation for dt seconds at constant voltage v.
/// Fixed-step explicit Euler with substeps no longer than 1 ns and a hard
/// clamp at the state bounds.
MemristorState step_state(const MemristorState& state, double v, double dt,
                          const MemristorParams& params);

/// Returns params with k_on/k_off set so a constant +-v_prog drive traverses
/// the full state range in exactly t_switch.
MemristorParams calibrate_switching(MemristorParams params, double t_switch,
                                    double v_prog);

/// Ohmic read at a sub-threshold voltage. Throws if v_read would disturb
/// the state.
double read_current(const MemristorState& state, double v_read,
                    const MemristorParams& params);

/// Conductance of multi-level cell magnitude 0..31, equally spaced between
/// G_off = 1/r_off (magnitude 0) and G_on = 1/r_on (magnitude 31).
double mlc_conductance(int magnitude, const MemristorParams& params);

/// Nearest-level decoding of a measured conductance.
int nearest_level(double conductance, const MemristorParams& params);

/// Conductance spacing between adjacent levels.
double level_spacing(const MemristorParams& params);

/// Program-and-verify loop targeting the conductance of target_level.
/// Verify-first: a state already within tolerance uses zero pulses.
ProgramResult program_to_level(const MemristorState& state, int target_level,
                               const WriteController& ctrl,
                               const MemristorParams& params);

}  // namespace mcasim
