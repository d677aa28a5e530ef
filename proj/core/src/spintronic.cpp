#include "mcasim/spintronic.hpp"

#include <algorithm>

#include "mcasim/errors.hpp"

namespace mcasim {

void DWParams::validate() const {
    if (!(r_low < r_high)) throw argument_error("dw: r_low must be < r_high");
    if (strip_length <= 0.0) throw argument_error("dw: strip_length must be positive");
    if (mobility <= 0.0) throw argument_error("dw: mobility must be positive");
}

double calibrate_dw_mobility(double strip_length, double i_drive, double t_traverse) {
    if (strip_length <= 0.0 || i_drive <= 0.0 || t_traverse <= 0.0)
        throw argument_error("calibrate_dw_mobility: arguments must be positive");
    return strip_length / (i_drive * t_traverse);
}

DWState reset(const DWState&, const DWParams& params) {
    return DWState{0.5 * params.strip_length};
}

DWState drive(const DWState& state, double current, double dt, const DWParams& params) {
    if (dt < 0.0) throw argument_error("drive: dt must be non-negative");
    const double x = state.x + params.mobility * current * dt;
    return DWState{std::clamp(x, 0.0, params.strip_length)};
}

double read_dw_current(const DWState& state, const DWParams& params) {
    const double frac = state.x / params.strip_length;
    const double conductance = (1.0 - frac) / params.r_high + frac / params.r_low;
    return params.v_bias * conductance;
}

}  // namespace mcasim
