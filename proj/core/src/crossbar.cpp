#include "mcasim/crossbar.hpp"

#include <cmath>

#include "mcasim/errors.hpp"

namespace mcasim {

WeightLevel quantize_weight(double w, double w_max) {
    if (w_max <= 0.0) throw argument_error("quantize_weight: w_max must be positive");
    if (std::abs(w) > w_max * (1.0 + 1e-12))
        throw argument_error("quantize_weight: |w| exceeds w_max");
    WeightLevel level;
    level.sign = (w < 0.0) ? -1 : +1;
    level.magnitude = static_cast<int>(std::lround(kLevelCount * std::abs(w) / w_max));
    return level;
}

double level_conductance(const WeightLevel& level, const MemristorParams& params) {
    return mlc_conductance(level.magnitude, params);
}

std::pair<double, double> encode_cell(const WeightLevel& level,
                                      const MemristorParams& params) {
    const double g_off = 1.0 / params.r_off;
    if (level.magnitude == 0) return {g_off, g_off};
    const double g = level_conductance(level, params);
    return (level.sign >= 0) ? std::pair{g, g_off} : std::pair{g_off, g};
}

ColumnCurrents column_currents(const DualColumnLayer& layer, const Eigen::VectorXd& x) {
    if (x.size() != layer.rows)
        throw argument_error("column_currents: input size does not match row count");
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0 || x[i] > 1.0)
            throw argument_error("column_currents: inputs must lie in [0,1]");
    }
    const Eigen::VectorXd v = x * layer.v_read;
    return {layer.g_plus.transpose() * v, layer.g_minus.transpose() * v};
}

DualColumnLayer program_layer(const Eigen::MatrixXd& weights, Fidelity fidelity,
                              const MemristorParams& params,
                              const WriteController& ctrl,
                              std::optional<double> w_max_opt, double v_read) {
    params.validate();
    const int n = static_cast<int>(weights.rows());
    const int m = static_cast<int>(weights.cols());
    if (n == 0 || m == 0) throw argument_error("program_layer: empty weight matrix");

    double w_max = w_max_opt.value_or(weights.cwiseAbs().maxCoeff());
    if (w_max <= 0.0) w_max = 1.0;  // all-zero layer

    DualColumnLayer layer;
    layer.rows = n;
    layer.cols = m;
    layer.v_read = v_read;
    layer.w_max = w_max;
    layer.memristor = params;
    layer.levels.resize(static_cast<size_t>(n) * m);
    layer.g_plus.resize(n, m);
    layer.g_minus.resize(n, m);

    const double g_off = 1.0 / params.r_off;
    auto device_write = [&](int target_level) {
        // Start from the off-state rail, as a freshly erased cell would.
        MemristorState cell{params.w_off};
        const auto result = program_to_level(cell, target_level, ctrl, params);
        return 1.0 / memristance(result.state, params);
    };

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const WeightLevel level = quantize_weight(weights(i, j), w_max);
            layer.levels[static_cast<size_t>(i) * m + j] = level;
            if (fidelity == Fidelity::Ideal || level.magnitude == 0) {
                const auto [gp, gm] = encode_cell(level, params);
                layer.g_plus(i, j) = gp;
                layer.g_minus(i, j) = gm;
            } else {
                const double g = device_write(level.magnitude);
                layer.g_plus(i, j) = (level.sign >= 0) ? g : g_off;
                layer.g_minus(i, j) = (level.sign >= 0) ? g_off : g;
            }
        }
    }
    return layer;
}

}  // namespace mcasim
