#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "mcasim/memristor.hpp"

namespace mcasim {

/// Signed 31-level quantized weight. Magnitude 0 encodes weight zero
/// regardless of sign.
struct WeightLevel {
    int sign = +1;      // +1 or -1
    int magnitude = 0;  // 0..31
};

/// Nearest-level quantization of w against the layer scale w_max,
/// rounding half away from zero.
WeightLevel quantize_weight(double w, double w_max);

/// Conductance of a level under the equally-spaced MLC map.
double level_conductance(const WeightLevel& level, const MemristorParams& params);

/// Splits a signed level onto the (M+, M-) pair: the sign selects which cell
/// carries the value, the other stays in the off-state.
std::pair<double, double> encode_cell(const WeightLevel& level,
                                      const MemristorParams& params);

enum class Fidelity { Ideal, Device };

/// One dual-column crossbar layer: n input rows, m neurons, 2m physical
/// columns. Conductance grids are stored per polarity.
struct DualColumnLayer {
    int rows = 0;  // n
    int cols = 0;  // m
    std::vector<WeightLevel> levels;  // row-major n*m
    Eigen::MatrixXd g_plus;   // n x m, siemens
    Eigen::MatrixXd g_minus;  // n x m, siemens
    double v_read = 0.5;      // V, full-scale row voltage
    double w_max = 1.0;       // weight scale used at programming time
    MemristorParams memristor;

    const WeightLevel& level_at(int i, int j) const { return levels[i * cols + j]; }
};

struct ColumnCurrents {
    Eigen::VectorXd plus;   // m
    Eigen::VectorXd minus;  // m
};

/// Ideal crossbar read: rows driven at x_i * v_read, columns at virtual
/// ground, so I_j = sum_i x_i * v_read * G_ij per polarity.
ColumnCurrents column_currents(const DualColumnLayer& layer, const Eigen::VectorXd& x);

/// Quantizes and programs an n x m weight matrix. Ideal fidelity stores the
/// exact level conductances; Device fidelity runs the program-and-verify loop
/// per cell and stores the achieved conductances.
DualColumnLayer program_layer(const Eigen::MatrixXd& weights, Fidelity fidelity,
                              const MemristorParams& params,
                              const WriteController& ctrl = {},
                              std::optional<double> w_max = std::nullopt,
                              double v_read = 0.5);

}  // namespace mcasim
