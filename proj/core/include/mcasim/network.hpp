#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mcasim/crossbar.hpp"
#include "mcasim/dataset.hpp"
#include "mcasim/interface_module.hpp"
#include "mcasim/weight_file.hpp"

namespace mcasim {

struct Topology {
    std::vector<int> sizes;  // input width first, output width last

    void validate() const;
    int inputs() const { return sizes.front(); }
    int outputs() const { return sizes.back(); }
    /// Total neuron count, i.e. the sum of all non-input layer widths.
    long long neuron_count() const;
};

enum class Activation { Sigmoid, Step };

double sigmoid(double i, double i_half);
/// Hard threshold; exactly zero maps to 0.
double step(double i);

/// How each layer's IM is scaled.
///   FullScale    - the saturation point is the layer's maximum possible
///                  column-current difference (every input on, a full-scale
///                  weight in every row).
///   TrainedScale - the saturation point corresponds to a pre-activation of
///                  k in trained-weight units, so the analog path reproduces
///                  the trained function up to quantization and the clamp.
enum class CalibrationPolicy { FullScale, TrainedScale };

struct NetworkOptions {
    Fidelity fidelity = Fidelity::Ideal;
    CalibrationPolicy policy = CalibrationPolicy::FullScale;
    Activation activation = Activation::Sigmoid;
    double i_half = 1e-6;  // A, activation half-scale current
    double k = 4.0;        // saturation convention: full-scale input -> k * i_half
    double v_read = 0.5;   // V
    MemristorParams memristor = MemristorParams::make_default();
    DWParams dw;
    ClockSchedule schedule;
    WriteController write_ctrl;
};

struct NetworkLayer {
    DualColumnLayer cells;
    IMParams im;
    double i_half = 1e-6;
    // Cached for the behavioral fast path.
    Eigen::MatrixXd g_diff;      // g_plus - g_minus
    double gain = 0.0;           // linear IM gain
    double delta_i_sat = 0.0;    // clamp boundary on |I+ - I-|
};

struct Network {
    Topology topology;
    bool bias = true;
    Activation activation = Activation::Sigmoid;
    std::vector<NetworkLayer> layers;
};

/// Programs one crossbar layer per weight matrix and calibrates its IM.
Network build_network(const WeightFile& wf, const NetworkOptions& opts = {});

/// Full per-neuron device path: column currents, IM cycle, activation.
Eigen::VectorXd forward_device(const Network& net, const Eigen::VectorXd& x);

/// Linear-gain fast path with the same clamp; identical to forward_device
/// wherever the wall does not hit a strip edge.
Eigen::VectorXd forward_behavioral(const Network& net, const Eigen::VectorXd& x);

/// Batched behavioral pass, samples as columns.
Eigen::MatrixXd forward_behavioral_batch(const Network& net, const Eigen::MatrixXd& x);

/// Argmax classification accuracy.
double evaluate_accuracy(const Network& net, const Dataset& dataset,
                         bool device_path = false);

}  // namespace mcasim
