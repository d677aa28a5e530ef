#include "mcasim/network.hpp"

#include <algorithm>
#include <cmath>

#include "mcasim/errors.hpp"

namespace mcasim {

void Topology::validate() const {
    if (sizes.size() < 2) throw argument_error("topology: need at least input and output layers");
    for (int s : sizes)
        if (s <= 0) throw argument_error("topology: layer widths must be positive");
}

long long Topology::neuron_count() const {
    long long n = 0;
    for (size_t l = 1; l < sizes.size(); ++l) n += sizes[l];
    return n;
}

double sigmoid(double i, double i_half) {
    if (i_half <= 0.0) throw argument_error("sigmoid: i_half must be positive");
    return 1.0 / (1.0 + std::exp(-i / i_half));
}

double step(double i) { return i > 0.0 ? 1.0 : 0.0; }

namespace {

double activation_apply(Activation kind, double current, double i_half) {
    return kind == Activation::Sigmoid ? sigmoid(current, i_half) : step(current);
}

Eigen::VectorXd with_bias(const Eigen::VectorXd& x, bool bias) {
    if (!bias) return x;
    Eigen::VectorXd xb(x.size() + 1);
    xb << x, 1.0;
    return xb;
}

}  // namespace

Network build_network(const WeightFile& wf, const NetworkOptions& opts) {
    Network net;
    net.topology.sizes = wf.topology;
    net.topology.validate();
    net.bias = wf.bias;
    net.activation = opts.activation;

    const double g_on = 1.0 / opts.memristor.r_on;
    const double g_off = 1.0 / opts.memristor.r_off;

    for (const auto& lw : wf.layers) {
        NetworkLayer layer;
        std::optional<double> w_max;
        if (lw.w_max > 0.0) w_max = lw.w_max;
        layer.cells = program_layer(lw.w, opts.fidelity, opts.memristor,
                                    opts.write_ctrl, w_max, opts.v_read);

        double max_delta;
        if (opts.policy == CalibrationPolicy::FullScale) {
            max_delta = layer.cells.rows * opts.v_read * g_on;
        } else {
            max_delta = opts.k * opts.v_read * (g_on - g_off) / layer.cells.w_max;
        }
        layer.im = calibrate(max_delta, opts.i_half,
                             make_im_params(opts.dw, opts.schedule), opts.k);
        layer.i_half = opts.i_half;
        layer.g_diff = layer.cells.g_plus - layer.cells.g_minus;
        layer.gain = linear_gain(layer.im);
        layer.delta_i_sat = saturation_current(layer.im);
        net.layers.push_back(std::move(layer));
    }
    return net;
}

Eigen::VectorXd forward_device(const Network& net, const Eigen::VectorXd& x) {
    Eigen::VectorXd a = x;
    for (const auto& layer : net.layers) {
        const Eigen::VectorXd xb = with_bias(a, net.bias);
        const ColumnCurrents cc = column_currents(layer.cells, xb);
        Eigen::VectorXd out(layer.cells.cols);
        for (int j = 0; j < layer.cells.cols; ++j) {
            const double i_j = evaluate(cc.plus[j], cc.minus[j], layer.im);
            out[j] = activation_apply(net.activation, i_j, layer.i_half);
        }
        a = std::move(out);
    }
    return a;
}

Eigen::VectorXd forward_behavioral(const Network& net, const Eigen::VectorXd& x) {
    return forward_behavioral_batch(net, x);
}

Eigen::MatrixXd forward_behavioral_batch(const Network& net, const Eigen::MatrixXd& x) {
    if (x.rows() != net.topology.inputs())
        throw argument_error("forward: input size does not match topology");
    if (x.minCoeff() < 0.0 || x.maxCoeff() > 1.0)
        throw argument_error("forward: inputs must lie in [0,1]");

    Eigen::MatrixXd a = x;
    for (const auto& layer : net.layers) {
        Eigen::MatrixXd ab;
        if (net.bias) {
            ab.resize(a.rows() + 1, a.cols());
            ab.topRows(a.rows()) = a;
            ab.bottomRows(1).setOnes();
        } else {
            ab = a;
        }
        Eigen::MatrixXd delta = layer.g_diff.transpose() * (ab * layer.cells.v_read);
        delta = delta.cwiseMax(-layer.delta_i_sat).cwiseMin(layer.delta_i_sat);
        a = (layer.gain * delta).unaryExpr([&](double current) {
            return activation_apply(net.activation, current, layer.i_half);
        });
    }
    return a;
}

double evaluate_accuracy(const Network& net, const Dataset& dataset, bool device_path) {
    if (dataset.size() == 0) throw argument_error("evaluate_accuracy: empty dataset");
    if (dataset.width() != net.topology.inputs())
        throw argument_error("evaluate_accuracy: dataset width does not match topology");
    for (int label : dataset.labels)
        if (label < 0 || label >= net.topology.outputs())
            throw argument_error("evaluate_accuracy: label outside output range");

    long long correct = 0;
    if (device_path) {
        for (int s = 0; s < dataset.size(); ++s) {
            const Eigen::VectorXd y = forward_device(net, dataset.features.col(s));
            Eigen::Index argmax;
            y.maxCoeff(&argmax);
            if (static_cast<int>(argmax) == dataset.labels[s]) ++correct;
        }
    } else {
        constexpr int kChunk = 512;
        for (int s0 = 0; s0 < dataset.size(); s0 += kChunk) {
            const int n = std::min(kChunk, dataset.size() - s0);
            const Eigen::MatrixXd y =
                forward_behavioral_batch(net, dataset.features.middleCols(s0, n));
            for (int s = 0; s < n; ++s) {
                Eigen::Index argmax;
                y.col(s).maxCoeff(&argmax);
                if (static_cast<int>(argmax) == dataset.labels[s0 + s]) ++correct;
            }
        }
    }
    return static_cast<double>(correct) / dataset.size();
}

}  // namespace mcasim
