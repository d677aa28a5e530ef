#include "mcasim/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "mcasim/errors.hpp"
#include "mcasim/network.hpp"

namespace mcasim {

namespace {

Eigen::MatrixXd append_ones_row(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd ab(a.rows() + 1, a.cols());
    ab.topRows(a.rows()) = a;
    ab.bottomRows(1).setOnes();
    return ab;
}

Eigen::MatrixXd sigmoid_mat(const Eigen::MatrixXd& z) {
    return z.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
}

// Column-wise softmax with max subtraction.
Eigen::MatrixXd softmax_mat(const Eigen::MatrixXd& z) {
    Eigen::MatrixXd p(z.rows(), z.cols());
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
        const Eigen::VectorXd e = (z.col(c).array() - z.col(c).maxCoeff()).exp();
        p.col(c) = e / e.sum();
    }
    return p;
}

}  // namespace

WeightFile train_mlp(const std::vector<int>& topology, const Dataset& dataset,
                     const TrainHyper& hyper, bool bias, TrainStats* stats) {
    Topology topo{topology};
    topo.validate();
    if (dataset.width() != topo.inputs())
        throw argument_error("train_mlp: dataset width does not match topology input");
    if (dataset.size() == 0) throw argument_error("train_mlp: empty dataset");
    const int out_width = topo.outputs();
    const int label_max = out_width > 1 ? out_width - 1 : 1;
    for (int label : dataset.labels)
        if (label < 0 || label > label_max)
            throw argument_error("train_mlp: label outside output range");
    if (hyper.epochs < 0 || hyper.batch < 1)
        throw argument_error("train_mlp: bad hyperparameters");

    const size_t num_layers = topology.size() - 1;
    std::mt19937 rng(hyper.seed);

    std::vector<Eigen::MatrixXd> weights(num_layers);
    for (size_t l = 0; l < num_layers; ++l) {
        const int fan_in = topology[l];
        const int fan_out = topology[l + 1];
        const double r = std::sqrt(6.0 / (fan_in + fan_out));
        std::uniform_real_distribution<double> dist(-r, r);
        weights[l].resize(fan_in + (bias ? 1 : 0), fan_out);
        for (Eigen::Index i = 0; i < weights[l].rows(); ++i)
            for (Eigen::Index j = 0; j < weights[l].cols(); ++j)
                weights[l](i, j) = dist(rng);
        if (bias) weights[l].bottomRows(1).setZero();
    }

    const int n_samples = dataset.size();
    std::vector<int> order(n_samples);
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        double loss_sum = 0.0;
        long long loss_count = 0;

        for (int b0 = 0; b0 < n_samples; b0 += hyper.batch) {
            const int bsz = std::min(hyper.batch, n_samples - b0);
            Eigen::MatrixXd x(dataset.width(), bsz);
            Eigen::MatrixXd y = Eigen::MatrixXd::Zero(out_width, bsz);
            for (int s = 0; s < bsz; ++s) {
                const int idx = order[b0 + s];
                x.col(s) = dataset.features.col(idx);
                if (out_width > 1)
                    y(dataset.labels[idx], s) = 1.0;
                else
                    y(0, s) = dataset.labels[idx];
            }

            // Forward.
            std::vector<Eigen::MatrixXd> acts_aug(num_layers);  // layer inputs incl. bias row
            std::vector<Eigen::MatrixXd> acts(num_layers);      // layer outputs
            Eigen::MatrixXd a = x;
            for (size_t l = 0; l < num_layers; ++l) {
                acts_aug[l] = bias ? append_ones_row(a) : a;
                const Eigen::MatrixXd z = weights[l].transpose() * acts_aug[l];
                if (l + 1 < num_layers)
                    acts[l] = sigmoid_mat(z);
                else
                    acts[l] = out_width > 1 ? softmax_mat(z) : sigmoid_mat(z);
                a = acts[l];
            }

            const Eigen::MatrixXd& p = acts[num_layers - 1];
            for (int s = 0; s < bsz; ++s) {
                if (out_width > 1) {
                    loss_sum -= std::log(std::max(p(dataset.labels[order[b0 + s]], s), 1e-300));
                } else {
                    const double py = p(0, s);
                    const double t = y(0, s);
                    loss_sum -= t * std::log(std::max(py, 1e-300)) +
                                (1.0 - t) * std::log(std::max(1.0 - py, 1e-300));
                }
            }
            loss_count += bsz;

            // Backward. Both heads reduce to dZ = (p - y)/bsz under their
            // matching cross-entropy losses.
            Eigen::MatrixXd dz = (p - y) / bsz;
            for (size_t l = num_layers; l-- > 0;) {
                const Eigen::MatrixXd dw = acts_aug[l] * dz.transpose();
                if (l > 0) {
                    Eigen::MatrixXd da = weights[l].topRows(topology[l]) * dz;
                    const Eigen::MatrixXd& h = acts[l - 1];
                    dz = da.cwiseProduct(h.cwiseProduct((1.0 - h.array()).matrix()));
                }
                weights[l] -= hyper.lr * dw;
            }
        }
        if (stats) stats->epoch_losses.push_back(loss_sum / loss_count);
    }

    WeightFile wf;
    wf.topology = topology;
    wf.bias = bias;
    wf.seed = hyper.seed;
    wf.epochs = hyper.epochs;
    for (auto& w : weights) {
        LayerWeights lw;
        lw.w = std::move(w);
        wf.layers.push_back(std::move(lw));
    }
    return wf;
}

double float_accuracy(const WeightFile& wf, const Dataset& dataset) {
    if (dataset.size() == 0) throw argument_error("float_accuracy: empty dataset");
    if (dataset.width() != wf.topology.front())
        throw argument_error("float_accuracy: dataset width does not match topology");

    long long correct = 0;
    constexpr int kChunk = 512;
    for (int s0 = 0; s0 < dataset.size(); s0 += kChunk) {
        const int n = std::min(kChunk, dataset.size() - s0);
        Eigen::MatrixXd a = dataset.features.middleCols(s0, n);
        Eigen::MatrixXd z;
        for (size_t l = 0; l < wf.layers.size(); ++l) {
            const Eigen::MatrixXd ab = wf.bias ? append_ones_row(a) : a;
            z = wf.layers[l].w.transpose() * ab;
            if (l + 1 < wf.layers.size()) a = sigmoid_mat(z);
        }
        for (int s = 0; s < n; ++s) {
            Eigen::Index argmax = 0;
            if (z.rows() > 1)
                z.col(s).maxCoeff(&argmax);
            else
                argmax = z(0, s) > 0.0 ? 1 : 0;
            if (static_cast<int>(argmax) == dataset.labels[s0 + s]) ++correct;
        }
    }
    return static_cast<double>(correct) / dataset.size();
}

}  // namespace mcasim
