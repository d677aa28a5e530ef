#pragma once

#include <cstdint>
#include <vector>

#include "mcasim/dataset.hpp"
#include "mcasim/weight_file.hpp"

namespace mcasim {

struct TrainHyper {
    double lr = 0.3;
    int epochs = 15;
    int batch = 64;
    uint32_t seed = 1;
};

struct TrainStats {
    std::vector<double> epoch_losses;  // mean loss per epoch, pre-update per batch
};

/// Minibatch gradient descent with sigmoid hidden activations. The output
/// head is softmax cross-entropy during training (binary cross-entropy for a
/// single output); deployed inference stays on the sigmoid/argmax path.
/// Deterministic for a fixed seed.
WeightFile train_mlp(const std::vector<int>& topology, const Dataset& dataset,
                     const TrainHyper& hyper, bool bias = true,
                     TrainStats* stats = nullptr);

/// Reference accuracy of the float network: sigmoid hidden layers, argmax
/// over output pre-activations.
double float_accuracy(const WeightFile& wf, const Dataset& dataset);

}  // namespace mcasim
