#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace mcasim {

/// One layer of trained weights. When the network uses bias inputs the
/// matrix has an extra final row holding the biases (driven by a constant
/// always-on input). levels holds signed quantized values in -31..31,
/// row-major, present only after quantization.
struct LayerWeights {
    Eigen::MatrixXd w;  // rows x cols (rows = fan-in, +1 if bias)
    double w_max = 0.0;
    bool quantized = false;
    std::vector<int> levels;
};

/// Portable, versioned text container for trained networks.
struct WeightFile {
    static constexpr int kVersion = 1;

    std::vector<int> topology;  // layer widths, input first
    bool bias = true;
    uint32_t seed = 0;
    int epochs = 0;
    std::vector<LayerWeights> layers;
};

void save_weight_file(const WeightFile& wf, const std::string& path);
WeightFile load_weight_file(const std::string& path);

/// Fills w_max = max|w| and the signed level grid for every layer.
/// An all-zero layer gets w_max = 1 and a warning on stderr.
WeightFile quantize_weights(WeightFile wf);

}  // namespace mcasim
