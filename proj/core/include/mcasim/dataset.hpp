#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace mcasim {

/// Flat feature vectors in [0,1] with integer class labels. Samples are
/// stored as columns.
struct Dataset {
    Eigen::MatrixXd features;  // width x samples
    std::vector<int> labels;
    int num_classes = 0;

    int width() const { return static_cast<int>(features.rows()); }
    int size() const { return static_cast<int>(features.cols()); }
};

/// MNIST IDX pair: big-endian magics 0x00000803 (images) and 0x00000801
/// (labels), unsigned pixel bytes normalized by 255.
Dataset load_mnist(const std::string& images_path, const std::string& labels_path);

/// CIFAR-10 binary batches (1 label byte + 3072 RGB plane bytes per record),
/// converted to grayscale with 0.299/0.587/0.114 luminance weights.
Dataset load_cifar10_grayscale(const std::vector<std::string>& batch_paths);

}  // namespace mcasim
