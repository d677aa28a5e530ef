#include "mcasim/dataset.hpp"

#include <cstdint>
#include <fstream>

#include "mcasim/errors.hpp"

namespace mcasim {

namespace {

constexpr uint32_t kImagesMagic = 0x00000803;
constexpr uint32_t kLabelsMagic = 0x00000801;

uint32_t read_be32(std::istream& in, const std::string& path) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw io_error("truncated header in " + path);
    return (uint32_t(b[0]) << 24) | (uint32_t(b[1]) << 16) |
           (uint32_t(b[2]) << 8) | uint32_t(b[3]);
}

std::ifstream open_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    return in;
}

}  // namespace

Dataset load_mnist(const std::string& images_path, const std::string& labels_path) {
    auto img = open_binary(images_path);
    if (read_be32(img, images_path) != kImagesMagic)
        throw io_error("bad IDX image magic in " + images_path);
    const uint32_t count = read_be32(img, images_path);
    const uint32_t rows = read_be32(img, images_path);
    const uint32_t cols = read_be32(img, images_path);
    const size_t pixels = size_t(rows) * cols;

    auto lbl = open_binary(labels_path);
    if (read_be32(lbl, labels_path) != kLabelsMagic)
        throw io_error("bad IDX label magic in " + labels_path);
    const uint32_t label_count = read_be32(lbl, labels_path);
    if (label_count != count)
        throw io_error("image/label count mismatch: " + images_path);

    Dataset ds;
    ds.num_classes = 10;
    ds.features.resize(pixels, count);
    ds.labels.resize(count);

    std::vector<unsigned char> buf(pixels);
    for (uint32_t s = 0; s < count; ++s) {
        if (!img.read(reinterpret_cast<char*>(buf.data()), pixels))
            throw io_error("truncated image data in " + images_path);
        for (size_t p = 0; p < pixels; ++p)
            ds.features(p, s) = buf[p] / 255.0;
    }
    std::vector<unsigned char> lab(count);
    if (!lbl.read(reinterpret_cast<char*>(lab.data()), count))
        throw io_error("truncated label data in " + labels_path);
    for (uint32_t s = 0; s < count; ++s) ds.labels[s] = lab[s];
    return ds;
}

Dataset load_cifar10_grayscale(const std::vector<std::string>& batch_paths) {
    constexpr int kPixels = 32 * 32;
    constexpr int kRecord = 1 + 3 * kPixels;

    std::vector<std::vector<unsigned char>> records;
    for (const auto& path : batch_paths) {
        auto in = open_binary(path);
        in.seekg(0, std::ios::end);
        const auto bytes = static_cast<long long>(in.tellg());
        if (bytes % kRecord != 0)
            throw io_error("record size mismatch in " + path);
        in.seekg(0);
        const auto n = bytes / kRecord;
        for (long long r = 0; r < n; ++r) {
            std::vector<unsigned char> rec(kRecord);
            if (!in.read(reinterpret_cast<char*>(rec.data()), kRecord))
                throw io_error("truncated record in " + path);
            if (rec[0] > 9) throw io_error("label out of range in " + path);
            records.push_back(std::move(rec));
        }
    }

    Dataset ds;
    ds.num_classes = 10;
    ds.features.resize(kPixels, records.size());
    ds.labels.resize(records.size());
    for (size_t s = 0; s < records.size(); ++s) {
        const auto& rec = records[s];
        ds.labels[s] = rec[0];
        for (int p = 0; p < kPixels; ++p) {
            const double r = rec[1 + p];
            const double g = rec[1 + kPixels + p];
            const double b = rec[1 + 2 * kPixels + p];
            ds.features(p, s) = (0.299 * r + 0.587 * g + 0.114 * b) / 255.0;
        }
    }
    return ds;
}

}  // namespace mcasim
