#include "mcasim/weight_file.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcasim/crossbar.hpp"
#include "mcasim/errors.hpp"

namespace mcasim {

namespace {

constexpr const char* kHeader = "mcasim-weights";

// %.17g round-trips IEEE doubles exactly through text.
std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string expect_token(std::istream& in, const std::string& what) {
    std::string tok;
    if (!(in >> tok)) throw io_error("weight file: truncated, expected " + what);
    return tok;
}

void expect_keyword(std::istream& in, const std::string& kw) {
    const std::string tok = expect_token(in, kw);
    if (tok != kw) throw io_error("weight file: expected '" + kw + "', got '" + tok + "'");
}

template <typename T>
T read_value(std::istream& in, const std::string& what) {
    T v;
    if (!(in >> v)) throw io_error("weight file: bad or missing " + what);
    return v;
}

}  // namespace

void save_weight_file(const WeightFile& wf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);

    out << kHeader << ' ' << WeightFile::kVersion << '\n';
    out << "topology";
    for (int s : wf.topology) out << ' ' << s;
    out << '\n';
    out << "bias " << (wf.bias ? 1 : 0) << '\n';
    out << "seed " << wf.seed << '\n';
    out << "epochs " << wf.epochs << '\n';
    out << "layers " << wf.layers.size() << '\n';

    for (size_t l = 0; l < wf.layers.size(); ++l) {
        const auto& lw = wf.layers[l];
        out << "layer " << l << ' ' << lw.w.rows() << ' ' << lw.w.cols()
            << " w_max " << fmt_double(lw.w_max)
            << " quantized " << (lw.quantized ? 1 : 0) << '\n';
        for (Eigen::Index i = 0; i < lw.w.rows(); ++i) {
            for (Eigen::Index j = 0; j < lw.w.cols(); ++j)
                out << (j ? " " : "") << fmt_double(lw.w(i, j));
            out << '\n';
        }
        if (lw.quantized) {
            out << "levels\n";
            for (Eigen::Index i = 0; i < lw.w.rows(); ++i) {
                for (Eigen::Index j = 0; j < lw.w.cols(); ++j)
                    out << (j ? " " : "")
                        << lw.levels[static_cast<size_t>(i) * lw.w.cols() + j];
                out << '\n';
            }
        }
    }
    if (!out) throw io_error("write failure on " + path);
}

WeightFile load_weight_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);

    const std::string header = expect_token(in, "header");
    if (header != kHeader) throw io_error("weight file: bad header in " + path);
    const int version = read_value<int>(in, "version");
    if (version != WeightFile::kVersion)
        throw io_error("weight file: unsupported version " + std::to_string(version));

    WeightFile wf;
    expect_keyword(in, "topology");
    {
        std::string line;
        std::getline(in, line);
        std::istringstream ls(line);
        int s;
        while (ls >> s) wf.topology.push_back(s);
    }
    if (wf.topology.size() < 2) throw io_error("weight file: topology needs >= 2 layers");

    expect_keyword(in, "bias");
    wf.bias = read_value<int>(in, "bias flag") != 0;
    expect_keyword(in, "seed");
    wf.seed = read_value<uint32_t>(in, "seed");
    expect_keyword(in, "epochs");
    wf.epochs = read_value<int>(in, "epochs");
    expect_keyword(in, "layers");
    const auto layer_count = read_value<size_t>(in, "layer count");
    if (layer_count != wf.topology.size() - 1)
        throw io_error("weight file: layer count does not match topology");

    for (size_t l = 0; l < layer_count; ++l) {
        expect_keyword(in, "layer");
        const auto idx = read_value<size_t>(in, "layer index");
        if (idx != l) throw io_error("weight file: layer index out of order");
        const auto rows = read_value<Eigen::Index>(in, "rows");
        const auto cols = read_value<Eigen::Index>(in, "cols");
        const Eigen::Index expect_rows = wf.topology[l] + (wf.bias ? 1 : 0);
        if (rows != expect_rows || cols != wf.topology[l + 1])
            throw io_error("weight file: layer shape does not match topology");
        expect_keyword(in, "w_max");
        LayerWeights lw;
        lw.w_max = read_value<double>(in, "w_max");
        expect_keyword(in, "quantized");
        lw.quantized = read_value<int>(in, "quantized flag") != 0;
        lw.w.resize(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j)
                lw.w(i, j) = read_value<double>(in, "weight value");
        if (lw.quantized) {
            if (lw.w_max <= 0.0) throw io_error("weight file: quantized layer with w_max <= 0");
            expect_keyword(in, "levels");
            lw.levels.resize(static_cast<size_t>(rows) * cols);
            for (auto& v : lw.levels) {
                v = read_value<int>(in, "level value");
                if (v < -kLevelCount || v > kLevelCount)
                    throw io_error("weight file: level out of range");
            }
        }
        wf.layers.push_back(std::move(lw));
    }
    return wf;
}

WeightFile quantize_weights(WeightFile wf) {
    for (size_t l = 0; l < wf.layers.size(); ++l) {
        auto& lw = wf.layers[l];
        lw.w_max = lw.w.cwiseAbs().maxCoeff();
        if (lw.w_max <= 0.0) {
            std::cerr << "warning: layer " << l << " is all zero, using w_max = 1\n";
            lw.w_max = 1.0;
        }
        lw.levels.resize(static_cast<size_t>(lw.w.rows()) * lw.w.cols());
        for (Eigen::Index i = 0; i < lw.w.rows(); ++i) {
            for (Eigen::Index j = 0; j < lw.w.cols(); ++j) {
                const WeightLevel q = quantize_weight(lw.w(i, j), lw.w_max);
                lw.levels[static_cast<size_t>(i) * lw.w.cols() + j] = q.sign * q.magnitude;
            }
        }
        lw.quantized = true;
    }
    return wf;
}

}  // namespace mcasim
