#include <benchmark/benchmark.h>

#include <random>

#include "mcasim/crossbar.hpp"
#include "mcasim/interface_module.hpp"
#include "mcasim/memristor.hpp"
#include "mcasim/network.hpp"
#include "mcasim/weight_file.hpp"

namespace {

using namespace mcasim;

WeightFile random_net(int n0, int n1, int n2, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> wdist(-0.5, 0.5);
    WeightFile wf;
    wf.topology = {n0, n1, n2};
    wf.layers.resize(2);
    wf.layers[0].w = Eigen::MatrixXd::NullaryExpr(n0 + 1, n1, [&] { return wdist(rng); });
    wf.layers[1].w = Eigen::MatrixXd::NullaryExpr(n1 + 1, n2, [&] { return wdist(rng); });
    return quantize_weights(wf);
}

Eigen::VectorXd random_input(int n, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return Eigen::VectorXd::NullaryExpr(n, [&] { return unif(rng); });
}

void bm_im_evaluate(benchmark::State& state) {
    const IMParams im =
        calibrate(1e-3, 1e-6, make_im_params(DWParams{}, ClockSchedule{}), 4.0);
    double a = 3e-4, b = 1e-4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(a, b, im));
        std::swap(a, b);
    }
}
BENCHMARK(bm_im_evaluate);

void bm_program_to_level(benchmark::State& state) {
    const MemristorParams mp = MemristorParams::make_default();
    const WriteController ctrl;
    const int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(program_to_level({mp.w_off}, level, ctrl, mp));
    }
}
BENCHMARK(bm_program_to_level)->Arg(1)->Arg(16)->Arg(31);

void bm_forward_device(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    NetworkOptions opts;
    opts.policy = CalibrationPolicy::TrainedScale;
    const Network net = build_network(random_net(n, n / 2, 4, 11), opts);
    const Eigen::VectorXd x = random_input(n, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward_device(net, x));
    }
}
BENCHMARK(bm_forward_device)->Arg(16)->Arg(64)->Arg(256);

void bm_forward_behavioral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    NetworkOptions opts;
    opts.policy = CalibrationPolicy::TrainedScale;
    const Network net = build_network(random_net(n, n / 2, 4, 11), opts);
    const Eigen::VectorXd x = random_input(n, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward_behavioral(net, x));
    }
}
BENCHMARK(bm_forward_behavioral)->Arg(16)->Arg(64)->Arg(256);

void bm_program_layer_device(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> wdist(-1.0, 1.0);
    const Eigen::MatrixXd w =
        Eigen::MatrixXd::NullaryExpr(n, n, [&] { return wdist(rng); });
    const MemristorParams mp = MemristorParams::make_default();
    for (auto _ : state) {
        benchmark::DoNotOptimize(program_layer(w, Fidelity::Device, mp));
    }
}
BENCHMARK(bm_program_layer_device)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
