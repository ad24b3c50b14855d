// Benchmark of the graded tensor product: OpenMP kernel vs serial reference.
// Usage: bench_tensor [rank] [trunc] [reps]
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "loopalg/tensor.hpp"

using namespace loopalg;

namespace {

TruncatedTensor dense_tensor(const HomologyRef &h, int trunc, std::mt19937_64 &rng) {
    TruncatedTensor t(h, trunc);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int m = 0; m <= trunc; ++m) {
        const std::size_t n = TruncatedTensor::block_size(h->rank(), m);
        for (std::size_t i = 0; i < n; ++i) t.add_coef(m, i, Rat(coef(rng)));
    }
    return t;
}

template <typename F> double time_ms(F &&f, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

} // namespace

int main(int argc, char **argv) {
    const int rank = argc > 1 ? std::atoi(argv[1]) : 4;
    const int trunc = argc > 2 ? std::atoi(argv[2]) : 6;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 5;

    std::vector<std::string> labels;
    for (int i = 0; i < rank; ++i) labels.push_back("X" + std::to_string(i + 1));
    const auto h = Homology::free_basis(labels);

    std::mt19937_64 rng(20240901);
    const TruncatedTensor u = dense_tensor(h, trunc, rng);
    const TruncatedTensor v = dense_tensor(h, trunc, rng);

    TruncatedTensor serial = mul_serial(u, v);
    TruncatedTensor parallel = mul(u, v);
    if (!(serial == parallel)) {
        std::cerr << "FAIL: kernels disagree\n";
        return 1;
    }

    const double t_serial = time_ms([&] { (void)mul_serial(u, v); }, reps);
    const double t_omp = time_ms([&] { (void)mul(u, v); }, reps);

    std::cout << "tensor product, rank " << rank << ", trunc " << trunc
              << " (dense random, " << reps << " reps)\n";
    std::cout << "  serial reference : " << t_serial << " ms\n";
    std::cout << "  openmp kernel    : " << t_omp << " ms\n";
    std::cout << "  speedup          : " << (t_omp > 0 ? t_serial / t_omp : 0.0) << "x\n";
    return 0;
}
