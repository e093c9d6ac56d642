#include "qv/forms.hpp"
#include "qv/geom3.hpp"
#include "qv/rep.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qv;

namespace {

const FieldCtx& F() { return FieldCtx::default_ctx(); }

// Small integers; with `cyclotomic` a quarter of the entries are also
// multiplied by a root of unity.  Random cyclotomic elimination grows fast,
// so those matrices are kept small.
Mat random_matrix(int rows, int cols, unsigned seed, bool cyclotomic = false) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> small(-3, 3);
    std::uniform_int_distribution<long> expo(0, 119);
    Mat m(F(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            m(i, j) = CycNum(F(), small(rng));
            if (cyclotomic && rng() % 4 == 0) m(i, j) = m(i, j).times_zeta(expo(rng));
        }
    return m;
}

MForm random_form(int nvars, int degree, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> small(-3, 3);
    MForm f(F(), nvars, degree);
    for (int i = 0; i < monomial_count(nvars, degree); ++i) f.coeff(i) = CycNum(F(), small(rng)) + CycNum::zeta(F(), 8 * small(rng));
    return f;
}

void BM_rref(benchmark::State& st) {
    Mat a = random_matrix(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) + 4, 1, st.range(1) != 0);
    for (auto _ : st) benchmark::DoNotOptimize(rref(a));
}

void BM_rref_serial(benchmark::State& st) {
    Mat a = random_matrix(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)) + 4, 1, st.range(1) != 0);
    for (auto _ : st) benchmark::DoNotOptimize(rref_serial(a));
}

void BM_mat_mul(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    Mat a = random_matrix(n, n, 2, true), b = random_matrix(n, n, 3, true);
    for (auto _ : st) benchmark::DoNotOptimize(a * b);
}

void BM_mat_mul_serial(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    Mat a = random_matrix(n, n, 2, true), b = random_matrix(n, n, 3, true);
    for (auto _ : st) benchmark::DoNotOptimize(mul_serial(a, b));
}

void BM_form_mul(benchmark::State& st) {
    MForm f = random_form(4, static_cast<int>(st.range(0)), 4), g = random_form(4, static_cast<int>(st.range(0)), 5);
    for (auto _ : st) benchmark::DoNotOptimize(f * g);
}

void BM_form_mul_serial(benchmark::State& st) {
    MForm f = random_form(4, static_cast<int>(st.range(0)), 4), g = random_form(4, static_cast<int>(st.range(0)), 5);
    for (auto _ : st) benchmark::DoNotOptimize(multiply_serial(f, g));
}

void BM_spin_cover(benchmark::State& st) {
    for (auto _ : st) {
        CoverGroup g(F(), spin_data(F()).lifts, {Perm::parse("(01)"), Perm::parse("(012345)")});
        benchmark::DoNotOptimize(g.order());
    }
}

}  // namespace

BENCHMARK(BM_rref)->Args({16, 0})->Args({32, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial)->Args({16, 0})->Args({32, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mat_mul)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mat_mul_serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_form_mul)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_form_mul_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spin_cover)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
