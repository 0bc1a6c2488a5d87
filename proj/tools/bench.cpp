// Benchmark: OpenMP kernels against the serial reference paths.
//
//   ./bench [n_zeros]   (default 20000)
//
// Times the zero scan, the derivative batch, the moment folds, and the
// spectrum kernel in both modes and prints the speedup. The serial path is
// the same fixed-chunk fold without the pragma, so values must agree
// bit-for-bit; the benchmark asserts that as it goes.

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "zetaderiv/derivative.hpp"
#include "zetaderiv/statistics.hpp"

using namespace zetaderiv;

namespace {

template <class F>
double timed(F&& f) {
    double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-22s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n",
                name, serial_s, parallel_s, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
    long long n = argc > 1 ? std::atoll(argv[1]) : 20000;
    std::printf("benchmarking with %lld zeros, %d threads\n", n,
                omp_get_max_threads());

    double t_hi = 2.0 * M_PI * std::exp(1.0);
    {
        // rough upper height for the first n zeros
        double t = 100.0;
        for (int i = 0; i < 50; ++i) {
            double f = expected_count(t) - static_cast<double>(n);
            t -= f / (detail::theta_deriv(t) / M_PI);
        }
        t_hi = t + 10.0;
    }

    ScanOptions ser, par;
    ser.parallel = false;
    par.parallel = true;

    std::vector<ZeroRecord> zser, zpar;
    double ts_scan = timed([&] {
        zser = scan_zeros(7.0, t_hi, ser).first;
    });
    double tp_scan = timed([&] {
        zpar = scan_zeros(7.0, t_hi, par).first;
    });
    if (zser.size() != zpar.size()) {
        std::fprintf(stderr, "scan size mismatch\n");
        return 1;
    }
    for (std::size_t i = 0; i < zser.size(); ++i) {
        if (zser[i].gamma != zpar[i].gamma) {
            std::fprintf(stderr, "scan bit mismatch at %zu\n", i);
            return 1;
        }
    }
    report("zero scan", ts_scan, tp_scan);
    if (static_cast<long long>(zser.size()) > n) zser.resize(n);

    std::vector<DerivativeRecord> dser, dpar;
    double ts_d = timed([&] {
        dser = derivatives_batch(zser, {}, {}, false);
    });
    double tp_d = timed([&] {
        dpar = derivatives_batch(zser, {}, {}, true);
    });
    for (std::size_t i = 0; i < dser.size(); ++i) {
        if (dser[i].zprime != dpar[i].zprime) {
            std::fprintf(stderr, "derivative bit mismatch at %zu\n", i);
            return 1;
        }
    }
    report("derivative batch", ts_d, tp_d);

    DerivBlock block = DerivBlock::from_records(dser);
    double mser = 0.0, mpar = 0.0;
    double ts_m = timed([&] {
        for (int tl : {-2, 2, 4, 6, 8, 10, 12}) {
            mser += moment(block, tl, {false}).raw;
        }
    });
    double tp_m = timed([&] {
        for (int tl : {-2, 2, 4, 6, 8, 10, 12}) {
            mpar += moment(block, tl, {true}).raw;
        }
    });
    if (mser != mpar) {
        std::fprintf(stderr, "moment bit mismatch\n");
        return 1;
    }
    report("moment folds", ts_m, tp_m);

    SpectrumSeries sser, spar;
    double ts_s = timed([&] {
        sser = spectrum(block, 0.05, 1024, SpectrumSeries::Variant::index,
                        block.t_hi(), {false});
    });
    double tp_s = timed([&] {
        spar = spectrum(block, 0.05, 1024, SpectrumSeries::Variant::index,
                        block.t_hi(), {true});
    });
    for (std::size_t i = 0; i < sser.values.size(); ++i) {
        if (sser.values[i] != spar.values[i]) {
            std::fprintf(stderr, "spectrum bit mismatch at %zu\n", i);
            return 1;
        }
    }
    report("spectrum kernel", ts_s, tp_s);
    return 0;
}
