// SPDX-License-Identifier: Apache-2.0
//
// Identifies one complex tap from a short impulsive-noise record with the
// batch MCCC solver, the recursive MCCC filter and least squares.

#include <cstdio>
#include <vector>

#include "ccorr/ccorr.hpp"

int main() {
    using namespace ccorr;
    const ComplexScalar truth(0.8, -0.4);
    const NoiseModel noise = NoiseModel::impulsive_default();
    Engine eng(7);

    std::vector<ComplexScalar> xs, ds;
    for (int n = 0; n < 200; ++n) {
        const ComplexScalar x(standard_normal(eng) / std::numbers::sqrt2, standard_normal(eng) / std::numbers::sqrt2);
        xs.push_back(x);
        ds.push_back(truth * x + sample_noise(noise, eng));
    }
    const PairedDataset data{ComplexSampleSet(xs), ComplexSampleSet(ds)};
    const KernelBandwidth bw(0.5);

    const FilterWeight ls = least_squares_weight(data);
    FixedPointConfig fp;
    fp.initial_weight = ls;
    const auto batch = batch_fixed_point(data, bw, fp);

    RecursiveState state = recursive_init({});
    for (std::size_t n = 0; n < data.size(); ++n) state = recursive_update(state, xs[n], ds[n], bw);

    const FilterWeight w_true(truth);
    std::printf("true weight       %+.6f %+.6fj\n", truth.real(), truth.imag());
    std::printf("least squares     %+.6f %+.6fj  WSNR %6.2f dB\n", ls.re(), ls.im(), wsnr_db(w_true, ls, 300));
    std::printf("MCCC batch        %+.6f %+.6fj  WSNR %6.2f dB (%d iterations)\n", batch.weight.re(),
                batch.weight.im(), wsnr_db(w_true, batch.weight, 300), batch.iterations);
    std::printf("MCCC recursive    %+.6f %+.6fj  WSNR %6.2f dB\n", state.weight().re(), state.weight().im(),
                wsnr_db(w_true, state.weight(), 300));
    return 0;
}
