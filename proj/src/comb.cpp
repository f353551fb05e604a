/*
   Copyright 2026 The combcool Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "combcool/comb.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "combcool/errors.hpp"

namespace combcool {

CombSpectrum CombSpectrum::build(double carrier_hz, double rep_rate_hz,
                                 double duty_cycle,
                                 double avg_intensity_w_cm2,
                                 std::optional<std::int64_t> line_count) {
    if (!(carrier_hz > 0.0))
        throw ValidationError("comb: carrier frequency must be > 0");
    if (!(rep_rate_hz > 0.0))
        throw ValidationError("comb: repetition rate must be > 0");
    if (!(duty_cycle > 0.0) || duty_cycle > 1.0)
        throw ValidationError("comb: duty cycle must lie in (0, 1]");
    if (avg_intensity_w_cm2 < 0.0)
        throw ValidationError("comb: intensity must be >= 0");

    std::int64_t n;
    if (line_count) {
        n = *line_count;
        if (n < 1) throw ValidationError("comb: line count must be >= 1");
    } else {
        n = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::llround(1.0 / duty_cycle)));
    }

    CombSpectrum comb;
    comb.carrier_hz_ = carrier_hz;
    comb.rep_rate_hz_ = rep_rate_hz;
    comb.duty_cycle_ = duty_cycle;
    comb.avg_intensity_w_cm2_ = avg_intensity_w_cm2;
    comb.line_count_ = n;
    comb.index_min_ = -((n - 1) / 2);  // even N: extra line on the +k side

    // Every populated line must sit at a positive frequency.
    if (comb.line_frequency_unchecked(comb.index_min_) <= 0.0)
        throw ValidationError(
            "comb: lowest line frequency is non-positive (carrier too small "
            "for this span)");
    return comb;
}

double CombSpectrum::line_frequency_hz(std::int64_t k) const {
    if (!contains_index(k))
        throw ValidationError("comb: line index " + std::to_string(k) +
                              " outside [" + std::to_string(index_min()) +
                              ", " + std::to_string(index_max()) + "]");
    return line_frequency_unchecked(k);
}

namespace {

// Integer q and residual r = f - (base + q*spacing) with
// r in (-spacing/2, +spacing/2]; ties resolve to +spacing/2. A correction
// loop absorbs the rare 1-ulp rounding spill so the bound is strict.
CombSpectrum::NearestLine nearest_tooth(double f_hz, double base_hz,
                                        double spacing_hz) {
    const double x = (f_hz - base_hz) / spacing_hz;
    auto index = static_cast<std::int64_t>(std::ceil(x - 0.5));
    double residual = f_hz - (base_hz + static_cast<double>(index) * spacing_hz);
    while (residual > 0.5 * spacing_hz) {
        ++index;
        residual = f_hz - (base_hz + static_cast<double>(index) * spacing_hz);
    }
    while (residual <= -0.5 * spacing_hz) {
        --index;
        residual = f_hz - (base_hz + static_cast<double>(index) * spacing_hz);
    }
    return {index, residual};
}

}  // namespace

CombSpectrum::NearestLine CombSpectrum::nearest_line(double f_hz) const {
    if (!(f_hz > 0.0)) throw ValidationError("comb: frequency must be > 0");
    return nearest_tooth(f_hz, carrier_hz_, rep_rate_hz_);
}

CombSpectrum::NearestLine CombSpectrum::nearest_two_photon_sum(
    double f_hz) const {
    if (!(f_hz > 0.0)) throw ValidationError("comb: frequency must be > 0");
    return nearest_tooth(f_hz, 2.0 * carrier_hz_, rep_rate_hz_);
}

}  // namespace combcool
