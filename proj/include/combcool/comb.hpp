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

#pragma once

#include <cstdint>
#include <optional>

namespace combcool {

// Frequency-domain model of a transform-limited mode-locked pulse train:
// N equally spaced lines nu_k = nu_car + k nu_rep with equal intensities and
// zero relative phase (flat-top idealization; a sinc-field pulse has exactly
// this hard-edged flat spectrum). Carrier-envelope offset is absorbed into
// nu_car. Immutable after construction.
class CombSpectrum {
public:
    /// N defaults to round(1/duty_cycle), minimum 1; line_count overrides.
    /// The index range is centered on the carrier, the odd line for even N
    /// going to +k. Throws ValidationError on non-positive carrier/rep rate,
    /// duty cycle outside (0,1], or negative intensity.
    static CombSpectrum build(double carrier_hz, double rep_rate_hz,
                              double duty_cycle, double avg_intensity_w_cm2,
                              std::optional<std::int64_t> line_count = {});

    double carrier_hz() const { return carrier_hz_; }
    double rep_rate_hz() const { return rep_rate_hz_; }
    double duty_cycle() const { return duty_cycle_; }
    std::int64_t line_count() const { return line_count_; }
    std::int64_t index_min() const { return index_min_; }
    std::int64_t index_max() const { return index_min_ + line_count_ - 1; }
    bool contains_index(std::int64_t k) const {
        return k >= index_min() && k <= index_max();
    }

    /// Total time-averaged intensity; conserved by construction (stored, the
    /// per-line value is derived from it).
    double total_intensity_w_cm2() const { return avg_intensity_w_cm2_; }
    double line_intensity_w_cm2() const {
        return avg_intensity_w_cm2_ / static_cast<double>(line_count_);
    }

    /// nu_car + k nu_rep; throws ValidationError for k outside the comb.
    double line_frequency_hz(std::int64_t k) const;

    struct NearestLine {
        std::int64_t index = 0;
        double residual_hz = 0.0;  // f - line_frequency(index)
    };

    /// Nearest fundamental-comb line to f. Residual lies in
    /// (-nu_rep/2, +nu_rep/2]; a tie resolves to the positive residual.
    /// The index is the modular-arithmetic one and may fall outside the
    /// comb's populated range; callers needing coverage check contains_index.
    NearestLine nearest_line(double f_hz) const;

    /// Nearest tooth of the two-photon sum comb 2 nu_car + m nu_rep.
    /// Same residual convention as nearest_line.
    NearestLine nearest_two_photon_sum(double f_hz) const;

private:
    CombSpectrum() = default;

    double line_frequency_unchecked(std::int64_t k) const {
        return carrier_hz_ + static_cast<double>(k) * rep_rate_hz_;
    }

    double carrier_hz_ = 0.0;
    double rep_rate_hz_ = 0.0;
    double duty_cycle_ = 1.0;
    double avg_intensity_w_cm2_ = 0.0;
    std::int64_t line_count_ = 1;
    std::int64_t index_min_ = 0;
};

}  // namespace combcool
