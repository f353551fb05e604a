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

#include <string>
#include <vector>

namespace combcool {

// Per-species cooling parameters. Intensities in W/cm^2, linewidths in
// ordinary Hz, everything else SI. Rate coefficients are empirical inputs:
// two_photon_rate_coefficient in Hz W^-2 cm^4, photoionization_coefficient
// in Hz W^-1 cm^2.
struct SpeciesParams {
    std::string name;
    double mass_kg = 0.0;
    double cooling_wavelength_m = 0.0;  // per-photon wavelength
    int photon_order = 2;               // k
    double recoil_velocity_m_s = 0.0;   // per scattering event, along the beam
    double emission_wavelength_m = 0.0; // spontaneous-emission recoil scale
    double effective_linewidth_hz = 0.0;      // quench-tunable
    double effective_linewidth_max_hz = 0.0;  // species ceiling
    double two_photon_rate_coefficient = 0.0;
    double photoionization_coefficient = 0.0;

    /// Throws ValidationError if any invariant is violated: positive mass and
    /// wavelengths, k >= 1, linewidth in (0, max], and the recoil-consistency
    /// check |recoil - k h/(m lambda)| within 1%.
    void validate() const;

    /// k h / (m lambda): one absorption event's velocity change.
    double recoil_from_first_principles() const;
};

/// Hydrogen 1S-2S parameters: mass 1.674e-27 kg, 243 nm two-photon cooling
/// light, 121 nm emission, 2.8e-7 Hz W^-2 cm^4 resonant rate coefficient,
/// 11.4 Hz W^-1 cm^2 photoionization, 50 MHz maximum quench linewidth,
/// 3.25 m/s recoil per scatter.
SpeciesParams hydrogen_defaults();

/// Name-keyed registry with the built-in entries plus user-loaded species.
class SpeciesRegistry {
public:
    SpeciesRegistry();  // seeds built-ins ("hydrogen")

    const SpeciesParams& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    void add(SpeciesParams params);  // validates; replaces same-name entry

    /// JSON array file of species records; validates every entry.
    void load_file(const std::string& path);
    void save_file(const std::string& path) const;

    std::vector<std::string> names() const;

private:
    std::vector<SpeciesParams> entries_;
};

SpeciesParams species_from_json_string(const std::string& text);
std::string species_to_json_string(const SpeciesParams& params);

}  // namespace combcool
