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

#include <numbers>

namespace combcool::constants {

// CODATA 2018. h, c, k_B are exact by SI definition.
inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double two_pi = 2.0 * pi;

/// h — Planck constant [J s], exact.
inline constexpr double planck = 6.62607015e-34;

/// hbar — reduced Planck constant [J s].
inline constexpr double planck_reduced = planck / two_pi;

/// c — speed of light in vacuum [m/s], exact.
inline constexpr double speed_of_light = 299792458.0;

/// c in cm/s, for wavenumber (cm^-1) <-> Hz conversions.
inline constexpr double speed_of_light_cm = speed_of_light * 100.0;

/// k_B — Boltzmann constant [J/K], exact.
inline constexpr double boltzmann = 1.380649e-23;

}  // namespace combcool::constants
