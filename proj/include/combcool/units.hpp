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

namespace combcool {

// Tagged physical quantity. Internal computations use bare doubles with
// unit-suffixed names (intensities in W/cm^2, linewidths in ordinary Hz);
// Quantity is the boundary type for config ingestion, CLI printing, and
// explicit conversions.
//
// Units within a dimension family interconvert exactly (one multiplicative
// factor via the family's reference unit); cross-family conversion throws.
// The spectroscopic family deliberately spans Hz, rad/s, cm^-1 and J:
// spectroscopists quote transition "energies" in any of the four
// (E = h nu, nu = c nu-bar).
enum class Unit {
    hertz,             // spectroscopic family reference
    radians_per_second,
    wavenumber_cm,     // cm^-1
    joule,
    watt_per_cm2,      // intensity family reference
    watt_per_m2,
    kelvin,
    meter_per_second,
    kilogram,
    meter,             // length family reference
    nanometer,
    second,
};

enum class Dimension {
    spectroscopic,  // frequency / angular frequency / wavenumber / photon energy
    intensity,
    temperature,
    velocity,
    mass,
    length,
    time,
};

struct Quantity {
    double value = 0.0;
    Unit unit = Unit::hertz;
};

Dimension dimension_of(Unit u);
std::string_view unit_name(Unit u);

/// Parse a unit name as written by unit_name() (e.g. "W/cm^2", "cm^-1").
Unit parse_unit(std::string_view name);

/// Exact dimensional conversion within a family; UnitError on mismatch.
Quantity convert(Quantity q, Unit target);

/// Convenience scalar forms used throughout.
double hz_to_angular(double hz);
double angular_to_hz(double rad_per_s);
double wavenumber_cm_to_hz(double per_cm);
double hz_to_wavenumber_cm(double hz);

}  // namespace combcool
