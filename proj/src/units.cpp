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

#include "combcool/units.hpp"

#include <array>

#include "combcool/constants.hpp"
#include "combcool/errors.hpp"

namespace combcool {

namespace {

struct UnitInfo {
    Unit unit;
    Dimension dim;
    // Multiply by this to reach the family's reference unit.
    double to_reference;
    std::string_view name;
};

constexpr std::array<UnitInfo, 12> kUnits{{
    {Unit::hertz, Dimension::spectroscopic, 1.0, "Hz"},
    {Unit::radians_per_second, Dimension::spectroscopic,
     1.0 / constants::two_pi, "rad/s"},
    {Unit::wavenumber_cm, Dimension::spectroscopic,
     constants::speed_of_light_cm, "cm^-1"},
    {Unit::joule, Dimension::spectroscopic, 1.0 / constants::planck, "J"},
    {Unit::watt_per_cm2, Dimension::intensity, 1.0, "W/cm^2"},
    {Unit::watt_per_m2, Dimension::intensity, 1.0e-4, "W/m^2"},
    {Unit::kelvin, Dimension::temperature, 1.0, "K"},
    {Unit::meter_per_second, Dimension::velocity, 1.0, "m/s"},
    {Unit::kilogram, Dimension::mass, 1.0, "kg"},
    {Unit::meter, Dimension::length, 1.0, "m"},
    {Unit::nanometer, Dimension::length, 1.0e-9, "nm"},
    {Unit::second, Dimension::time, 1.0, "s"},
}};

const UnitInfo& info(Unit u) {
    for (const auto& e : kUnits) {
        if (e.unit == u) return e;
    }
    throw UnitError("unknown unit tag");
}

}  // namespace

Dimension dimension_of(Unit u) { return info(u).dim; }

std::string_view unit_name(Unit u) { return info(u).name; }

Unit parse_unit(std::string_view name) {
    for (const auto& e : kUnits) {
        if (e.name == name) return e.unit;
    }
    throw UnitError("unknown unit name: " + std::string(name));
}

Quantity convert(Quantity q, Unit target) {
    const UnitInfo& from = info(q.unit);
    const UnitInfo& to = info(target);
    if (from.dim != to.dim) {
        throw UnitError("cannot convert " + std::string(from.name) + " to " +
                        std::string(to.name) + ": incompatible dimensions");
    }
    if (q.unit == target) return q;
    // Single multiply keeps zero exact and round trips at ulp scale.
    return Quantity{q.value * (from.to_reference / to.to_reference), target};
}

double hz_to_angular(double hz) { return hz * constants::two_pi; }
double angular_to_hz(double rad_per_s) { return rad_per_s / constants::two_pi; }
double wavenumber_cm_to_hz(double per_cm) {
    return per_cm * constants::speed_of_light_cm;
}
double hz_to_wavenumber_cm(double hz) {
    return hz / constants::speed_of_light_cm;
}

}  // namespace combcool
