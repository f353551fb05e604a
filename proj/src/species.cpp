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

#include "combcool/species.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "combcool/constants.hpp"
#include "combcool/errors.hpp"

namespace combcool {

using nlohmann::json;

double SpeciesParams::recoil_from_first_principles() const {
    return photon_order * constants::planck / (mass_kg * cooling_wavelength_m);
}

void SpeciesParams::validate() const {
    if (name.empty()) throw ValidationError("species: name must be non-empty");
    if (!(mass_kg > 0.0)) throw ValidationError("species '" + name + "': mass must be > 0");
    if (!(cooling_wavelength_m > 0.0))
        throw ValidationError("species '" + name + "': cooling wavelength must be > 0");
    if (photon_order < 1)
        throw ValidationError("species '" + name + "': photon order must be >= 1");
    if (!(emission_wavelength_m > 0.0))
        throw ValidationError("species '" + name + "': emission wavelength must be > 0");
    if (!(effective_linewidth_max_hz > 0.0))
        throw ValidationError("species '" + name + "': max linewidth must be > 0");
    if (!(effective_linewidth_hz > 0.0) ||
        effective_linewidth_hz > effective_linewidth_max_hz)
        throw ValidationError("species '" + name +
                              "': linewidth must lie in (0, max]");
    if (two_photon_rate_coefficient < 0.0 || photoionization_coefficient < 0.0)
        throw ValidationError("species '" + name + "': rate coefficients must be >= 0");
    const double expected = recoil_from_first_principles();
    if (std::abs(recoil_velocity_m_s - expected) > 0.01 * expected)
        throw ValidationError("species '" + name +
                              "': recoil velocity inconsistent with k h/(m lambda) beyond 1%");
}

SpeciesParams hydrogen_defaults() {
    SpeciesParams h;
    h.name = "hydrogen";
    h.mass_kg = 1.674e-27;
    h.cooling_wavelength_m = 243e-9;
    h.photon_order = 2;
    h.recoil_velocity_m_s = 3.25;
    h.emission_wavelength_m = 121e-9;  // decay radiates near Lyman-alpha
    h.effective_linewidth_hz = 5e7;    // run at maximum quenching by default
    h.effective_linewidth_max_hz = 5e7;
    h.two_photon_rate_coefficient = 2.8e-7;
    h.photoionization_coefficient = 11.4;
    return h;
}

namespace {

SpeciesParams species_from_json(const json& j) {
    SpeciesParams s;
    try {
        s.name = j.at("name").get<std::string>();
        s.mass_kg = j.at("mass_kg").get<double>();
        s.cooling_wavelength_m = j.at("cooling_wavelength_m").get<double>();
        s.photon_order = j.at("photon_order").get<int>();
        s.recoil_velocity_m_s = j.at("recoil_velocity_m_s").get<double>();
        s.emission_wavelength_m = j.at("emission_wavelength_m").get<double>();
        s.effective_linewidth_hz = j.at("effective_linewidth_hz").get<double>();
        s.effective_linewidth_max_hz =
            j.at("effective_linewidth_max_hz").get<double>();
        s.two_photon_rate_coefficient =
            j.at("two_photon_rate_coefficient").get<double>();
        s.photoionization_coefficient =
            j.at("photoionization_coefficient").get<double>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("species record: ") + e.what());
    }
    s.validate();
    return s;
}

json species_to_json(const SpeciesParams& s) {
    return json{
        {"name", s.name},
        {"mass_kg", s.mass_kg},
        {"cooling_wavelength_m", s.cooling_wavelength_m},
        {"photon_order", s.photon_order},
        {"recoil_velocity_m_s", s.recoil_velocity_m_s},
        {"emission_wavelength_m", s.emission_wavelength_m},
        {"effective_linewidth_hz", s.effective_linewidth_hz},
        {"effective_linewidth_max_hz", s.effective_linewidth_max_hz},
        {"two_photon_rate_coefficient", s.two_photon_rate_coefficient},
        {"photoionization_coefficient", s.photoionization_coefficient},
    };
}

}  // namespace

SpeciesParams species_from_json_string(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ValidationError("species: malformed JSON");
    return species_from_json(j);
}

std::string species_to_json_string(const SpeciesParams& params) {
    return species_to_json(params).dump(2);
}

SpeciesRegistry::SpeciesRegistry() { entries_.push_back(hydrogen_defaults()); }

const SpeciesParams& SpeciesRegistry::get(const std::string& name) const {
    for (const auto& e : entries_) {
        if (e.name == name) return e;
    }
    throw ValidationError("unknown species: " + name);
}

bool SpeciesRegistry::contains(const std::string& name) const {
    for (const auto& e : entries_) {
        if (e.name == name) return true;
    }
    return false;
}

void SpeciesRegistry::add(SpeciesParams params) {
    params.validate();
    for (auto& e : entries_) {
        if (e.name == params.name) {
            e = std::move(params);
            return;
        }
    }
    entries_.push_back(std::move(params));
}

void SpeciesRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RuntimeFailure("cannot open species file: " + path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw ValidationError("species file " + path + ": malformed JSON");
    if (j.is_object()) {
        add(species_from_json(j));
        return;
    }
    if (!j.is_array())
        throw ValidationError("species file " + path +
                              ": expected a record or an array of records");
    for (const auto& rec : j) add(species_from_json(rec));
}

void SpeciesRegistry::save_file(const std::string& path) const {
    json arr = json::array();
    for (const auto& e : entries_) arr.push_back(species_to_json(e));
    std::ofstream out(path);
    if (!out) throw RuntimeFailure("cannot write species file: " + path);
    out << arr.dump(2) << '\n';
}

std::vector<std::string> SpeciesRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

}  // namespace combcool
