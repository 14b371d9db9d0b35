#include "nanoring/config.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nanoring {

namespace {

std::string trim(const std::string& s) {
    const size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

KeyValueFile KeyValueFile::parse_string(const std::string& text) {
    KeyValueFile kv;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        kv.set(section, key, value);
    }
    return kv;
}

void KeyValueFile::set(const std::string& section, const std::string& key,
                       const std::string& value) {
    values_[section + "." + key] = value;
}

bool KeyValueFile::has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) > 0;
}

std::string KeyValueFile::get(const std::string& section, const std::string& key,
                              const std::string& fallback) const {
    const auto it = values_.find(section + "." + key);
    return it == values_.end() ? fallback : it->second;
}

double KeyValueFile::get_double(const std::string& section, const std::string& key,
                                double fallback) const {
    if (!has(section, key)) return fallback;
    const std::string s = get(section, key, "");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError("bad number for " + section + "." + key + ": " + s);
    return v;
}

int KeyValueFile::get_int(const std::string& section, const std::string& key, int fallback) const {
    const double v = get_double(section, key, fallback);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError(section + "." + key + " must be an integer");
    return i;
}

RunConfig RunConfig::from_file(const std::string& path) {
    return from_kv(KeyValueFile::parse_file(path));
}

RunConfig RunConfig::from_kv(const KeyValueFile& kv) {
    RunConfig cfg;
    cfg.ring.radius = kv.get_double("ring", "radius", cfg.ring.radius);
    cfg.ring.m_max = kv.get_int("ring", "m_max", cfg.ring.m_max);

    cfg.laser.intensity = kv.get_double("laser", "intensity", cfg.laser.intensity);
    cfg.laser.photon_energy = kv.get_double("laser", "photon_energy", cfg.laser.photon_energy);
    cfg.laser.beta = kv.get_double("laser", "beta", cfg.laser.beta);
    cfg.laser.duration_oc = kv.get_double("laser", "duration_oc", cfg.laser.duration_oc);
    cfg.laser.ramp_oc = kv.get_double("laser", "ramp_oc", cfg.laser.ramp_oc);
    cfg.laser.helicity = kv.get_int("laser", "helicity", cfg.laser.helicity);

    const std::string pump = kv.get("pump", "mode", "none");
    if (pump == "none") cfg.pump = PumpState::None;
    else if (pump == "plus" || pump == "+1") cfg.pump = PumpState::Positive;
    else if (pump == "minus" || pump == "-1") cfg.pump = PumpState::Negative;
    else throw ConfigError("pump.mode must be none, plus or minus");

    cfg.numerics.steps_per_oc = kv.get_int("numerics", "steps_per_oc", cfg.numerics.steps_per_oc);
    cfg.numerics.samples_per_oc =
        kv.get_int("numerics", "samples_per_oc", cfg.numerics.samples_per_oc);

    cfg.sigma0 = kv.get_double("spectral", "sigma0", cfg.sigma0);
    cfg.e_min = kv.get_double("spectral", "e_min", cfg.e_min);
    cfg.e_max = kv.get_double("spectral", "e_max", cfg.e_max);
    cfg.e_step = kv.get_double("spectral", "e_step", cfg.e_step);
    cfg.band_halfwidth = kv.get_double("spectral", "band_halfwidth", cfg.band_halfwidth);
    cfg.threshold = kv.get_double("spectral", "threshold", cfg.threshold);
    cfg.allow_band_overlap = kv.get_int("spectral", "allow_band_overlap", cfg.allow_band_overlap ? 1 : 0) != 0;
    cfg.cwt_stride = static_cast<size_t>(kv.get_int("spectral", "time_stride",
                                                    static_cast<int>(cfg.cwt_stride)));

    cfg.lz_threshold = kv.get_double("logic", "lz_threshold", cfg.lz_threshold);
    cfg.tail_oc = kv.get_double("logic", "tail_oc", cfg.tail_oc);
    cfg.pump_duration_oc = kv.get_double("logic", "pump_duration_oc", cfg.pump_duration_oc);
    cfg.output_dir = kv.get("output", "dir", cfg.output_dir);

    cfg.ring.validate();
    cfg.laser.validate();
    if (cfg.sigma0 <= 0.0) throw ConfigError("spectral.sigma0 must be > 0");
    if (cfg.threshold <= 0.0) throw ConfigError("spectral.threshold must be > 0");
    if (cfg.lz_threshold <= 0.0) throw ConfigError("logic.lz_threshold must be > 0");
    if (cfg.tail_oc < 0.0) throw ConfigError("logic.tail_oc must be >= 0");
    if (cfg.pump_duration_oc < 2.0 * cfg.laser.ramp_oc)
        throw ConfigError("logic.pump_duration_oc shorter than the ramps");
    return cfg;
}

void RunConfig::warn_out_of_range() const {
    auto warn = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
    if (laser.intensity > 0.0 && (laser.intensity < 1e10 || laser.intensity > 1e14))
        warn("intensity " + std::to_string(laser.intensity) + " W/cm^2 outside studied range 1e10-1e14");
    if (laser.photon_energy < 0.1 || laser.photon_energy > 2.0)
        warn("photon energy " + std::to_string(laser.photon_energy) + " eV outside studied range 0.1-2");
    if (ring.radius < 2.7 || ring.radius > 100.0)
        warn("radius " + std::to_string(ring.radius) + " a0 outside studied range 2.7-100");
}

std::vector<double> RunConfig::energies() const {
    const double w = laser.photon_energy;
    const double lo = e_min > 0.0 ? e_min : w / 8.0;
    const double hi = e_max > 0.0 ? e_max : 6.0 * w;
    const double step = e_step > 0.0 ? e_step : w / 100.0;
    return energy_grid(lo, hi, step);
}

double RunConfig::effective_halfwidth() const {
    // 0.5 eV at the 2 eV carrier, scaled with the photon energy otherwise
    return band_halfwidth > 0.0 ? band_halfwidth : 0.25 * laser.photon_energy;
}

GateRunParams RunConfig::gate_params() const {
    GateRunParams p;
    p.ring = ring;
    p.intensity = laser.intensity;
    p.photon_energy = laser.photon_energy;
    p.duration_oc = laser.duration_oc;
    p.ramp_oc = laser.ramp_oc;
    p.numerics = numerics;
    p.tail_oc = tail_oc;
    p.pump_duration_oc = pump_duration_oc;
    p.detection.threshold = threshold;
    p.detection.band_halfwidth = effective_halfwidth();
    p.detection.allow_overlap = allow_band_overlap;
    p.lz_threshold = lz_threshold;
    return p;
}

MemoryParams RunConfig::memory_params() const {
    MemoryParams p;
    p.ring = ring;
    p.intensity = laser.intensity;
    p.photon_energy = laser.photon_energy;
    p.duration_oc = pump_duration_oc;
    p.ramp_oc = laser.ramp_oc;
    p.write_threshold = lz_threshold;
    p.numerics = numerics;
    return p;
}

}  // namespace nanoring
