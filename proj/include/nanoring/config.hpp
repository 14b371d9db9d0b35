#ifndef NANORING_CONFIG_HPP
#define NANORING_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "nanoring/logic.hpp"

namespace nanoring {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat "[section]" + "key = value" file; later keys override earlier ones.
class KeyValueFile {
  public:
    static KeyValueFile parse_file(const std::string& path);
    static KeyValueFile parse_string(const std::string& text);

    void set(const std::string& section, const std::string& key, const std::string& value);
    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;

  private:
    std::map<std::string, std::string> values_;  // "section.key" -> value
};

/// One experiment definition: ring, laser, pump, numerics, spectral
/// analysis, logic thresholds, output directory.
struct RunConfig {
    RingConfig ring;
    LaserPulse laser;
    PumpState pump = PumpState::None;
    PropagatorOptions numerics;
    double sigma0 = 6.0;
    double e_min = 0.0, e_max = 0.0, e_step = 0.0;  // 0 = derive from the carrier
    double band_halfwidth = 0.0;                    // 0 = derive from the carrier
    double threshold = 3e-3;
    bool allow_band_overlap = false;
    size_t cwt_stride = 4;
    double lz_threshold = 0.01;
    double tail_oc = 8.0;           // field-free observation window (gate runs)
    double pump_duration_oc = 34.0;
    std::string output_dir = ".";

    static RunConfig from_file(const std::string& path);
    static RunConfig from_kv(const KeyValueFile& kv);

    /// Warns on stderr when a physical field leaves the studied ranges
    /// (intensity 1e10-1e14 W/cm^2, photon 0.1-2 eV, radius 2.7-100 a0).
    void warn_out_of_range() const;

    std::vector<double> energies() const;
    double effective_halfwidth() const;
    GateRunParams gate_params() const;
    MemoryParams memory_params() const;
};

}  // namespace nanoring

#endif
