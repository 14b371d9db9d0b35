#ifndef NANORING_LOGIC_HPP
#define NANORING_LOGIC_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nanoring/propagator.hpp"
#include "nanoring/spectral.hpp"

namespace nanoring {

struct MissingGate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Laser input bits (E_x, E_y): (0,0) laser off, (1,0) beta = 0 deg,
/// (0,1) beta = 90 deg, (1,1) beta = 45 deg.
struct InputState {
    bool ex = false;
    bool ey = false;
};

/// Row order used throughout: 00, 10, 01, 11.
inline constexpr std::array<InputState, 4> kInputOrder = {
    InputState{false, false}, InputState{true, false},
    InputState{false, true}, InputState{true, true}};

enum class GateKind {
    OR,
    XOR,
    AND,
    NAND,
    NOR,
    XNOR,
    BUFFER,  // constant-1 column (the tables' usage)
    RESET,   // constant-0 column
    UNCLASSIFIED
};

const char* gate_name(GateKind kind);

enum class PumpState { None, Positive, Negative };

struct TruthRow {
    InputState input;
    std::array<bool, 5> bits{};  // H_I, H_II, H_R1, H_R2, L_z
    double final_lz = 0.0;
    double avg_lz = 0.0;
    std::array<double, 4> band_powers{};
};

struct TruthTable {
    std::array<TruthRow, 4> rows;
    std::array<GateKind, 5> gates{};
    PumpState pump = PumpState::None;
    double reference_power = 0.0;

    static constexpr std::array<const char*, 5> kColumns = {"H_I", "H_II", "H_R1", "H_R2", "L_z"};
    std::array<bool, 4> column(size_t c) const;
};

/// Everything needed to run one truth-table row end to end.
struct GateRunParams {
    RingConfig ring;
    double intensity = 1e14;      // W/cm^2
    double photon_energy = 2.0;   // eV
    double duration_oc = 32.0;    // probe pulse
    double ramp_oc = 2.0;
    // field-free observation window after the probe; the Raman coherences
    // keep radiating after the drive stops and carry most of the weak-line
    // discrimination
    double tail_oc = 8.0;
    // pump pulse length; the residual L_z rides a Rabi oscillation in the
    // pulse area and 34 oc leaves a near-unit pseudo-spin at the baseline
    // parameters (32 oc sits close to a node)
    double pump_duration_oc = 34.0;
    PropagatorOptions numerics{};
    DetectionConfig detection{};
    double lz_threshold = 0.01;  // hbar
};

/// Probe pulse for an input-bit pair; (0,0) yields a zero-intensity
/// segment of equal duration.
LaserPulse encode_input(InputState bits, const GateRunParams& params);

/// Four line bits from the report plus the |L_z| > threshold bit.
std::array<bool, 5> booleanize(const LineReport& report, double final_lz, double lz_threshold);

/// Full pipeline: encode -> (pump +) propagate -> spectrum -> detect ->
/// booleanize for all four input states. Line presence is judged against the
/// strongest band power across the whole table.
TruthTable truth_table(const GateRunParams& params, PumpState pump = PumpState::None);

/// Total classification of the 16 possible columns, inputs ordered
/// 00, 10, 01, 11. Input-asymmetric columns map to UNCLASSIFIED (the
/// tables mark them "//").
GateKind classify_column(const std::array<bool, 4>& column);

/// Which table column realizes each boolean primitive.
struct GateMap {
    std::map<GateKind, std::string> sources;  // gate -> column name

    static GateMap from_table(const TruthTable& table);
    static GateMap ideal();  // abstract boolean gates, no ring provenance

    bool eval(GateKind kind, bool a, bool b, std::vector<std::string>* trace) const;
};

struct HalfAdderResult {
    bool sum = false;
    bool carry = false;
    std::vector<std::string> trace;
};

struct FullAdderResult {
    bool sum = false;
    bool carry = false;
    std::vector<std::string> trace;
};

/// sum from the XOR column, carry from the AND (L_z) column.
HalfAdderResult half_adder(bool a, bool b, const GateMap& gates);

/// Two half adders plus an OR on the carries.
FullAdderResult full_adder(bool a, bool b, bool carry_in, const GateMap& gates);

struct ToffoliResult {
    std::array<bool, 3> bits{};
    std::vector<std::string> trace;
};

/// (a, b, c) -> (a, b, c XOR (a AND b)); AND from one ring, XOR from another.
ToffoliResult toffoli(bool a, bool b, bool c, const GateMap& and_ring, const GateMap& xor_ring);

/// Pseudo-spin storage cell. The stored wavefunction carries the physical
/// state between write and erase pulses.
struct MemoryCell {
    double lz_state = 0.0;
    bool bit = false;
    std::optional<WaveFunction> psi;
};

struct MemoryParams {
    RingConfig ring;
    double intensity = 1e14;
    double photon_energy = 2.0;
    double duration_oc = 34.0;  // write pulse; see GateRunParams::pump_duration_oc
    double ramp_oc = 2.0;
    double write_threshold = 0.01;  // hbar
    PropagatorOptions numerics{};
};

/// Applies a circular pulse of the given helicity to the cell state.
/// Helicity +1 on an empty cell writes bit 1; the inverse helicity on a
/// written cell erases it. Zero intensity leaves the cell free-evolving.
MemoryCell memory_write(const MemoryCell& cell, int helicity, const MemoryParams& params);

}  // namespace nanoring

#endif
