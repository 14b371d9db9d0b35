#include "nanoring/logic.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "nanoring/observables.hpp"

namespace nanoring {

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::OR: return "OR";
        case GateKind::XOR: return "XOR";
        case GateKind::AND: return "AND";
        case GateKind::NAND: return "NAND";
        case GateKind::NOR: return "NOR";
        case GateKind::XNOR: return "XNOR";
        case GateKind::BUFFER: return "BUFFER";
        case GateKind::RESET: return "RESET";
        case GateKind::UNCLASSIFIED: return "//";
    }
    return "?";
}

std::array<bool, 4> TruthTable::column(size_t c) const {
    std::array<bool, 4> col{};
    for (size_t r = 0; r < 4; ++r) col[r] = rows[r].bits[c];
    return col;
}

LaserPulse encode_input(InputState bits, const GateRunParams& params) {
    LaserPulse pulse;
    pulse.photon_energy = params.photon_energy;
    pulse.duration_oc = params.duration_oc;
    pulse.ramp_oc = params.ramp_oc;
    pulse.helicity = +1;
    if (!bits.ex && !bits.ey) {
        pulse.intensity = 0.0;
        pulse.beta = 0.0;
    } else {
        pulse.intensity = params.intensity;
        pulse.beta = bits.ex ? (bits.ey ? 45.0 : 0.0) : 90.0;
    }
    return pulse;
}

std::array<bool, 5> booleanize(const LineReport& report, double final_lz, double lz_threshold) {
    std::array<bool, 5> bits{};
    for (size_t i = 0; i < 4; ++i) bits[i] = report.lines[i].present;
    bits[4] = std::abs(final_lz) > lz_threshold;
    return bits;
}

GateKind classify_column(const std::array<bool, 4>& column) {
    // index bits: (b00, b10, b01, b11)
    const int code = (column[0] ? 1 : 0) | (column[1] ? 2 : 0) | (column[2] ? 4 : 0) |
                     (column[3] ? 8 : 0);
    switch (code) {
        case 0b0000: return GateKind::RESET;
        case 0b1111: return GateKind::BUFFER;
        case 0b1000: return GateKind::AND;   // only row 11 set
        case 0b1110: return GateKind::OR;    // rows 10, 01, 11
        case 0b0110: return GateKind::XOR;
        case 0b1001: return GateKind::XNOR;
        case 0b0111: return GateKind::NAND;
        case 0b0001: return GateKind::NOR;
        default: return GateKind::UNCLASSIFIED;  // input-asymmetric
    }
}

namespace {

struct RowResult {
    std::array<double, 4> powers{};
    LineReport report;
    double final_lz = 0.0;
    double avg_lz = 0.0;
};

RowResult run_row(const GateRunParams& params, InputState input, PumpState pump) {
    PulseSchedule schedule;
    if (pump != PumpState::None) {
        const int sign = pump == PumpState::Positive ? +1 : -1;
        schedule.segments.push_back(pump_pulse(params.intensity, params.photon_energy, sign,
                                               params.pump_duration_oc, params.ramp_oc));
    }
    schedule.segments.push_back(encode_input(input, params));
    if (params.tail_oc > 0.0) {
        // field-free observation window: the free-induction radiation of the
        // Raman coherences lands here
        LaserPulse off = schedule.segments.back();
        off.intensity = 0.0;
        off.duration_oc = params.tail_oc;
        off.ramp_oc = 0.0;
        schedule.segments.push_back(off);
    }

    const Trajectory traj = propagate(WaveFunction::ground_state(params.ring), schedule,
                                      params.ring, params.numerics);

    DetectionConfig det = params.detection;
    det.reference = 1e300;  // flags resolved later against the table-wide reference
    RowResult row;
    row.report = detect_lines(dipole_spectrum(traj), params.ring, params.photon_energy, det);
    for (size_t i = 0; i < 4; ++i) row.powers[i] = row.report.lines[i].power;
    row.final_lz = traj.lz.back();

    // time average over the probe window only
    const double probe_start = pump != PumpState::None ? schedule.segments.front().duration() : 0.0;
    row.avg_lz = time_avg_Lz(traj, probe_start, traj.times.back());
    return row;
}

}  // namespace

TruthTable truth_table(const GateRunParams& params, PumpState pump) {
    params.ring.validate();

    std::array<std::future<RowResult>, 4> jobs;
    for (size_t r = 0; r < 4; ++r)
        jobs[r] = std::async(std::launch::async, run_row, params, kInputOrder[r], pump);

    TruthTable table;
    table.pump = pump;
    std::array<RowResult, 4> results;
    for (size_t r = 0; r < 4; ++r) results[r] = jobs[r].get();

    double reference = 0.0;
    for (const auto& res : results)
        for (double p : res.powers) reference = std::max(reference, p);
    table.reference_power = reference;

    for (size_t r = 0; r < 4; ++r) {
        TruthRow& row = table.rows[r];
        row.input = kInputOrder[r];
        row.band_powers = results[r].powers;
        row.final_lz = results[r].final_lz;
        row.avg_lz = results[r].avg_lz;
        LineReport report = results[r].report;
        report.reference = reference;
        for (auto& line : report.lines)
            line.present = line.power > params.detection.threshold * reference;
        row.bits = booleanize(report, row.final_lz, params.lz_threshold);
    }
    for (size_t c = 0; c < 5; ++c) table.gates[c] = classify_column(table.column(c));
    return table;
}

GateMap GateMap::from_table(const TruthTable& table) {
    GateMap map;
    for (size_t c = 0; c < 5; ++c) {
        const GateKind kind = table.gates[c];
        if (kind == GateKind::UNCLASSIFIED) continue;
        map.sources.try_emplace(kind, TruthTable::kColumns[c]);
    }
    return map;
}

GateMap GateMap::ideal() {
    GateMap map;
    map.sources = {{GateKind::OR, "ideal"}, {GateKind::XOR, "ideal"}, {GateKind::AND, "ideal"}};
    return map;
}

bool GateMap::eval(GateKind kind, bool a, bool b, std::vector<std::string>* trace) const {
    const auto it = sources.find(kind);
    if (it == sources.end())
        throw MissingGate(std::string("no ") + gate_name(kind) + " primitive in the configured ring gates");
    bool r = false;
    switch (kind) {
        case GateKind::OR: r = a || b; break;
        case GateKind::XOR: r = a != b; break;
        case GateKind::AND: r = a && b; break;
        case GateKind::NAND: r = !(a && b); break;
        case GateKind::NOR: r = !(a || b); break;
        case GateKind::XNOR: r = a == b; break;
        case GateKind::BUFFER: r = true; break;
        case GateKind::RESET: r = false; break;
        case GateKind::UNCLASSIFIED:
            throw MissingGate("cannot evaluate an unclassified column");
    }
    if (trace)
        trace->push_back(std::string(gate_name(kind)) + "(" + (a ? "1" : "0") + "," +
                         (b ? "1" : "0") + ") = " + (r ? "1" : "0") + " via " + it->second);
    return r;
}

HalfAdderResult half_adder(bool a, bool b, const GateMap& gates) {
    HalfAdderResult res;
    res.sum = gates.eval(GateKind::XOR, a, b, &res.trace);
    res.carry = gates.eval(GateKind::AND, a, b, &res.trace);
    return res;
}

FullAdderResult full_adder(bool a, bool b, bool carry_in, const GateMap& gates) {
    FullAdderResult res;
    const HalfAdderResult h1 = half_adder(a, b, gates);
    const HalfAdderResult h2 = half_adder(h1.sum, carry_in, gates);
    res.trace = h1.trace;
    res.trace.insert(res.trace.end(), h2.trace.begin(), h2.trace.end());
    res.sum = h2.sum;
    res.carry = gates.eval(GateKind::OR, h1.carry, h2.carry, &res.trace);
    return res;
}

ToffoliResult toffoli(bool a, bool b, bool c, const GateMap& and_ring, const GateMap& xor_ring) {
    ToffoliResult res;
    const bool t = and_ring.eval(GateKind::AND, a, b, &res.trace);
    const bool c_out = xor_ring.eval(GateKind::XOR, c, t, &res.trace);
    res.bits = {a, b, c_out};
    return res;
}

MemoryCell memory_write(const MemoryCell& cell, int helicity, const MemoryParams& params) {
    if (helicity != 1 && helicity != -1)
        throw std::invalid_argument("memory_write: helicity must be +-1");
    PulseSchedule schedule;
    schedule.segments.push_back(pump_pulse(params.intensity, params.photon_energy, helicity,
                                           params.duration_oc, params.ramp_oc));
    const WaveFunction start = cell.psi ? *cell.psi : WaveFunction::ground_state(params.ring);
    const Trajectory traj = propagate(start, schedule, params.ring, params.numerics);
    MemoryCell out;
    out.lz_state = angular_momentum(traj.final_state);
    out.bit = out.lz_state > params.write_threshold;
    out.psi = traj.final_state;
    return out;
}

}  // namespace nanoring
