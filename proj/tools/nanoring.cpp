// Command-line driver: runs simulations, beta sweeps, gate extraction,
// circuit demos and memory demos, writing plot-ready data files.

#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nanoring/config.hpp"
#include "nanoring/io.hpp"
#include "nanoring/observables.hpp"

namespace fs = std::filesystem;
using namespace nanoring;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CliOverrides {
    std::string config_path;
    std::string output_dir;
    double intensity = -1.0;
    double photon_energy = -1.0;
    double beta = -1.0;
    double radius = -1.0;
    int m_max = -1;
    std::string pump;
};

void add_common(CLI::App* cmd, CliOverrides& ov) {
    cmd->add_option("-c,--config", ov.config_path, "run configuration file");
    cmd->add_option("-o,--output", ov.output_dir, "output directory (overrides config and env)");
    cmd->add_option("--intensity", ov.intensity, "laser intensity, W/cm^2");
    cmd->add_option("--photon-energy", ov.photon_energy, "photon energy, eV");
    cmd->add_option("--beta", ov.beta, "polarization angle, degrees");
    cmd->add_option("--radius", ov.radius, "ring radius, a0");
    cmd->add_option("--m-max", ov.m_max, "basis truncation");
    cmd->add_option("--pump", ov.pump, "pump mode: none, plus, minus");
}

RunConfig load_config(const CliOverrides& ov) {
    RunConfig cfg = ov.config_path.empty() ? RunConfig{} : RunConfig::from_file(ov.config_path);
    if (ov.intensity >= 0.0) cfg.laser.intensity = ov.intensity;
    if (ov.photon_energy >= 0.0) cfg.laser.photon_energy = ov.photon_energy;
    if (ov.beta >= 0.0) cfg.laser.beta = ov.beta;
    if (ov.radius >= 0.0) cfg.ring.radius = ov.radius;
    if (ov.m_max >= 0) cfg.ring.m_max = ov.m_max;
    if (!ov.pump.empty()) {
        if (ov.pump == "none") cfg.pump = PumpState::None;
        else if (ov.pump == "plus") cfg.pump = PumpState::Positive;
        else if (ov.pump == "minus") cfg.pump = PumpState::Negative;
        else throw ConfigError("--pump must be none, plus or minus");
    }
    if (!ov.output_dir.empty()) {
        cfg.output_dir = ov.output_dir;
    } else if (const char* env = std::getenv("NANORING_OUTPUT_DIR")) {
        cfg.output_dir = env;
    }
    cfg.ring.validate();
    cfg.laser.validate();
    cfg.warn_out_of_range();
    fs::create_directories(cfg.output_dir);
    return cfg;
}

PulseSchedule run_schedule(const RunConfig& cfg) {
    PulseSchedule schedule;
    if (cfg.pump != PumpState::None) {
        const int sign = cfg.pump == PumpState::Positive ? +1 : -1;
        schedule.segments.push_back(pump_pulse(cfg.laser.intensity, cfg.laser.photon_energy, sign,
                                               cfg.pump_duration_oc, cfg.laser.ramp_oc));
    }
    schedule.segments.push_back(cfg.laser);
    return schedule;
}

int cmd_run(const RunConfig& cfg) {
    const PulseSchedule schedule = run_schedule(cfg);
    const Trajectory traj =
        propagate(WaveFunction::ground_state(cfg.ring), schedule, cfg.ring, cfg.numerics);

    write_trajectory_csv(traj, cfg.output_dir + "/trajectory.csv");
    const Spectrum spectrum = dipole_spectrum(traj);
    write_spectrum_csv(spectrum, cfg.output_dir + "/spectrum.csv");

    CwtOptions cwt_opt;
    cwt_opt.sigma0 = cfg.sigma0;
    cwt_opt.time_stride = cfg.cwt_stride;
    const Scalogram scal = cwt(traj, cfg.energies(), cwt_opt);
    write_scalogram_bin(scal, cfg.output_dir + "/scalogram.bin");

    DetectionConfig det;
    det.threshold = cfg.threshold;
    det.band_halfwidth = cfg.effective_halfwidth();
    det.allow_overlap = cfg.allow_band_overlap;
    const LineReport report = detect_lines(spectrum, cfg.ring, cfg.laser.photon_energy, det);

    const double final_lz = traj.lz.back();
    const double probe_start =
        cfg.pump != PumpState::None ? schedule.segments.front().duration() : 0.0;
    const double avg_lz = time_avg_Lz(traj, probe_start, traj.times.back());
    write_text_file(cfg.output_dir + "/report.json",
                    line_report_json(report, final_lz, avg_lz, cfg.lz_threshold));
    std::cout << "wrote trajectory.csv, spectrum.csv, scalogram.bin, report.json to "
              << cfg.output_dir << "\n";
    return 0;
}

int cmd_sweep_beta(const RunConfig& cfg, const std::vector<double>& betas) {
    if (betas.empty()) throw ConfigError("sweep-beta: empty beta list");
    for (double b : betas)
        if (b < 0.0 || b > 90.0) throw ConfigError("sweep-beta: beta must be in [0, 90]");

    auto run_point = [&](double beta) {
        RunConfig point = cfg;
        point.laser.beta = beta;
        const PulseSchedule schedule = run_schedule(point);
        const Trajectory traj =
            propagate(WaveFunction::ground_state(point.ring), schedule, point.ring, point.numerics);
        const double probe_start =
            point.pump != PumpState::None ? schedule.segments.front().duration() : 0.0;
        return std::pair<double, double>{traj.lz.back(),
                                         time_avg_Lz(traj, probe_start, traj.times.back())};
    };

    std::vector<std::future<std::pair<double, double>>> jobs;
    jobs.reserve(betas.size());
    for (double b : betas) jobs.push_back(std::async(std::launch::async, run_point, b));

    std::ostringstream out;
    out << "beta_deg,final_Lz,avg_Lz\n";
    for (size_t i = 0; i < betas.size(); ++i) {
        const auto [final_lz, avg_lz] = jobs[i].get();
        out << format_double(betas[i]) << ',' << format_double(final_lz) << ','
            << format_double(avg_lz) << '\n';
    }
    write_text_file(cfg.output_dir + "/beta_sweep.csv", out.str());
    std::cout << "wrote beta_sweep.csv (" << betas.size() << " points) to " << cfg.output_dir
              << "\n";
    return 0;
}

int cmd_gate(const RunConfig& cfg) {
    const TruthTable table = truth_table(cfg.gate_params(), cfg.pump);
    write_text_file(cfg.output_dir + "/truth_table.json", truth_table_json(table));
    std::cout << truth_table_json(table);
    return 0;
}

int cmd_circuit(const RunConfig& cfg, const std::string& kind, std::vector<int> inputs,
                bool simulate) {
    GateMap gates = GateMap::ideal();
    if (simulate) gates = GateMap::from_table(truth_table(cfg.gate_params(), PumpState::None));

    json j;
    j["kind"] = kind;
    j["mode"] = simulate ? "simulated" : "ideal";
    auto bit = [&](size_t i) -> bool {
        if (i >= inputs.size()) throw ConfigError("circuit: not enough input bits");
        if (inputs[i] != 0 && inputs[i] != 1) throw ConfigError("circuit: inputs must be 0 or 1");
        return inputs[i] == 1;
    };
    if (kind == "half") {
        const HalfAdderResult r = half_adder(bit(0), bit(1), gates);
        j["inputs"] = {inputs[0], inputs[1]};
        j["sum"] = r.sum ? 1 : 0;
        j["carry"] = r.carry ? 1 : 0;
        j["trace"] = r.trace;
    } else if (kind == "full") {
        const FullAdderResult r = full_adder(bit(0), bit(1), bit(2), gates);
        j["inputs"] = {inputs[0], inputs[1], inputs[2]};
        j["sum"] = r.sum ? 1 : 0;
        j["carry"] = r.carry ? 1 : 0;
        j["trace"] = r.trace;
    } else if (kind == "toffoli") {
        const ToffoliResult r = toffoli(bit(0), bit(1), bit(2), gates, gates);
        j["inputs"] = {inputs[0], inputs[1], inputs[2]};
        j["outputs"] = {r.bits[0] ? 1 : 0, r.bits[1] ? 1 : 0, r.bits[2] ? 1 : 0};
        j["trace"] = r.trace;
    } else {
        throw ConfigError("circuit kind must be half, full or toffoli");
    }
    const std::string text = j.dump(2) + "\n";
    write_text_file(cfg.output_dir + "/circuit.json", text);
    std::cout << text;
    return 0;
}

int cmd_memory(const RunConfig& cfg, const std::vector<std::string>& ops) {
    if (ops.empty()) throw ConfigError("memory: empty op list");
    const MemoryParams params = cfg.memory_params();
    MemoryCell cell;
    json log = json::array();
    for (const std::string& op : ops) {
        json entry;
        entry["op"] = op;
        if (op == "write") {
            cell = memory_write(cell, +1, params);
        } else if (op == "erase") {
            cell = memory_write(cell, -1, params);
        } else if (op == "read") {
            // no state change
        } else {
            throw ConfigError("memory op must be write, erase or read");
        }
        entry["Lz"] = cell.lz_state;
        entry["bit"] = cell.bit ? 1 : 0;
        log.push_back(entry);
    }
    const std::string text = log.dump(2) + "\n";
    write_text_file(cfg.output_dir + "/memory_log.json", text);
    std::cout << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-electron nanoring simulator: TDSE propagation, Morlet wavelet "
                 "line analysis, optical logic gates and pseudo-spin memory"};
    app.require_subcommand(1);

    CliOverrides ov;
    std::vector<double> betas;
    std::string circuit_kind;
    std::vector<int> circuit_inputs;
    bool circuit_simulate = false;
    std::vector<std::string> memory_ops;

    CLI::App* run = app.add_subcommand("run", "propagate one configuration and write artifacts");
    add_common(run, ov);

    CLI::App* sweep = app.add_subcommand("sweep-beta", "final and averaged L_z versus beta");
    add_common(sweep, ov);
    sweep->add_option("--betas", betas, "polarization angles, degrees")->required();

    CLI::App* gate = app.add_subcommand("gate", "extract the truth table and gate classifications");
    add_common(gate, ov);

    CLI::App* circuit = app.add_subcommand("circuit", "evaluate half/full adder or Toffoli");
    add_common(circuit, ov);
    circuit->add_option("kind", circuit_kind, "half, full or toffoli")->required();
    circuit->add_option("bits", circuit_inputs, "input bits")->required();
    circuit->add_flag("--simulate", circuit_simulate,
                      "derive gate primitives from a simulated ring truth table");

    CLI::App* memory = app.add_subcommand("memory", "run a write/erase/read sequence on one cell");
    add_common(memory, ov);
    memory->add_option("--ops", memory_ops, "sequence of write, erase, read")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        const RunConfig cfg = load_config(ov);
        if (run->parsed()) return cmd_run(cfg);
        if (sweep->parsed()) return cmd_sweep_beta(cfg, betas);
        if (gate->parsed()) return cmd_gate(cfg);
        if (circuit->parsed()) return cmd_circuit(cfg, circuit_kind, circuit_inputs, circuit_simulate);
        if (memory->parsed()) return cmd_memory(cfg, memory_ops);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
