#include "nanoring/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nanoring {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ostringstream out;
    out << "t_oc,D_x,D_y,L_z,norm\n";
    for (size_t i = 0; i < traj.size(); ++i) {
        out << format_double(traj.times[i] / traj.cycle) << ',' << format_double(traj.dipole_x[i])
            << ',' << format_double(traj.dipole_y[i]) << ',' << format_double(traj.lz[i]) << ','
            << format_double(traj.norm[i]) << '\n';
    }
    write_text_file(path, out.str());
}

void write_spectrum_csv(const Spectrum& spec, const std::string& path) {
    std::ostringstream out;
    out << "energy_eV,power\n";
    for (size_t i = 0; i < spec.energies.size(); ++i)
        out << format_double(spec.energies[i]) << ',' << format_double(spec.power[i]) << '\n';
    write_text_file(path, out.str());
}

void write_scalogram_bin(const Scalogram& scal, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const size_t rows = scal.energies.size();
    const size_t cols = scal.times.size();
    const double cycle = scal.cycle > 0.0 ? scal.cycle : 1.0;
    out << rows << ' ' << cols << ' ' << format_double(scal.energies.front()) << ' '
        << format_double(scal.energies.back()) << ' '
        << format_double(scal.times.front() / cycle) << ' '
        << format_double(scal.times.back() / cycle) << '\n';
    static_assert(sizeof(double) == 8);
    out.write(reinterpret_cast<const char*>(scal.magnitude.data()),
              static_cast<std::streamsize>(scal.magnitude.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write failed: " + path);
}

Scalogram read_scalogram_bin(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    size_t rows = 0, cols = 0;
    double e_min = 0, e_max = 0, t_min = 0, t_max = 0;
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    if (!(hs >> rows >> cols >> e_min >> e_max >> t_min >> t_max))
        throw std::runtime_error("bad scalogram header in " + path);
    Scalogram scal;
    scal.cycle = 1.0;  // times stored in oc
    scal.energies.resize(rows);
    scal.times.resize(cols);
    for (size_t i = 0; i < rows; ++i)
        scal.energies[i] = rows > 1 ? e_min + (e_max - e_min) * i / (rows - 1) : e_min;
    for (size_t i = 0; i < cols; ++i)
        scal.times[i] = cols > 1 ? t_min + (t_max - t_min) * i / (cols - 1) : t_min;
    scal.magnitude.resize(rows * cols);
    in.read(reinterpret_cast<char*>(scal.magnitude.data()),
            static_cast<std::streamsize>(rows * cols * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(rows * cols * sizeof(double)))
        throw std::runtime_error("truncated scalogram data in " + path);
    return scal;
}

namespace {

json line_to_json(const LineReport::Line& line, const char* name) {
    return json{{"name", name},
                {"center_eV", line.center},
                {"band_eV", {line.band.lo, line.band.hi}},
                {"power", line.power},
                {"present", line.present}};
}

}  // namespace

std::string line_report_json(const LineReport& report, double final_lz, double avg_lz,
                             double lz_threshold) {
    json j;
    j["lines"] = json::array();
    for (size_t i = 0; i < 4; ++i)
        j["lines"].push_back(line_to_json(report.lines[i], line_name(static_cast<LineId>(i))));
    j["threshold"] = report.threshold;
    j["reference_power"] = report.reference;
    j["final_Lz"] = final_lz;
    j["avg_Lz"] = avg_lz;
    j["Lz_threshold"] = lz_threshold;
    j["Lz_bit"] = std::abs(final_lz) > lz_threshold;
    json bits = json::array();
    for (size_t i = 0; i < 4; ++i) bits.push_back(report.lines[i].present ? 1 : 0);
    bits.push_back(std::abs(final_lz) > lz_threshold ? 1 : 0);
    j["bits"] = bits;
    return j.dump(2) + "\n";
}

std::string truth_table_json(const TruthTable& table) {
    json j;
    switch (table.pump) {
        case PumpState::None: j["pump"] = "none"; break;
        case PumpState::Positive: j["pump"] = "L>0"; break;
        case PumpState::Negative: j["pump"] = "L<0"; break;
    }
    j["columns"] = TruthTable::kColumns;
    j["rows"] = json::array();
    for (const auto& row : table.rows) {
        json r;
        r["input"] = {row.input.ex ? 1 : 0, row.input.ey ? 1 : 0};
        json bits = json::array();
        for (bool b : row.bits) bits.push_back(b ? 1 : 0);
        r["bits"] = bits;
        r["final_Lz"] = row.final_lz;
        r["avg_Lz"] = row.avg_lz;
        r["band_powers"] = row.band_powers;
        j["rows"].push_back(r);
    }
    json gates = json::array();
    for (GateKind g : table.gates) gates.push_back(gate_name(g));
    j["gates"] = gates;
    j["reference_power"] = table.reference_power;
    return j.dump(2) + "\n";
}

}  // namespace nanoring
