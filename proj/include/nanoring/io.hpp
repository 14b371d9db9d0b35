#ifndef NANORING_IO_HPP
#define NANORING_IO_HPP

#include <string>

#include "nanoring/logic.hpp"
#include "nanoring/spectral.hpp"
#include "nanoring/trajectory.hpp"

namespace nanoring {

/// Decimal, 17 significant digits; keeps CSV output bit-exact across runs.
std::string format_double(double v);

/// Columns: t_oc, D_x, D_y, L_z, norm.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Columns: energy_eV, power.
void write_spectrum_csv(const Spectrum& spec, const std::string& path);

/// Text header "rows cols e_min e_max t_min t_max\n" (times in oc), then
/// row-major 64-bit little-endian floats.
void write_scalogram_bin(const Scalogram& scal, const std::string& path);
Scalogram read_scalogram_bin(const std::string& path);

std::string line_report_json(const LineReport& report, double final_lz, double avg_lz,
                             double lz_threshold);
std::string truth_table_json(const TruthTable& table);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace nanoring

#endif
