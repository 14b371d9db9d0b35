#ifndef NANORING_SPECTRAL_HPP
#define NANORING_SPECTRAL_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nanoring/trajectory.hpp"

namespace nanoring {

struct WindowTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BandOverlap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// |FT of dipole|^2 per component and their sum, on a uniform energy axis.
struct Spectrum {
    std::vector<double> energies;  // eV
    std::vector<double> power_x;
    std::vector<double> power_y;
    std::vector<double> power;  // |D~_x|^2 + |D~_y|^2
};

/// Magnitude of the Morlet CWT on an energy x time grid.
struct Scalogram {
    std::vector<double> energies;  // eV, wavelet analysis frequencies hbar*Omega
    std::vector<double> times;     // a.u.
    std::vector<double> magnitude;  // row-major, energies x times
    double sigma0 = 6.0;
    double cycle = 0.0;  // carrier optical cycle, a.u. (for oc labeling)

    double at(size_t e, size_t t) const { return magnitude[e * times.size() + t]; }
};

enum class LineId { H_I = 0, H_II = 1, H_R1 = 2, H_R2 = 3 };

inline const char* line_name(LineId id) {
    switch (id) {
        case LineId::H_I: return "H_I";
        case LineId::H_II: return "H_II";
        case LineId::H_R1: return "H_R1";
        case LineId::H_R2: return "H_R2";
    }
    return "?";
}

struct Band {
    double lo = 0.0;  // eV
    double hi = 0.0;
    double center() const { return 0.5 * (lo + hi); }
};

struct LineReport {
    struct Line {
        Band band;
        double center = 0.0;  // eV
        double power = 0.0;   // spectral power integrated over the band
        bool present = false;
    };
    std::array<Line, 4> lines;
    double threshold = 0.0;
    double reference = 0.0;  // power the threshold is relative to

    const Line& line(LineId id) const { return lines[static_cast<size_t>(id)]; }
};

struct CwtOptions {
    double sigma0 = 6.0;
    double support = 8.0;  // integrate over |Omega (t_j - t)| <= support * sigma0
    size_t time_stride = 1;  // scalogram columns per signal sample
};

/// Morlet mother wavelet (e^{-ix} - e^{-sigma0^2/2}) e^{-x^2/(2 sigma0^2)}.
cplx morlet(double x, double sigma0);

/// Taper applied before the DFT. Rect keeps every sample at full weight and
/// preserves the free-induction tail; Hann suppresses the leakage skirts of
/// the dominant lines, which otherwise bury weak harmonics, at the cost of
/// de-weighting the window edges.
enum class SpectrumWindow { Rect, Hann };

/// DFT of D_x, D_y over [t0, t1]; throws WindowTooShort below 8 oc.
Spectrum dipole_spectrum(const Trajectory& traj, double t0, double t1,
                         SpectrumWindow window = SpectrumWindow::Rect);
Spectrum dipole_spectrum(const Trajectory& traj,
                         SpectrumWindow window = SpectrumWindow::Rect);

/// w(Omega, t) = sqrt(Omega) sum_j dt s(t_j) M*(Omega (t_j - t)), truncated
/// to the Gaussian support. Complex grid, row-major energies x times.
std::vector<cplx> cwt_complex(std::span<const double> times,
                              std::span<const double> signal,
                              std::span<const double> energies_ev,
                              const CwtOptions& opt = {});

Scalogram cwt(const Trajectory& traj, std::span<const double> energies_ev,
              const CwtOptions& opt = {});

/// Uniform grid helper: [e_min, e_max] in steps of e_step.
std::vector<double> energy_grid(double e_min, double e_max, double e_step);

struct DetectionConfig {
    double threshold = 3e-3;      // relative to the reference power
    double band_halfwidth = 0.5;  // eV, around each line center
    double reference = -1.0;      // < 0: use the run's own strongest line
    bool allow_overlap = false;   // report overlapping bands instead of throwing
};

/// Line bands for a ring/laser pairing: H_I at hbar*omega_L, H_II at
/// 3 hbar*omega_L, H_R1 at 2 hbar*omega_1, H_R2 over [hbar*omega_2,
/// hbar*omega_2 + hbar*omega_1]. Throws BandOverlap when they intersect.
std::array<Band, 4> line_bands(const RingConfig& ring, double photon_energy_ev,
                               double halfwidth_ev);

/// Integrates the spectral power over each band; a line is present when its
/// band power exceeds threshold x reference. The Fourier spectrum is used
/// here rather than the scalogram: the sigma0 = 6 wavelet's energy resolution
/// smears the strong shifted Raman line across the neighbouring bands, while
/// the windowed spectrum keeps the weak lines separable.
LineReport detect_lines(const Spectrum& spectrum, const RingConfig& ring,
                        double photon_energy_ev, const DetectionConfig& cfg = {});

}  // namespace nanoring

#endif
