#ifndef NANORING_RING_MODEL_HPP
#define NANORING_RING_MODEL_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "nanoring/constants.hpp"

namespace nanoring {

using cplx = std::complex<double>;

/// Planar ring with a single active electron, basis e^{i m phi}/sqrt(2 pi)
/// truncated to m = -m_max ... +m_max.
struct RingConfig {
    double radius = 2.7;  // Bohr radii
    int m_max = 64;

    void validate() const {
        if (radius <= 0.0) throw std::invalid_argument("RingConfig: radius must be > 0");
        if (m_max < 1) throw std::invalid_argument("RingConfig: m_max must be >= 1");
    }
    int dim() const { return 2 * m_max + 1; }
};

/// One segment of the drive. Trapezoidal envelope: linear ascent over
/// ramp_oc, flat plateau, linear descent over the final ramp_oc.
struct LaserPulse {
    double intensity = 0.0;       // W/cm^2; 0 encodes "laser off"
    double photon_energy = 2.0;   // eV
    double beta = 0.0;            // polarization angle, degrees, [0, 90]
    double duration_oc = 32.0;    // optical cycles
    double ramp_oc = 2.0;
    int helicity = +1;            // sign of the y-component, flips circular polarization

    void validate() const;

    double omega() const { return ev_to_au(photon_energy); }
    double cycle() const;                       // optical cycle length, a.u.
    double duration() const { return duration_oc * cycle(); }
};

/// Ordered pulse segments sharing one carrier frequency (e.g. 32-oc pump
/// followed by 32-oc probe).
struct PulseSchedule {
    std::vector<LaserPulse> segments;

    void validate() const;
    double omega() const;
    double cycle() const;
    double total_duration() const;  // a.u.

    /// Locates the segment covering global time t; returns nullptr when t
    /// falls outside the schedule (field-free evolution).
    const LaserPulse* segment_at(double t, double* t_local) const;
};

/// Expansion coefficients a_m over angular-momentum eigenstates.
struct WaveFunction {
    std::vector<cplx> coefficients;  // index m + m_max
    int m_max = 0;
    double t = 0.0;

    static WaveFunction ground_state(const RingConfig& ring);
    static WaveFunction basis_state(const RingConfig& ring, int m);

    cplx& a(int m) { return coefficients[static_cast<size_t>(m + m_max)]; }
    const cplx& a(int m) const { return coefficients[static_cast<size_t>(m + m_max)]; }
    double norm2() const;
};

struct FieldVec {
    double ex = 0.0;
    double ey = 0.0;
};

/// Free energy of |m>: m^2 / (2 R^2) a.u.
double level_energy(int m, const RingConfig& ring);
double level_energy_ev(int m, const RingConfig& ring);

/// E0 = sqrt(I / 3.50945e16 W/cm^2), atomic units.
double amplitude_from_intensity(double intensity);

/// Trapezoid value at local time t (a.u. from segment start); 0 outside.
double envelope(double t, const LaserPulse& pulse);

/// (E_x, E_y) at local time t within the pulse, a.u.
FieldVec field_at(double t, const LaserPulse& pulse);

/// Field at global schedule time t.
FieldVec schedule_field_at(double t, const PulseSchedule& schedule);

/// (H psi)_m at time t. Diagonal: level energies. Off-diagonal: cos(phi)
/// couples m <-> m+-1 with 1/2, sin(phi) with -+i/2, scaled by E_x R and
/// E_y R. Boundary states couple only inward.
std::vector<cplx> apply_hamiltonian(const WaveFunction& state, double t,
                                    const RingConfig& ring,
                                    const PulseSchedule& schedule);

/// Off-diagonal element H_{m,m+1} for field (ex, ey); the sub-diagonal is
/// its conjugate.
inline cplx coupling_upper(const FieldVec& field, const RingConfig& ring) {
    return 0.5 * ring.radius * cplx(field.ex, field.ey);
}

}  // namespace nanoring

#endif
