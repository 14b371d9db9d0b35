#ifndef NANORING_CONSTANTS_HPP
#define NANORING_CONSTANTS_HPP

// Atomic units (hbar = m_e = e = 1) are used for all internal computation.
// eV and W/cm^2 are accepted at the boundary and converted once.

namespace nanoring {

inline constexpr double kHartreeEv = 27.211386245988;

// Atomic unit of intensity, W/cm^2. E0 = sqrt(I / kIntensityAu).
inline constexpr double kIntensityAu = 3.50945e16;

// Electron orbital gyromagnetic ratio, -e/(2 m_e) in atomic units.
inline constexpr double kGyromagneticRatio = -0.5;

inline constexpr double ev_to_au(double ev) { return ev / kHartreeEv; }
inline constexpr double au_to_ev(double au) { return au * kHartreeEv; }

}  // namespace nanoring

#endif
