#ifndef NANORING_TRAJECTORY_HPP
#define NANORING_TRAJECTORY_HPP

#include <vector>

#include "nanoring/ring_model.hpp"

namespace nanoring {

/// Uniformly sampled time series of the propagation: dipole, L_z and norm
/// at each sample, plus the final state. Full state snapshots are kept
/// only on request.
struct Trajectory {
    std::vector<double> times;  // a.u., uniform spacing
    std::vector<double> dipole_x;
    std::vector<double> dipole_y;
    std::vector<double> lz;
    std::vector<double> norm;
    std::vector<WaveFunction> states;  // empty unless requested
    double dt_sample = 0.0;
    double cycle = 0.0;  // optical cycle of the carrier, a.u.
    WaveFunction final_state;

    size_t size() const { return times.size(); }
    double duration() const { return times.empty() ? 0.0 : times.back() - times.front(); }
};

}  // namespace nanoring

#endif
