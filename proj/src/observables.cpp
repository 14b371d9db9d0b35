#include "nanoring/observables.hpp"

#include <algorithm>
#include <stdexcept>

namespace nanoring {

Dipole dipole(const WaveFunction& state, const RingConfig& ring) {
    Dipole d;
    const int n = static_cast<int>(state.coefficients.size());
    for (int i = 1; i < n; ++i) {
        // pair (m-1, m)
        const cplx prev = state.coefficients[static_cast<size_t>(i - 1)];
        const cplx cur = state.coefficients[static_cast<size_t>(i)];
        d.x += (std::conj(prev) * cur).real();
        d.y += (std::conj(cur) * prev).imag();
    }
    d.x *= ring.radius;
    d.y *= ring.radius;
    return d;
}

double angular_momentum(const WaveFunction& state) {
    double lz = 0.0;
    const int n = static_cast<int>(state.coefficients.size());
    for (int i = 0; i < n; ++i)
        lz += std::norm(state.coefficients[static_cast<size_t>(i)]) * (i - state.m_max);
    return lz;
}

double time_avg_Lz(const Trajectory& traj, double t0, double t1) {
    if (traj.size() < 2) throw EmptyWindow("time_avg_Lz: trajectory too short");
    if (t1 <= t0 || t0 < traj.times.front() - 1e-9 || t1 > traj.times.back() + 1e-9)
        throw EmptyWindow("time_avg_Lz: window outside trajectory span");
    double integral = 0.0;
    double span = 0.0;
    bool any = false;
    for (size_t i = 0; i + 1 < traj.size(); ++i) {
        const double a = std::max(traj.times[i], t0);
        const double b = std::min(traj.times[i + 1], t1);
        if (b <= a) continue;
        any = true;
        // linear interpolation of L_z onto the clipped interval
        const double dt = traj.times[i + 1] - traj.times[i];
        const double la = traj.lz[i] + (traj.lz[i + 1] - traj.lz[i]) * (a - traj.times[i]) / dt;
        const double lb = traj.lz[i] + (traj.lz[i + 1] - traj.lz[i]) * (b - traj.times[i]) / dt;
        integral += 0.5 * (la + lb) * (b - a);
        span += b - a;
    }
    if (!any) throw EmptyWindow("time_avg_Lz: no samples in window");
    return integral / span;
}

MagneticMoment array_moment(const std::vector<double>& lz_values, double gamma) {
    if (lz_values.empty()) throw std::invalid_argument("array_moment: empty ring list");
    double sum = 0.0;
    for (double lz : lz_values) sum += lz;
    return {gamma * sum, gamma};
}

}  // namespace nanoring
