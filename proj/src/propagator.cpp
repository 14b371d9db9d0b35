#include "nanoring/propagator.hpp"

#include <cmath>
#include <string>

#include "nanoring/observables.hpp"

namespace nanoring {

namespace {

// Thomas solve for (I + z W) x = b with W tridiagonal, zero diagonal,
// constant off-diagonals W_{i,i+1} = upper, W_{i+1,i} = conj(upper).
void solve_cn(std::vector<cplx>& psi, cplx upper, cplx z, std::vector<cplx>& diag,
              std::vector<cplx>& rhs) {
    const size_t n = psi.size();
    const cplx u = z * upper;
    const cplx l = z * std::conj(upper);

    // rhs = (I - z W) psi
    for (size_t i = 0; i < n; ++i) {
        cplx v = psi[i];
        if (i + 1 < n) v -= u * psi[i + 1];
        if (i > 0) v -= l * psi[i - 1];
        rhs[i] = v;
    }

    // forward elimination
    diag[0] = 1.0;
    for (size_t i = 1; i < n; ++i) {
        const cplx w = l / diag[i - 1];
        diag[i] = 1.0 - w * u;
        rhs[i] -= w * rhs[i - 1];
    }
    // back substitution
    psi[n - 1] = rhs[n - 1] / diag[n - 1];
    for (size_t i = n - 1; i-- > 0;) psi[i] = (rhs[i] - u * psi[i + 1]) / diag[i];
}

}  // namespace

Trajectory propagate(const WaveFunction& initial, const PulseSchedule& schedule,
                     const RingConfig& ring, const PropagatorOptions& opt) {
    ring.validate();
    schedule.validate();
    if (initial.m_max != ring.m_max)
        throw std::invalid_argument("propagate: initial state does not match ring truncation");
    if (opt.steps_per_oc < 256) throw std::invalid_argument("propagate: steps_per_oc must be >= 256");
    if (opt.samples_per_oc < 1 || opt.steps_per_oc % opt.samples_per_oc != 0)
        throw std::invalid_argument("propagate: samples_per_oc must divide steps_per_oc");

    const int n = ring.dim();
    const double cycle = schedule.cycle();
    const double dt = cycle / opt.steps_per_oc;
    const int sample_stride = opt.steps_per_oc / opt.samples_per_oc;
    const long total_steps = std::lround(schedule.total_duration() / dt);

    // Precompute exp(-i E_m dt/2) for the free half-steps.
    std::vector<cplx> half_phase(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double e = level_energy(i - ring.m_max, ring);
        half_phase[static_cast<size_t>(i)] = std::polar(1.0, -e * dt / 2.0);
    }

    WaveFunction state = initial;
    state.t = 0.0;

    Trajectory traj;
    traj.dt_sample = dt * sample_stride;
    traj.cycle = cycle;
    const size_t n_samples = static_cast<size_t>(total_steps / sample_stride) + 1;
    traj.times.reserve(n_samples);
    traj.dipole_x.reserve(n_samples);
    traj.dipole_y.reserve(n_samples);
    traj.lz.reserve(n_samples);
    traj.norm.reserve(n_samples);

    std::vector<cplx> diag(static_cast<size_t>(n)), rhs(static_cast<size_t>(n));

    auto record = [&](double t) {
        const double nrm = state.norm2();
        if (std::abs(nrm - 1.0) > opt.norm_tol)
            throw NormDrift("norm drift " + std::to_string(nrm - 1.0) + " at t = " +
                            std::to_string(t / cycle) + " oc; reduce dt or raise m_max");
        if (opt.check_truncation) {
            double edge = 0.0;
            for (int k = 0; k < 3; ++k) {
                edge += std::norm(state.coefficients[static_cast<size_t>(k)]);
                edge += std::norm(state.coefficients[static_cast<size_t>(n - 1 - k)]);
            }
            if (edge > opt.truncation_tol)
                throw TruncationPressure("edge population " + std::to_string(edge) +
                                         " at t = " + std::to_string(t / cycle) +
                                         " oc; raise m_max");
        }
        const Dipole d = dipole(state, ring);
        traj.times.push_back(t);
        traj.dipole_x.push_back(d.x);
        traj.dipole_y.push_back(d.y);
        traj.lz.push_back(angular_momentum(state));
        traj.norm.push_back(nrm);
        if (opt.store_states) {
            WaveFunction snap = state;
            snap.t = t;
            traj.states.push_back(std::move(snap));
        }
    };

    record(0.0);
    for (long step = 0; step < total_steps; ++step) {
        const double t_mid = (step + 0.5) * dt;

        for (int i = 0; i < n; ++i)
            state.coefficients[static_cast<size_t>(i)] *= half_phase[static_cast<size_t>(i)];

        const FieldVec field = schedule_field_at(t_mid, schedule);
        const cplx upper = coupling_upper(field, ring);
        if (upper != cplx(0.0, 0.0))
            solve_cn(state.coefficients, upper, cplx(0.0, dt / 2.0), diag, rhs);

        for (int i = 0; i < n; ++i)
            state.coefficients[static_cast<size_t>(i)] *= half_phase[static_cast<size_t>(i)];

        if ((step + 1) % sample_stride == 0) record((step + 1) * dt);
    }

    state.t = total_steps * dt;
    traj.final_state = std::move(state);
    return traj;
}

LaserPulse pump_pulse(double intensity, double photon_energy, int sign,
                      double duration_oc, double ramp_oc) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("pump sign must be +-1");
    LaserPulse pulse;
    pulse.intensity = intensity;
    pulse.photon_energy = photon_energy;
    pulse.beta = 45.0;
    pulse.duration_oc = duration_oc;
    pulse.ramp_oc = ramp_oc;
    // helicity +1 gives L_z > 0 for this field convention (checked by the
    // propagator tests against the beta = 45 deg baseline run).
    pulse.helicity = sign;
    return pulse;
}

WaveFunction prepare_pump(const RingConfig& ring, double intensity,
                          double photon_energy, int sign, double duration_oc,
                          double ramp_oc, const PropagatorOptions& opt) {
    PulseSchedule schedule;
    schedule.segments.push_back(pump_pulse(intensity, photon_energy, sign, duration_oc, ramp_oc));
    const Trajectory traj = propagate(WaveFunction::ground_state(ring), schedule, ring, opt);
    const double lz = angular_momentum(traj.final_state);
    if (std::abs(lz) < 1e-3)
        throw PumpFailed("pump left |L_z| = " + std::to_string(std::abs(lz)) +
                         " < 1e-3; pump too weak to set a pseudo-spin");
    return traj.final_state;
}

}  // namespace nanoring
