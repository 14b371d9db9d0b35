#include "nanoring/ring_model.hpp"

#include <cmath>
#include <numbers>

namespace nanoring {

void LaserPulse::validate() const {
    if (intensity < 0.0) throw std::invalid_argument("LaserPulse: intensity must be >= 0");
    if (photon_energy <= 0.0) throw std::invalid_argument("LaserPulse: photon_energy must be > 0");
    if (beta < 0.0 || beta > 90.0) throw std::invalid_argument("LaserPulse: beta must be in [0, 90] degrees");
    if (ramp_oc < 0.0 || 2.0 * ramp_oc > duration_oc)
        throw std::invalid_argument("LaserPulse: need 2*ramp_oc <= duration_oc");
    if (helicity != 1 && helicity != -1) throw std::invalid_argument("LaserPulse: helicity must be +-1");
}

double LaserPulse::cycle() const { return 2.0 * std::numbers::pi / omega(); }

void PulseSchedule::validate() const {
    if (segments.empty()) throw std::invalid_argument("PulseSchedule: no segments");
    for (const auto& seg : segments) seg.validate();
    const double e0 = segments.front().photon_energy;
    for (const auto& seg : segments)
        if (seg.photon_energy != e0)
            throw std::invalid_argument("PulseSchedule: all segments must share one photon_energy");
}

double PulseSchedule::omega() const { return segments.front().omega(); }
double PulseSchedule::cycle() const { return segments.front().cycle(); }

double PulseSchedule::total_duration() const {
    double total = 0.0;
    for (const auto& seg : segments) total += seg.duration();
    return total;
}

const LaserPulse* PulseSchedule::segment_at(double t, double* t_local) const {
    double start = 0.0;
    for (const auto& seg : segments) {
        const double end = start + seg.duration();
        if (t >= start && t <= end) {
            if (t_local) *t_local = t - start;
            return &seg;
        }
        start = end;
    }
    return nullptr;
}

WaveFunction WaveFunction::ground_state(const RingConfig& ring) { return basis_state(ring, 0); }

WaveFunction WaveFunction::basis_state(const RingConfig& ring, int m) {
    ring.validate();
    if (std::abs(m) > ring.m_max) throw std::invalid_argument("basis_state: |m| > m_max");
    WaveFunction wf;
    wf.m_max = ring.m_max;
    wf.coefficients.assign(static_cast<size_t>(ring.dim()), cplx(0.0, 0.0));
    wf.a(m) = 1.0;
    return wf;
}

double WaveFunction::norm2() const {
    double s = 0.0;
    for (const auto& c : coefficients) s += std::norm(c);
    return s;
}

double level_energy(int m, const RingConfig& ring) {
    return static_cast<double>(m) * static_cast<double>(m) / (2.0 * ring.radius * ring.radius);
}

double level_energy_ev(int m, const RingConfig& ring) { return au_to_ev(level_energy(m, ring)); }

double amplitude_from_intensity(double intensity) {
    if (intensity < 0.0) throw std::invalid_argument("intensity must be >= 0");
    return std::sqrt(intensity / kIntensityAu);
}

double envelope(double t, const LaserPulse& pulse) {
    const double oc = pulse.cycle();
    const double t_oc = t / oc;
    if (t_oc < 0.0 || t_oc > pulse.duration_oc) return 0.0;
    if (pulse.ramp_oc > 0.0 && t_oc < pulse.ramp_oc) return t_oc / pulse.ramp_oc;
    if (pulse.ramp_oc > 0.0 && t_oc > pulse.duration_oc - pulse.ramp_oc)
        return (pulse.duration_oc - t_oc) / pulse.ramp_oc;
    return 1.0;
}

FieldVec field_at(double t, const LaserPulse& pulse) {
    const double e0 = amplitude_from_intensity(pulse.intensity);
    const double f = envelope(t, pulse);
    if (e0 == 0.0 || f == 0.0) return {};
    const double beta_rad = pulse.beta * std::numbers::pi / 180.0;
    const double w = pulse.omega();
    return {e0 * f * std::cos(beta_rad) * std::cos(w * t),
            pulse.helicity * e0 * f * std::sin(beta_rad) * std::sin(w * t)};
}

FieldVec schedule_field_at(double t, const PulseSchedule& schedule) {
    double t_local = 0.0;
    const LaserPulse* seg = schedule.segment_at(t, &t_local);
    if (!seg) return {};
    return field_at(t_local, *seg);
}

std::vector<cplx> apply_hamiltonian(const WaveFunction& state, double t,
                                    const RingConfig& ring,
                                    const PulseSchedule& schedule) {
    if (state.m_max != ring.m_max)
        throw std::invalid_argument("apply_hamiltonian: state/ring truncation mismatch");
    const int n = ring.dim();
    const FieldVec field = schedule_field_at(t, schedule);
    const cplx upper = coupling_upper(field, ring);  // H_{m,m+1}
    const cplx lower = std::conj(upper);

    std::vector<cplx> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int m = i - ring.m_max;
        cplx v = level_energy(m, ring) * state.coefficients[static_cast<size_t>(i)];
        if (i + 1 < n) v += upper * state.coefficients[static_cast<size_t>(i + 1)];
        if (i > 0) v += lower * state.coefficients[static_cast<size_t>(i - 1)];
        out[static_cast<size_t>(i)] = v;
    }
    return out;
}

}  // namespace nanoring
