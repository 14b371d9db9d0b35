#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nanoring/ring_model.hpp"

using namespace nanoring;

namespace {

WaveFunction random_state(const RingConfig& ring, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist;
    WaveFunction wf = WaveFunction::ground_state(ring);
    double n2 = 0.0;
    for (auto& c : wf.coefficients) {
        c = cplx(dist(rng), dist(rng));
        n2 += std::norm(c);
    }
    for (auto& c : wf.coefficients) c /= std::sqrt(n2);
    return wf;
}

cplx inner(const WaveFunction& a, const std::vector<cplx>& b) {
    cplx s(0.0, 0.0);
    for (size_t i = 0; i < a.coefficients.size(); ++i) s += std::conj(a.coefficients[i]) * b[i];
    return s;
}

PulseSchedule single(const LaserPulse& pulse) {
    PulseSchedule s;
    s.segments.push_back(pulse);
    return s;
}

LaserPulse baseline_pulse(double beta) {
    LaserPulse p;
    p.intensity = 1e14;
    p.photon_energy = 2.0;
    p.beta = beta;
    p.duration_oc = 32.0;
    p.ramp_oc = 2.0;
    return p;
}

}  // namespace

TEST_CASE("level energies: m^2/(2R^2), matching the published 1.9/7.6/17 eV ladder") {
    RingConfig ring{2.7, 64};
    CHECK(level_energy(0, ring) == 0.0);
    CHECK(level_energy(1, ring) == doctest::Approx(1.0 / (2.0 * 2.7 * 2.7)));
    // the published values round the m=1 level to 1.9 eV and scale by m^2
    CHECK(level_energy_ev(1, ring) == doctest::Approx(1.9).epsilon(0.02));
    CHECK(level_energy_ev(2, ring) == doctest::Approx(7.6).epsilon(0.02));
    CHECK(level_energy_ev(3, ring) == doctest::Approx(17.0).epsilon(0.02));
}

TEST_CASE("level energies are even in m and scale as R^-2") {
    RingConfig ring{2.7, 8};
    for (int m = 0; m <= 8; ++m) CHECK(level_energy(m, ring) == level_energy(-m, ring));

    RingConfig big{4.0 * 2.7, 8};
    for (int m = 1; m <= 8; ++m)
        CHECK(level_energy(m, big) == doctest::Approx(level_energy(m, ring) / 16.0).epsilon(1e-15));
}

TEST_CASE("field amplitude from intensity") {
    CHECK(amplitude_from_intensity(kIntensityAu) == doctest::Approx(1.0));
    CHECK(amplitude_from_intensity(0.0) == 0.0);
    CHECK(amplitude_from_intensity(1e14) == doctest::Approx(std::sqrt(1e14 / 3.50945e16)).epsilon(1e-14));
    CHECK(amplitude_from_intensity(1e14) == doctest::Approx(0.05338).epsilon(1e-3));
    CHECK_THROWS_AS(amplitude_from_intensity(-1.0), std::invalid_argument);
}

TEST_CASE("trapezoidal envelope") {
    LaserPulse p = baseline_pulse(0.0);
    const double oc = p.cycle();
    CHECK(envelope(16.0 * oc, p) == 1.0);               // plateau
    CHECK(envelope(0.0, p) == 0.0);                     // ramp start
    CHECK(envelope(1.0 * oc, p) == doctest::Approx(0.5));  // ramp midpoint
    CHECK(envelope(31.0 * oc, p) == doctest::Approx(0.5));
    CHECK(envelope(-oc, p) == 0.0);  // outside the pulse
    CHECK(envelope(33.0 * oc, p) == 0.0);

    SUBCASE("ramp longer than half the pulse is rejected") {
        p.ramp_oc = 17.0;
        CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    }
}

TEST_CASE("field components follow the polarization angle") {
    const double e0 = amplitude_from_intensity(1e14);

    LaserPulse px = baseline_pulse(0.0);
    LaserPulse py = baseline_pulse(90.0);
    LaserPulse pc = baseline_pulse(45.0);
    const double oc = px.cycle();

    for (double t_oc : {3.0, 10.1, 16.7, 29.3}) {
        const double t = t_oc * oc;
        CHECK(field_at(t, px).ey == 0.0);
        CHECK(std::abs(field_at(t, py).ex) < 1e-15);
        // plateau circular: both envelopes at E0/sqrt(2)
        const FieldVec f = field_at(t, pc);
        CHECK(std::hypot(f.ex, f.ey) <= e0 / std::sqrt(2.0) + 1e-12);
    }
    // plateau amplitude check at the carrier extrema
    CHECK(std::abs(field_at(16.0 * oc, pc).ex) == doctest::Approx(e0 / std::sqrt(2.0)));
    CHECK(std::abs(field_at(16.25 * oc, pc).ey) == doctest::Approx(e0 / std::sqrt(2.0)));
}

TEST_CASE("helicity flip negates E_y exactly") {
    LaserPulse plus = baseline_pulse(45.0);
    LaserPulse minus = plus;
    minus.helicity = -1;
    const double oc = plus.cycle();
    for (double t_oc = 0.0; t_oc < 32.0; t_oc += 0.37) {
        const FieldVec a = field_at(t_oc * oc, plus);
        const FieldVec b = field_at(t_oc * oc, minus);
        CHECK(a.ex == b.ex);
        CHECK(a.ey == -b.ey);
    }
}

TEST_CASE("free Hamiltonian is diagonal") {
    RingConfig ring{2.7, 4};
    LaserPulse off = baseline_pulse(0.0);
    off.intensity = 0.0;
    const PulseSchedule s = single(off);
    for (int m = -4; m <= 4; ++m) {
        const WaveFunction wf = WaveFunction::basis_state(ring, m);
        const auto h = apply_hamiltonian(wf, 10.0, ring, s);
        for (int i = 0; i < ring.dim(); ++i) {
            const cplx expected = (i - ring.m_max == m) ? cplx(level_energy(m, ring), 0.0) : cplx(0.0, 0.0);
            CHECK(std::abs(h[static_cast<size_t>(i)] - expected) < 1e-15);
        }
    }
}

TEST_CASE("x drive couples |0> to |+-1> with equal magnitude, y drive with opposite-sign imaginary parts") {
    RingConfig ring{2.7, 3};
    const WaveFunction wf = WaveFunction::ground_state(ring);
    const double oc = baseline_pulse(0.0).cycle();
    const double t = 16.0 * oc;  // plateau

    SUBCASE("beta = 0") {
        const PulseSchedule s = single(baseline_pulse(0.0));
        const auto h = apply_hamiltonian(wf, t, ring, s);
        const cplx up = h[static_cast<size_t>(3 + 1)];
        const cplx down = h[static_cast<size_t>(3 - 1)];
        const double ex = schedule_field_at(t, s).ex;
        CHECK(std::abs(up - down) < 1e-15);  // <+-1|cos phi|0> = 1/2 each
        CHECK(up.real() == doctest::Approx(0.5 * ex * ring.radius));
        CHECK(up.imag() == 0.0);
    }
    SUBCASE("beta = 90") {
        const PulseSchedule s = single(baseline_pulse(90.0));
        const double t_peak = 16.25 * oc;  // sin carrier extremum
        const auto h = apply_hamiltonian(wf, t_peak, ring, s);
        const cplx up = h[static_cast<size_t>(3 + 1)];
        const cplx down = h[static_cast<size_t>(3 - 1)];
        CHECK(std::abs(up + down) < 1e-15);  // <+-1|sin phi|0> = -+i/2
        CHECK(std::abs(up.real()) < 1e-12);
        CHECK(std::abs(up.imag()) > 1e-4);
    }
}

TEST_CASE("Hamiltonian action is Hermitian on random states") {
    RingConfig ring{2.7, 16};
    const PulseSchedule s = single(baseline_pulse(37.0));
    const double oc = s.cycle();
    for (unsigned seed = 0; seed < 8; ++seed) {
        const WaveFunction phi = random_state(ring, 2 * seed);
        const WaveFunction psi = random_state(ring, 2 * seed + 1);
        const double t = (3.0 + seed) * oc / 0.7;
        const auto h_psi = apply_hamiltonian(psi, t, ring, s);
        const auto h_phi = apply_hamiltonian(phi, t, ring, s);
        const cplx lhs = inner(phi, h_psi);
        const cplx rhs = std::conj(inner(psi, h_phi));
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("schedule segments concatenate and share the carrier") {
    LaserPulse pump = baseline_pulse(45.0);
    LaserPulse probe = baseline_pulse(0.0);
    PulseSchedule s;
    s.segments = {pump, probe};
    s.validate();
    CHECK(s.total_duration() == doctest::Approx(64.0 * pump.cycle()));

    double t_local = -1.0;
    const LaserPulse* seg = s.segment_at(40.0 * pump.cycle(), &t_local);
    REQUIRE(seg != nullptr);
    CHECK(seg->beta == 0.0);
    CHECK(t_local == doctest::Approx(8.0 * pump.cycle()));
    CHECK(s.segment_at(100.0 * pump.cycle(), nullptr) == nullptr);

    probe.photon_energy = 1.0;
    s.segments = {pump, probe};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("configuration invariants are enforced") {
    CHECK_THROWS_AS((RingConfig{-1.0, 8}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((RingConfig{2.7, 0}).validate(), std::invalid_argument);
    LaserPulse p = baseline_pulse(95.0);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = baseline_pulse(45.0);
    p.intensity = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
