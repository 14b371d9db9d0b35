#include "nanoring/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

namespace nanoring {

cplx morlet(double x, double sigma0) {
    if (sigma0 <= 0.0) throw std::invalid_argument("morlet: sigma0 must be > 0");
    const double gauss = std::exp(-x * x / (2.0 * sigma0 * sigma0));
    const double corr = std::exp(-sigma0 * sigma0 / 2.0);
    return (cplx(std::cos(x), -std::sin(x)) - corr) * gauss;
}

Spectrum dipole_spectrum(const Trajectory& traj, SpectrumWindow window) {
    if (traj.times.empty()) throw WindowTooShort("dipole_spectrum: empty trajectory");
    return dipole_spectrum(traj, traj.times.front(), traj.times.back(), window);
}

Spectrum dipole_spectrum(const Trajectory& traj, double t0, double t1, SpectrumWindow window) {
    if (traj.cycle <= 0.0) throw std::invalid_argument("dipole_spectrum: trajectory has no carrier");
    if (t1 - t0 < 8.0 * traj.cycle)
        throw WindowTooShort("dipole_spectrum: analysis window shorter than 8 oc");

    size_t lo = 0;
    while (lo < traj.size() && traj.times[lo] < t0 - 1e-9) ++lo;
    size_t hi = traj.size();
    while (hi > lo && traj.times[hi - 1] > t1 + 1e-9) --hi;
    const size_t n = hi - lo;
    if (n < 16) throw WindowTooShort("dipole_spectrum: too few samples in window");

    const double dt = traj.dt_sample;
    std::vector<double> taper(n, 1.0);
    if (window == SpectrumWindow::Hann && n > 1)
        for (size_t j = 0; j < n; ++j)
            taper[j] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                            static_cast<double>(n - 1));
    Spectrum spec;
    const size_t n_bins = n / 2 + 1;
    spec.energies.resize(n_bins);
    spec.power_x.resize(n_bins);
    spec.power_y.resize(n_bins);
    spec.power.resize(n_bins);

    const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    for (size_t k = 0; k < n_bins; ++k) {
        const double w = dw * static_cast<double>(k);
        cplx fx(0.0, 0.0), fy(0.0, 0.0);
        for (size_t j = 0; j < n; ++j) {
            const double phase = -w * (traj.times[lo + j] - traj.times[lo]);
            const cplx e(std::cos(phase), std::sin(phase));
            fx += taper[j] * traj.dipole_x[lo + j] * e;
            fy += taper[j] * traj.dipole_y[lo + j] * e;
        }
        fx *= dt;
        fy *= dt;
        spec.energies[k] = au_to_ev(w);
        spec.power_x[k] = std::norm(fx);
        spec.power_y[k] = std::norm(fy);
        spec.power[k] = spec.power_x[k] + spec.power_y[k];
    }
    return spec;
}

std::vector<double> energy_grid(double e_min, double e_max, double e_step) {
    if (e_min <= 0.0 || e_max <= e_min || e_step <= 0.0)
        throw std::invalid_argument("energy_grid: need 0 < e_min < e_max, e_step > 0");
    const size_t n = static_cast<size_t>(std::floor((e_max - e_min) / e_step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (size_t i = 0; i < n; ++i) grid[i] = e_min + e_step * static_cast<double>(i);
    return grid;
}

std::vector<cplx> cwt_complex(std::span<const double> times,
                              std::span<const double> signal,
                              std::span<const double> energies_ev,
                              const CwtOptions& opt) {
    if (times.size() != signal.size() || times.size() < 2)
        throw std::invalid_argument("cwt: times/signal size mismatch or too short");
    for (double e : energies_ev)
        if (e <= 0.0) throw std::invalid_argument("cwt: energies must be > 0");
    const size_t stride = std::max<size_t>(1, opt.time_stride);
    const size_t n_t = (times.size() + stride - 1) / stride;
    const size_t n_e = energies_ev.size();
    const double dt = times[1] - times[0];

    std::vector<cplx> grid(n_e * n_t);

    auto run_rows = [&](size_t e_begin, size_t e_end) {
        std::vector<cplx> wavelet;
        for (size_t ei = e_begin; ei < e_end; ++ei) {
            const double omega = ev_to_au(energies_ev[ei]);
            const double sqrt_w = std::sqrt(omega);
            // the lag grid is uniform, so M* is sampled once per row
            const long k_max = static_cast<long>(std::floor(opt.support * opt.sigma0 / (omega * dt)));
            wavelet.resize(static_cast<size_t>(2 * k_max + 1));
            for (long k = -k_max; k <= k_max; ++k)
                wavelet[static_cast<size_t>(k + k_max)] =
                    std::conj(morlet(omega * dt * static_cast<double>(k), opt.sigma0));
            for (size_t ti = 0; ti < n_t; ++ti) {
                const long c = static_cast<long>(ti * stride);
                const long j0 = std::max<long>(0, c - k_max);
                const long j1 = std::min<long>(static_cast<long>(times.size()) - 1, c + k_max);
                cplx acc(0.0, 0.0);
                for (long j = j0; j <= j1; ++j)
                    acc += signal[static_cast<size_t>(j)] * wavelet[static_cast<size_t>(j - c + k_max)];
                grid[ei * n_t + ti] = sqrt_w * dt * acc;
            }
        }
    };

    const size_t n_workers = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), n_e);
    if (n_workers <= 1) {
        run_rows(0, n_e);
    } else {
        std::vector<std::future<void>> jobs;
        const size_t chunk = (n_e + n_workers - 1) / n_workers;
        for (size_t w = 0; w < n_workers; ++w) {
            const size_t b = w * chunk;
            const size_t e = std::min(n_e, b + chunk);
            if (b >= e) break;
            jobs.push_back(std::async(std::launch::async, run_rows, b, e));
        }
        for (auto& j : jobs) j.get();
    }
    return grid;
}

Scalogram cwt(const Trajectory& traj, std::span<const double> energies_ev,
              const CwtOptions& opt) {
    // both dipole components contribute to the emitted signal
    const std::vector<cplx> gx = cwt_complex(traj.times, traj.dipole_x, energies_ev, opt);
    const std::vector<cplx> gy = cwt_complex(traj.times, traj.dipole_y, energies_ev, opt);

    const size_t stride = std::max<size_t>(1, opt.time_stride);
    Scalogram s;
    s.sigma0 = opt.sigma0;
    s.cycle = traj.cycle;
    s.energies.assign(energies_ev.begin(), energies_ev.end());
    for (size_t i = 0; i < traj.size(); i += stride) s.times.push_back(traj.times[i]);
    s.magnitude.resize(gx.size());
    for (size_t i = 0; i < gx.size(); ++i)
        s.magnitude[i] = std::sqrt(std::norm(gx[i]) + std::norm(gy[i]));
    return s;
}

std::array<Band, 4> line_bands(const RingConfig& ring, double photon_energy_ev,
                               double halfwidth_ev) {
    if (halfwidth_ev <= 0.0) throw std::invalid_argument("line_bands: halfwidth must be > 0");
    const double w1 = level_energy_ev(1, ring);
    const double w2 = level_energy_ev(2, ring);
    std::array<Band, 4> bands;
    bands[static_cast<size_t>(LineId::H_I)] = {photon_energy_ev - halfwidth_ev,
                                               photon_energy_ev + halfwidth_ev};
    bands[static_cast<size_t>(LineId::H_II)] = {3.0 * photon_energy_ev - halfwidth_ev,
                                                3.0 * photon_energy_ev + halfwidth_ev};
    bands[static_cast<size_t>(LineId::H_R1)] = {2.0 * w1 - halfwidth_ev, 2.0 * w1 + halfwidth_ev};
    bands[static_cast<size_t>(LineId::H_R2)] = {w2 - halfwidth_ev, w2 + w1 + halfwidth_ev};
    return bands;
}

LineReport detect_lines(const Spectrum& spectrum, const RingConfig& ring,
                        double photon_energy_ev, const DetectionConfig& cfg) {
    if (spectrum.energies.empty())
        throw std::invalid_argument("detect_lines: empty spectrum");

    const std::array<Band, 4> bands = line_bands(ring, photon_energy_ev, cfg.band_halfwidth);
    if (!cfg.allow_overlap) {
        auto sorted = bands;
        std::sort(sorted.begin(), sorted.end(), [](const Band& a, const Band& b) { return a.lo < b.lo; });
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i].hi > sorted[i + 1].lo)
                throw BandOverlap("detect_lines: bands [" + std::to_string(sorted[i].lo) + ", " +
                                  std::to_string(sorted[i].hi) + "] and [" +
                                  std::to_string(sorted[i + 1].lo) + ", " +
                                  std::to_string(sorted[i + 1].hi) +
                                  "] eV intersect; bad ring/laser pairing");
    }

    LineReport report;
    report.threshold = cfg.threshold;
    for (size_t b = 0; b < 4; ++b) {
        auto& line = report.lines[b];
        line.band = bands[b];
        line.center = bands[b].center();
        double power = 0.0;
        for (size_t k = 0; k < spectrum.energies.size(); ++k)
            if (spectrum.energies[k] >= bands[b].lo && spectrum.energies[k] <= bands[b].hi)
                power += spectrum.power[k];
        line.power = power;
    }

    double reference = cfg.reference;
    if (reference < 0.0) {
        reference = 0.0;
        for (const auto& line : report.lines) reference = std::max(reference, line.power);
    }
    report.reference = reference;
    for (auto& line : report.lines) line.present = line.power > cfg.threshold * reference;
    return report;
}

}  // namespace nanoring
