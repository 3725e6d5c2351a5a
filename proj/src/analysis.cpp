#include "wavesim/analysis.hpp"

#include "wavesim/errors.hpp"
#include "wavesim/simulate.hpp"

#include <algorithm>
#include <future>
#include <numbers>
#include <thread>

namespace wavesim {

namespace {

/// Samples per fundamental period; throws unless the recorded grid divides
/// the period exactly (within 1e-6 relative).
std::size_t samples_per_period(const WaveformTrace& trace) {
    if (trace.dt_sample <= 0.0 || trace.fundamental_hz <= 0.0) {
        throw ConfigError("steady_window: trace lacks sampling metadata");
    }
    const double period = 1.0 / trace.fundamental_hz;
    const double ratio = period / trace.dt_sample;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * ratio) {
        throw ConfigError("steady_window: fundamental period is not an integer "
                          "number of recorded samples");
    }
    return static_cast<std::size_t>(rounded);
}

double mean_of(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double rms_of(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return x.empty() ? 0.0 : std::sqrt(s / static_cast<double>(x.size()));
}

} // namespace

Window steady_window(const WaveformTrace& trace, Signal signal, double rel_tol,
                     int window_periods) {
    const std::size_t ppp = samples_per_period(trace);
    const std::size_t n = trace.size();
    if (n < 4 * ppp) {
        throw ConfigError("steady_window: trace spans fewer than 4 fundamental periods");
    }
    if (window_periods < 1) throw ConfigError("steady_window: window_periods must be >= 1");
    const std::size_t wlen = static_cast<std::size_t>(window_periods) * ppp;
    if (wlen + ppp > n) {
        throw ConfigError("steady_window: trace too short for the requested window");
    }

    Window w{n - wlen, n, false};

    const auto& x = trace.col(signal);
    std::span<const double> last(x.data() + (n - ppp), ppp);
    std::span<const double> prev(x.data() + (n - 2 * ppp), ppp);
    const double m_last = mean_of(last);
    const double m_prev = mean_of(prev);
    const double r_last = rms_of(last);
    const double r_prev = rms_of(prev);

    // AC signals have a near-zero per-period mean; drift is judged on RMS then.
    double drift;
    if (std::abs(m_last) >= 0.1 * r_last) {
        drift = std::abs(m_last - m_prev) / std::max(std::abs(m_last), 1e-300);
    } else {
        drift = std::abs(r_last - r_prev) / std::max(r_last, 1e-300);
    }
    w.settled = drift < rel_tol;
    return w;
}

std::span<const double> window_view(const WaveformTrace& trace, Signal signal,
                                    const Window& w) {
    const auto& c = trace.col(signal);
    if (w.end > c.size() || w.begin >= w.end) {
        throw ConfigError("window_view: window outside trace");
    }
    return {c.data() + w.begin, w.end - w.begin};
}

HarmonicSpectrum fft_spectrum(std::span<const double> x, double dt, double f0,
                              int n_harmonics) {
    if (x.empty()) throw ConfigError("fft_spectrum: empty window");
    if (n_harmonics < 1) throw ConfigError("fft_spectrum: n_harmonics must be >= 1");
    const double n = static_cast<double>(x.size());
    const double periods = n * dt * f0;
    if (periods < 0.999999 ||
        std::abs(periods - std::round(periods)) > 1e-6 * std::max(1.0, periods)) {
        throw ConfigError("fft_spectrum: window is not an integer number of "
                          "fundamental periods");
    }

    HarmonicSpectrum spec;
    spec.f0 = f0;
    spec.magnitudes.assign(static_cast<std::size_t>(n_harmonics), 0.0);

    std::vector<double> acc_c(static_cast<std::size_t>(n_harmonics), 0.0);
    std::vector<double> acc_s(static_cast<std::size_t>(n_harmonics), 0.0);
    const double w0 = 2.0 * std::numbers::pi * f0 * dt;
    double dc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double v = x[j];
        dc += v;
        const double th = w0 * static_cast<double>(j);
        const double c1 = std::cos(th);
        const double s1 = std::sin(th);
        // Harmonic phasors by rotation: cos/sin(k*th) from the k-1 pair.
        double ck = c1;
        double sk = s1;
        for (int k = 0; k < n_harmonics; ++k) {
            acc_c[static_cast<std::size_t>(k)] += v * ck;
            acc_s[static_cast<std::size_t>(k)] += v * sk;
            const double cn = ck * c1 - sk * s1;
            sk = sk * c1 + ck * s1;
            ck = cn;
        }
    }
    spec.dc = dc / n;
    double harm_sq = 0.0;
    for (int k = 0; k < n_harmonics; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const double mag = 2.0 / n * std::hypot(acc_c[i], acc_s[i]);
        spec.magnitudes[i] = mag;
        if (k >= 1) harm_sq += mag * mag;
    }
    const double fund = spec.magnitudes[0];
    spec.thd = fund > 0.0 ? std::sqrt(harm_sq) / fund
                          : std::numeric_limits<double>::quiet_NaN();
    return spec;
}

BasicStats basic_stats(std::span<const double> x) {
    if (x.empty()) throw ConfigError("basic_stats: empty window");
    BasicStats st;
    double lo = x[0];
    double hi = x[0];
    double sum = 0.0;
    double sq = 0.0;
    double pk = 0.0;
    for (double v : x) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
        sq += v * v;
        pk = std::max(pk, std::abs(v));
    }
    const double n = static_cast<double>(x.size());
    st.mean = sum / n;
    st.rms = std::sqrt(sq / n);
    st.ripple_pp = hi - lo;
    st.peak_abs = pk;
    return st;
}

BasicStats basic_stats(const WaveformTrace& trace, Signal signal, const Window& w) {
    return basic_stats(window_view(trace, signal, w));
}

EfficiencyResult efficiency(const WaveformTrace& trace, const Window& w) {
    const auto& e_in = trace.col(kSigEIn);
    const auto& e_out = trace.col(kSigEOut);
    if (w.end > e_in.size() || w.begin >= w.end) {
        throw ConfigError("efficiency: window outside trace");
    }
    const double din = e_in[w.end - 1] - e_in[w.begin];
    const double dout = e_out[w.end - 1] - e_out[w.begin];
    if (din <= 0.0) return {0.0, true};
    return {dout / din, false};
}

EnergyAudit energy_audit(const WaveformTrace& trace, const Window& w,
                         const ScenarioConfig& cfg) {
    auto stored = [&](std::size_t i) {
        auto sq = [](double v) { return v * v; };
        return 0.5 * cfg.zeta.L1 * sq(trace.col(kSigIL1)[i]) +
               0.5 * cfg.zeta.L2 * sq(trace.col(kSigIL2)[i]) +
               0.5 * cfg.zeta.C1 * sq(trace.col(kSigVC1)[i]) +
               0.5 * cfg.zeta.C2 * sq(trace.col(kSigVC2)[i]) +
               0.5 * cfg.inverter.Lf * sq(trace.col(kSigIInvRaw)[i]) +
               0.5 * cfg.inverter.Cf * sq(trace.col(kSigVLoad)[i]);
    };
    EnergyAudit audit;
    const std::size_t a = w.begin;
    const std::size_t b = w.end - 1;
    audit.input_J = trace.col(kSigEIn)[b] - trace.col(kSigEIn)[a];
    audit.output_J = trace.col(kSigEOut)[b] - trace.col(kSigEOut)[a];
    audit.stored_delta_J = stored(b) - stored(a);
    const double denom = std::max(std::abs(audit.input_J), 1e-300);
    audit.residual_frac =
        std::abs(audit.input_J - audit.output_J - audit.stored_delta_J) / denom;
    return audit;
}

std::uint64_t dcm_steps_in_window(const WaveformTrace& trace, const Window& w) {
    const auto& c = trace.col(kSigDcmCum);
    if (w.end > c.size() || w.begin >= w.end) return 0;
    return static_cast<std::uint64_t>(c[w.end - 1] - c[w.begin]);
}

std::vector<SweepRow> duty_sweep(const ScenarioConfig& cfg) {
    std::vector<SweepRow> rows(cfg.sweep.d_values.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].duty = cfg.sweep.d_values[i];
        rows[i].zeta_gain_analytic = zeta_dc_gain(rows[i].duty);
        rows[i].boost_gain_analytic = boost_dc_gain(rows[i].duty);
    }
    if (cfg.sweep.mode == SweepMode::kAnalytic) return rows;

    auto run_point = [&cfg](double duty) {
        ScenarioConfig point = cfg;
        point.scenario = Scenario::kZetaOnly;
        point.zeta.D = duty;
        point.overrides.clear();
        const WaveformTrace trace = integrate(point);
        const Window w = steady_window(trace, kSigVZetaOut,
                                       point.analysis.settle_rel_tol,
                                       point.analysis.window_periods);
        SweepRow r;
        r.duty = duty;
        r.zeta_gain_simulated =
            basic_stats(trace, kSigVZetaOut, w).mean / point.stage.vs_fixed;
        r.ccm = dcm_steps_in_window(trace, w) == 0;
        r.settled = w.settled;
        return r;
    };

    // Fan the points out to a small pool; results keep input order.
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(rows.size())));
    std::vector<std::future<SweepRow>> futures(rows.size());
    std::size_t next = 0;
    while (next < rows.size()) {
        const std::size_t batch = std::min<std::size_t>(workers, rows.size() - next);
        for (std::size_t j = 0; j < batch; ++j) {
            const double duty = cfg.sweep.d_values[next + j];
            futures[next + j] = std::async(std::launch::async, run_point, duty);
        }
        next += batch;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
            const SweepRow r = futures[i].get();
            rows[i].zeta_gain_simulated = r.zeta_gain_simulated;
            rows[i].ccm = r.ccm;
            rows[i].settled = r.settled;
        } catch (const std::exception& e) {
            rows[i].error = e.what(); // flagged, not fatal
        }
    }
    return rows;
}

} // namespace wavesim
