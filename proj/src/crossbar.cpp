#include "spem/crossbar.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace spem {

void CircuitParams::validate() const {
    if (!(vcc > 0.0) || !(vref_adc > 0.0))
        throw Error(ErrorCode::domain, "circuit: vcc and vref_adc must be positive");
    if (!(r_ref > 0.0))
        throw Error(ErrorCode::domain, "circuit: r_ref must be positive");
    if (r_drive < 0.0 || r_gnd_inactive < 0.0)
        throw Error(ErrorCode::domain, "circuit: source resistances must be >= 0");
    if (noise_counts < 0.0)
        throw Error(ErrorCode::domain, "circuit: noise_counts must be >= 0");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Nodes are the n row bars and m column bars. Rows tied to a rail through
// zero resistance are eliminated as fixed potentials; everything else is
// solved as one symmetric system.
std::vector<double> solve_row(int active_row, const VelostatState& state,
                              const CircuitParams& circuit) {
    const int n = state.n;
    const int m = state.m;

    const bool pin_active = (circuit.r_drive == 0.0);
    const bool pin_inactive = (circuit.r_gnd_inactive == 0.0);

    // Unknown index per node; -1 means pinned.
    std::vector<int> row_idx(n, -1);
    int unknowns = 0;
    for (int i = 0; i < n; ++i) {
        const bool pinned = (i == active_row) ? pin_active : pin_inactive;
        if (!pinned) row_idx[i] = unknowns++;
    }
    const int col_base = unknowns;
    unknowns += m;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(unknowns, unknowns);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(unknowns);

    for (int i = 0; i < n; ++i) {
        if (row_idx[i] < 0) continue;
        const int ri = row_idx[i];
        if (i == active_row) {
            a(ri, ri) += 1.0 / circuit.r_drive;
            b(ri) += circuit.vcc / circuit.r_drive;
        } else if (circuit.r_gnd_inactive != kInf) {
            a(ri, ri) += 1.0 / circuit.r_gnd_inactive;
        }
    }
    for (int k = 0; k < m; ++k)
        a(col_base + k, col_base + k) += 1.0 / circuit.r_ref;

    for (int i = 0; i < n; ++i) {
        const double v_pin = (i == active_row) ? circuit.vcc : 0.0;
        const int ri = row_idx[i];
        for (int k = 0; k < m; ++k) {
            const double s = state.at(i, k);
            if (s < 0.0 || !std::isfinite(s))
                throw Error(ErrorCode::domain, "scan_row: invalid conductance");
            if (s == 0.0) continue;
            const int ck = col_base + k;
            if (ri >= 0) {
                a(ri, ri) += s;
                a(ck, ck) += s;
                a(ri, ck) -= s;
                a(ck, ri) -= s;
            } else {
                a(ck, ck) += s;
                b(ck) += s * v_pin;
            }
        }
    }

    for (int u = 0; u < unknowns; ++u)
        if (a(u, u) == 0.0)
            throw Error(ErrorCode::singular, "scan_row: floating node with no path");

    Eigen::VectorXd v = a.ldlt().solve(b);
    if (!v.allFinite())
        throw Error(ErrorCode::singular, "scan_row: solve produced non-finite values");
    const double residual = (a * v - b).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    if (residual > 1e-8 * scale)
        throw Error(ErrorCode::singular, "scan_row: solve did not converge");

    std::vector<double> columns(m);
    for (int k = 0; k < m; ++k) columns[k] = v(col_base + k);
    return columns;
}

}  // namespace

std::vector<double> scan_row(int row, const VelostatState& state,
                             const CircuitParams& circuit) {
    if (row < 0 || row >= state.n)
        throw Error(ErrorCode::domain, "scan_row: row out of range");
    circuit.validate();
    return solve_row(row, state, circuit);
}

std::uint8_t quantize(double v, const CircuitParams& circuit) {
    const double scaled = std::round(255.0 * v / circuit.vref_adc);
    if (scaled <= 0.0) return 0;
    if (scaled >= 255.0) return 255;
    return static_cast<std::uint8_t>(scaled);
}

Calibration make_calibration(const VelostatState& state,
                             const CircuitParams& circuit) {
    VelostatState pristine;
    pristine.n = state.n;
    pristine.m = state.m;
    pristine.g_min = state.g_min;
    pristine.s.assign(state.s.size(), state.g_min);
    pristine.baseline_offset.assign(state.s.size(), 0.0);

    Calibration cal;
    cal.n = state.n;
    cal.m = state.m;
    cal.v_ref.resize(state.s.size());
    for (int i = 0; i < state.n; ++i) {
        const auto v = solve_row(i, pristine, circuit);
        for (int k = 0; k < state.m; ++k)
            cal.v_ref[static_cast<size_t>(i) * state.m + k] = v[k];
    }
    return cal;
}

PressureFrame scan_frame(const VelostatState& state, const CircuitParams& circuit,
                         std::mt19937_64& rng, double timestamp,
                         const Calibration* cal) {
    circuit.validate();
    Calibration local;
    if (cal == nullptr) {
        local = make_calibration(state, circuit);
        cal = &local;
    }
    if (cal->n != state.n || cal->m != state.m)
        throw Error(ErrorCode::dim_mismatch, "scan_frame: calibration shape mismatch");

    PressureFrame frame;
    frame.n = state.n;
    frame.m = state.m;
    frame.d = 1;
    frame.timestamp = timestamp;
    frame.pixels.resize(state.s.size());

    const double noise_amp = circuit.noise_counts * circuit.vref_adc / 255.0;
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    for (int i = 0; i < state.n; ++i) {
        const auto v = solve_row(i, state, circuit);
        for (int k = 0; k < state.m; ++k) {
            const double noise = sym(rng) * noise_amp;
            const double v_eff = v[k] - cal->at(i, k) + noise;
            frame.pixels[static_cast<size_t>(i) * state.m + k] =
                quantize(v_eff, circuit);
        }
    }
    return frame;
}

int crosstalk_readthrough(const VelostatState& state, const CircuitParams& circuit,
                          int i_loaded, int i_probe, int k,
                          const Calibration* cal) {
    if (i_loaded == i_probe)
        throw Error(ErrorCode::domain, "crosstalk_readthrough: rows must differ");
    if (i_loaded < 0 || i_loaded >= state.n || i_probe < 0 || i_probe >= state.n ||
        k < 0 || k >= state.m)
        throw Error(ErrorCode::domain, "crosstalk_readthrough: index out of range");

    Calibration local;
    if (cal == nullptr) {
        local = make_calibration(state, circuit);
        cal = &local;
    }

    auto probe_counts = [&](const VelostatState& st) {
        const auto v = solve_row(i_probe, st, circuit);
        return static_cast<int>(quantize(v[k] - cal->at(i_probe, k), circuit));
    };

    const int with_load = probe_counts(state);
    VelostatState released = state;
    released.at(i_loaded, k) =
        state.g_min + released.baseline_offset[static_cast<size_t>(i_loaded) * state.m + k];
    const int without_load = probe_counts(released);
    return with_load - without_load;
}

}  // namespace spem
