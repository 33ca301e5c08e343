#include "spem/velostat.hpp"

#include <cmath>
#include <random>

#include "spem/crossbar.hpp"
#include "spem/field.hpp"
#include "spem/rng.hpp"

namespace spem {

void VelostatParams::validate() const {
    if (!(0.0 < g_min && g_min < g_max))
        throw Error(ErrorCode::domain, "velostat: need 0 < g_min < g_max");
    if (!(p_half > 0.0))
        throw Error(ErrorCode::domain, "velostat: p_half must be positive");
    if (!(tau_load > 0.0) || !(tau_release > 0.0))
        throw Error(ErrorCode::domain, "velostat: time constants must be positive");
    if (baseline_jitter_counts < 0.0 || noise_counts < 0.0)
        throw Error(ErrorCode::domain, "velostat: count parameters must be >= 0");
}

double target_conductance(double p, const VelostatParams& params) {
    if (p < 0.0)
        throw Error(ErrorCode::domain, "target_conductance: negative force");
    return params.g_min + (params.g_max - params.g_min) * p / (p + params.p_half);
}

VelostatState step_state(const VelostatState& state, const PressureField& field,
                         double dt, const VelostatParams& params) {
    if (dt < 0.0)
        throw Error(ErrorCode::domain, "step_state: negative dt");
    if (field.n != state.n || field.m != state.m)
        throw Error(ErrorCode::dim_mismatch, "step_state: field/state shape mismatch");

    const double decay_load = std::exp(-dt / params.tau_load);
    const double decay_release = std::exp(-dt / params.tau_release);

    VelostatState out = state;
    const size_t count = state.s.size();
    for (size_t idx = 0; idx < count; ++idx) {
        const double g_t = std::min(
            target_conductance(field.force[idx], params) + state.baseline_offset[idx],
            params.g_max);
        const double decay = (g_t > state.s[idx]) ? decay_load : decay_release;
        out.s[idx] = g_t + (state.s[idx] - g_t) * decay;
    }
    return out;
}

VelostatState init_state(const MatGeometry& geometry, const VelostatParams& params,
                         const CircuitParams& circuit, std::uint64_t seed) {
    geometry.validate();
    params.validate();
    circuit.validate();

    VelostatState state;
    state.n = geometry.n;
    state.m = geometry.m;
    state.g_min = params.g_min;
    const size_t count = static_cast<size_t>(geometry.n) * geometry.m;
    state.s.assign(count, params.g_min);
    state.baseline_offset.assign(count, 0.0);

    if (params.baseline_jitter_counts > 0.0) {
        // Invert the zero-potential single-element readout so that a target
        // of u counts above the calibration reference maps to a conductance
        // offset. Interactions between offsets only pull readings down, so
        // the [0, jitter] bound is preserved.
        const double g = params.g_min;
        const double shunt = 1.0 / circuit.r_ref + (geometry.n - 1) * g;
        const double v_ref = circuit.vcc * g / (g + shunt);
        const double volts_per_count = circuit.vref_adc / 255.0;

        auto rng = make_rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (size_t idx = 0; idx < count; ++idx) {
            const double u = unit(rng) * params.baseline_jitter_counts;
            const double v_target = v_ref + u * volts_per_count;
            if (v_target >= circuit.vcc)
                throw Error(ErrorCode::domain,
                            "init_state: baseline_jitter_counts unreachable at this vcc");
            const double s_needed = shunt * v_target / (circuit.vcc - v_target);
            state.baseline_offset[idx] = std::max(0.0, s_needed - g);
            state.s[idx] = params.g_min + state.baseline_offset[idx];
        }
    }
    return state;
}

void reset_to_baseline(VelostatState& state) {
    const size_t count = state.s.size();
    for (size_t idx = 0; idx < count; ++idx)
        state.s[idx] = state.g_min + state.baseline_offset[idx];
}

}  // namespace spem
