#ifndef SPEM_VELOSTAT_HPP
#define SPEM_VELOSTAT_HPP

#include <cstdint>
#include <vector>

#include "spem/geometry.hpp"

namespace spem {

struct CircuitParams;
struct PressureField;

// Element-level model of the piezoresistive sheet: a saturating static
// pressure->conductance law plus slow first-order loading/releasing
// relaxation, and a static per-element baseline spread expressed in ADC
// counts (what an unoccupied scan is allowed to read).
struct VelostatParams {
    double g_min = 3.333e-5;        // S, unloaded element (~30 kOhm)
    double g_max = 2.0e-3;          // S, saturated element (~500 Ohm)
    double p_half = 20.0;           // N, force at the half-swing point
    double tau_load = 6.0;          // s
    double tau_release = 10.0;      // s
    double baseline_jitter_counts = 4.0;
    double noise_counts = 2.0;      // per-read noise; applied by the scanner

    void validate() const;
};

struct VelostatState {
    int n = 0;
    int m = 0;
    double g_min = 0.0;                  // pristine conductance, kept for reset
    std::vector<double> s;               // conductance per element, row-major
    std::vector<double> baseline_offset; // static per-element spread, >= 0

    double& at(int i, int k) { return s[static_cast<size_t>(i) * m + k]; }
    double at(int i, int k) const { return s[static_cast<size_t>(i) * m + k]; }
};

// g(p) = g_min + (g_max - g_min) * p / (p + p_half); strictly increasing,
// strictly concave, g(0) = g_min, g(inf) -> g_max. Throws on p < 0.
double target_conductance(double p, const VelostatParams& params);

// Exact relaxation over dt toward the per-element target
// g_t = min(target_conductance(p) + baseline_offset, g_max), with
// tau = tau_load when rising and tau_release when falling.
VelostatState step_state(const VelostatState& state, const PressureField& field,
                         double dt, const VelostatParams& params);

// Fresh mat: s = g_min + baseline_offset. Offsets are drawn per element so
// an unoccupied calibrated scan lands in [0, baseline_jitter_counts] counts;
// the counts->conductance inversion needs the readout constants, hence the
// circuit argument.
VelostatState init_state(const MatGeometry& geometry, const VelostatParams& params,
                         const CircuitParams& circuit, std::uint64_t seed);

// Subject stepped off: conductances return to the pristine baseline while
// the per-element offsets persist (they are a property of the sheet).
void reset_to_baseline(VelostatState& state);

}  // namespace spem

#endif
