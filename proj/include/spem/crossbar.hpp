#ifndef SPEM_CROSSBAR_HPP
#define SPEM_CROSSBAR_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "spem/geometry.hpp"
#include "spem/velostat.hpp"

namespace spem {

// Readout electronics around the crossbar. The scanned row is driven to vcc
// through r_drive; every other row is tied to ground through r_gnd_inactive
// (the crosstalk knob); each column sees a divider resistor r_ref to ground
// and is sampled by an 8-bit ADC referenced to vref_adc.
struct CircuitParams {
    double vcc = 5.0;
    double vref_adc = 5.0;
    double r_ref = 10e3;
    double r_drive = 50.0;
    double r_gnd_inactive = 50.0;   // may be +inf (floating inactive rows)
    double noise_counts = 2.0;      // per-read uniform noise, in ADC counts

    void validate() const;
};

struct PressureFrame {
    int n = 0;
    int m = 0;
    int d = 1;
    double timestamp = 0.0;
    std::vector<std::uint8_t> pixels;  // row-major, n*m*d

    std::uint8_t at(int i, int k) const {
        return pixels[static_cast<size_t>(i) * m + k];
    }
};

// Column voltages of a pristine (all g_min) mat, one row per scanned row.
// The signal chain subtracts these before quantization, mirroring the
// calibration pass the readout firmware performs on an empty mat.
struct Calibration {
    int n = 0;
    int m = 0;
    std::vector<double> v_ref;  // row-major, n*m

    double at(int i, int k) const {
        return v_ref[static_cast<size_t>(i) * m + k];
    }
};

// Full nodal solve of the (n+m)-node resistive network for one scanned row.
// Returns the m column-node potentials. Throws Error(singular) when the
// system has no unique solution (e.g. all conductances zero with floating
// inactive rows).
std::vector<double> scan_row(int row, const VelostatState& state,
                             const CircuitParams& circuit);

// clamp(round_half_away_from_zero(255 * v / vref_adc), 0, 255)
std::uint8_t quantize(double v, const CircuitParams& circuit);

Calibration make_calibration(const VelostatState& state,
                             const CircuitParams& circuit);

// Scan every row of a snapshot of `state`, subtract the calibration
// reference, add per-read uniform noise in +-noise_counts*(vref/255) volts,
// and quantize. `rng` must be a dedicated per-frame substream.
// When `cal` is null a calibration is computed on the fly.
PressureFrame scan_frame(const VelostatState& state, const CircuitParams& circuit,
                         std::mt19937_64& rng, double timestamp = 0.0,
                         const Calibration* cal = nullptr);

// Diagnostic: counts read at probe (scan row i_probe, column k) with the
// state as given, minus the counts with element (i_loaded, k) reset to its
// baseline conductance. Noiseless by construction.
int crosstalk_readthrough(const VelostatState& state, const CircuitParams& circuit,
                          int i_loaded, int i_probe, int k,
                          const Calibration* cal = nullptr);

}  // namespace spem

#endif
