#ifndef SPEM_FIELD_HPP
#define SPEM_FIELD_HPP

#include <vector>

namespace spem {

// Continuous applied force per element, in newtons. This is the physical
// input to the sheet, before any electrical effect.
struct PressureField {
    int n = 0;
    int m = 0;
    std::vector<double> force;  // row-major, N, nonnegative
    double total_force = 0.0;   // N

    double& at(int i, int k) { return force[static_cast<size_t>(i) * m + k]; }
    double at(int i, int k) const { return force[static_cast<size_t>(i) * m + k]; }

    static PressureField zeros(int n, int m) {
        PressureField f;
        f.n = n;
        f.m = m;
        f.force.assign(static_cast<size_t>(n) * m, 0.0);
        f.total_force = 0.0;
        return f;
    }
};

}  // namespace spem

#endif
