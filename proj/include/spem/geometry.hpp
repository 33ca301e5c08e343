#ifndef SPEM_GEOMETRY_HPP
#define SPEM_GEOMETRY_HPP

#include "spem/errors.hpp"

namespace spem {

// Sensor grid layout. Element pitch differs along the two axes; the sensing
// area (n*pitch_x by m*pitch_y) must fit inside the physical sheet.
struct MatGeometry {
    int n = 27;              // rows, along the length axis
    int m = 27;              // columns, along the width axis
    double pitch_x_mm = 67.3;
    double pitch_y_mm = 52.3;
    double length_m = 2.030;
    double width_m = 1.525;

    double sensing_length_mm() const { return n * pitch_x_mm; }
    double sensing_width_mm() const { return m * pitch_y_mm; }
    int element_count() const { return n * m; }

    void validate() const {
        if (n <= 0 || m <= 0)
            throw Error(ErrorCode::domain, "geometry: n and m must be positive");
        if (pitch_x_mm <= 0.0 || pitch_y_mm <= 0.0)
            throw Error(ErrorCode::domain, "geometry: pitches must be positive");
        if (sensing_length_mm() > length_m * 1000.0 ||
            sensing_width_mm() > width_m * 1000.0)
            throw Error(ErrorCode::domain,
                        "geometry: sensing area exceeds sheet dimensions");
    }
};

}  // namespace spem

#endif
