#ifndef SPEM_SCENE_HPP
#define SPEM_SCENE_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "spem/field.hpp"
#include "spem/geometry.hpp"

namespace spem {

enum class Task { posture = 0, activity = 1 };

int class_count(Task task);
const char* class_name(Task task, int class_id);

// Table-driven subject draw; the ranges bound the population the system is
// exercised with.
struct SubjectProfile {
    double height_m = 1.75;
    double weight_kg = 71.0;
    double age_years = 23.0;

    void validate() const;
};

constexpr double kHeightMin = 1.67, kHeightMax = 1.83;
constexpr double kWeightMin = 64.0, kWeightMax = 78.0;
constexpr double kAgeMin = 21.0, kAgeMax = 28.0;

SubjectProfile sample_subject(std::mt19937_64& rng);

// Gate windows are half-open slices of one shared class clock so that the
// active fractions partition exactly (sum to 1) at every instant.
struct Modulation {
    double period_s = 0.0;      // 0 = always active, no time dependence
    double win_start = 0.0;     // [0,1), half-open window on the class clock
    double win_end = 1.0;       // may wrap (start > end)
    double sway_amp_h = 0.0;    // center oscillation along body x, fraction of height
    double sway_period_s = 0.0;
};

// One elliptical contact patch in the body frame. Positions are fractions of
// subject height along/across the body axis; semi-axes are millimetres for a
// 1.75 m subject and scale linearly with height.
struct LoadPatch {
    std::string name;
    double cx_h = 0.0;
    double cy_h = 0.0;
    double ax_mm = 50.0;
    double ay_mm = 50.0;
    double weight_fraction = 0.0;
    Modulation mod;
};

// A patch resolved into mat coordinates at a specific instant.
struct PlacedPatch {
    double cx_mm = 0.0;
    double cy_mm = 0.0;
    double ax_mm = 0.0;
    double ay_mm = 0.0;
    double angle_deg = 0.0;
    double share = 0.0;  // fraction of total force
};

struct SceneScript {
    Task task = Task::posture;
    int class_id = 0;
    SubjectProfile subject;
    MatGeometry geometry;
    double dx_mm = 0.0;      // body-center displacement from mat center
    double dy_mm = 0.0;
    double rot_deg = 0.0;
    double phase_s = 0.0;    // random clock offset for modulated classes
    std::vector<LoadPatch> patches;
};

// Numeric template overrides keyed "<class>.<patch>.<field>", e.g.
// "supine.torso.fraction". Loaded from config keys with prefix "scene.".
using SceneOverrides = std::map<std::string, double>;

// Instantiates the class template scaled to the subject, with randomized
// placement that keeps every patch fully on the sensing area.
SceneScript make_scene(Task task, int class_id, const SubjectProfile& subject,
                       const MatGeometry& geometry, std::mt19937_64& rng,
                       const SceneOverrides* overrides = nullptr);

bool scene_is_static(const SceneScript& scene);

// Active patches at scene time t, in mat coordinates.
std::vector<PlacedPatch> placed_patches(const SceneScript& scene, double t);

// Force field at time t; total is subject.weight_kg * 9.81 N at every t.
PressureField pressure_at(const SceneScript& scene, double t);

// Spreads each patch's share over the pixels it covers, proportional to
// elliptical coverage area; the summed grid equals total_force exactly up to
// rounding. Throws when a patch misses the sensing area entirely.
PressureField rasterize(const std::vector<PlacedPatch>& patches, double total_force,
                        const MatGeometry& geometry);

}  // namespace spem

#endif
