#pragma once

#include <string>

#include "gmg/cycle.hpp"
#include "gmg/mesh.hpp"
#include "gmg/smoother.hpp"

namespace gmg {

enum class StartVectorKind { zero, nested, continuation };

const char* to_string(StartVectorKind k);
StartVectorKind parse_start_vector(const std::string& name);

/// Full single-solve configuration; every field maps to one config key.
struct SolverConfig {
    int levels = 5;
    int coarse_nx = 1;
    int coarse_ny = 1;
    GradingSpec grading;
    CoordinateSystem coords = CoordinateSystem::cartesian;
    AnisotropySpec aniso;
    SmootherSpec smoother{SmootherKind::gauss_seidel, 1.0};
    double omega = 0.7;  // outer damping of each smoothing step
    CycleType cycle = CycleType::F;
    int pre_steps = 2;
    int post_steps = 2;
    bool adaptive_correction = true;
    double correction_omega = 1.0;
    double tol = 1e-4;
    int max_cycles = 50;
    StartVectorKind start = StartVectorKind::zero;

    GridHierarchy build_hierarchy() const;
    CycleSpec cycle_spec() const;
    void validate() const;  // throws std::invalid_argument naming the key
};

/// Parses "N" or "NxM" into the coarse interior point counts.
void parse_coarse_n(const std::string& text, int& nx, int& ny);

/// Parses a number or the word "adaptive".
void parse_correction_omega(const std::string& text, bool& adaptive, double& value);

}  // namespace gmg
