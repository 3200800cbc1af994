#include "gmg/config.hpp"

#include <charconv>
#include <stdexcept>

namespace gmg {

const char* to_string(StartVectorKind k) {
    switch (k) {
        case StartVectorKind::zero: return "zero";
        case StartVectorKind::nested: return "nested";
        case StartVectorKind::continuation: return "continuation";
    }
    return "?";
}

StartVectorKind parse_start_vector(const std::string& name) {
    if (name == "zero") return StartVectorKind::zero;
    if (name == "nested") return StartVectorKind::nested;
    if (name == "continuation") return StartVectorKind::continuation;
    throw std::invalid_argument("start: must be zero, nested or continuation");
}

GridHierarchy SolverConfig::build_hierarchy() const {
    return gmg::build_hierarchy(levels, coarse_nx, coarse_ny, grading, coords);
}

CycleSpec SolverConfig::cycle_spec() const {
    CycleSpec spec;
    spec.cycle = cycle;
    spec.pre_steps = pre_steps;
    spec.post_steps = post_steps;
    spec.adaptive_correction = adaptive_correction;
    spec.correction_omega = correction_omega;
    spec.smoother = smoother;
    spec.smoothing_omega = omega;
    spec.tolerance = tol;
    spec.max_cycles = max_cycles;
    return spec;
}

void SolverConfig::validate() const {
    if (levels < 1) throw std::invalid_argument("levels: must be >= 1");
    if (coarse_nx < 1 || coarse_ny < 1) throw std::invalid_argument("coarse_n: must be >= 1");
    if (!(grading.factor_x > 0.0)) throw std::invalid_argument("grading_x: must be > 0");
    if (!(grading.factor_y > 0.0)) throw std::invalid_argument("grading_y: must be > 0");
    if (!(aniso.alpha > 0.0)) throw std::invalid_argument("alpha: must be > 0");
    if (!(aniso.beta > 0.0)) throw std::invalid_argument("beta: must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("omega: must be > 0");
    if (!(smoother.omega > 0.0)) throw std::invalid_argument("smoother_omega: must be > 0");
    if (pre_steps < 0) throw std::invalid_argument("pre_steps: must be >= 0");
    if (post_steps < 0) throw std::invalid_argument("post_steps: must be >= 0");
    if (pre_steps + post_steps < 1)
        throw std::invalid_argument("pre_steps/post_steps: need at least one smoothing step");
    if (!(tol > 0.0)) throw std::invalid_argument("tol: must be > 0");
    if (max_cycles < 1) throw std::invalid_argument("max_cycles: must be >= 1");
    if (!adaptive_correction && !(correction_omega > 0.0))
        throw std::invalid_argument("correction_omega: must be > 0 or 'adaptive'");
}

void parse_coarse_n(const std::string& text, int& nx, int& ny) {
    const auto x = text.find('x');
    auto parse_int = [&](const std::string& part) {
        int value = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), value);
        if (res.ec != std::errc() || res.ptr != part.data() + part.size() || value < 1)
            throw std::invalid_argument("coarse_n: expected a positive integer or NxM, got '" +
                                        text + "'");
        return value;
    };
    if (x == std::string::npos) {
        nx = ny = parse_int(text);
    } else {
        nx = parse_int(text.substr(0, x));
        ny = parse_int(text.substr(x + 1));
    }
}

void parse_correction_omega(const std::string& text, bool& adaptive, double& value) {
    if (text == "adaptive") {
        adaptive = true;
        return;
    }
    adaptive = false;
    try {
        std::size_t pos = 0;
        value = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("correction_omega: expected a number or 'adaptive', got '" +
                                    text + "'");
    }
    if (!(value > 0.0)) throw std::invalid_argument("correction_omega: must be > 0");
}

}  // namespace gmg
