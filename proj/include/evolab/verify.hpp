#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evolab::verify {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double measured = 0;   // worst observed residual / metric
    double tolerance = 0;
    std::string detail;
    double seconds = 0;
};

// trials = 0 means the default trial count
CriterionResult equiangular_spectrum(uint64_t seed, int trials = 0);
CriterionResult symmetric_spectrum(uint64_t seed, int trials = 0);
CriterionResult quadrilateral_homothety(uint64_t seed, int trials = 0);
CriterionResult grunbaum_pentagon(uint64_t seed, int trials = 0);
CriterionResult degenerate_pentagon(uint64_t seed, int trials = 0);
CriterionResult hexagon_duality(uint64_t seed, int trials = 0);
CriterionResult hypocycloid_scalings(uint64_t seed, int trials = 0);
CriterionResult antisymmetry(uint64_t seed, int trials = 0);
CriterionResult involute_roundtrips(uint64_t seed, int trials = 0);
CriterionResult orthic_triangle(uint64_t seed, int trials = 0);
CriterionResult ergodic_map(uint64_t seed, int trials = 0);
CriterionResult smooth_limits(uint64_t seed, int trials = 0);
CriterionResult a_o_limit(uint64_t seed, int trials = 0);
CriterionResult evolvent_limits(uint64_t seed, int trials = 0);

std::vector<std::string> criterion_names();
CriterionResult run_criterion(const std::string& name, uint64_t seed, int trials = 0);
std::vector<CriterionResult> run_all(uint64_t seed);

std::string format_line(const CriterionResult& r);

}  // namespace evolab::verify
