#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "r2q/tensor.hpp"

namespace r2q {

enum class Dist { gaussian, laplace, student_t, uniform };

/// Accepts "gaussian", "laplace", "student-t", "uniform".
Dist dist_from_name(const std::string& name);
std::string dist_name(Dist d);

/// Deterministic sampler: fixed transforms over mt19937_64 draws, so a seed
/// pins the stream regardless of the standard library's distribution
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01();  // [0, 1)
    double uniform(double lo, double hi);
    double normal();          // N(0, 1), Box-Muller
    double laplace();         // Laplace(0, 1)
    double student_t(int dof = 4);
    double sample(Dist d);

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

Matrix sample_matrix(Dist d, std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace r2q
