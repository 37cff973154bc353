#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "r2q/tensor.hpp"

namespace r2q {

/// Packed sign matrix: bit = 1 means +1, bit = 0 means -1. Bits are laid out
/// over the row-major element index, LSB-first within each byte; the final
/// partial byte is zero-padded. Because groups are contiguous runs inside a
/// row, row-major order and group order coincide.
struct SignMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> bits;

    SignMatrix() = default;
    SignMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), bits(packed_bytes(r * c), 0) {}

    std::size_t size() const { return rows * cols; }

    bool bit(std::size_t i) const { return (bits[i >> 3] >> (i & 7)) & 1; }
    void set_bit(std::size_t i, bool plus) {
        if (plus) {
            bits[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
        } else {
            bits[i >> 3] &= static_cast<std::uint8_t>(~(1u << (i & 7)));
        }
    }
    int sign(std::size_t r, std::size_t c) const { return bit(r * cols + c) ? 1 : -1; }

    static std::size_t packed_bytes(std::size_t bit_count) { return (bit_count + 7) / 8; }
};

bool operator==(const SignMatrix& a, const SignMatrix& b);

/// One binary kernel: packed signs plus a non-negative scale per group.
struct BinaryKernel {
    SignMatrix signs;
    std::vector<double> alphas;  // one per group, partition order
    GroupScheme scheme;

    std::size_t rows() const { return signs.rows; }
    std::size_t cols() const { return signs.cols; }
    std::size_t group_count() const { return alphas.size(); }
};

bool operator==(const BinaryKernel& a, const BinaryKernel& b);

/// +1 for w >= 0 (including -0.0), -1 for w < 0.
inline int sign_indicator(double w) { return w >= 0.0 ? 1 : -1; }

struct GroupBinarization {
    std::vector<std::int8_t> signs;  // +1 / -1
    double alpha = 0.0;
};

/// Closed-form optimal 1-bit fit of one group: element-wise sign plus
/// alpha = mean(|w|), accumulated left to right. Throws EmptyGroup for G = 0.
GroupBinarization binarize_group(std::span<const double> w);

/// Group-wise binarization of a whole matrix. Rejects non-finite input.
BinaryKernel binarize_matrix(const Matrix& m, const GroupScheme& s);

/// Reconstruction: element (r, c) = alpha[group] * sign(r, c).
Matrix dequantize(const BinaryKernel& k);

struct BruteForceResult {
    std::vector<std::int8_t> signs;
    double alpha = 0.0;
    double error = 0.0;  // squared l2 error of the best candidate
};

/// Exhaustive minimizer of ||w - alpha*q||^2 over all 2^G sign vectors, with
/// the per-candidate optimal scale max(0, <w,q>/G). Test oracle only; G is
/// capped at 16 (GroupTooLarge beyond).
BruteForceResult brute_force_onebit(std::span<const double> w);

/// ||w - alpha*q||^2 with left-to-right accumulation.
double reconstruction_error(std::span<const double> w, std::span<const std::int8_t> q,
                            double alpha);

}  // namespace r2q
