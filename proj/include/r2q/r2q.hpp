#pragma once

#include <array>

#include "r2q/onebit.hpp"

namespace r2q {

/// Two-stage residual decomposition: a coarse 1-bit kernel fitted to the
/// weights plus a second 1-bit kernel fitted to the coarse residual. Each
/// reconstructed element of group g is one of the four values
/// {-a1-a2, -a1+a2, a1-a2, a1+a2} for that group's scales.
struct R2QTensor {
    BinaryKernel kernel1;  // coarse approximation
    BinaryKernel kernel2;  // residual refinement

    std::size_t rows() const { return kernel1.rows(); }
    std::size_t cols() const { return kernel1.cols(); }
    const GroupScheme& scheme() const { return kernel1.scheme; }
    std::size_t group_count() const { return kernel1.group_count(); }
};

bool operator==(const R2QTensor& a, const R2QTensor& b);

/// kernel1 = binarize(m); kernel2 = binarize(m - dequantize(kernel1)), with
/// the residual taken from the exact double-precision reconstruction.
R2QTensor quantize(const Matrix& m, const GroupScheme& s);

/// m minus the kernel's reconstruction, element-wise.
Matrix residual(const Matrix& m, const BinaryKernel& k);

Matrix dequantize(const R2QTensor& t);

/// Shared by dequantize and codebook so codebook membership is bit-exact.
inline double codebook_level(double alpha1, double alpha2, bool plus1, bool plus2) {
    return (plus1 ? alpha1 : -alpha1) + (plus2 ? alpha2 : -alpha2);
}

/// The group's four representable values in the fixed order
/// {-a1-a2, -a1+a2, a1-a2, a1+a2}. Not sorted when a2 > a1.
std::array<double, 4> codebook(const R2QTensor& t, std::size_t group_index);

}  // namespace r2q
