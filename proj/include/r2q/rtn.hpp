#pragma once

#include <cstdint>

#include "r2q/tensor.hpp"

namespace r2q {

/// Round-to-nearest affine quantizer on the signed k-bit lattice
/// [-2^(k-1), 2^(k-1)-1]. Codes are k-bit two's-complement fields packed
/// LSB-first over the row-major element index. The per-group scale is held at
/// float32 precision (computed in double, rounded once at construction) so the
/// in-memory tensor and the RTN1 file carry identical values.
struct RTNTensor {
    std::size_t rows = 0;
    std::size_t cols = 0;
    GroupScheme scheme;
    int bits = 2;  // k in [2, 8]
    std::vector<std::uint8_t> codes;
    std::vector<float> scales;             // s > 0 per group
    std::vector<std::int32_t> zero_points;  // z per group

    int qmin() const { return -(1 << (bits - 1)); }
    int qmax() const { return (1 << (bits - 1)) - 1; }
    std::size_t group_count() const { return scales.size(); }

    int code_at(std::size_t i) const;
    void set_code(std::size_t i, int code);

    static std::size_t packed_bytes(std::size_t element_count, int bits) {
        return (element_count * static_cast<std::size_t>(bits) + 7) / 8;
    }
};

bool operator==(const RTNTensor& a, const RTNTensor& b);

/// Per group: s = max((r_max - r_min)/(q_max - q_min), eps), z = q_min -
/// round(r_min/s), code = clip(round(w/s) + z, q_min, q_max). Rounding is
/// half-away-from-zero. eps = 1e-9 * max(1, |r_min|) keeps s positive on
/// degenerate ranges while z stays within int32.
RTNTensor quantize_rtn(const Matrix& m, const GroupScheme& s, int bits = 2);

/// Element = s * (code - z) per group.
Matrix dequantize(const RTNTensor& t);

}  // namespace r2q
