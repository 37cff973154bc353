#pragma once

#include <cstdint>

#include "r2q/r2q.hpp"

namespace r2q {

/// Operation counters for the GEMM paths. Counts are functions of the shapes
/// only, never of the values. sign_flips_or_adds covers the additions and
/// subtractions inside the binary accumulation (K-1 per output element per
/// kernel; loading the first, possibly negated, term is free).
struct OpCount {
    std::uint64_t float_muls = 0;
    std::uint64_t float_adds = 0;
    std::uint64_t sign_flips_or_adds = 0;

    std::uint64_t total_adds() const { return float_adds + sign_flips_or_adds; }
};

inline bool operator==(const OpCount& a, const OpCount& b) {
    return a.float_muls == b.float_muls && a.float_adds == b.float_adds &&
           a.sign_flips_or_adds == b.sign_flips_or_adds;
}

struct GemmResult {
    Matrix out;
    OpCount ops;
};

/// out[m][n] = sum_k sign(m, k) * x[k][n], realized purely as additions and
/// subtractions of x entries consumed byte-wise from the packed bits.
/// Accumulation is k-ascending per output element.
GemmResult matmul_binary(const SignMatrix& signs, const Matrix& x);

/// alpha1 o (Q1 X) + alpha2 o (Q2 X) with row-wise scaling: exactly 2MN float
/// multiplications. Per-channel schemes only; throws UnsupportedScheme for
/// sub-channel groups. The two binary products are independent tasks; with
/// parallel=true they run concurrently and merge deterministically.
GemmResult matmul_r2q_fast(const R2QTensor& t, const Matrix& x, bool parallel = true);

/// Fast path when the scheme is per-channel, otherwise falls back to
/// dequantize + matmul_reference (dense op counts reported).
GemmResult matmul_r2q(const R2QTensor& t, const Matrix& x, bool parallel = true);

/// Dense triple-loop product in double with k-ascending accumulation. This is
/// the oracle the binary paths are checked against.
Matrix matmul_reference(const Matrix& w, const Matrix& x);

struct ComplexityRow {
    OpCount dense;
    OpCount int2;
    OpCount r2q;
};

/// Predicted op counts for an (M x K) by (K x N) product:
///   dense: MNK muls, MN(K-1) adds
///   int2:  MNK + MN muls, MN(K-1) adds
///   r2q:   2MN muls, MN combine adds + 2MN(K-1) binary adds
ComplexityRow complexity_table(std::size_t m, std::size_t n, std::size_t k);

}  // namespace r2q
