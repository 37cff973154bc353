#include "r2q/gemm.hpp"

#include <algorithm>
#include <future>
#include <string>

namespace r2q {

namespace {

void check_inner(std::size_t wcols, std::size_t xrows) {
    if (wcols != xrows) {
        throw ShapeMismatch("inner dimensions disagree: " + std::to_string(wcols) + " vs " +
                            std::to_string(xrows));
    }
}

}  // namespace

GemmResult matmul_binary(const SignMatrix& signs, const Matrix& x) {
    check_inner(signs.cols, x.rows);
    const std::size_t mdim = signs.rows;
    const std::size_t kdim = signs.cols;
    const std::size_t ndim = x.cols;

    GemmResult res{Matrix(mdim, ndim), {}};
    for (std::size_t m = 0; m < mdim; ++m) {
        double* out = res.out.data.data() + m * ndim;
        std::size_t cursor = m * kdim;  // bit index of (m, 0)
        std::size_t k = 0;
        while (k < kdim) {
            // one byte of packed signs drives up to 8 add/sub lanes
            const std::uint8_t byte = signs.bits[cursor >> 3];
            const unsigned shift = cursor & 7;
            const std::size_t lanes = std::min<std::size_t>(8 - shift, kdim - k);
            for (std::size_t j = 0; j < lanes; ++j) {
                const bool plus = (byte >> (shift + j)) & 1u;
                const double* xrow = x.data.data() + (k + j) * ndim;
                if (k + j == 0) {
                    // first term initializes the accumulators; not counted
                    if (plus) {
                        for (std::size_t n = 0; n < ndim; ++n) out[n] = xrow[n];
                    } else {
                        for (std::size_t n = 0; n < ndim; ++n) out[n] = -xrow[n];
                    }
                } else if (plus) {
                    for (std::size_t n = 0; n < ndim; ++n) out[n] += xrow[n];
                } else {
                    for (std::size_t n = 0; n < ndim; ++n) out[n] -= xrow[n];
                }
            }
            cursor += lanes;
            k += lanes;
        }
    }
    if (kdim > 0) {
        res.ops.sign_flips_or_adds =
            static_cast<std::uint64_t>(mdim) * ndim * (kdim - 1);
    }
    return res;
}

GemmResult matmul_r2q_fast(const R2QTensor& t, const Matrix& x, bool parallel) {
    if (!t.scheme().is_per_channel()) {
        throw UnsupportedScheme("fast path needs per-channel scaling, got group size " +
                                std::to_string(t.scheme().group_size));
    }
    check_inner(t.cols(), x.rows);

    GemmResult p1;
    GemmResult p2;
    if (parallel) {
        auto task = std::async(std::launch::async,
                               [&] { return matmul_binary(t.kernel2.signs, x); });
        p1 = matmul_binary(t.kernel1.signs, x);
        p2 = task.get();
    } else {
        p1 = matmul_binary(t.kernel1.signs, x);
        p2 = matmul_binary(t.kernel2.signs, x);
    }

    const std::size_t mdim = t.rows();
    const std::size_t ndim = x.cols;
    GemmResult res{Matrix(mdim, ndim), {}};
    for (std::size_t m = 0; m < mdim; ++m) {
        const double a1 = t.kernel1.alphas[m];
        const double a2 = t.kernel2.alphas[m];
        const double* r1 = p1.out.data.data() + m * ndim;
        const double* r2 = p2.out.data.data() + m * ndim;
        double* out = res.out.data.data() + m * ndim;
        for (std::size_t n = 0; n < ndim; ++n) {
            out[n] = a1 * r1[n] + a2 * r2[n];
        }
    }
    res.ops.sign_flips_or_adds = p1.ops.sign_flips_or_adds + p2.ops.sign_flips_or_adds;
    res.ops.float_muls = 2ull * mdim * ndim;  // one scale multiply per kernel per element
    res.ops.float_adds = static_cast<std::uint64_t>(mdim) * ndim;  // combine step
    return res;
}

GemmResult matmul_r2q(const R2QTensor& t, const Matrix& x, bool parallel) {
    if (t.scheme().is_per_channel()) {
        return matmul_r2q_fast(t, x, parallel);
    }
    // Sub-channel scales cannot ride outside the binary accumulation; fall
    // back to the dense route and report its cost.
    GemmResult res{matmul_reference(dequantize(t), x), {}};
    const std::uint64_t mdim = t.rows();
    const std::uint64_t kdim = t.cols();
    const std::uint64_t ndim = x.cols;
    res.ops.float_muls = mdim * ndim * kdim;
    res.ops.float_adds = kdim > 0 ? mdim * ndim * (kdim - 1) : 0;
    return res;
}

Matrix matmul_reference(const Matrix& w, const Matrix& x) {
    check_inner(w.cols, x.rows);
    Matrix out(w.rows, x.cols);
    for (std::size_t i = 0; i < w.rows; ++i) {
        double* orow = out.data.data() + i * x.cols;
        for (std::size_t k = 0; k < w.cols; ++k) {
            const double wik = w.data[i * w.cols + k];
            const double* xrow = x.data.data() + k * x.cols;
            for (std::size_t j = 0; j < x.cols; ++j) {
                orow[j] += wik * xrow[j];
            }
        }
    }
    return out;
}

ComplexityRow complexity_table(std::size_t m, std::size_t n, std::size_t k) {
    if (m == 0 || n == 0 || k == 0) {
        throw InvalidInput("complexity_table needs positive dimensions");
    }
    const std::uint64_t mn = static_cast<std::uint64_t>(m) * n;
    ComplexityRow row;
    row.dense.float_muls = mn * k;
    row.dense.float_adds = mn * (k - 1);
    // INT2's mul column is MNK int2-by-float products plus MN float products.
    row.int2.float_muls = mn * k + mn;
    row.int2.float_adds = mn * (k - 1);
    row.r2q.float_muls = 2 * mn;
    row.r2q.float_adds = mn;
    row.r2q.sign_flips_or_adds = 2 * mn * (k - 1);
    return row;
}

}  // namespace r2q
