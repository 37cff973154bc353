#include "r2q/r2q.hpp"

#include <string>

namespace r2q {

bool operator==(const R2QTensor& a, const R2QTensor& b) {
    return a.kernel1 == b.kernel1 && a.kernel2 == b.kernel2;
}

R2QTensor quantize(const Matrix& m, const GroupScheme& s) {
    R2QTensor t;
    t.kernel1 = binarize_matrix(m, s);
    // Residual from the exact double-precision reconstruction, not from any
    // storage-rounded value.
    t.kernel2 = binarize_matrix(residual(m, t.kernel1), s);
    return t;
}

Matrix residual(const Matrix& m, const BinaryKernel& k) {
    if (m.rows != k.rows() || m.cols != k.cols()) {
        throw ShapeMismatch("residual: matrix is " + std::to_string(m.rows) + "x" +
                            std::to_string(m.cols) + ", kernel is " +
                            std::to_string(k.rows()) + "x" + std::to_string(k.cols()));
    }
    Matrix r(m.rows, m.cols);
    if (r.size() == 0) return r;
    const std::size_t g = k.scheme.effective_group_size(m.cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double a = k.alphas[i / g];
        r.data[i] = m.data[i] - (k.signs.bit(i) ? a : -a);
    }
    return r;
}

Matrix dequantize(const R2QTensor& t) {
    Matrix m(t.rows(), t.cols());
    if (m.size() == 0) return m;
    const std::size_t g = t.scheme().effective_group_size(t.cols());
    for (std::size_t i = 0; i < m.size(); ++i) {
        const std::size_t group = i / g;
        m.data[i] = codebook_level(t.kernel1.alphas[group], t.kernel2.alphas[group],
                                   t.kernel1.signs.bit(i), t.kernel2.signs.bit(i));
    }
    return m;
}

std::array<double, 4> codebook(const R2QTensor& t, std::size_t group_index) {
    if (group_index >= t.group_count()) {
        throw IndexOutOfRange("group index " + std::to_string(group_index) +
                              " out of range, tensor has " +
                              std::to_string(t.group_count()) + " groups");
    }
    const double a1 = t.kernel1.alphas[group_index];
    const double a2 = t.kernel2.alphas[group_index];
    return {codebook_level(a1, a2, false, false), codebook_level(a1, a2, false, true),
            codebook_level(a1, a2, true, false), codebook_level(a1, a2, true, true)};
}

}  // namespace r2q
