#include "r2q/onebit.hpp"

#include <cmath>
#include <string>

namespace r2q {

bool operator==(const SignMatrix& a, const SignMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.bits == b.bits;
}

bool operator==(const BinaryKernel& a, const BinaryKernel& b) {
    return a.signs == b.signs && a.alphas == b.alphas && a.scheme == b.scheme;
}

GroupBinarization binarize_group(std::span<const double> w) {
    if (w.empty()) throw EmptyGroup("cannot binarize an empty group");
    GroupBinarization out;
    out.signs.resize(w.size());
    double sum_abs = 0.0;  // left-to-right, keeps runs bit-reproducible
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.signs[i] = static_cast<std::int8_t>(sign_indicator(w[i]));
        sum_abs += std::fabs(w[i]);
    }
    out.alpha = sum_abs / static_cast<double>(w.size());
    return out;
}

BinaryKernel binarize_matrix(const Matrix& m, const GroupScheme& s) {
    s.validate(m.cols);
    if (!m.all_finite()) throw InvalidInput("matrix contains NaN or Inf");

    BinaryKernel k;
    k.scheme = s;
    k.signs = SignMatrix(m.rows, m.cols);
    const std::size_t g = m.cols == 0 ? 0 : s.effective_group_size(m.cols);
    k.alphas.reserve(s.group_count(m.rows, m.cols));

    std::size_t index = 0;
    while (index < m.size()) {
        double sum_abs = 0.0;
        for (std::size_t i = 0; i < g; ++i) {
            const double v = m.data[index + i];
            k.signs.set_bit(index + i, v >= 0.0);
            sum_abs += std::fabs(v);
        }
        k.alphas.push_back(sum_abs / static_cast<double>(g));
        index += g;
    }
    return k;
}

Matrix dequantize(const BinaryKernel& k) {
    Matrix m(k.rows(), k.cols());
    if (m.size() == 0) return m;
    const std::size_t g = k.scheme.effective_group_size(k.cols());
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double a = k.alphas[i / g];
        m.data[i] = k.signs.bit(i) ? a : -a;
    }
    return m;
}

double reconstruction_error(std::span<const double> w, std::span<const std::int8_t> q,
                            double alpha) {
    double err = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double d = w[i] - alpha * static_cast<double>(q[i]);
        err += d * d;
    }
    return err;
}

BruteForceResult brute_force_onebit(std::span<const double> w) {
    const std::size_t g = w.size();
    if (g == 0) throw EmptyGroup("cannot search an empty group");
    if (g > 16) {
        throw GroupTooLarge("brute force capped at G=16, got " + std::to_string(g));
    }

    std::vector<std::int8_t> q(g);
    BruteForceResult best;
    bool have_best = false;
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
        double dot = 0.0;
        for (std::size_t i = 0; i < g; ++i) {
            q[i] = (mask >> i) & 1 ? 1 : -1;
            dot += w[i] * static_cast<double>(q[i]);
        }
        // optimal scale for this direction, clamped to the admissible range
        const double alpha = std::max(0.0, dot / static_cast<double>(g));
        const double err = reconstruction_error(w, q, alpha);
        if (!have_best || err < best.error) {
            best.signs = q;
            best.alpha = alpha;
            best.error = err;
            have_best = true;
        }
    }
    return best;
}

}  // namespace r2q
