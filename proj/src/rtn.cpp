#include "r2q/rtn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace r2q {

namespace {

// Round half away from zero, the documented tie rule for codes and zero points.
long long round_half_away(double v) { return std::llround(v); }

}  // namespace

int RTNTensor::code_at(std::size_t i) const {
    const std::size_t bit0 = i * static_cast<std::size_t>(bits);
    unsigned raw = 0;
    for (int b = 0; b < bits; ++b) {
        const std::size_t pos = bit0 + static_cast<std::size_t>(b);
        raw |= static_cast<unsigned>((codes[pos >> 3] >> (pos & 7)) & 1u) << b;
    }
    // sign-extend the k-bit two's-complement field
    const unsigned sign_bit = 1u << (bits - 1);
    return (raw & sign_bit) ? static_cast<int>(raw) - (1 << bits) : static_cast<int>(raw);
}

void RTNTensor::set_code(std::size_t i, int code) {
    const unsigned raw = static_cast<unsigned>(code) & ((1u << bits) - 1u);
    const std::size_t bit0 = i * static_cast<std::size_t>(bits);
    for (int b = 0; b < bits; ++b) {
        const std::size_t pos = bit0 + static_cast<std::size_t>(b);
        if ((raw >> b) & 1u) {
            codes[pos >> 3] |= static_cast<std::uint8_t>(1u << (pos & 7));
        } else {
            codes[pos >> 3] &= static_cast<std::uint8_t>(~(1u << (pos & 7)));
        }
    }
}

bool operator==(const RTNTensor& a, const RTNTensor& b) {
    return a.rows == b.rows && a.cols == b.cols && a.scheme == b.scheme && a.bits == b.bits &&
           a.codes == b.codes && a.scales == b.scales && a.zero_points == b.zero_points;
}

RTNTensor quantize_rtn(const Matrix& m, const GroupScheme& s, int bits) {
    if (bits < 2 || bits > 8) {
        throw InvalidInput("rtn bit width must be in [2, 8], got " + std::to_string(bits));
    }
    s.validate(m.cols);
    if (!m.all_finite()) throw InvalidInput("matrix contains NaN or Inf");

    RTNTensor t;
    t.rows = m.rows;
    t.cols = m.cols;
    t.scheme = s;
    t.bits = bits;
    t.codes.assign(RTNTensor::packed_bytes(m.size(), bits), 0);
    const std::size_t n_groups = s.group_count(m.rows, m.cols);
    t.scales.reserve(n_groups);
    t.zero_points.reserve(n_groups);

    if (m.size() == 0) return t;
    const std::size_t g = s.effective_group_size(m.cols);
    const int qmin = t.qmin();
    const int qmax = t.qmax();

    for (std::size_t base = 0; base < m.size(); base += g) {
        double rmin = m.data[base];
        double rmax = m.data[base];
        for (std::size_t i = 1; i < g; ++i) {
            rmin = std::min(rmin, m.data[base + i]);
            rmax = std::max(rmax, m.data[base + i]);
        }
        // Floor keeps s positive on (near-)degenerate ranges while the zero
        // point stays within int32: |z| <= 1e9 + 2.
        const double eps = 1e-9 * std::max(1.0, std::fabs(rmin));
        const double s_raw = std::max((rmax - rmin) / static_cast<double>(qmax - qmin), eps);
        // One narrowing to float32 here; codes, the zero point and
        // dequantization all use this stored value.
        const double scale = static_cast<double>(static_cast<float>(s_raw));
        const std::int32_t z =
            static_cast<std::int32_t>(qmin - round_half_away(rmin / scale));

        for (std::size_t i = 0; i < g; ++i) {
            const long long q = round_half_away(m.data[base + i] / scale) + z;
            const int code = static_cast<int>(std::clamp<long long>(q, qmin, qmax));
            t.set_code(base + i, code);
        }
        t.scales.push_back(static_cast<float>(scale));
        t.zero_points.push_back(z);
    }
    return t;
}

Matrix dequantize(const RTNTensor& t) {
    Matrix m(t.rows, t.cols);
    if (m.size() == 0) return m;
    const std::size_t g = t.scheme.effective_group_size(t.cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        const std::size_t group = i / g;
        m.data[i] = static_cast<double>(t.scales[group]) *
                    static_cast<double>(t.code_at(i) - t.zero_points[group]);
    }
    return m;
}

}  // namespace r2q
