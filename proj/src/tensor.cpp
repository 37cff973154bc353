#include "r2q/tensor.hpp"

#include <cmath>
#include <string>

namespace r2q {

Matrix::Matrix(std::size_t r, std::size_t c, std::vector<double> d)
    : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols) {
        throw ShapeMismatch("matrix data length " + std::to_string(data.size()) +
                            " != " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

bool Matrix::all_finite() const {
    for (double v : data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

GroupScheme GroupScheme::grouped(int g) {
    if (g <= 0) {
        throw SchemeMismatch("group size must be positive or -1, got " + std::to_string(g));
    }
    return GroupScheme{g};
}

void GroupScheme::validate(std::size_t cols) const {
    if (is_per_channel()) return;
    if (group_size <= 0 || cols % static_cast<std::size_t>(group_size) != 0) {
        throw SchemeMismatch("group size " + std::to_string(group_size) +
                             " does not divide row width " + std::to_string(cols));
    }
}

std::size_t GroupScheme::effective_group_size(std::size_t cols) const {
    validate(cols);
    return is_per_channel() ? cols : static_cast<std::size_t>(group_size);
}

std::size_t GroupScheme::groups_per_row(std::size_t cols) const {
    if (cols == 0) return 0;
    return cols / effective_group_size(cols);
}

std::size_t GroupScheme::group_count(std::size_t rows, std::size_t cols) const {
    return rows * groups_per_row(cols);
}

std::vector<std::span<const double>> partition(const Matrix& m, const GroupScheme& s) {
    const std::size_t g = s.effective_group_size(m.cols);
    const std::size_t per_row = m.cols / g;
    std::vector<std::span<const double>> groups;
    groups.reserve(m.rows * per_row);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* base = m.data.data() + r * m.cols;
        for (std::size_t i = 0; i < per_row; ++i) {
            groups.emplace_back(base + i * g, g);
        }
    }
    return groups;
}

Matrix reassemble(const std::vector<std::span<const double>>& groups, std::size_t rows,
                  std::size_t cols, const GroupScheme& s) {
    const std::size_t g = s.effective_group_size(cols);
    const std::size_t expected = cols == 0 ? 0 : rows * (cols / g);
    if (groups.size() != expected) {
        throw ShapeMismatch("expected " + std::to_string(expected) + " groups, got " +
                            std::to_string(groups.size()));
    }
    Matrix m(rows, cols);
    std::size_t offset = 0;
    for (const auto& slice : groups) {
        if (slice.size() != g) {
            throw ShapeMismatch("group slice length " + std::to_string(slice.size()) +
                                " != group size " + std::to_string(g));
        }
        std::copy(slice.begin(), slice.end(), m.data.begin() + offset);
        offset += g;
    }
    return m;
}

}  // namespace r2q
