#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "r2q/error.hpp"

namespace r2q {

/// Dense row-major matrix of doubles. All quantizers operate on this type;
/// arithmetic stays in double end to end, file formats narrow to float32.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // rows * cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    Matrix(std::size_t r, std::size_t c, std::vector<double> d);

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::size_t size() const { return data.size(); }

    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }

    bool all_finite() const;
};

/// Exact element-wise equality (value identity, not tolerance).
bool operator==(const Matrix& a, const Matrix& b);

/// Partition of each row into contiguous quantization groups. Groups never
/// span rows; group_size == kPerChannel means one group covering the row.
struct GroupScheme {
    static constexpr int kPerChannel = -1;

    int group_size = kPerChannel;

    static GroupScheme per_channel() { return GroupScheme{kPerChannel}; }
    static GroupScheme grouped(int g);

    bool is_per_channel() const { return group_size == kPerChannel; }

    /// Group length for a row of `cols` elements; throws SchemeMismatch unless
    /// the size divides cols exactly.
    std::size_t effective_group_size(std::size_t cols) const;
    std::size_t groups_per_row(std::size_t cols) const;
    std::size_t group_count(std::size_t rows, std::size_t cols) const;
    void validate(std::size_t cols) const;
};

inline bool operator==(const GroupScheme& a, const GroupScheme& b) {
    return a.group_size == b.group_size;
}

/// Row-major ordered group slices; concatenated in order they reproduce m.
std::vector<std::span<const double>> partition(const Matrix& m, const GroupScheme& s);

/// Inverse of partition. Throws ShapeMismatch when the slice count or lengths
/// do not add up to (rows, cols) under the scheme.
Matrix reassemble(const std::vector<std::span<const double>>& groups, std::size_t rows,
                  std::size_t cols, const GroupScheme& s);

}  // namespace r2q
