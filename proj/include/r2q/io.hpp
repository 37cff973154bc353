#pragma once

#include <filesystem>

#include "r2q/r2q.hpp"
#include "r2q/rtn.hpp"

namespace r2q {

// All binary formats are little-endian.
//
// Matrix ("R2QM"): magic, u32 version=1, u32 rows, u32 cols, then rows*cols
// IEEE float32, row-major.
//
// R2Q tensor ("R2Q1"): magic, u32 version=1, u32 rows, u32 cols,
// i32 group_size (-1 = per-channel), kernel1 sign bits, kernel1 alphas
// (float32 per group), kernel2 sign bits, kernel2 alphas.
//
// RTN tensor ("RTN1"): magic, u32 version=1, u32 rows, u32 cols,
// i32 group_size, u8 k, packed codes (k-bit fields, LSB-first, row-major),
// then {float32 scale, i32 zero_point} per group.

void save_matrix(const Matrix& m, const std::filesystem::path& path);
Matrix load_matrix(const std::filesystem::path& path);

/// One row per line, whitespace-separated decimals. Rejects ragged rows,
/// unparsable tokens and non-finite values.
Matrix load_matrix_text(const std::filesystem::path& path);

void save_r2q(const R2QTensor& t, const std::filesystem::path& path);
R2QTensor load_r2q(const std::filesystem::path& path);

void save_rtn(const RTNTensor& t, const std::filesystem::path& path);
RTNTensor load_rtn(const std::filesystem::path& path);

enum class QuantFormat { r2q, rtn };

/// Reads the magic to tell an R2Q1 file from an RTN1 file.
QuantFormat peek_format(const std::filesystem::path& path);

}  // namespace r2q
