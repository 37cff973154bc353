#pragma once

#include <string>
#include <utility>
#include <vector>

#include "r2q/r2q.hpp"
#include "r2q/rtn.hpp"

namespace r2q {

struct LayerError {
    std::string layer;
    double mse = 0.0;  // ||W - What||^2 / element count
};

struct ErrorReport {
    std::string method;
    std::string scheme;
    std::vector<LayerError> per_layer;
    double aggregate = 0.0;  // mean over layers
};

/// Mean over layers of per-layer mean squared weight deviation.
/// Throws ShapeMismatch on length or per-pair shape disagreement.
ErrorReport layer_mse(const std::vector<Matrix>& originals,
                      const std::vector<Matrix>& quantized);

/// Per-row mean squared deviation; rows are the per-channel unit.
std::vector<double> rowwise_mse(const Matrix& original, const Matrix& quantized);

/// How many weights of each group land on each representable level.
/// `levels` is 4 for R2Q and 2^k for RTN; counts per group sum to G.
struct OccupancyHistogram {
    std::size_t levels = 0;
    std::size_t groups = 0;
    std::vector<std::uint32_t> counts;  // groups x levels, row-major

    std::uint32_t count(std::size_t group, std::size_t level) const {
        return counts[group * levels + level];
    }
    std::vector<std::uint64_t> level_totals() const;
    /// Fraction of all weights on the single most popular level per group,
    /// averaged over groups.
    double mean_top_share() const;
};

OccupancyHistogram occupancy(const R2QTensor& t);
OccupancyHistogram occupancy(const RTNTensor& t);

enum class Method { r2q, rtn };

std::string method_name(Method m);
std::string scheme_name(const GroupScheme& s);

/// (payload bits + scale/zero-point bits) / (16 bits x element count).
/// R2Q carries 2 bits/weight plus two 32-bit scales per group; RTN carries
/// k bits/weight plus a 32-bit scale and a 32-bit zero point per group.
double compression_ratio(std::size_t rows, std::size_t cols, const GroupScheme& s,
                         Method method, int bits = 2);

struct CompareCell {
    Method method;
    GroupScheme scheme;
    double mse = 0.0;
    double compression = 0.0;
    double top_level_share = 0.0;
};

struct CompareReport {
    std::string layer;
    std::vector<CompareCell> cells;
    // coarse-minus-fine MSE per method: MSE under the coarsest scheme of the
    // list minus MSE under the finest.
    std::vector<std::pair<Method, double>> stability_delta;
};

/// Quantizes m under every (method, scheme) pair and reports MSE, compression
/// and occupancy per cell.
CompareReport compare(const Matrix& m, const std::vector<GroupScheme>& schemes,
                      const std::vector<Method>& methods, int rtn_bits = 2,
                      const std::string& layer = "layer0");

std::string to_csv(const CompareReport& r);
std::string to_text(const CompareReport& r);
/// Plot-ready long format: method,scheme,layer,metric,value.
std::string to_long_csv(const CompareReport& r);

}  // namespace r2q
