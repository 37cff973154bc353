#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "r2q/r2q.hpp"
#include "r2q/rtn.hpp"

namespace r2q {

enum class Quantizer { none, r2q, rtn };
enum class Activation { none, tanh_act };

Quantizer quantizer_from_name(const std::string& name);
std::string quantizer_name(Quantizer q);

/// One linear layer of the toy network. `weight` is the full-precision shadow
/// copy the optimizer updates; the forward pass always computes with a fresh
/// quantize-dequantize of it (fake quantization) and never writes it back.
struct ToyLayer {
    Matrix weight;              // out x in
    std::vector<double> bias;   // out
    Activation activation = Activation::none;
    Quantizer quantizer = Quantizer::none;
    GroupScheme scheme = GroupScheme::per_channel();
    int rtn_bits = 2;
};

struct ToyModel {
    std::vector<ToyLayer> layers;

    std::size_t input_dim() const { return layers.front().weight.cols; }
    std::size_t output_dim() const { return layers.back().weight.rows; }
};

/// Random tanh MLP with the given layer widths (dims.front() = input,
/// dims.back() = output; no activation after the last layer). Weights are
/// N(0, 1/sqrt(fan_in)), biases small-random so teacher logits spread.
ToyModel make_toy_model(std::uint64_t seed, const std::vector<std::size_t>& dims,
                        Quantizer quantizer = Quantizer::none,
                        GroupScheme scheme = GroupScheme::per_channel(), int rtn_bits = 2);

/// Per-layer tape from forward_quantized; inputs/preactivations are what
/// backward_ste consumes. Samples are columns throughout.
struct LayerCache {
    Matrix input;             // in x B
    Matrix quantized_weight;  // the dequantized weights used in the product
    Matrix output;            // post-activation, out x B
};

struct ForwardCache {
    std::vector<LayerCache> layers;
    Matrix logits;  // classes x B
};

/// Forward with fake quantization per layer. Shadow weights are read-only.
ForwardCache forward_quantized(const ToyModel& model, const Matrix& x);

/// Forward with explicitly supplied per-layer weights (no quantizer); used to
/// probe the differentiable sub-path, e.g. for finite differences.
Matrix forward_with_weights(const ToyModel& model, const std::vector<Matrix>& weights,
                            const Matrix& x);

struct LayerGradients {
    Matrix dquantized_weight;  // dL/dWhat, exact analytic gradient
    Matrix dweight;            // dL/dW returned for the update; equals dquantized_weight
    std::vector<double> dbias;
};

struct Gradients {
    std::vector<LayerGradients> layers;
    double weight_grad_norm() const;  // global l2 over all dweight entries
};

/// Backpropagation through the cached forward. The quantizer is crossed with
/// the straight-through estimator: the returned shadow-weight gradient is the
/// quantized-weight gradient, bit for bit. Throws MissingForwardCache when the
/// cache does not match the model.
Gradients backward_ste(const ToyModel& model, const ForwardCache& cache,
                       const Matrix& dlogits);

struct LossResult {
    double value = 0.0;
    Matrix dstudent_logits;
};

/// KL(softmax(teacher) || softmax(student)) averaged over batch columns, with
/// the analytic gradient w.r.t. student logits.
LossResult kd_loss(const Matrix& student_logits, const Matrix& teacher_logits);

/// 0.5 * mean-over-batch squared logit error; the simpler distillation target.
LossResult squared_loss(const Matrix& student_logits, const Matrix& teacher_logits);

enum class LossKind { kl, squared };

struct ToyData {
    Matrix inputs;          // dim x n
    Matrix teacher_logits;  // classes x n
};

/// Standard-normal inputs labeled by the teacher; deterministic per seed.
ToyData generate_toy_data(const ToyModel& teacher, std::uint64_t seed, std::size_t n);

struct TrainConfig {
    std::size_t steps = 500;
    std::size_t batch = 32;
    double learning_rate = 0.05;
    std::uint64_t seed = 1;
    Quantizer quantizer = Quantizer::r2q;
    GroupScheme scheme = GroupScheme::per_channel();
    int rtn_bits = 2;
    LossKind loss = LossKind::kl;
    // teacher/student widths, input first, classes last
    std::vector<std::size_t> dims = {32, 64, 64, 16};
};

struct StepMetrics {
    double loss = 0.0;
    double grad_norm = 0.0;
};

struct MetricsTrace {
    std::vector<StepMetrics> steps;

    double initial_loss() const { return steps.front().loss; }
    double final_loss() const { return steps.back().loss; }
};

/// KD training loop: teacher labels a fresh batch each step, the student runs
/// fake-quantized forward, STE backward, and a plain gradient-descent update
/// on the shadow weights. Deterministic per config. Throws DivergenceDetected
/// the first step the loss is non-finite.
MetricsTrace train(const TrainConfig& config);

/// Same loop, but also exposes the trained student.
MetricsTrace train(const TrainConfig& config, ToyModel& student_out);

/// step,loss,grad_norm CSV.
void save_trace_csv(const MetricsTrace& trace, const std::filesystem::path& path);

/// Per-layer weight/bias matrices in the flat binary matrix format plus a
/// key=value manifest.
void save_checkpoint(const ToyModel& model, const std::filesystem::path& dir);
ToyModel load_checkpoint(const std::filesystem::path& dir);

}  // namespace r2q
