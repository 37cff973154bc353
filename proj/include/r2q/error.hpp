#pragma once

#include <stdexcept>
#include <string>

namespace r2q {

// One exit code per error class; the CLI maps exceptions to these verbatim.
enum class ErrorCode : int {
    usage = 2,
    io_error = 3,
    parse_error = 4,
    format_error = 5,
    scheme_mismatch = 6,
    shape_mismatch = 7,
    unsupported_scheme = 8,
    divergence_detected = 9,
    empty_group = 10,
    group_too_large = 11,
    index_out_of_range = 12,
    missing_forward_cache = 13,
    invalid_input = 14,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCode::io_error, m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorCode::parse_error, m) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& m) : Error(ErrorCode::format_error, m) {}
};
struct SchemeMismatch : Error {
    explicit SchemeMismatch(const std::string& m) : Error(ErrorCode::scheme_mismatch, m) {}
};
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& m) : Error(ErrorCode::shape_mismatch, m) {}
};
struct UnsupportedScheme : Error {
    explicit UnsupportedScheme(const std::string& m) : Error(ErrorCode::unsupported_scheme, m) {}
};
struct DivergenceDetected : Error {
    explicit DivergenceDetected(const std::string& m) : Error(ErrorCode::divergence_detected, m) {}
};
struct EmptyGroup : Error {
    explicit EmptyGroup(const std::string& m) : Error(ErrorCode::empty_group, m) {}
};
struct GroupTooLarge : Error {
    explicit GroupTooLarge(const std::string& m) : Error(ErrorCode::group_too_large, m) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& m) : Error(ErrorCode::index_out_of_range, m) {}
};
struct MissingForwardCache : Error {
    explicit MissingForwardCache(const std::string& m) : Error(ErrorCode::missing_forward_cache, m) {}
};
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& m) : Error(ErrorCode::invalid_input, m) {}
};

}  // namespace r2q
