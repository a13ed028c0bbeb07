#pragma once

#include <stdexcept>
#include <string>

namespace loopmod {

// Domain error with a stable machine-readable code string.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* division_by_zero = "DivisionByZero";
inline constexpr const char* negative_valuation = "NegativeValuation";
inline constexpr const char* order_mismatch = "OrderMismatch";
inline constexpr const char* trivial_tuple = "TrivialTuple";
inline constexpr const char* not_periodic = "NotPeriodic";
inline constexpr const char* factored_form_required = "FactoredFormRequired";
inline constexpr const char* not_a_divisor = "NotADivisor";
inline constexpr const char* pole_at_q_squared = "PoleAtQSquared";
inline constexpr const char* trace_not_integer = "TraceNotInteger";
inline constexpr const char* non_integer_result = "NonIntegerResult";
inline constexpr const char* unsupported_tuple = "UnsupportedTuple";
inline constexpr const char* config_error = "ConfigError";
inline constexpr const char* format_mismatch = "FormatMismatch";
}  // namespace errc

}  // namespace loopmod
