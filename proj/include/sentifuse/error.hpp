#pragma once

#include <stdexcept>
#include <string>

namespace sentifuse {

// Every failure surfaced by the library carries one of these categories;
// the CLI prints them as "error [category]: message".
enum class ErrorCategory {
    config,
    data,
    invalid_output,
    missing_prediction,
    degenerate_data,
    state,
    schema,
    undefined_curve,
};

inline const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::config: return "config";
        case ErrorCategory::data: return "data";
        case ErrorCategory::invalid_output: return "invalid_output";
        case ErrorCategory::missing_prediction: return "missing_prediction";
        case ErrorCategory::degenerate_data: return "degenerate_data";
        case ErrorCategory::state: return "state";
        case ErrorCategory::schema: return "schema";
        case ErrorCategory::undefined_curve: return "undefined_curve";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

}  // namespace sentifuse
