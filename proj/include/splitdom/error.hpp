#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitdom {

enum class ErrorCode {
    VertexOutOfRange,
    LoopRejected,
    NTooLarge,
    MalformedGraph6,
    MalformedEdgeList,
    VertexNotInSet,
    PropertyNotSatisfied,
    DisconnectedInput,
    TooLargeForOracle,
    SpecOutOfRange,
    NoFormulaForFamily,
    EmptyCorpus,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::LoopRejected: return "LoopRejected";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorCode::VertexNotInSet: return "VertexNotInSet";
    case ErrorCode::PropertyNotSatisfied: return "PropertyNotSatisfied";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::SpecOutOfRange: return "SpecOutOfRange";
    case ErrorCode::NoFormulaForFamily: return "NoFormulaForFamily";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace splitdom
