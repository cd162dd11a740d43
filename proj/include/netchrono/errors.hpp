#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netchrono {

/// Failure categories raised by the library. Every public operation reports
/// precondition violations by throwing netchrono::Error with one of these.
enum class Errc {
    SelfLoop,
    UnknownVertex,
    DuplicateVertex,
    DuplicateEdge,
    InvalidWeight,
    EmptyGraph,
    InvalidConfig,
    InsufficientSupport,
    NoConvergence,
    InvalidDelta,
    SizeMismatch,
    EmptyBatch,
    CyclicInput,
    TooSmall,
    NotAPartition,
    DegenerateBins,
    Parse,
    Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace netchrono
