#include <netchrono/errors.hpp>

namespace netchrono {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::InvalidWeight: return "InvalidWeight";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::InsufficientSupport: return "InsufficientSupport";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::InvalidDelta: return "InvalidDelta";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::EmptyBatch: return "EmptyBatch";
    case Errc::CyclicInput: return "CyclicInput";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::DegenerateBins: return "DegenerateBins";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace netchrono
