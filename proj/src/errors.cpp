#include "traintrack/errors.hpp"

namespace traintrack {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::WidthViolation: return "WidthViolation";
        case ErrorCode::EmptyObject: return "EmptyObject";
        case ErrorCode::UnknownColour: return "UnknownColour";
        case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotCanonical: return "NotCanonical";
        case ErrorCode::NotSwappable: return "NotSwappable";
        case ErrorCode::KeyCollision: return "KeyCollision";
        case ErrorCode::DegeneratePath: return "DegeneratePath";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::UnknownCell: return "UnknownCell";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ArityError: return "ArityError";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "UnknownError";
}

TrainTrackError::TrainTrackError(ErrorCode code, std::string message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

SpannedError::SpannedError(ErrorCode code, std::string message, std::size_t begin,
                           std::size_t end)
    : TrainTrackError(code, message + " (at " + std::to_string(begin) + ".." +
                                std::to_string(end) + ")"),
      begin_(begin), end_(end) {}

void fail(ErrorCode code, const std::string& message) {
    throw TrainTrackError(code, message);
}

} // namespace traintrack
