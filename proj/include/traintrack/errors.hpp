#pragma once

#include <stdexcept>
#include <string>

namespace traintrack {

// Machine-readable failure categories. Every throwing operation documents
// which codes it can raise; tests match on the code, not the message text.
enum class ErrorCode {
    WidthViolation,          // generator offset + arity exceeds the current width
    EmptyObject,             // a width of zero (I^0 is excluded everywhere)
    UnknownColour,           // identifier not in the colour set, or reserved
    BoundaryMismatch,        // composition endpoints disagree
    CapExceeded,             // enumeration larger than the caller's cap
    NotCanonical,            // operation requires a canonical level word
    NotSwappable,            // adjacent levels overlap, no interchange move
    KeyCollision,            // two points share an (x, y) sort key
    DegeneratePath,          // point coincidence unresolved by one perturbation
    PreconditionViolation,   // documented caller obligation broken
    UnknownCell,             // generator-cell name out of range
    ParseError,              // DSL lexical/syntactic error (carries a span)
    ArityError,              // DSL elaboration built a non-composable pipeline
    InternalInvariantViolation, // "must never fire" guards
};

const char* error_code_name(ErrorCode code);

class TrainTrackError : public std::runtime_error {
  public:
    TrainTrackError(ErrorCode code, std::string message);

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// DSL errors additionally carry a half-open byte span into the source text.
class SpannedError : public TrainTrackError {
  public:
    SpannedError(ErrorCode code, std::string message, std::size_t begin, std::size_t end);

    std::size_t span_begin() const { return begin_; }
    std::size_t span_end() const { return end_; }

  private:
    std::size_t begin_;
    std::size_t end_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace traintrack
