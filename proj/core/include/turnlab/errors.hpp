#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turnlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// episode construction
struct MalformedEpisode : Error { using Error::Error; };
struct TurnOverflow : Error { using Error::Error; };

// dataset loading
struct ParseError : Error {
    ParseError(std::size_t line, const std::string & what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};
struct AnswerFormatError : Error {
    AnswerFormatError(std::size_t line, const std::string & what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    explicit AnswerFormatError(const std::string & what) : Error(what), line(0) {}
    std::size_t line;
};

// checkpoints
struct VersionMismatch : Error { using Error::Error; };
struct CorruptCheckpoint : Error { using Error::Error; };

// optimization
struct DegenerateGroup : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };

// remote evaluation
struct RemoteError : Error { using Error::Error; };

} // namespace turnlab
