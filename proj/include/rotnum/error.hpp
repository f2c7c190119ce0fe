#pragma once

#include <stdexcept>
#include <string>

namespace rotnum {

enum class Errc {
    Parse,
    InvalidArgument,
    InvalidSpec,
    InverseNotSupported,
    InvalidPL,
    ComplexityExceeded,
    NotResolved,
    RelatorNotSatisfied,
    NotInCentralizer,
    InconsistentSplitting,
    InvalidComparison,
    LiftObstruction,
};

const char* errc_name(Errc code) noexcept;

// Base of every error the engine raises. Subclasses that carry diagnostic
// payloads (NotResolved, RelatorNotSatisfied) live next to their modules.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace rotnum
