#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace surftrap {

/// Base error carrying a stable machine-readable code. The CLI serializes the
/// code into its JSON error output, so codes are part of the tool contract.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define SURFTRAP_DEFINE_ERROR(Name)                             \
    struct Name : Error {                                       \
        explicit Name(const std::string& message)               \
            : Error(#Name, message) {}                          \
    }

SURFTRAP_DEFINE_ERROR(DomainError);       // coordinate below z floor etc.
SURFTRAP_DEFINE_ERROR(SubcriticalAngle);  // no total internal reflection
SURFTRAP_DEFINE_ERROR(ZeroDetuning);      // laser on resonance
SURFTRAP_DEFINE_ERROR(NoStationaryPoint); // monotone landscape in window
SURFTRAP_DEFINE_ERROR(NoSaddle);          // no transverse escape saddle
SURFTRAP_DEFINE_ERROR(NoTrap);            // operation requires a closed trap
SURFTRAP_DEFINE_ERROR(NoBarrier);         // operation requires a barrier
SURFTRAP_DEFINE_ERROR(AboveBarrier);      // tunneling energy at/above crest
SURFTRAP_DEFINE_ERROR(NonConvergence);    // iterative solver failed tolerance
SURFTRAP_DEFINE_ERROR(InsufficientData);  // fit fed fewer points than params
SURFTRAP_DEFINE_ERROR(DegenerateDesign);  // singular least-squares system
SURFTRAP_DEFINE_ERROR(DegenerateFit);     // fit violates required shape
SURFTRAP_DEFINE_ERROR(ParseError);        // config text malformed
SURFTRAP_DEFINE_ERROR(ValidationError);   // config violates an invariant

#undef SURFTRAP_DEFINE_ERROR

} // namespace surftrap
