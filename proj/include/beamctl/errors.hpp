#pragma once

#include <stdexcept>
#include <string>

namespace beamctl {

// Every failure the library can signal deliberately. code() is the stable
// machine-readable tag used in CLI error JSON; exit_category() groups codes
// into the process exit codes (2 = bad configuration, 3 = mathematical /
// feasibility failure, 4 = verification failure).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg, int exit_category)
        : std::runtime_error(msg), code_(std::move(code)), cat_(exit_category) {}
    const std::string& code() const noexcept { return code_; }
    int exit_category() const noexcept { return cat_; }

private:
    std::string code_;
    int cat_;
};

#define BEAMCTL_DEFINE_ERROR(NAME, CAT)                                        \
    class NAME : public Error {                                                \
    public:                                                                    \
        explicit NAME(const std::string& msg) : Error(#NAME, msg, CAT) {}      \
    };

BEAMCTL_DEFINE_ERROR(ConfigError, 2)

BEAMCTL_DEFINE_ERROR(EpsilonTooLarge, 3)
BEAMCTL_DEFINE_ERROR(GridTooCoarse, 3)
BEAMCTL_DEFINE_ERROR(DegenerateInterval, 3)
BEAMCTL_DEFINE_ERROR(NearParallel, 3)
BEAMCTL_DEFINE_ERROR(IllConditioned, 3)
BEAMCTL_DEFINE_ERROR(SupportLeak, 3)
BEAMCTL_DEFINE_ERROR(GridAliased, 3)
BEAMCTL_DEFINE_ERROR(DecayInsufficient, 3)
BEAMCTL_DEFINE_ERROR(RegimeMismatch, 3)
BEAMCTL_DEFINE_ERROR(SubsetNotSeparated, 3)
BEAMCTL_DEFINE_ERROR(TailDominant, 3)
BEAMCTL_DEFINE_ERROR(CutoffTooLarge, 3)
BEAMCTL_DEFINE_ERROR(UnresolvableCluster, 3)
BEAMCTL_DEFINE_ERROR(DegenerateGap, 3)
BEAMCTL_DEFINE_ERROR(StepTooCoarse, 3)

BEAMCTL_DEFINE_ERROR(VerificationFailed, 4)

#undef BEAMCTL_DEFINE_ERROR

} // namespace beamctl
