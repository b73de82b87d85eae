#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wienerlab {

// Every domain failure derives from Error. kind() is the stable name the CLI
// reports in its machine-readable error object.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define WIENERLAB_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    };

WIENERLAB_DEFINE_ERROR(InvalidEdge)
WIENERLAB_DEFINE_ERROR(InvalidVertex)
WIENERLAB_DEFINE_ERROR(Overflow)
WIENERLAB_DEFINE_ERROR(InvalidParameter)
WIENERLAB_DEFINE_ERROR(TrivialFactor)
WIENERLAB_DEFINE_ERROR(UnsupportedOp)
WIENERLAB_DEFINE_ERROR(NonExactDivision)
WIENERLAB_DEFINE_ERROR(ProfileMismatch)
WIENERLAB_DEFINE_ERROR(NotATree)
WIENERLAB_DEFINE_ERROR(InvalidRank)
WIENERLAB_DEFINE_ERROR(RankTooLarge)
WIENERLAB_DEFINE_ERROR(TooLarge)
WIENERLAB_DEFINE_ERROR(InvalidWidth)
WIENERLAB_DEFINE_ERROR(ParseError)

#undef WIENERLAB_DEFINE_ERROR

// Raised when a pair of vertices has no connecting path. The witness pair is
// kept so callers can report which components were found.
class Disconnected : public Error {
public:
    Disconnected(std::uint32_t u, std::uint32_t v)
        : Error("Disconnected", "graph is disconnected: no path between vertex " +
                                    std::to_string(u) + " and vertex " + std::to_string(v)),
          u_(u), v_(v) {}

    std::uint32_t u() const noexcept { return u_; }
    std::uint32_t v() const noexcept { return v_; }

private:
    std::uint32_t u_;
    std::uint32_t v_;
};

// No width-w container exists between u and v.
class InfeasiblePair : public Error {
public:
    InfeasiblePair(std::uint32_t u, std::uint32_t v, unsigned width)
        : Error("InfeasiblePair", "no container of width " + std::to_string(width) +
                                      " between vertex " + std::to_string(u) + " and vertex " +
                                      std::to_string(v)),
          u_(u), v_(v) {}

    std::uint32_t u() const noexcept { return u_; }
    std::uint32_t v() const noexcept { return v_; }

private:
    std::uint32_t u_;
    std::uint32_t v_;
};

}  // namespace wienerlab
