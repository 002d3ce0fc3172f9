#pragma once

#include <stdexcept>
#include <string>

namespace evolab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParallelLines : Error {
    using Error::Error;
};

struct DegenerateTurning : Error {
    using Error::Error;
};

struct EvenGon : Error {
    using Error::Error;
};

struct NonzeroLength : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct NotEquiangular : Error {
    using Error::Error;
};

struct NotConvex : Error {
    using Error::Error;
};

struct Collapsed : Error {
    using Error::Error;
};

struct EvoluteParallelSides : Error {
    using Error::Error;
};

struct CoincidentVertices : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct EigensolverFailure : Error {
    using Error::Error;
};

struct NoInvariantComplement : Error {
    using Error::Error;
};

struct NoEvolvent : Error {
    enum class Reason {
        glide,
        translation,
        nonzero_quasiperimeter,
        degenerate_family,
    };
    Reason reason;
    NoEvolvent(Reason r, const std::string& msg) : Error(msg), reason(r) {}
};

}  // namespace evolab
