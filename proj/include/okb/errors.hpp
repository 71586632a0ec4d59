#pragma once

#include <stdexcept>
#include <string>

namespace okb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: mismatched dimensions, unknown names, out-of-range arguments.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotMonic : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotOnCurve : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class SingularPoint : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A section vanishes identically where a valuation was requested.
class ValuationUndefined : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Power series precision escalation hit the hard cap.
class PrecisionCapExceeded : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed (e.g. a computed order did not admit its decomposition).
class InternalConsistency : public Error {
public:
    using Error::Error;
};

}  // namespace okb
