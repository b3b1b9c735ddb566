#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fanchar {

// Base for all library errors.  `code()` is a stable machine-readable tag;
// `what()` carries the human-readable witness.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Polynomial division left a nonzero remainder where exactness was required.
class InexactDivision : public Error {
public:
    explicit InexactDivision(const std::string& message)
        : Error("InexactDivision", message) {}
};

// Trial division by cyclotomic polynomials did not exhaust the input.
class NotCyclotomicProduct : public Error {
public:
    explicit NotCyclotomicProduct(const std::string& message)
        : Error("NotCyclotomicProduct", message) {}
};

// No power of the matrix up to the cap equals the identity.
class OrderExceedsCap : public Error {
public:
    explicit OrderExceedsCap(const std::string& message)
        : Error("OrderExceedsCap", message) {}
};

// Fan validation failure; the code identifies the violated check.
class FanInvalid : public Error {
public:
    FanInvalid(const std::string& reason, const std::string& message)
        : Error("FanInvalid." + reason, message), reason_(reason) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

class NotUnimodular : public Error {
public:
    explicit NotUnimodular(const std::string& message)
        : Error("NotUnimodular", message) {}
};

// Generator does not permute the rays / maximal cones of the fan.
class NotFanAutomorphism : public Error {
public:
    explicit NotFanAutomorphism(const std::string& message)
        : Error("NotFanAutomorphism", message) {}
};

// A power of the generator fixes a face setwise but not pointwise.
class NotProper : public Error {
public:
    NotProper(long power, const std::string& face, const std::string& message)
        : Error("NotProper", message), power_(power), face_(face) {}

    long witness_power() const noexcept { return power_; }
    const std::string& witness_face() const noexcept { return face_; }

private:
    long power_;
    std::string face_;
};

class NotPrimePower : public Error {
public:
    explicit NotPrimePower(const std::string& message)
        : Error("NotPrimePower", message) {}
};

class UnboundedPoset : public Error {
public:
    explicit UnboundedPoset(const std::string& message)
        : Error("UnboundedPoset", message) {}
};

// Instance file problems.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message)
        : Error("ParseError", message) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& message)
        : Error("IndexOutOfRange", message) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& message)
        : Error("DimensionMismatch", message) {}
};

// A report failed its own consistency re-check at emission time.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& message)
        : Error("InternalInconsistency", message) {}
};

// An identity that holds for every valid input failed; indicates a bug in the
// implementation or an input that slipped past validation.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& message)
        : Error("InvariantViolation", message) {}
};

}  // namespace fanchar
