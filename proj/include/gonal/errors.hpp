// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef GONAL_ERRORS_HPP
#define GONAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gonal {

enum class Err {
    NotPrime,
    DegreeZero,
    DivisionByZero,
    FieldMismatch,
    NoEmbedding,
    ZeroPolynomial,
    ConstantPolynomial,
    Exhausted,
    DegenerateLeadingCoefficient,
    InseparableMap,
    SearchCapExceeded,
    UnsupportedGamma,
    GammaDividesQ,
    InvalidSpec,
    BranchCollision,
    IrreducibilityInconclusive,
    CountMismatch,
    NonIntegerGenus,
    BudgetExceeded,
    MalformedCertificate,
    BadInput,
    InternalCheck,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
   public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const noexcept { return code_; }

   private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

// Invariant guard for conditions that indicate a bug rather than bad input.
inline void require(bool cond, Err code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace gonal

#endif  // GONAL_ERRORS_HPP
