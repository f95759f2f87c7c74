#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

/// Failure categories surfaced by the library. Soft failures ("no such
/// witness", "not divisible") are reported through std::optional instead.
enum class Err {
    NonPrimeP,
    ReducibleModulus,
    DivisionByZero,
    ContextMismatch,
    NonDividingDegree,
    FieldTooSmall,
    MissingParameter,
    ZeroDivisor,
    InvalidParameters,
    InexactDivision,
    DegreeMismatch,
    SearchSpaceExceeded,
    CapExceeded,
    PointNotOnCurve,
    LineIsComponent,
    PointNotOnBoth,
    UnknownSuite,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NonPrimeP: return "NonPrimeP";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ContextMismatch: return "ContextMismatch";
        case Err::NonDividingDegree: return "NonDividingDegree";
        case Err::FieldTooSmall: return "FieldTooSmall";
        case Err::MissingParameter: return "MissingParameter";
        case Err::ZeroDivisor: return "ZeroDivisor";
        case Err::InvalidParameters: return "InvalidParameters";
        case Err::InexactDivision: return "InexactDivision";
        case Err::DegreeMismatch: return "DegreeMismatch";
        case Err::SearchSpaceExceeded: return "SearchSpaceExceeded";
        case Err::CapExceeded: return "CapExceeded";
        case Err::PointNotOnCurve: return "PointNotOnCurve";
        case Err::LineIsComponent: return "LineIsComponent";
        case Err::PointNotOnBoth: return "PointNotOnBoth";
        case Err::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
}

}  // namespace curvelab
