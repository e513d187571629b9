#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uncorrset {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define UNCORRSET_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

UNCORRSET_DEFINE_ERROR(NoSignChange);
UNCORRSET_DEFINE_ERROR(ArityMismatch);
UNCORRSET_DEFINE_ERROR(MixedRadicand);
UNCORRSET_DEFINE_ERROR(ZeroVector);
UNCORRSET_DEFINE_ERROR(InvalidSupport);
UNCORRSET_DEFINE_ERROR(IncompatibleDescriptor);
UNCORRSET_DEFINE_ERROR(LatticeInconsistent);
UNCORRSET_DEFINE_ERROR(DegenerateSystem);
UNCORRSET_DEFINE_ERROR(BetaTooSmall);
UNCORRSET_DEFINE_ERROR(BracketNotFound);
UNCORRSET_DEFINE_ERROR(NotOnLine);
UNCORRSET_DEFINE_ERROR(SlopeOne);
UNCORRSET_DEFINE_ERROR(PreconditionViolated);
UNCORRSET_DEFINE_ERROR(ExponentCapExceeded);
UNCORRSET_DEFINE_ERROR(ParseError);

#undef UNCORRSET_DEFINE_ERROR

/// A table entry came out negative; (row, col) index the Y and X support points.
class NegativeEntry : public Error {
public:
    NegativeEntry(std::size_t row, std::size_t col)
        : Error("NegativeEntry: entry (" + std::to_string(row) + "," + std::to_string(col) +
                ") is negative"),
          row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

}  // namespace uncorrset
