#pragma once

#include <stdexcept>
#include <string>

namespace ddeq {

// Base class for all engine errors. `code()` is the stable machine-readable
// name surfaced in CLI JSON output; the what() string is human-readable.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define DDEQ_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}          \
    }

DDEQ_DEFINE_ERROR(UnsupportedRootOfUnity);
DDEQ_DEFINE_ERROR(NotInvertible);
DDEQ_DEFINE_ERROR(NotAPerfectSquare);
DDEQ_DEFINE_ERROR(ZeroFunction);
DDEQ_DEFINE_ERROR(UnsupportedExponent);
DDEQ_DEFINE_ERROR(UnboundParameter);
DDEQ_DEFINE_ERROR(ContourTooCloseToZero);
DDEQ_DEFINE_ERROR(NonIntegerWinding);
DDEQ_DEFINE_ERROR(TooFewRadii);
DDEQ_DEFINE_ERROR(DegenerateL);
DDEQ_DEFINE_ERROR(OutOfTheoremScope);
DDEQ_DEFINE_ERROR(UndeclaredParameter);
DDEQ_DEFINE_ERROR(NonIntegerExponent);
DDEQ_DEFINE_ERROR(InvalidEquation);
DDEQ_DEFINE_ERROR(RootConstraintViolated);
DDEQ_DEFINE_ERROR(EvaluationError);
DDEQ_DEFINE_ERROR(SoundnessBug);

#undef DDEQ_DEFINE_ERROR

// Parse errors carry a source position (1-based line/column).
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error("SyntaxError",
                msg + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace ddeq
