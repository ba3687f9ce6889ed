#pragma once
// Error taxonomy. Every failure carries a stable class so callers (and the
// CLI exit-code mapping) can distinguish bad input from numerical trouble.

#include <stdexcept>
#include <string>

namespace varcomp {

enum class ErrorClass { input, numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

#define VARCOMP_ERROR_TYPE(Name, Cls)                              \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what)                     \
            : Error(ErrorClass::Cls, std::string(#Name ": ") + what) {} \
    };

// Input-shaped failures: malformed files, bad specs, duplicate keys.
VARCOMP_ERROR_TYPE(ParseFailed, input)
VARCOMP_ERROR_TYPE(DuplicateIndex, input)
VARCOMP_ERROR_TYPE(EmptyTable, input)
VARCOMP_ERROR_TYPE(EmptyCorpus, input)
VARCOMP_ERROR_TYPE(InvalidSpec, input)
VARCOMP_ERROR_TYPE(IoError, input)

// Numeric/degenerate failures: the data cannot support the requested analysis.
VARCOMP_ERROR_TYPE(DegenerateDesign, numeric)
VARCOMP_ERROR_TYPE(Unbalanced, numeric)
VARCOMP_ERROR_TYPE(AllZeroVariance, numeric)
VARCOMP_ERROR_TYPE(MissingCell, numeric)
VARCOMP_ERROR_TYPE(ZeroSpread, numeric)
VARCOMP_ERROR_TYPE(InsufficientData, numeric)
VARCOMP_ERROR_TYPE(NumericFailure, numeric)

#undef VARCOMP_ERROR_TYPE

// Process exit codes used by the CLI. 0 = success.
inline int exit_code(ErrorClass cls) {
    return cls == ErrorClass::input ? 2 : 3;
}

}  // namespace varcomp
