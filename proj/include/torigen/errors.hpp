#pragma once

#include <stdexcept>
#include <string>

namespace torigen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TORIGEN_ERROR(Name)                      \
    struct Name : Error {                        \
        using Error::Error;                      \
    }

TORIGEN_ERROR(ArenaMismatch);
TORIGEN_ERROR(NotDivisible);
TORIGEN_ERROR(BadLeadingTerm);
TORIGEN_ERROR(ParseError);
TORIGEN_ERROR(UnsupportedGroup);
TORIGEN_ERROR(NonPrimitiveWeight);
TORIGEN_ERROR(ZeroWeight);
TORIGEN_ERROR(SingularSum);
TORIGEN_ERROR(NonIntegerClass);
TORIGEN_ERROR(NonConstantResult);
TORIGEN_ERROR(SingularPoint);
TORIGEN_ERROR(TruncationTooLow);
TORIGEN_ERROR(NonIntegerSolution);
TORIGEN_ERROR(BudgetExceeded);

#undef TORIGEN_ERROR

}  // namespace torigen
