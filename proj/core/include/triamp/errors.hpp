// errors.hpp - exception hierarchy shared by all triamp components

#pragma once

#include <stdexcept>
#include <string>

namespace triamp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TRIAMP_DEFINE_ERROR(NAME)                  \
    class NAME : public Error {                    \
    public:                                        \
        using Error::Error;                        \
    }

TRIAMP_DEFINE_ERROR(NonFiniteValue);
TRIAMP_DEFINE_ERROR(SingularMatrix);
TRIAMP_DEFINE_ERROR(NoConvergence);
TRIAMP_DEFINE_ERROR(GridTooSmall);
TRIAMP_DEFINE_ERROR(ValidationError);
TRIAMP_DEFINE_ERROR(DegenerateCoupling);
TRIAMP_DEFINE_ERROR(NegativeCoupling);
TRIAMP_DEFINE_ERROR(ConditionsNotApplied);
TRIAMP_DEFINE_ERROR(DivergentGain);
TRIAMP_DEFINE_ERROR(SingularAtFrequency);
TRIAMP_DEFINE_ERROR(SearchBracketFailure);
TRIAMP_DEFINE_ERROR(NotFound);
TRIAMP_DEFINE_ERROR(UnstableParameters);
TRIAMP_DEFINE_ERROR(ZeroGain);
TRIAMP_DEFINE_ERROR(PhaseUndefined);
TRIAMP_DEFINE_ERROR(IoError);
TRIAMP_DEFINE_ERROR(ParseError);

#undef TRIAMP_DEFINE_ERROR

} // namespace triamp
