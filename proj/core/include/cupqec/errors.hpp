#pragma once

#include <stdexcept>
#include <string>

namespace cupqec {

// All library failures derive from Error so callers can catch one type at
// the tool boundary and still get specific types in tests.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CUPQEC_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

CUPQEC_DEFINE_ERROR(SubspaceNotContained);
CUPQEC_DEFINE_ERROR(CapacityExceeded);
CUPQEC_DEFINE_ERROR(NotAComplex);
CUPQEC_DEFINE_ERROR(TooSmall);
CUPQEC_DEFINE_ERROR(DegreeOutOfRange);
CUPQEC_DEFINE_ERROR(LengthMismatch);
CUPQEC_DEFINE_ERROR(DegeneratePairing);
CUPQEC_DEFINE_ERROR(NotClosedManifold);
CUPQEC_DEFINE_ERROR(DegreeOverflow);
CUPQEC_DEFINE_ERROR(DegreeMismatch);
CUPQEC_DEFINE_ERROR(BasisMismatch);
CUPQEC_DEFINE_ERROR(IndexOutOfRange);
CUPQEC_DEFINE_ERROR(LabelMismatch);
CUPQEC_DEFINE_ERROR(InvalidParameterSet);
CUPQEC_DEFINE_ERROR(ParseError);

#undef CUPQEC_DEFINE_ERROR

}  // namespace cupqec
