#ifndef QPC_ERRORS_HPP
#define QPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpc {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QPC_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                         \
    explicit Name(const std::string& msg) : Error(msg) {}       \
  }

QPC_DEFINE_ERROR(LoopPresent);
QPC_DEFINE_ERROR(TwoCyclePresent);
QPC_DEFINE_ERROR(TwoCycleAtVertex);
QPC_DEFINE_ERROR(UnknownArrow);
QPC_DEFINE_ERROR(QuiverMismatch);
QPC_DEFINE_ERROR(EndpointMismatch);
QPC_DEFINE_ERROR(NotRepresentable);
QPC_DEFINE_ERROR(TruncationExhausted);
QPC_DEFINE_ERROR(NotFiniteDimensional);
QPC_DEFINE_ERROR(RelationViolation);
QPC_DEFINE_ERROR(DimOutOfRange);
QPC_DEFINE_ERROR(NotPolynomialCount);
QPC_DEFINE_ERROR(ExactnessViolation);
QPC_DEFINE_ERROR(NotLaurent);
QPC_DEFINE_ERROR(BudgetExceeded);
QPC_DEFINE_ERROR(LengthMismatch);
QPC_DEFINE_ERROR(UnsupportedQuiver);
QPC_DEFINE_ERROR(ParseError);

#undef QPC_DEFINE_ERROR

}  // namespace qpc

#endif
