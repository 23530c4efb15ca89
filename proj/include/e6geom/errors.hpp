#pragma once

#include <stdexcept>
#include <string>

namespace e6geom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define E6GEOM_DEFINE_ERROR(Name)                  \
  class Name : public Error {                      \
   public:                                         \
    explicit Name(const std::string& what)         \
        : Error(std::string(#Name ": ") + what) {} \
  }

E6GEOM_DEFINE_ERROR(DivisionByZero);
E6GEOM_DEFINE_ERROR(FieldError);
E6GEOM_DEFINE_ERROR(AmbientMismatch);
E6GEOM_DEFINE_ERROR(RankError);
E6GEOM_DEFINE_ERROR(NotRankOne);
E6GEOM_DEFINE_ERROR(IsotropicPair);
E6GEOM_DEFINE_ERROR(StructureError);
E6GEOM_DEFINE_ERROR(SpecialPosition);
E6GEOM_DEFINE_ERROR(NotGeneralPosition);
E6GEOM_DEFINE_ERROR(NotSpecialPosition);
E6GEOM_DEFINE_ERROR(BudgetExhausted);
E6GEOM_DEFINE_ERROR(IdentityFailure);
E6GEOM_DEFINE_ERROR(ConfigError);
E6GEOM_DEFINE_ERROR(TooLarge);

#undef E6GEOM_DEFINE_ERROR

}  // namespace e6geom
