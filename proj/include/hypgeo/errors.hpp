#ifndef HYPGEO_ERRORS_HPP
#define HYPGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypgeo {

// Base class for every error this library raises on purpose.
struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

#define HYPGEO_DEFINE_ERROR(Name)                                  \
  struct Name : GeometryError {                                    \
    explicit Name(const std::string& what = #Name)                 \
        : GeometryError(what) {}                                   \
  }

HYPGEO_DEFINE_ERROR(AssociativityViolation);
HYPGEO_DEFINE_ERROR(UndefinedProduct);
HYPGEO_DEFINE_ERROR(ZeroVector);
HYPGEO_DEFINE_ERROR(CoincidentArguments);
HYPGEO_DEFINE_ERROR(CoincidentPoints);
HYPGEO_DEFINE_ERROR(CoincidentLines);
HYPGEO_DEFINE_ERROR(EmptyCycle);
HYPGEO_DEFINE_ERROR(NoIntersection);
HYPGEO_DEFINE_ERROR(ConcentricCycles);
HYPGEO_DEFINE_ERROR(IdenticalCycles);
HYPGEO_DEFINE_ERROR(NoExternalCenter);
HYPGEO_DEFINE_ERROR(CenterInput);
HYPGEO_DEFINE_ERROR(NoSolution);
HYPGEO_DEFINE_ERROR(FourthTangencyFailed);
HYPGEO_DEFINE_ERROR(DegenerateTriangle);
HYPGEO_DEFINE_ERROR(DegenerateConfiguration);
HYPGEO_DEFINE_ERROR(NotHypercyclic);
HYPGEO_DEFINE_ERROR(NonRealCenters);
HYPGEO_DEFINE_ERROR(NoRealSolution);
HYPGEO_DEFINE_ERROR(NoRealPentagon);
HYPGEO_DEFINE_ERROR(NotRightAngled);
HYPGEO_DEFINE_ERROR(UnknownName);

#undef HYPGEO_DEFINE_ERROR

}  // namespace hypgeo

#endif
