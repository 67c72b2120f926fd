#ifndef TORSYM_ERRORS_HPP
#define TORSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torsym {

/// Base class for all torsym exceptions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// geometry
struct NonOrthogonal final : Error { using Error::Error; };
struct DegenerateAxis final : Error { using Error::Error; };
struct CurveHitsAxis final : Error { using Error::Error; };
struct NonIntegerWinding final : Error { using Error::Error; };
struct CurvesIntersect final : Error { using Error::Error; };
struct NonIntegerLinking final : Error { using Error::Error; };
struct NotCentrallySymmetric final : Error { using Error::Error; };
struct ExtremaNotAxisAligned final : Error { using Error::Error; };

// surfaces
struct RadiusTooLarge final : Error { using Error::Error; };
struct NotATube final : Error { using Error::Error; };
struct CriticalLevel final : Error { using Error::Error; };
struct NotATorus final : Error { using Error::Error; };
struct DegenerateParametrization final : Error { using Error::Error; };
struct DegenerateDensity final : Error { using Error::Error; };

// homology
struct LoopOffSurface final : Error { using Error::Error; };
struct LiftDiscontinuity final : Error { using Error::Error; };
struct NotInvariant final : Error { using Error::Error; };
struct NonDiagonalAction final : Error { using Error::Error; };

// dynamics
struct StepFailure final : Error { using Error::Error; };
struct VanishingField final : Error { using Error::Error; };
struct InconsistentSeeds final : Error { using Error::Error; };
struct NotOrientationReversing final : Error { using Error::Error; };
struct SignChange final : Error { using Error::Error; };

// mhd
struct EvaluationFailure final : Error { using Error::Error; };
struct NotEquivariant final : Error { using Error::Error; };
struct DomainDoesNotWindAxis final : Error { using Error::Error; };
struct NotMorseBott final : Error { using Error::Error; };
struct InconsistentCase final : Error { using Error::Error; };

// cli
struct ParseError final : Error { using Error::Error; };

} // namespace torsym

#endif
