#pragma once

#include <stdexcept>
#include <string>

namespace bsplan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometry
struct TooFewPoints : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct DuplicatePoint : Error { using Error::Error; };
struct OutsideHull : Error { using Error::Error; };
struct DegenerateTriangle : Error { using Error::Error; };
struct EmptyIntersection : Error { using Error::Error; };

// radio / metrics
struct SingularPoint : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct MismatchedConfig : Error { using Error::Error; };

// optimizer
struct NoDescent : Error { using Error::Error; };

// config / IO / rendering
struct ParseError : Error { using Error::Error; };
struct InvalidParam : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };

} // namespace bsplan
