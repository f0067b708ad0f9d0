#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cptrig {

using Complex = std::complex<double>;
using CVec3 = Eigen::Vector3cd;

inline constexpr const char* kVersion = "0.1.0";

// Exactness checks (Gram entries, unit norms, closed-form values).
inline constexpr double kExactTol = 1e-12;
// Geometric predicates (membership, incidence, cut-locus detection).
inline constexpr double kGeomTol = 1e-9;

/// Side length of a regular tetrahedron inscribed in a unit 2-sphere,
/// arccos(-1/3); equals 2*arccos(1/sqrt(3)), the distance realized by
/// every cross pair of an unbiased basis pair in C^3.
inline const double kTetraSide = std::acos(-1.0 / 3.0);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BaseMismatch : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };
struct NotOnLine : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct NotOrthonormal : Error { using Error::Error; };
struct NotPolarPair : Error { using Error::Error; };
struct NotInPlane : Error { using Error::Error; };
struct NotGeodesic : Error { using Error::Error; };
struct MalformedSystem : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// Hermitian inner product, conjugate-linear in the first argument.
inline Complex inner(const CVec3& v, const CVec3& w) { return v.dot(w); }

/// Clamp to [-1, 1] so rounding noise never reaches acos as 1 + 1e-16.
inline double clamp_unit(double x) {
  return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x);
}

/// Normalize to unit Hermitian norm; throws RangeError on a near-zero vector.
CVec3 unitize(const CVec3& v);

}  // namespace cptrig
