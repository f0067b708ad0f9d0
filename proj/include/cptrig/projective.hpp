#pragma once

#include <array>
#include <optional>
#include <utility>

#include "cptrig/core.hpp"

namespace cptrig {

// CP^2 with the Fubini-Study metric normalized so sectional curvature lies
// in [1/4, 1]: diameter pi, every complex projective line a unit 2-sphere,
// every totally geodesic real form a curvature-1/4 sphere quotient.
// Distances are d(p, q) = 2*acos|<p, q>| throughout.

/// A point of CP^2, stored as a phase-canonicalized unit representative:
/// the first component of modulus > 1e-9 is made real and positive.
class ProjPoint {
 public:
  explicit ProjPoint(const CVec3& rep);

  const CVec3& rep() const { return rep_; }

  friend bool same_point(const ProjPoint& p, const ProjPoint& q, double tol);

 private:
  CVec3 rep_;
};

/// Projective coincidence test (distance below tol).
bool same_point(const ProjPoint& p, const ProjPoint& q, double tol = kGeomTol);

/// Geodesic distance, 2*acos|<p,q>|, in [0, pi].
double fs_distance(const ProjPoint& p, const ProjPoint& q);

/// Unit tangent direction at a base point: Hermitian-orthogonal to the
/// base representative. Directions are always expressed with respect to
/// the base's canonical representative.
class TangentVector {
 public:
  TangentVector(ProjPoint base, const CVec3& dir);

  const ProjPoint& base() const { return base_; }
  const CVec3& dir() const { return dir_; }

 private:
  ProjPoint base_;
  CVec3 dir_;
};

/// The three angle invariants of a tangent pair:
///   alpha = acos Re<v,w>   — real angle in the underlying R^6,
///   theta = acos |<v,w>|   — Kähler angle (least angle between the
///                            complex lines spanned by v and w),
///   psi   = |arg <v,w>|    — angle between v and the projection of w
///                            onto v's complex line.
/// They satisfy cos alpha = cos theta * cos psi. When <v,w> vanishes the
/// projection is zero and psi is conventionally pi/2 with `degenerate` set.
struct AngleTriple {
  double alpha = 0.0;
  double theta = 0.0;
  double psi = 0.0;
  bool degenerate = false;
};

/// Angle triple of two tangents at the same point (BaseMismatch otherwise).
AngleTriple angles_between(const TangentVector& v, const TangentVector& w);

/// Arc-length parametrized geodesic: t -> [cos(t/2)*base + sin(t/2)*dir].
class GeodesicArc {
 public:
  GeodesicArc(TangentVector tangent, double length);

  const ProjPoint& base() const { return tangent_.base(); }
  const TangentVector& tangent() const { return tangent_; }
  double length() const { return length_; }

  /// Representative at arc length t (not phase-canonicalized).
  CVec3 rep_at(double t) const;

 private:
  TangentVector tangent_;
  double length_;
};

/// Point at arc length t in [0, pi]; fs_distance(base, result) == t.
ProjPoint geodesic_point(const GeodesicArc& arc, double t);

/// Unit tangent at p pointing toward q, plus the distance.
///
/// Below the cut locus the minimizing geodesic is unique and `phase` is
/// ignored. At distance pi (within kGeomTol) the geodesics from p to q
/// form a circle; the returned direction is e^{i*phase} times the
/// canonical representative of q. Throws CoincidentPoints if the points
/// are closer than kGeomTol.
std::pair<TangentVector, double> tangent_toward(const ProjPoint& p,
                                                const ProjPoint& q,
                                                double phase = 0.0);

/// A complex projective line: Hermitian-orthonormal span pair plus its
/// pole, the unique point at distance pi from every point of the line.
class ProjLine {
 public:
  ProjLine(const CVec3& span0, const CVec3& span1, ProjPoint pole);

  const std::array<CVec3, 2>& span() const { return span_; }
  const ProjPoint& pole() const { return pole_; }

  /// Incidence within tol: |<pole, p>| < tol.
  bool contains(const ProjPoint& p, double tol = kGeomTol) const;

 private:
  std::array<CVec3, 2> span_;
  ProjPoint pole_;
};

/// Line through two distinct points (CoincidentPoints otherwise).
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// The polar of p: all points at maximal distance pi from p. Its pole is p.
ProjLine polar_line(const ProjPoint& p);

/// The unique point of `line` orthogonal to p (NotOnLine if p is off the line).
ProjPoint antipode_in(const ProjLine& line, const ProjPoint& p);

/// Totally geodesic real projective plane: the projectivization of the
/// real linear span of a Hermitian-orthonormal frame.
class RealPlane {
 public:
  explicit RealPlane(const std::array<CVec3, 3>& frame);

  const std::array<CVec3, 3>& frame() const { return frame_; }

  /// Frame coordinates of v after rotating away a common phase, together
  /// with that phase; nullopt if no single phase makes all three
  /// coordinates real within tol.
  std::optional<std::pair<Eigen::Vector3d, Complex>> real_coords(
      const CVec3& v, double tol = kGeomTol) const;

 private:
  std::array<CVec3, 3> frame_;
};

/// Build a RealPlane from three pairwise Hermitian-orthogonal vectors
/// (NotOrthonormal beyond kGeomTol; each vector is unitized).
RealPlane real_plane(const CVec3& f1, const CVec3& f2, const CVec3& f3);

/// True iff some phase rotation of p's representative lies in the real
/// span of the plane's frame within tol.
bool membership(const RealPlane& plane, const ProjPoint& p,
                double tol = kGeomTol);

/// Closed geodesic of a complex projective line, parametrized as
/// s -> [cos s * center + i sin s * codirection]. The representative has
/// period 2*pi; the projective curve closes at s = pi with the sign flip
/// rep(s + pi) = -rep(s). Poles (center ± codirection)/sqrt(2) are at
/// distance pi/2 from every point of the circle.
class GreatCircle {
 public:
  GreatCircle(ProjLine host, const CVec3& center, const CVec3& codir);

  const ProjLine& host() const { return host_; }
  const CVec3& center() const { return center_; }
  const CVec3& codir() const { return codir_; }

  CVec3 rep_at(double s) const;
  ProjPoint point_at(double s) const;
  std::pair<ProjPoint, ProjPoint> poles() const;

 private:
  ProjLine host_;
  CVec3 center_;
  CVec3 codir_;
};

}  // namespace cptrig
