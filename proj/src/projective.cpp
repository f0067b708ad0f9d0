#include "cptrig/projective.hpp"

#include <cmath>

namespace cptrig {

namespace {

// First component of modulus above the phase threshold; unit vectors
// always have one.
int leading_component(const CVec3& v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > 1e-9) return i;
  }
  return -1;
}

CVec3 canonical_phase(const CVec3& unit) {
  const int k = leading_component(unit);
  if (k < 0) throw RangeError("cannot phase-canonicalize a near-zero vector");
  const Complex phase = unit[k] / std::abs(unit[k]);
  return unit * std::conj(phase);
}

}  // namespace

CVec3 unitize(const CVec3& v) {
  const double n = v.norm();
  if (n < 1e-12) throw RangeError("cannot normalize a near-zero vector");
  return v / n;
}

ProjPoint::ProjPoint(const CVec3& rep) : rep_(canonical_phase(unitize(rep))) {}

bool same_point(const ProjPoint& p, const ProjPoint& q, double tol) {
  return fs_distance(p, q) < tol;
}

double fs_distance(const ProjPoint& p, const ProjPoint& q) {
  return 2.0 * std::acos(clamp_unit(std::abs(inner(p.rep(), q.rep()))));
}

TangentVector::TangentVector(ProjPoint base, const CVec3& dir)
    : base_(std::move(base)), dir_(unitize(dir)) {
  if (std::abs(inner(base_.rep(), dir_)) > kExactTol) {
    throw NotOrthogonal("tangent direction not orthogonal to base point");
  }
}

AngleTriple angles_between(const TangentVector& v, const TangentVector& w) {
  if (!same_point(v.base(), w.base())) {
    throw BaseMismatch("tangent vectors have different base points");
  }
  const Complex z = inner(v.dir(), w.dir());
  AngleTriple t;
  t.alpha = std::acos(clamp_unit(z.real()));
  t.theta = std::acos(clamp_unit(std::abs(z)));
  if (std::abs(z) > 1e-9) {
    t.psi = std::abs(std::arg(z));
  } else {
    t.psi = M_PI / 2.0;
    t.degenerate = true;
  }
  return t;
}

GeodesicArc::GeodesicArc(TangentVector tangent, double length)
    : tangent_(std::move(tangent)), length_(length) {
  if (!(length >= 0.0 && length <= M_PI)) {
    throw RangeError("geodesic arc length must lie in [0, pi]");
  }
}

CVec3 GeodesicArc::rep_at(double t) const {
  return std::cos(t / 2.0) * base().rep() + std::sin(t / 2.0) * tangent_.dir();
}

ProjPoint geodesic_point(const GeodesicArc& arc, double t) {
  if (!(t >= 0.0 && t <= M_PI)) {
    throw RangeError("arc-length parameter must lie in [0, pi]");
  }
  return ProjPoint(arc.rep_at(t));
}

std::pair<TangentVector, double> tangent_toward(const ProjPoint& p,
                                                const ProjPoint& q,
                                                double phase) {
  const double dist = fs_distance(p, q);
  if (dist < kGeomTol) throw CoincidentPoints("tangent_toward: coincident points");

  if (dist > M_PI - kGeomTol) {
    // Cut locus: geodesics from p to q form a circle, indexed by phase.
    CVec3 dir = q.rep() - inner(p.rep(), q.rep()) * p.rep();
    dir = std::exp(Complex(0.0, phase)) * unitize(dir);
    return {TangentVector(p, dir), M_PI};
  }

  // Rescale q's representative so <p, q~> is real positive; the unique
  // minimizing geodesic then runs through real superpositions.
  const Complex z = inner(p.rep(), q.rep());
  const CVec3 q_aligned = q.rep() * (std::abs(z) / z);
  const CVec3 dir = unitize(q_aligned - std::abs(z) * p.rep());
  return {TangentVector(p, dir), dist};
}

ProjLine::ProjLine(const CVec3& span0, const CVec3& span1, ProjPoint pole)
    : span_{span0, span1}, pole_(std::move(pole)) {
  if (std::abs(span_[0].norm() - 1.0) > kExactTol ||
      std::abs(span_[1].norm() - 1.0) > kExactTol ||
      std::abs(inner(span_[0], span_[1])) > kExactTol) {
    throw NotOrthonormal("line span must be a Hermitian-orthonormal pair");
  }
  if (std::abs(inner(pole_.rep(), span_[0])) > kExactTol ||
      std::abs(inner(pole_.rep(), span_[1])) > kExactTol) {
    throw NotOrthogonal("pole must be orthogonal to the line span");
  }
}

bool ProjLine::contains(const ProjPoint& p, double tol) const {
  return std::abs(inner(pole_.rep(), p.rep())) < tol;
}

namespace {

// Hermitian-orthogonal complement of an orthonormal pair: conj(a x b) is
// orthogonal to both a and b under the conjugate-linear-first convention.
CVec3 hermitian_normal(const CVec3& a, const CVec3& b) {
  return unitize(a.cross(b).conjugate());
}

}  // namespace

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  const double dist = fs_distance(p, q);
  if (dist < kGeomTol) throw CoincidentPoints("line_through: coincident points");
  const CVec3 s0 = p.rep();
  const CVec3 s1 = unitize(q.rep() - inner(s0, q.rep()) * s0);
  return ProjLine(s0, s1, ProjPoint(hermitian_normal(s0, s1)));
}

ProjLine polar_line(const ProjPoint& p) {
  // Deterministic span choice: orthogonalize the least-aligned axis vector.
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(p.rep()[i]) < std::abs(p.rep()[k])) k = i;
  }
  CVec3 axis = CVec3::Zero();
  axis[k] = 1.0;
  const CVec3 s0 = unitize(axis - inner(p.rep(), axis) * p.rep());
  const CVec3 s1 = hermitian_normal(p.rep(), s0);
  return ProjLine(s0, s1, p);
}

ProjPoint antipode_in(const ProjLine& line, const ProjPoint& p) {
  if (!line.contains(p)) throw NotOnLine("antipode_in: point not on line");
  return ProjPoint(hermitian_normal(line.pole().rep(), p.rep()));
}

RealPlane::RealPlane(const std::array<CVec3, 3>& frame) : frame_(frame) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(frame_[i].norm() - 1.0) > kGeomTol) {
      throw NotOrthonormal("real plane frame vector not unit");
    }
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(inner(frame_[i], frame_[j])) > kGeomTol) {
        throw NotOrthonormal("real plane frame not Hermitian-orthogonal");
      }
    }
  }
}

std::optional<std::pair<Eigen::Vector3d, Complex>> RealPlane::real_coords(
    const CVec3& v, double tol) const {
  CVec3 z;
  for (int i = 0; i < 3; ++i) z[i] = inner(frame_[i], v);

  // The frame spans C^3, so v = sum z_i f_i exactly; membership in the
  // real span means the coordinates share one phase (up to sign).
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(z[i]) > std::abs(z[k])) k = i;
  }
  if (std::abs(z[k]) < tol) return std::nullopt;
  const Complex phase = z[k] / std::abs(z[k]);

  Eigen::Vector3d coords;
  for (int i = 0; i < 3; ++i) {
    const Complex aligned = z[i] * std::conj(phase);
    if (std::abs(aligned.imag()) > tol) return std::nullopt;
    coords[i] = aligned.real();
  }
  return std::make_pair(coords, phase);
}

RealPlane real_plane(const CVec3& f1, const CVec3& f2, const CVec3& f3) {
  return RealPlane({unitize(f1), unitize(f2), unitize(f3)});
}

bool membership(const RealPlane& plane, const ProjPoint& p, double tol) {
  return plane.real_coords(p.rep(), tol).has_value();
}

GreatCircle::GreatCircle(ProjLine host, const CVec3& center, const CVec3& codir)
    : host_(std::move(host)), center_(unitize(center)), codir_(unitize(codir)) {
  if (std::abs(inner(center_, codir_)) > kGeomTol) {
    throw NotGeodesic("great circle center and codirection not orthogonal");
  }
  const ProjPoint c(center_), d(codir_);
  if (!host_.contains(c) || !host_.contains(d)) {
    throw NotOnLine("great circle data does not lie in the host line");
  }
}

CVec3 GreatCircle::rep_at(double s) const {
  return std::cos(s) * center_ + Complex(0.0, std::sin(s)) * codir_;
}

ProjPoint GreatCircle::point_at(double s) const { return ProjPoint(rep_at(s)); }

std::pair<ProjPoint, ProjPoint> GreatCircle::poles() const {
  const double r = 1.0 / std::sqrt(2.0);
  return {ProjPoint(r * (center_ + codir_)), ProjPoint(r * (center_ - codir_))};
}

}  // namespace cptrig
