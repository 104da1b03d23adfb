#pragma once

#include <optional>
#include <string>
#include <utility>

#include "prasymp/curve.hpp"
#include "prasymp/recurrence.hpp"

namespace prasymp {

struct Region {
  enum class Kind {
    Outer,
    OscillatoryBulk,
    OscillatoryLeft,
    CurveNeighborhood,
    TurningPointExcluded
  };
  Kind kind = Kind::Outer;
  double margin = 0.0;  // distance to the nearest region boundary
};

std::string to_string(Region::Kind k);

struct AsymptoticValue {
  ScaledComplex value;
  Region region;
  // The two kernel-sign evaluations: outer regions report both and select the
  // dominant one as value; the curve formula retains both and sums them.
  std::optional<std::pair<ScaledComplex, ScaledComplex>> branch_parts;
};

// Coordinate conventions: IA/IB take z (x = nd + sqrt(n) z); IC takes y
// (x = n y); IIA takes y (x = sqrt(n) y); IIB takes y on the rotated axis
// (x = i sqrt(n) y); IIC takes x itself (internally rescaled by 2 sqrt(b)).
// d < 0 must be reflected away before calling anything here.
Region classify_region(const RecurrenceParams& p, int n, Complex scaled_point,
                       double delta = 0.1);

AsymptoticValue asym_IA(const RecurrenceParams& p, int n, Complex z, const Region& region);
AsymptoticValue asym_IB(const RecurrenceParams& p, int n, Complex z, const Region& region);
AsymptoticValue asym_IC(const RecurrenceParams& p, int n, Complex y, const Region& region);
AsymptoticValue asym_IIA(const RecurrenceParams& p, int n, Complex y, const Region& region);
// Canonical route: i^n times the a>0 evaluation at (A, B) = (-a, -b).
AsymptoticValue asym_IIB(const RecurrenceParams& p, int n, Complex y, const Region& region);
// Literal transcription of the same formulas; must agree with asym_IIB.
AsymptoticValue asym_IIB_direct(const RecurrenceParams& p, int n, Complex y,
                                const Region& region);
AsymptoticValue asym_IIC(const RecurrenceParams& p, int n, Complex x, const Region& region);

AsymptoticValue asym_eval(const RecurrenceParams& p, int n, Complex point, const Region& region);

// Real cosine/sine argument of the applicable oscillatory formula.
double oscillatory_phase(const RecurrenceParams& p, int n, Complex point);

// Map a case's scaled coordinate to the recurrence argument x.
Complex unscale_point(const RecurrenceParams& p, int n, Complex point);

// Per-A memoized trace used by classification and zero-set comparisons.
const CurvePolyline& cached_curve(double A);

}  // namespace prasymp
