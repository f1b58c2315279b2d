#pragma once

#include "pmech/common.hpp"
#include "pmech/grid.hpp"

namespace pmech {

/// A point (s, x, y) of the one-dimensional Heisenberg group H^1.
/// The field n records the intended group dimension; every grid-based
/// operation in this library requires n == 1.
struct GroupPoint {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  int n = 1;
};

/// Group law: (s,x,y)*(s',x',y') = (s + s' + (x y' - x' y)/2, x + x', y + y').
GroupPoint multiply(const GroupPoint& g, const GroupPoint& h);

/// Inverse: (s,x,y)^{-1} = (-s,-x,-y).
GroupPoint inverse(const GroupPoint& g);

/// h^{-1} g, the argument shift appearing in the convolution integral.
GroupPoint left_quotient(const GroupPoint& h, const GroupPoint& g);

enum class FieldSide { left, right };
enum class FieldAxis { X, Y, S };

/// A left- or right-invariant vector field on H^1:
///   left : X^l = d/dx - (y/2) d/ds,  Y^l = d/dy + (x/2) d/ds
///   right: X^r = d/dx + (y/2) d/ds,  Y^r = d/dy - (x/2) d/ds
///   S    : d/ds (bi-invariant, central)
/// Commutators: [X^l, Y^l] = d/ds, [X^r, Y^r] = -d/ds, and every left field
/// commutes with every right field.
struct InvariantField {
  FieldSide side = FieldSide::left;
  FieldAxis axis = FieldAxis::X;
  int j = 1;  // coordinate index; must be 1 on H^1
};

/// Applies the invariant field to a grid function by spectral
/// differentiation.  Rejects f.spec dimensions other than n == 1.
PFunction apply_field(const InvariantField& field, const PFunction& f);

}  // namespace pmech
