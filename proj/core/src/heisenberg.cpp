#include "pmech/heisenberg.hpp"

namespace pmech {

namespace {

void require_h1(const GroupPoint& g) {
  if (g.n != 1) throw config_error("GroupPoint: only n == 1 is supported");
}

}  // namespace

GroupPoint multiply(const GroupPoint& g, const GroupPoint& h) {
  if (g.n != h.n) throw config_error("multiply: dimension mismatch");
  GroupPoint out;
  out.n = g.n;
  out.s = g.s + h.s + 0.5 * (g.x * h.y - h.x * g.y);
  out.x = g.x + h.x;
  out.y = g.y + h.y;
  return out;
}

GroupPoint inverse(const GroupPoint& g) { return GroupPoint{-g.s, -g.x, -g.y, g.n}; }

GroupPoint left_quotient(const GroupPoint& h, const GroupPoint& g) {
  return multiply(inverse(h), g);
}

PFunction apply_field(const InvariantField& field, const PFunction& f) {
  if (field.j != 1) throw config_error("apply_field: only j == 1 exists on H^1");
  GroupPoint probe;  // grid data always lives on H^1
  require_h1(probe);

  if (field.axis == FieldAxis::S) return derivative_axis(f, Axis::s);

  // left : X^l = dx - (y/2) ds,  Y^l = dy + (x/2) ds
  // right: X^r = dx + (y/2) ds,  Y^r = dy - (x/2) ds
  const double half = field.side == FieldSide::left ? -0.5 : 0.5;
  PFunction ds = derivative_axis(f, Axis::s);
  if (field.axis == FieldAxis::X) {
    PFunction out = derivative_axis(f, Axis::x);
    PFunction twist = multiply_coordinate(ds, Axis::y);
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] += half * twist.values[i];
    return out;
  }
  PFunction out = derivative_axis(f, Axis::y);
  PFunction twist = multiply_coordinate(ds, Axis::x);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] -= half * twist.values[i];
  return out;
}

}  // namespace pmech
