#pragma once

#include "z2z4q8/group.hpp"

namespace z2z4q8 {

/// [x, y] = Gray^-1(Gray(x) + Gray(y) + Gray(xy)).
///
/// Always an element of order at most 2, computed coordinatewise; it is the
/// correction that makes Gray(x) + Gray(y) = Gray([x, y] x y).
[[nodiscard]] GroupWord swapper(const GroupWord& x, const GroupWord& y);

}  // namespace z2z4q8
