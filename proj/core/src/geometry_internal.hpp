#pragma once

#include "zigzag/geometry2d.hpp"

namespace zigzag::detail {

// od_compare without the on-segment precondition checks. Callers must already
// know that p lies on neither segment.
Ordering3 od_compare_unchecked(const Segment2& sA, const Segment2& sB, const Point2& p);

}  // namespace zigzag::detail
