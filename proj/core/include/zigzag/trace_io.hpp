#pragma once

#include <iosfwd>

#include "zigzag/walk.hpp"

namespace zigzag {

// Trace JSON:
//   {"point": [x, y], "start": e_init,
//    "steps": [{"edge": id, "choice": "B|L|R", "d": float, "alpha": float}, ...],
//    "result": {"outcome": "FOUND|BOUNDARY|ABORTED", "face": id|null,
//               "edge": id, "steps": n, "reason": "max_steps"?}}
// "d" and "alpha" are display values (alpha in radians); nothing reads them
// back for decisions.

struct TraceDocument {
  WalkTrace trace;
  WalkResult result;
};

void write_trace_json(const WalkTrace& trace, const WalkResult& result, std::ostream& out);
TraceDocument read_trace_json(std::istream& in);

}  // namespace zigzag
