#include "zigzag/trace_io.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace zigzag {

namespace {

using json = nlohmann::ordered_json;

StepChoice parse_choice(const std::string& s) {
  if (s == "B") return StepChoice::Bootstrap;
  if (s == "L") return StepChoice::Left;
  if (s == "R") return StepChoice::Right;
  throw Error(Errc::Parse, "unknown step choice '" + s + "'");
}

WalkOutcome parse_outcome(const std::string& s) {
  if (s == "FOUND") return WalkOutcome::Found;
  if (s == "BOUNDARY") return WalkOutcome::Boundary;
  if (s == "ABORTED") return WalkOutcome::Aborted;
  throw Error(Errc::Parse, "unknown outcome '" + s + "'");
}

std::uint32_t as_id(const json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw Error(Errc::Parse, std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::uint32_t>();
}

}  // namespace

void write_trace_json(const WalkTrace& trace, const WalkResult& result, std::ostream& out) {
  json doc;
  doc["point"] = {trace.target.x(), trace.target.y()};
  doc["start"] = to_index(trace.start);
  json steps = json::array();
  for (const WalkStep& s : trace.steps) {
    steps.push_back({{"edge", to_index(s.edge)},
                     {"choice", to_string(s.choice)},
                     {"d", std::sqrt(s.d2)},
                     {"alpha", s.alpha}});
  }
  doc["steps"] = std::move(steps);
  json res;
  res["outcome"] = to_string(result.outcome);
  res["face"] = result.face == kOuterFace ? json(nullptr) : json(to_index(result.face));
  res["edge"] = to_index(result.edge);
  res["steps"] = result.steps;
  if (result.reason == AbortReason::MaxSteps) res["reason"] = "max_steps";
  doc["result"] = std::move(res);
  out << doc.dump(2) << '\n';
}

TraceDocument read_trace_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
  try {
    const json& pt = doc.at("point");
    if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number()) {
      throw Error(Errc::Parse, "point must be [x, y]");
    }
    TraceDocument out{WalkTrace{Point2(pt[0].get<double>(), pt[1].get<double>()),
                                halfedge_id(as_id(doc.at("start"), "start")),
                                {}},
                      WalkResult{WalkOutcome::Found, kOuterFace, kNoHalfEdge, 0}};
    for (const json& s : doc.at("steps")) {
      const double d = s.at("d").get<double>();
      out.trace.steps.push_back(WalkStep{halfedge_id(as_id(s.at("edge"), "edge")),
                                         parse_choice(s.at("choice").get<std::string>()), d * d,
                                         s.at("alpha").get<double>()});
    }
    const json& r = doc.at("result");
    out.result.outcome = parse_outcome(r.at("outcome").get<std::string>());
    out.result.face = r.at("face").is_null() ? kOuterFace : face_id(as_id(r.at("face"), "face"));
    out.result.edge = halfedge_id(as_id(r.at("edge"), "edge"));
    out.result.steps = r.at("steps").get<std::size_t>();
    if (r.contains("reason")) out.result.reason = AbortReason::MaxSteps;
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

}  // namespace zigzag
