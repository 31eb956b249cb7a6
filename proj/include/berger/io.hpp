#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "berger/covector.hpp"
#include "berger/group.hpp"
#include "berger/optimality.hpp"
#include "berger/reachability.hpp"
#include "berger/shooting.hpp"

namespace berger::io {

using nlohmann::json;

json to_json(const MetricParams& p);                 // {"I1","I2","I3","n"}
MetricParams params_from_json(const json& j);

json to_json(const GroupPoint& p);                   // {"c", "w": [[re, im]]}
json to_json(const GroupPointN& p);
GroupPoint point_from_json(const json& j);

json to_json(const Covector& h);                     // {"h1","h2","h3"}
Covector covector_from_json(const json& j);

json to_json(const ReachVerdict& v);                 // {"attainable","boundary","exists","infinite"}
json to_json(std::span<const ControlArc> plan);      // [{"u":[u1,u2,u3],"dt":r}]
std::vector<ControlArc> plan_from_json(const json& j);

json to_json(const OptimalityReport& r);             // finite times or "inf"
json to_json(const ShootingResult& r);
json to_json(const DistanceAnswer& a);

// Geodesic samples: CSV columns t, tau, c, re_w, im_w ('.' decimal separator,
// '\n' line endings, header row); JSON alternative with the same fields.
void write_geodesic_csv(std::ostream& os, const MetricParams& params, const Covector& h,
                        double t_max, int samples);
json geodesic_json(const MetricParams& params, const Covector& h, double t_max, int samples);

// Wavefront CSV: columns hbar1, chi, t, c, abs_w.
void write_wavefront_csv(std::ostream& os, std::span<const WavefrontSample> rows);

// 17-significant-digit decimal formatting used by every writer.
std::string fmt(double x);

}  // namespace berger::io
