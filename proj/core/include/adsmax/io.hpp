#pragma once

// JSON and CSV interchange for the library's domain objects.
//
// Formats:
//   pole model    {"order": n, "coeffs": [[re, im], ...], "radius": r}
//                 (coefficients a_n .. a_2)
//   crown data    {"left": [[a,b],[c,d]], "right": ..., "theta": [...],
//                  "theta_prime": [...], "label_offset": 0}
//   end descriptor {"n": n, "vertices": [[theta, theta'], ...],
//                  "foliation": ["L","R",...], "holonomy": {"left": ...,
//                  "right": ...}}
//   field CSV     x,y,v,sub,super,residual
//   path CSV      t,re_omega,im_omega,sigma0..sigma3,drift

#include "adsmax/crown.hpp"
#include "adsmax/frame.hpp"
#include "adsmax/polygonal_end.hpp"
#include "adsmax/quad_diff.hpp"
#include "adsmax/vortex.hpp"

#include <json.hpp>

#include <string>

namespace adsmax {

using Json = nlohmann::json;

Json to_json(const PoleModel& model);
PoleModel pole_model_from_json(const Json& j);

Json to_json(const CrownEndData& data);
CrownEndData crown_data_from_json(const Json& j);

Json to_json(const PolygonalEnd& end);

Json to_json(const SolveResult& result);

Json frame_report(const FrameField& field);

// Deterministic float formatting (%.17g) for CSV payloads.
std::string format_double(double v);

std::string field_csv(const ConformalFactorField& field);
std::string embedding_csv(const FrameField& frames, const EmbeddingPath& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace adsmax
