#include "adsmax/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adsmax {

namespace {

Json matrix2_json(const Eigen::Matrix2d& m) {
  return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

Eigen::Matrix2d matrix2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw std::invalid_argument("expected a 2x2 matrix as [[a,b],[c,d]]");
  Eigen::Matrix2d m;
  m << j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
      j[1][1].get<double>();
  return m;
}

}  // namespace

Json to_json(const PoleModel& model) {
  Json coeffs = Json::array();
  for (const Complex& c : model.coeffs) coeffs.push_back(Json::array({c.real(), c.imag()}));
  return Json{{"order", model.order}, {"coeffs", coeffs}, {"radius", model.radius}};
}

PoleModel pole_model_from_json(const Json& j) {
  PoleModel m;
  m.order = j.at("order").get<int>();
  m.radius = j.at("radius").get<double>();
  for (const Json& c : j.at("coeffs"))
    m.coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  m.validate();
  return m;
}

Json to_json(const CrownEndData& data) {
  return Json{{"left", matrix2_json(data.left.matrix())},
              {"right", matrix2_json(data.right.matrix())},
              {"theta", data.theta_fund},
              {"theta_prime", data.theta_prime_fund},
              {"label_offset", data.label_offset}};
}

CrownEndData crown_data_from_json(const Json& j) {
  CrownEndData d;
  d.left = Mobius(matrix2_from_json(j.at("left")));
  d.right = Mobius(matrix2_from_json(j.at("right")));
  d.theta_fund = j.at("theta").get<std::vector<double>>();
  d.theta_prime_fund = j.at("theta_prime").get<std::vector<double>>();
  d.label_offset = j.value("label_offset", 0);
  d.validate();
  return d;
}

Json to_json(const PolygonalEnd& end) {
  Json vertices = Json::array();
  for (const BoundaryPoint& v : end.fundamental_vertices)
    vertices.push_back(Json::array({v.theta, v.theta_prime}));
  Json foliation = Json::array();
  for (char f : end.foliation) foliation.push_back(std::string(1, f));
  return Json{{"n", end.pole_order},
              {"vertices", vertices},
              {"foliation", foliation},
              {"holonomy",
               {{"left", matrix2_json(end.holonomy.left.matrix())},
                {"right", matrix2_json(end.holonomy.right.matrix())}}},
              {"join_defect", end.max_join_defect}};
}

Json to_json(const SolveResult& result) {
  return Json{{"converged", result.converged},
              {"iterations", result.iterations},
              {"residual_sup", result.field.residual_sup},
              {"residual_history", result.residual_history}};
}

Json frame_report(const FrameField& field) {
  return Json{{"samples", field.samples.size()},
              {"step", field.step},
              {"unitarity_drift", field.unitarity_drift},
              {"reality_drift", field.reality_drift},
              {"path_length", field.samples.back().t}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string field_csv(const ConformalFactorField& field) {
  std::ostringstream os;
  os << "x,y,v,sub,super,residual\n";
  const Field zero(field.v.nx, field.v.ny, 0.0);
  const Field& sub = field.sub ? *field.sub : zero;
  const Field& sup = field.super ? *field.super : zero;
  for (int j = 0; j < field.v.ny; ++j)
    for (int i = 0; i < field.v.nx; ++i)
      os << format_double(field.domain.x(i)) << ',' << format_double(field.domain.y(j))
         << ',' << format_double(field.v.at(i, j)) << ',' << format_double(sub.at(i, j))
         << ',' << format_double(sup.at(i, j)) << ','
         << format_double(field.residual_sup) << '\n';
  return os.str();
}

std::string embedding_csv(const FrameField& frames, const EmbeddingPath& path) {
  std::ostringstream os;
  os << "t,re_omega,im_omega,sigma0,sigma1,sigma2,sigma3,drift\n";
  for (size_t k = 0; k < path.t.size(); ++k) {
    os << format_double(path.t[k]) << ',' << format_double(path.w[k].real()) << ','
       << format_double(path.w[k].imag());
    for (int c = 0; c < 4; ++c) os << ',' << format_double(path.sigma[k][c]);
    os << ',' << format_double(frames.unitarity_drift) << '\n';
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace adsmax
