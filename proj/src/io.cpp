#include "pinterp/io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace pinterp {

using nlohmann::json;

PointSetFile point_set_file(const NodeArrayStage& stage) {
  return {stage.dim(), stage.degree(), stage.provenance(), stage.points()};
}

std::string to_json(const PointSetFile& file) {
  json pts = json::array();
  for (const auto& p : file.points) {
    json coords = json::array();
    for (Eigen::Index c = 0; c < p.size(); ++c) coords.push_back({p(c).real(), p(c).imag()});
    pts.push_back(std::move(coords));
  }
  // ordered_json keeps the field order fixed
  nlohmann::ordered_json doc;
  doc["schema_version"] = kPointSetSchemaVersion;
  doc["d"] = file.d;
  doc["n"] = file.n;
  doc["provenance"] = to_string(file.provenance);
  doc["points"] = std::move(pts);
  return doc.dump(1) + "\n";
}

PointSetFile point_set_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("point set: malformed JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kPointSetSchemaVersion)
      throw InvalidArgument("point set: unsupported schema_version");
    PointSetFile f;
    f.d = doc.at("d").get<int>();
    f.n = doc.at("n").get<int>();
    f.provenance = provenance_from_string(doc.at("provenance").get<std::string>());
    for (const auto& q : doc.at("points")) {
      if (static_cast<int>(q.size()) != f.d) throw InvalidArgument("point set: point dimension differs from d");
      Point p(f.d);
      for (int c = 0; c < f.d; ++c) {
        const auto& pair = q.at(static_cast<std::size_t>(c));
        if (pair.size() != 2) throw InvalidArgument("point set: coordinates must be [re, im] pairs");
        p(c) = cplx(pair.at(0).get<double>(), pair.at(1).get<double>());
      }
      f.points.push_back(std::move(p));
    }
    return f;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("point set: ") + e.what());
  }
}

void write_point_set(std::ostream& out, const PointSetFile& file) { out << to_json(file); }

PointSetFile read_point_set(std::istream& in) {
  return point_set_from_json(std::string(std::istreambuf_iterator<char>(in), {}));
}

PointSetFile read_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open point set file: " + path);
  return read_point_set(in);
}

void write_csv_header(std::ostream& out) { out << "n,metric,value\n"; }

void write_csv_row(std::ostream& out, int n, const std::string& metric, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  out << n << ',' << metric << ',' << buf << '\n';
}

} // namespace pinterp
