#pragma once

#include <iosfwd>
#include <string>

#include "pinterp/vandermonde.hpp"

namespace pinterp {

inline constexpr int kPointSetSchemaVersion = 1;

/// Point-set document {schema_version, d, n, provenance, points}; every
/// coordinate is a [re, im] pair.
struct PointSetFile {
  int d = 1;
  int n = 0;
  Provenance provenance = Provenance::custom;
  PointSet points;

  /// Reload as a unisolvent stage.
  NodeArrayStage stage() const { return NodeArrayStage(n, points, provenance); }
};

PointSetFile point_set_file(const NodeArrayStage& stage);

std::string to_json(const PointSetFile& file);
PointSetFile point_set_from_json(const std::string& text);

void write_point_set(std::ostream& out, const PointSetFile& file);
PointSetFile read_point_set(std::istream& in);
PointSetFile read_point_set(const std::string& path);

/// One "n,metric,value" row with round-trip precision.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, int n, const std::string& metric, double value);

} // namespace pinterp
