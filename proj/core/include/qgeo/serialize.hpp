#pragma once

// JSON and CSV formats.
//
//   matrix:      {"dim": N, "re": [[...]], "im": [[...]]}   (row-major, "im" optional)
//   loop:        {"closed": true, "params": [s0, ...], "states": [matrix, ...]}
//   fiber field: {"grid": {"dims": [K1, K2]}, "kind": "density",
//                 "values": [matrix, ...]}               (last axis fastest)
//   model:       {"type": "qwz", "m": 1.0}
//                {"type": "two_band_d", "d": [[term...], [term...], [term...]]}
//                with term = [n1, n2, cos_coeff, sin_coeff] contributing
//                cos_coeff*cos(n.eps) + sin_coeff*sin(n.eps) to d_x, d_y, d_z.
//   ring:        {"L": 8, "N": 2, "intra": matrix, "inter": matrix, "a": 1.0}

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgeo/bloch.hpp"
#include "qgeo/geometry.hpp"

namespace qgeo {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json loop_to_json(const MixedLoop& loop);
MixedLoop mixed_loop_from_json(const json& j);
// Pure-state loops are stored as projectors; representatives are recovered
// from the dominant column.
json loop_to_json(const PureLoop& loop);
PureLoop pure_loop_from_json(const json& j);

json grid_to_json(const TorusGrid& grid);
TorusGrid grid_from_json(const json& j);

json field_to_json(const FiberField& field);
FiberField field_from_json(const json& j);

BlochModel model_from_json(const json& j);
RingLattice ring_from_json(const json& j);
json ring_to_json(const RingLattice& lattice);

// Shortest decimal form that parses back to the same double.
std::string format_number(double v);

// RFC 4180 quoting: a field is quoted when it contains a comma, a double
// quote, CR or LF; embedded quotes are doubled. Rows end with "\n".
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& fields);

  static std::string quote(std::string_view field);

 private:
  std::ostream& out_;
};

struct InvariantRow {
  std::string family_id;
  std::string mesh;
  std::string invariant_name;
  double raw_value = 0.0;
  long rounded = 0;
  double residual = 0.0;
};

void write_invariant_csv(std::ostream& out, const std::vector<InvariantRow>& rows);

}  // namespace qgeo
