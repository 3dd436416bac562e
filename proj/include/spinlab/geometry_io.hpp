#pragma once

// JSON geometry files:
//
// {
//   "name": "...",                                   (optional)
//   "n": 6,
//   "partition": [[1,2],[3,4],[5,6]],
//   "torsion": [{"indices": [2,4,5], "value": 1}, ...],
//   "curvature": [{"indices": [p,q,r,s], "value": v}, ...],          (optional)
//   "homogeneous": {"h_dim": 1, "metric_diag": [...],                (optional)
//                   "brackets": [{"i":1,"j":2,"k":3,"value":1}, ...]},
//   "scalars": {"scal_g_min": 30, "t_norm2": 4, "mu2_list": [0,16],  (optional)
//               "provenance": "..."},
//   "reference_torsion": [{"indices": [1,3,5], "value": -1}, ...]    (optional)
// }
//
// Indices are 1-based. "curvature" and "homogeneous" are mutually exclusive.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinlab/catalog.hpp"
#include "spinlab/curvature.hpp"
#include "spinlab/exterior.hpp"
#include "spinlab/homogeneous.hpp"

namespace spinlab {

using Json = nlohmann::ordered_json;

class SchemaError : public std::invalid_argument {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::invalid_argument((pointer.empty() ? "document" : pointer) + ": " + message), pointer_(std::move(pointer)) {}
  /// JSON pointer of the offending value ("" for the document root).
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct HomogeneousData {
  int h_dim = 0;
  std::vector<BracketRecord> brackets;
  std::vector<double> metric_diag;
};

struct Geometry {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> partition;
  Form torsion;
  std::optional<std::vector<CurvatureRecord>> curvature;
  std::optional<HomogeneousData> homogeneous;
  std::optional<GivenScalars> scalars;
  /// Published torsion to compare the homogeneous one against.
  std::optional<Form> reference_torsion;
};

/// Validates against the schema above; throws SchemaError.
Geometry parse_geometry(const nlohmann::json& doc);
Geometry parse_geometry_text(const std::string& text);

Json geometry_to_json(const Geometry& g);
Geometry to_geometry(const CatalogEntry& entry);

/// JSON text with every floating-point value printed with 17 significant
/// digits; integers and strings as nlohmann renders them.
std::string dump_json(const Json& value, int indent = 2);

}  // namespace spinlab
