#pragma once

// Built-in example geometries. Entries are defined in code so that golden
// tests and the shipped catalog cannot drift apart.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "spinlab/curvature.hpp"
#include "spinlab/exterior.hpp"
#include "spinlab/homogeneous.hpp"
#include "spinlab/splitting.hpp"

namespace spinlab {

struct GivenScalars {
  std::optional<double> scal_g_min;
  std::optional<double> t_norm2;
  std::optional<std::vector<double>> mu2_list;
  std::string provenance;
};

using CurvatureSource = std::variant<std::monostate, AlgCurvature, HomogeneousSpace>;

struct CatalogEntry {
  std::string name;
  std::string description;
  int n = 0;
  std::vector<std::vector<int>> blocks;  // as listed; `partition` is canonical
  Partition partition;
  Form torsion;
  std::optional<RationalForm> exact_torsion;
  /// Published form of the torsion (for homogeneous entries, to compare
  /// against the derived one) and the frame labeling that relates them.
  std::optional<RationalForm> reference_torsion;
  std::string frame_labels;
  CurvatureSource curvature_source;
  std::optional<GivenScalars> given;
  std::map<std::string, RationalForm> extras;
};

class UnknownEntry : public std::out_of_range {
 public:
  explicit UnknownEntry(const std::string& name)
      : std::out_of_range("unknown catalog entry '" + name + "'") {}
};

std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(const std::string& name);

/// T = e_245 + e_146 - e_236 + e_135 on the nearly Kaehler flag manifold.
RationalForm nearly_kaehler_torsion();

/// Stiefel manifold V_2(R^N) = SO(N)/SO(N-2) with its normal metric, on the
/// basis h = {E_ab : 3 <= a < b}, m = {E_1j} u {E_2j} u {E_21} (j = 3..N).
HomogeneousSpace stiefel_space(int N);

}  // namespace spinlab
