#pragma once

// Renderers for analysis and bounds reports: a fixed-width table for people
// and JSON (every intermediate, stable field names) for machines.

#include <string>

#include "spinlab/analysis.hpp"
#include "spinlab/bounds.hpp"
#include "spinlab/geometry_io.hpp"

namespace spinlab {

Json report_json(const AnalysisReport& rep);
std::string report_table(const AnalysisReport& rep);

Json bounds_json(const BoundsInput<double>& in, const BoundsReport<double>& rep);
std::string bounds_table(const BoundsInput<double>& in, const BoundsReport<double>& rep);

/// %.10g with values below 1e-12 in magnitude printed as 0.
std::string format_number(double v);

}  // namespace spinlab
