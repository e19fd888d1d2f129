/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "hermite.hpp"
#include "phase_space.hpp"
#include "states.hpp"
#include "types.hpp"
#include "weights.hpp"

namespace fockwig {

// CSV schemas. All writers format doubles with "%.17g", so identical inputs
// produce byte-identical files.
//
//   coefficients:  n,re,im        (gaps are zeros)
//   samples:       x,re,im
//   density:       m,n,re,im      (unlisted entries zero; Hermitian completion
//                                  on load, conflicting duplicates rejected)
//   phase space:   q,p,re,im      row-major, preceded by "# convention=..."

CoefficientSequence read_coefficients_csv(const std::string& path);
void write_coefficients_csv(const std::string& path, const CoefficientSequence& alpha);

SampledFunction read_samples_csv(const std::string& path);
void write_samples_csv(const std::string& path, const SampledFunction& samples);

DensityMatrix read_density_csv(const std::string& path);
void write_density_csv(const std::string& path, const DensityMatrix& rho);

PhaseSpaceGrid read_phase_space_csv(const std::string& path);
void write_phase_space_csv(const std::string& path, const PhaseSpaceGrid& grid);

/// Weight spec, either {"family":"power","lambda":L,"beta":B} or
/// {"family":"tabulated","points":[[t,w],...]}; `text_or_path` may be inline
/// JSON or a path to a JSON file.
WeightFunction weight_from_json(const std::string& text_or_path);
std::string weight_to_json(const WeightFunction& w);

/// "lo:hi:step" -> uniform grid.
std::vector<double> parse_grid_spec(const std::string& spec);

std::string format_double(double v);

}  // namespace fockwig
