// CSV serialization: all floats written with 9 significant digits; byte
// output is deterministic for a given object.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootcomm/grid.hpp"
#include "rootcomm/trace.hpp"

namespace rootcomm {

// Format one double exactly as the writers do ("%.9g").
std::string csv_number(double v);

// Header "t,value"; one row per sample.
void export_trace_csv(const PressureTrace& trace, const std::string& path);

// Read back a two-column trace (t,value); dt inferred from the first rows.
PressureTrace import_trace_csv(const std::string& path);

// Arbitrary named columns of equal length; header joined from names.
void export_columns_csv(const std::vector<std::pair<std::string, std::vector<double>>>& columns,
                        const std::string& path);

// Grid snapshots: cells as "row,col,a,p,u", faces as "row,col,dir,A,P,U"
// with dir in {N,E,S,W}.
void export_grid_cells_csv(const AuxinGrid& grid, const std::string& path);
void export_grid_faces_csv(const AuxinGrid& grid, const std::string& path);

}  // namespace rootcomm
