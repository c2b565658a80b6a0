#include "rootcomm/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rootcomm/errors.hpp"

namespace rootcomm {

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}
}  // namespace

void export_trace_csv(const PressureTrace& trace, const std::string& path) {
  auto out = open_out(path);
  out << "t,value\n";
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    out << csv_number(trace.time_at(i)) << ',' << csv_number(trace.samples[i]) << '\n';
  }
}

PressureTrace import_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  PressureTrace trace;
  std::vector<double> times;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path + ": malformed row");
    times.push_back(std::stod(line.substr(0, comma)));
    trace.samples.push_back(std::stod(line.substr(comma + 1)));
  }
  if (times.size() >= 2) {
    trace.t0 = times.front();
    trace.dt = times[1] - times[0];
  } else if (times.size() == 1) {
    trace.t0 = times.front();
    trace.dt = 1.0;
  }
  return trace;
}

void export_columns_csv(const std::vector<std::pair<std::string, std::vector<double>>>& columns,
                        const std::string& path) {
  auto out = open_out(path);
  std::size_t rows = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << columns[i].first << (i + 1 < columns.size() ? ',' : '\n');
    rows = std::max(rows, columns[i].second.size());
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& col = columns[i].second;
      if (r < col.size()) out << csv_number(col[r]);
      out << (i + 1 < columns.size() ? ',' : '\n');
    }
  }
}

void export_grid_cells_csv(const AuxinGrid& grid, const std::string& path) {
  auto out = open_out(path);
  out << "row,col,a,p,u\n";
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const int i = grid.index(r, c);
      out << r << ',' << c << ',' << csv_number(grid.a[i]) << ','
          << csv_number(grid.p[i]) << ',' << csv_number(grid.u[i]) << '\n';
    }
  }
}

void export_grid_faces_csv(const AuxinGrid& grid, const std::string& path) {
  static const char* kDirNames[4] = {"N", "E", "S", "W"};
  auto out = open_out(path);
  out << "row,col,dir,A,P,U\n";
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const int i = grid.index(r, c);
      for (int d = 0; d < 4; ++d) {
        out << r << ',' << c << ',' << kDirNames[d] << ','
            << csv_number(grid.wall_a[i][d]) << ',' << csv_number(grid.mem_p[i][d]) << ','
            << csv_number(grid.mem_u[i][d]) << '\n';
      }
    }
  }
}

}  // namespace rootcomm
