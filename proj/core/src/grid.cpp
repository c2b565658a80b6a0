#include "rootcomm/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "rootcomm/errors.hpp"

namespace rootcomm {
namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Neighbor cell index for a face, or -1 on the grid boundary.
int neighbor_of(const AuxinGrid& g, int r, int c, int dir) {
  switch (dir) {
    case kNorth: return r > 0 ? g.index(r - 1, c) : -1;
    case kEast:  return c < g.cols - 1 ? g.index(r, c + 1) : -1;
    case kSouth: return r < g.rows - 1 ? g.index(r + 1, c) : -1;
    case kWest:  return c > 0 ? g.index(r, c - 1) : -1;
  }
  return -1;
}

constexpr int kOpposite[4] = {kSouth, kWest, kNorth, kEast};

// Clamp an updated pool at zero; abort on NaN or a strongly negative value
// (explicit-Euler instability).
double clamp_pool(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericError(std::string("grid_step: non-finite ") + what);
  if (v < -1.0e-6) {
    throw NumericError(std::string("grid_step: unstable step drove ") + what +
                       " strongly negative; reduce dt");
  }
  return v > 0.0 ? v : 0.0;
}

}  // namespace

AuxinGrid build_grid(const GridParams& params, const GridModifiers& modifiers) {
  if (params.size < 3 || params.size % 2 == 0) {
    throw std::invalid_argument("build_grid: size must be odd and >= 3");
  }
  AuxinGrid g;
  g.rows = g.cols = params.size;
  const int n = g.rows * g.cols;
  const int xylem_col = g.cols / 2;
  const int exposed_cols = g.cols / 2;  // strictly left of the xylem column

  g.a.assign(n, params.init_a);
  g.p.assign(n, params.alpha_p / params.mu_p);
  g.u.assign(n, params.alpha_u / params.mu_u);
  g.xylem.assign(n, 0);
  g.exposed.assign(n, 0);
  g.alpha_a_eff.assign(n, params.alpha_a);
  g.delta_p_eff.assign(n, params.delta_p);
  g.omega_p_eff.assign(n, params.omega_p);

  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      const int i = g.index(r, c);
      if (c == xylem_col) {
        g.xylem[i] = 1;
        g.alpha_a_eff[i] = 2.0 * params.alpha_a;
      }
      if (c < exposed_cols) {
        g.exposed[i] = 1;
        g.delta_p_eff[i] = params.delta_p * modifiers.delta_p;
        g.omega_p_eff[i] = params.omega_p * modifiers.omega_p;
      }
    }
  }

  // Membranes at omega/delta balance with equal face shares; apoplast starts
  // empty alongside the cellular auxin default.
  g.wall_a.assign(n, {0.0, 0.0, 0.0, 0.0});
  g.mem_p.resize(n);
  g.mem_u.resize(n);
  for (int i = 0; i < n; ++i) {
    const double p_face = g.omega_p_eff[i] * 0.25 * g.p[i] / g.delta_p_eff[i];
    const double u_face = params.omega_u * g.u[i] / params.delta_u;
    g.mem_p[i] = {p_face, p_face, p_face, p_face};
    g.mem_u[i] = {u_face, u_face, u_face, u_face};
  }
  return g;
}

double carrier_flux(double a_i, double wall_a_ij, double mem_p_ij, double mem_u_ij,
                    const GridParams& params) {
  return params.phi_a * (params.kappa_a_ef * a_i - params.kappa_a_in * wall_a_ij) +
         params.phi_p * mem_p_ij * params.kappa_p_ef * a_i -
         params.phi_u * mem_u_ij * params.kappa_u_in * wall_a_ij;
}

std::array<double, 4> pin_localization(const std::array<double, 4>& fluxes,
                                       double p_i,
                                       const std::array<double, 4>& mem_p_faces,
                                       double omega_p_eff, double delta_p_eff,
                                       const GridParams& params) {
  std::array<double, 4> weight{};
  for (int d = 0; d < 4; ++d) {
    weight[d] = logistic(params.h_sens * (fluxes[d] / omega_p_eff - params.theta));
  }
  // Mirror-stable grouping: (N+S) + (E+W).
  const double total = (weight[kNorth] + weight[kSouth]) + (weight[kEast] + weight[kWest]);
  std::array<double, 4> rates{};
  for (int d = 0; d < 4; ++d) {
    const double share = total > 0.0 ? weight[d] / total : 0.25;
    rates[d] = omega_p_eff * share * p_i - delta_p_eff * mem_p_faces[d];
  }
  return rates;
}

double aux1_flux(double u_i, double mem_u_ij, const GridParams& params) {
  return params.omega_u * u_i - params.delta_u * mem_u_ij;
}

void grid_step(AuxinGrid& g, const GridParams& params, double dt_min) {
  if (!(dt_min > 0.0)) throw std::invalid_argument("grid_step: dt must be > 0");
  const int n = g.rows * g.cols;

  // Frozen-snapshot fluxes and localization rates.
  std::vector<std::array<double, 4>> flux(n), pin_rate(n), aux_rate(n);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < 4; ++d) {
      flux[i][d] = carrier_flux(g.a[i], g.wall_a[i][d], g.mem_p[i][d], g.mem_u[i][d], params);
      aux_rate[i][d] = aux1_flux(g.u[i], g.mem_u[i][d], params);
    }
    pin_rate[i] = pin_localization(flux[i], g.p[i], g.mem_p[i],
                                   g.omega_p_eff[i], g.delta_p_eff[i], params);
  }

  AuxinGrid next = g;
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      const int i = g.index(r, c);
      const double flux_sum =
          (flux[i][kNorth] + flux[i][kSouth]) + (flux[i][kEast] + flux[i][kWest]);
      const double pin_sum =
          (pin_rate[i][kNorth] + pin_rate[i][kSouth]) + (pin_rate[i][kEast] + pin_rate[i][kWest]);
      const double aux_sum =
          (aux_rate[i][kNorth] + aux_rate[i][kSouth]) + (aux_rate[i][kEast] + aux_rate[i][kWest]);

      next.a[i] = clamp_pool(
          g.a[i] + dt_min * (g.alpha_a_eff[i] - params.mu_a * g.a[i] - flux_sum), "a");
      next.p[i] = clamp_pool(
          g.p[i] + dt_min * (params.alpha_p - params.mu_p * g.p[i] - pin_sum), "p");
      next.u[i] = clamp_pool(
          g.u[i] + dt_min * (params.alpha_u - params.mu_u * g.u[i] - aux_sum), "u");

      for (int d = 0; d < 4; ++d) {
        const int j = neighbor_of(g, r, c, d);
        double diffusion = 0.0;
        if (j >= 0) {
          diffusion = params.phi_wall * (g.wall_a[i][d] - g.wall_a[j][kOpposite[d]]);
        }
        next.wall_a[i][d] = clamp_pool(
            g.wall_a[i][d] +
                dt_min * (flux[i][d] - diffusion - params.mu_a * g.wall_a[i][d]),
            "A");
        next.mem_p[i][d] = clamp_pool(g.mem_p[i][d] + dt_min * pin_rate[i][d], "P");
        next.mem_u[i][d] = clamp_pool(g.mem_u[i][d] + dt_min * aux_rate[i][d], "U");
      }
    }
  }
  g = std::move(next);
}

void run_grid(AuxinGrid& g, const GridParams& params, int steps) {
  for (int s = 0; s < steps; ++s) grid_step(g, params, params.dt_min);
}

double polarity_index(const AuxinGrid& g) {
  const int xylem_col = g.cols / 2;
  double left = 0.0, right = 0.0, all = 0.0;
  int n_left = 0, n_right = 0, n_all = 0;
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      const double v = g.a[g.index(r, c)];
      if (c == xylem_col) continue;
      all += v;
      ++n_all;
      if (c < xylem_col) {
        left += v;
        ++n_left;
      } else {
        right += v;
        ++n_right;
      }
    }
  }
  if (n_all == 0) return 0.0;
  const double mean_all = all / n_all;
  if (mean_all == 0.0) return 0.0;
  return (right / n_right - left / n_left) / mean_all;
}

double total_auxin(const AuxinGrid& g) {
  double acc_cells = 0.0, acc_walls = 0.0;
  for (double v : g.a) acc_cells += v;
  for (const auto& f : g.wall_a) acc_walls += (f[kNorth] + f[kSouth]) + (f[kEast] + f[kWest]);
  return acc_cells + acc_walls;
}

}  // namespace rootcomm
