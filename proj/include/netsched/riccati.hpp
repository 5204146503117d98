#pragma once

#include <optional>

#include <Eigen/Dense>

#include "netsched/model.hpp"

namespace netsched {

/// Converged infinite-horizon quantities of one plant.
///
/// S_inf / P_inf solve the control / filter (prediction form) algebraic
/// Riccati equations; K_inf, L_inf are the stationary gains; F_inf is the
/// posterior filter covariance (I - K C) P; Pi_inf = K C P is the covariance
/// injected into the sensor-controller estimate gap at every unscheduled
/// slot; Z_inf solves A Z A^T - Z + Pi = 0 and exists iff rho(A) < 1.
struct SteadyState {
  Eigen::MatrixXd S_inf;
  Eigen::MatrixXd P_inf;
  Eigen::MatrixXd K_inf;
  Eigen::MatrixXd L_inf;
  Eigen::MatrixXd Gamma_inf;
  Eigen::MatrixXd Pi_inf;
  Eigen::MatrixXd F_inf;
  std::optional<Eigen::MatrixXd> Z_inf;
  double spectral_radius = 0.0;
};

struct RiccatiOptions {
  double tol = 1e-10;
  long max_iters = 100000;
};

/// Fixed-point iteration of the backward Riccati recursion from S = Qf until
/// max|dS| <= tol * max(1, max|S|). Throws NoConvergence.
Eigen::MatrixXd solve_control_dare(const PlantSpec& plant, double tol = 1e-10,
                                   long max_iters = 100000);

struct FilterSolution {
  Eigen::MatrixXd P;   // prediction covariance P_inf
  Eigen::MatrixXd K;   // stationary Kalman gain
  Eigen::MatrixXd Pi;  // K C P, symmetrized
  Eigen::MatrixXd F;   // (I - K C) P, symmetrized
};

/// Forward iteration of the prediction-form filter Riccati recursion from
/// P = X0. Throws NoConvergence or SingularInnovation.
FilterSolution solve_filter_dare(const PlantSpec& plant, double tol = 1e-10,
                                 long max_iters = 100000);

struct ControlGain {
  Eigen::MatrixXd L;      // (B^T S B + R)^-1 B^T S A
  Eigen::MatrixXd Gamma;  // L^T (B^T S B + R) L, symmetrized
};

ControlGain control_gain(const PlantSpec& plant, const Eigen::MatrixXd& S_inf);

/// Solves A Z A^T - Z + Pi = 0 exactly via the Kronecker-vectorized linear
/// system. Requires rho(A) < 1 strictly; throws UnstableA otherwise.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Pi,
                               double tol = 1e-10);

double spectral_radius(const Eigen::MatrixXd& A);

/// Solves every steady-state quantity of one plant.
SteadyState solve_steady_state(const PlantSpec& plant, const RiccatiOptions& opts = {});

}  // namespace netsched
