#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netsched/errors.hpp"

namespace netsched {

/// One linear subsystem x_{t+1} = A x_t + B u_t + w_t, y_t = C x_t + v_t with
/// quadratic weights (Q, Qf, R), noise covariances (W, V) and Gaussian
/// initial state N(x0_mean, x0_cov).
struct PlantSpec {
  int id = 0;
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;
  Eigen::MatrixXd Q;
  Eigen::MatrixXd Qf;
  Eigen::MatrixXd R;
  Eigen::MatrixXd W;
  Eigen::MatrixXd V;
  Eigen::VectorXd x0_mean;
  Eigen::MatrixXd x0_cov;

  int state_dim() const { return static_cast<int>(A.rows()); }
  int input_dim() const { return static_cast<int>(B.cols()); }
  int output_dim() const { return static_cast<int>(C.rows()); }
};

/// N plants sharing M communication channels, M < N.
struct Instance {
  std::vector<PlantSpec> plants;
  int channels = 0;

  int num_plants() const { return static_cast<int>(plants.size()); }
};

/// Periodic allocation table: alloc(i, m) = 1 iff plant i transmits in slot m.
/// The infinite sequence is the periodic extension sigma(i, t) = alloc(i, t mod period).
struct Schedule {
  int period = 0;
  Eigen::MatrixXi alloc;  // N x period, entries in {0, 1}

  int sigma(int plant, long t) const {
    return alloc(plant, static_cast<int>(t % period));
  }
  std::vector<int> row(int plant) const {
    std::vector<int> r(static_cast<size_t>(period));
    for (int m = 0; m < period; ++m) r[static_cast<size_t>(m)] = alloc(plant, m);
    return r;
  }
  bool row_covered(int plant) const {
    for (int m = 0; m < period; ++m)
      if (alloc(plant, m) != 0) return true;
    return false;
  }
};

/// Per-plant flag: does the row contain at least one transmission slot?
struct ScheduleCoverage {
  std::vector<bool> covered;
};

/// Checks dimensions, weight definiteness and the channel count; symmetric
/// blocks are stored as (X + X^T)/2 after the checks. Throws
/// DimensionMismatch, NotPsd or BadChannelCount.
Instance validate_instance(Instance raw);

/// Checks that every slot allocates exactly M channels and reports per-plant
/// coverage. Throws RowLengthMismatch or SlotBudgetViolation.
ScheduleCoverage validate_schedule(const Instance& instance, const Schedule& sched);

// JSON document formats. Serialization round-trips bit-exactly (doubles are
// emitted in shortest round-trip form).
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);  // parse + validate
std::string schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const std::string& text);  // parse only; validate against an Instance

Instance load_instance(const std::string& path);
Schedule load_schedule(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace netsched
