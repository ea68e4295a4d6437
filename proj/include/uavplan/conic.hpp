// Copyright 2026 The uavplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <memory>
#include <string>
#include <vector>

#include "uavplan/common.hpp"

namespace uavplan::conic {

// Sparse affine expression sum_i coef_i * x_i + constant.
struct LinExpr {
  std::vector<std::pair<int, double>> terms;
  double constant = 0.0;

  LinExpr() = default;
  /* implicit */ LinExpr(double c) : constant(c) {}

  static LinExpr var(int idx, double coef = 1.0) {
    LinExpr e;
    e.terms.emplace_back(idx, coef);
    return e;
  }
  LinExpr &add(int idx, double coef) {
    terms.emplace_back(idx, coef);
    return *this;
  }
  LinExpr &operator+=(const LinExpr &o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    constant += o.constant;
    return *this;
  }
  LinExpr &operator-=(const LinExpr &o) {
    for (const auto &[i, c] : o.terms) terms.emplace_back(i, -c);
    constant -= o.constant;
    return *this;
  }
  LinExpr &operator*=(double s) {
    for (auto &[i, c] : terms) c *= s;
    constant *= s;
    return *this;
  }
  friend LinExpr operator+(LinExpr a, const LinExpr &b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr &b) { return a -= b; }
  friend LinExpr operator*(double s, LinExpr a) { return a *= s; }

  double eval(const Eigen::VectorXd &x) const {
    double v = constant;
    for (const auto &[i, c] : terms) v += c * x[i];
    return v;
  }
};

enum class ConeKind {
  kZero,    // expr == 0
  kNonNeg,  // expr >= 0
  kSoc,     // exprs[0] >= || exprs[1:] ||
  kRotated, // exprs[0]*exprs[1] >= sum exprs[2:]^2, exprs[0,1] >= 0
};

// Every constraint carries a provenance tag naming the model piece that
// produced it ("tdma_budget[n=3]"), so an infeasible or ill-scaled program can
// be traced back to its builder.
struct Constraint {
  ConeKind kind;
  std::vector<LinExpr> exprs;
  std::string tag;
};

// Standard conic form consumed by the bundled solver:
//   min c'x  s.t.  A x = b,  h - G x in K,
// K = R+^{n_nonneg} x SOC(dims[0]) x SOC(dims[1]) x ...
struct StandardForm {
  int n_vars = 0;
  Eigen::VectorXd c;
  Eigen::SparseMatrix<double> A;  // equalities
  Eigen::VectorXd b;
  Eigen::SparseMatrix<double> G;  // cone rows
  Eigen::VectorXd h;
  int n_nonneg = 0;
  std::vector<int> soc_dims;
  double obj_constant = 0.0;
};

enum class SolveStatus {
  kOptimal,      // contract: primal residual <= 1e-7 and relative gap <= 1e-7
  kNearOptimal,  // converged past reduced tolerances only
  kInfeasible,   // primal infeasible (normal outcome, not an error)
  kUnbounded,
  kIterLimit,
  kNumerics,
};

const char *to_string(SolveStatus s);

struct SolverSettings {
  double feastol = 1e-9;
  double abstol = 1e-9;
  double reltol = 1e-9;
  // Acceptance thresholds for the optimal status (the published contract).
  double feastol_accept = 1e-7;
  double reltol_accept = 1e-7;
  // Reduced thresholds for near-optimal classification.
  double feastol_inacc = 1e-5;
  double reltol_inacc = 1e-5;
  int max_iters = 100;
  bool verbose = false;
};

struct ConicSolution {
  SolveStatus status = SolveStatus::kNumerics;
  Eigen::VectorXd x;
  double objective = 0.0;   // includes the affine constant
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double rel_gap = 0.0;
  int iterations = 0;
  std::string message;
  bool ok() const {
    return status == SolveStatus::kOptimal || status == SolveStatus::kNearOptimal;
  }
};

// Pluggable backend; IpmSolver in socp.hpp is the bundled implementation.
class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual ConicSolution solve(const StandardForm &sf,
                              const SolverSettings &settings) const = 0;
};

class Program {
 public:
  int add_var() { return n_vars_++; }
  int add_vars(int n) {
    const int first = n_vars_;
    n_vars_ += n;
    return first;
  }
  int num_vars() const { return n_vars_; }

  void obj(int var, double coef);       // accumulate linear objective
  void obj_constant(double c) { obj_const_ += c; }

  int add_eq(LinExpr e, std::string tag);
  int add_ge0(LinExpr e, std::string tag);  // e >= 0
  int add_soc(std::vector<LinExpr> exprs, std::string tag);
  int add_rotated(LinExpr u, LinExpr v, std::vector<LinExpr> w, std::string tag);

  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const Constraint &constraint(int i) const { return constraints_[static_cast<size_t>(i)]; }

  StandardForm to_standard_form() const;

  // Solve with the bundled interior-point backend unless another is given.
  ConicSolution solve(const SolverSettings &settings = {},
                      const SolverBackend *backend = nullptr) const;

  double objective_value(const Eigen::VectorXd &x) const;

 private:
  int n_vars_ = 0;
  std::vector<std::pair<int, double>> obj_terms_;
  double obj_const_ = 0.0;
  std::vector<Constraint> constraints_;
};

// Independent feasibility check: recomputes every constraint violation from
// the Program's own structures, never from the solver's internal form.
struct CheckReport {
  double max_violation = 0.0;
  std::string worst_tag;
  std::vector<std::pair<std::string, double>> by_tag;  // worst per tag prefix
  bool ok(double tol) const { return max_violation <= tol; }
};

CheckReport check_solution(const Program &p, const Eigen::VectorXd &x);

}  // namespace uavplan::conic
