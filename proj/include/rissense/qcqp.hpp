#pragma once

// Convex QCQP behind the reflecting-coefficient update:
//
//   minimize    phi^H A phi - 2 Re(r^H phi) + c
//   subject to  sum_m J_m |phi_m|^2 <= P_out
//               |phi_m| <= a_max
//
// solved with a primal log-barrier method in real coordinates, and the
// unit-modulus variant solved by exact cyclic coordinate descent.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "common.hpp"

namespace rissense {

struct QcqpInstance {
  CMat quad;            // A, Hermitian PSD, M x M
  CVec linear;          // r
  double constant = 0;  // c
  RVec j_diag;          // M + 1 entries, last one 0 (the fixed trailing coordinate)
  double p_out = std::numeric_limits<double>::infinity();
  double a_max = std::numeric_limits<double>::infinity();

  int size() const { return static_cast<int>(linear.size()); }

  double objective(const CVec& phi) const {
    return (phi.dot(quad * phi)).real() - 2.0 * (linear.dot(phi)).real() + constant;
  }

  double power(const CVec& phi) const {
    double s = 0.0;
    for (int m = 0; m < size(); ++m) s += j_diag(m) * std::norm(phi(m));
    return s;
  }

  bool feasible(const CVec& phi, double rel_tol = 1e-9) const {
    if (std::isfinite(p_out) && power(phi) > p_out * (1.0 + rel_tol) + 1e-300) return false;
    if (std::isfinite(a_max))
      for (int m = 0; m < size(); ++m)
        if (std::abs(phi(m)) > a_max * (1.0 + rel_tol)) return false;
    return true;
  }

  void validate() const {
    const int m = size();
    require_dims(quad.rows() == m && quad.cols() == m, "QCQP: quadratic term must be M x M");
    require_dims(j_diag.size() == m + 1, "QCQP: J must have M + 1 diagonal entries");
    if (j_diag(m) != 0.0 || (j_diag.head(m).array() < 0.0).any())
      throw DomainError("QCQP: J must be nonnegative with a zero trailing entry");
    if ((quad - quad.adjoint()).norm() > 1e-10 * (quad.norm() + 1e-300))
      throw DomainError("QCQP: quadratic term is not Hermitian");
    if (m > 0) {
      Eigen::SelfAdjointEigenSolver<CMat> es(quad, Eigen::EigenvaluesOnly);
      const RVec& ev = es.eigenvalues();
      if (ev.minCoeff() < -1e-10 * std::max(ev.cwiseAbs().maxCoeff(), 1e-300))
        throw DomainError("QCQP: quadratic term is not positive semidefinite");
    }
    if (p_out < 0.0 || a_max < 0.0) throw DomainError("QCQP: budgets must be nonnegative");
  }
};

struct QcqpSolution {
  CVec phi;
  double objective = 0.0;
  double power_multiplier = 0.0;  // for the J constraint, objective units
  RVec cap_multipliers;           // for |phi_m|^2 <= a_max^2
  double kkt_residual = 0.0;      // relative; see solve_p22
  int newton_steps = 0;
};

namespace detail {

// Real embedding x = [Re phi; Im phi].
inline RVec to_real(const CVec& z) {
  RVec x(2 * z.size());
  x << z.real(), z.imag();
  return x;
}

inline CVec to_complex(const RVec& x) {
  const Eigen::Index m = x.size() / 2;
  CVec z(m);
  for (Eigen::Index i = 0; i < m; ++i) z(i) = {x(i), x(m + i)};
  return z;
}

inline RMat real_embedding(const CMat& a) {
  const Eigen::Index m = a.rows();
  RMat out(2 * m, 2 * m);
  out << a.real(), -a.imag(), a.imag(), a.real();
  return out;
}

}  // namespace detail

/// Barrier solve of the convex QCQP. The reported KKT residual is the larger
/// of the stationarity residual (relative to the gradient scale) and the
/// complementarity gap (relative to the objective at phi = 0).
inline QcqpSolution solve_p22(const QcqpInstance& inst) {
  inst.validate();
  const int m = inst.size();
  QcqpSolution sol;
  sol.cap_multipliers = RVec::Zero(m);
  if (m == 0) {
    sol.phi = CVec(0);
    sol.objective = inst.constant;
    return sol;
  }

  const bool has_power = std::isfinite(inst.p_out) && (inst.j_diag.head(m).array() > 0.0).any();
  const bool has_caps = std::isfinite(inst.a_max);
  if ((has_power && inst.p_out <= 0.0) || (has_caps && inst.a_max <= 0.0)) {
    sol.phi = CVec::Zero(m);
    sol.objective = inst.constant;
    return sol;
  }

  const RMat a2 = 2.0 * detail::real_embedding(inst.quad);  // Hessian of f
  const RVec r2 = 2.0 * detail::to_real(inst.linear);        // f = x^T a2 x / 2 - r2^T x + c
  RVec jj(2 * m);
  jj << inst.j_diag.head(m), inst.j_diag.head(m);
  const double a_sq = has_caps ? inst.a_max * inst.a_max : 0.0;
  const double scale = std::max(inst.constant, 1e-300);

  if (!has_power && !has_caps) {
    // Unconstrained: any minimizer of a PSD quadratic; take the least-norm one.
    Eigen::CompleteOrthogonalDecomposition<RMat> cod(a2);
    const RVec x = cod.solve(r2);
    sol.phi = detail::to_complex(x);
    sol.objective = inst.objective(sol.phi);
    sol.kkt_residual = (a2 * x - r2).norm() / std::max(r2.norm(), 1e-300);
    return sol;
  }

  const int n_cons = (has_power ? 1 : 0) + (has_caps ? m : 0);
  auto slacks = [&](const RVec& x, double& s_pow, RVec& s_cap) {
    s_pow = has_power ? inst.p_out - x.cwiseProduct(jj).dot(x) : 1.0;
    if (has_caps)
      for (int i = 0; i < m; ++i) s_cap(i) = a_sq - x(i) * x(i) - x(m + i) * x(m + i);
  };
  auto fval = [&](const RVec& x) { return (0.5 * x.dot(a2 * x) - r2.dot(x)) / scale; };
  auto phi_t = [&](const RVec& x, double t, bool& ok) {
    double s_pow;
    RVec s_cap(m);
    slacks(x, s_pow, s_cap);
    ok = s_pow > 0.0 && (!has_caps || (s_cap.array() > 0.0).all());
    if (!ok) return std::numeric_limits<double>::infinity();
    double v = t * fval(x);
    if (has_power) v -= std::log(s_pow);
    if (has_caps) v -= s_cap.array().log().sum();
    return v;
  };

  RVec x = RVec::Zero(2 * m);
  double t = 1.0;
  const double mu = 16.0;
  const double gap_target = 1e-13;  // relative to the objective at phi = 0
  int steps = 0;
  RVec grad(2 * m);
  RMat hess(2 * m, 2 * m);
  while (true) {
    // Centering by damped Newton.
    for (int it = 0; it < 200; ++it) {
      double s_pow;
      RVec s_cap(m);
      slacks(x, s_pow, s_cap);
      grad = t * (a2 * x - r2) / scale;
      hess = (t / scale) * a2;
      if (has_power) {
        const RVec gp = 2.0 * jj.cwiseProduct(x);
        grad += gp / s_pow;
        hess.diagonal() += 2.0 * jj / s_pow;
        hess.noalias() += gp * gp.transpose() / (s_pow * s_pow);
      }
      if (has_caps) {
        for (int i = 0; i < m; ++i) {
          const double inv = 1.0 / s_cap(i);
          const double xr = x(i), xi = x(m + i);
          grad(i) += 2.0 * xr * inv;
          grad(m + i) += 2.0 * xi * inv;
          const double inv2 = 4.0 * inv * inv;
          hess(i, i) += 2.0 * inv + inv2 * xr * xr;
          hess(m + i, m + i) += 2.0 * inv + inv2 * xi * xi;
          hess(i, m + i) += inv2 * xr * xi;
          hess(m + i, i) += inv2 * xr * xi;
        }
      }
      Eigen::LDLT<RMat> ldlt(hess);
      RVec dx = -ldlt.solve(grad);
      if (!dx.allFinite()) throw NumericalError("solve_p22: Newton system is singular");
      const double decrement = -grad.dot(dx);
      ++steps;
      if (decrement < 1e-14) break;
      bool ok = false;
      const double f0 = phi_t(x, t, ok);
      double step = 1.0;
      while (true) {
        const double f1 = phi_t(x + step * dx, t, ok);
        if (ok && f1 <= f0 - 0.25 * step * decrement) break;
        step *= 0.5;
        if (step < 1e-20) break;
      }
      if (step < 1e-20) break;
      x += step * dx;
    }
    if (n_cons / t < gap_target) break;
    t *= mu;
  }

  double s_pow;
  RVec s_cap(m);
  slacks(x, s_pow, s_cap);
  sol.phi = detail::to_complex(x);
  sol.objective = inst.objective(sol.phi);
  sol.newton_steps = steps;

  // Multipliers: the central-path values 1 / (t s_i) pick the active set, then
  // a least-squares fit of the stationarity condition at x refines them (tiny
  // active slacks make the central-path values inaccurate).
  const RVec grad_f = a2 * x - r2;
  std::vector<int> active;  // -1: power constraint, i >= 0: cap on element i
  std::vector<RVec> normals;
  const double grad_scale = std::max({r2.norm(), (a2 * x).norm(), 1e-300});
  if (has_power) {
    const RVec g = 2.0 * jj.cwiseProduct(x);
    if (scale / (t * s_pow) * g.norm() > 1e-9 * grad_scale) {
      active.push_back(-1);
      normals.push_back(g);
    }
  }
  if (has_caps) {
    for (int i = 0; i < m; ++i) {
      RVec g = RVec::Zero(2 * m);
      g(i) = 2.0 * x(i);
      g(m + i) = 2.0 * x(m + i);
      if (scale / (t * s_cap(i)) * g.norm() > 1e-9 * grad_scale) {
        active.push_back(i);
        normals.push_back(g);
      }
    }
  }
  RVec lambda = RVec::Zero(static_cast<Eigen::Index>(active.size()));
  if (!active.empty()) {
    RMat na(2 * m, static_cast<Eigen::Index>(active.size()));
    for (std::size_t c = 0; c < active.size(); ++c) na.col(static_cast<Eigen::Index>(c)) = normals[c];
    lambda = na.colPivHouseholderQr().solve(-grad_f).cwiseMax(0.0);
  }
  RVec lagr_grad = grad_f;
  double comp = 0.0;
  for (std::size_t c = 0; c < active.size(); ++c) {
    const double lam = lambda(static_cast<Eigen::Index>(c));
    lagr_grad += lam * normals[c];
    if (active[c] < 0) {
      sol.power_multiplier = lam;
      comp = std::max(comp, lam * s_pow);
    } else {
      sol.cap_multipliers(active[c]) = lam;
      comp = std::max(comp, lam * s_cap(active[c]));
    }
  }
  sol.kkt_residual = std::max(lagr_grad.norm() / grad_scale, comp / scale);
  return sol;
}

struct UnitModulusResult {
  CVec phi;
  double objective = 0.0;
  int sweeps = 0;
  bool objective_nonincreasing = true;
};

/// Cyclic exact minimization over |phi_m| = 1 (power constraint and caps are
/// ignored). Each element update keeps the others fixed and picks the phase
/// of z_m = r_m - sum_{n != m} A_mn phi_n; a zero z_m keeps the old phase.
inline UnitModulusResult solve_p22p_unit_modulus(const QcqpInstance& inst,
                                                 std::optional<CVec> init = std::nullopt,
                                                 double tol = 1e-12, int max_sweeps = 1000) {
  const int m = inst.size();
  require_dims(inst.quad.rows() == m && inst.quad.cols() == m, "QCQP: quadratic term must be M x M");
  CVec phi(m);
  if (init) {
    require_dims(init->size() == m, "unit-modulus init has wrong length");
    for (int i = 0; i < m; ++i) phi(i) = std::abs((*init)(i)) > 0 ? (*init)(i) / std::abs((*init)(i)) : 1.0;
  } else {
    for (int i = 0; i < m; ++i)
      phi(i) = std::abs(inst.linear(i)) > 0 ? inst.linear(i) / std::abs(inst.linear(i)) : cplx{1.0, 0.0};
  }

  UnitModulusResult res;
  CVec aphi = inst.quad * phi;
  double obj = inst.objective(phi);
  const double scale = std::max(std::abs(inst.constant), 1e-300);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = obj;
    for (int i = 0; i < m; ++i) {
      const cplx z = inst.linear(i) - (aphi(i) - inst.quad(i, i) * phi(i));
      if (std::abs(z) <= 1e-300) continue;
      const cplx next = z / std::abs(z);
      const cplx delta = next - phi(i);
      if (delta == cplx{0.0, 0.0}) continue;
      aphi += inst.quad.col(i) * delta;
      phi(i) = next;
    }
    obj = inst.objective(phi);
    res.sweeps = sweep + 1;
    if (obj > before + 1e-12 * scale) res.objective_nonincreasing = false;
    if (before - obj < tol * scale) break;
  }
  res.phi = phi;
  res.objective = obj;
  return res;
}

}  // namespace rissense
