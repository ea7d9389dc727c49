// Copyright 2026 the mixopt authors
// SPDX-License-Identifier: Apache-2.0

#include "mixopt/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "mixopt/errors.hpp"

namespace mixopt::zoo {

namespace {

Vector concat(const Vector& a, const Vector& b) {
  Vector z(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) z[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) z[a.size() + i] = b[i];
  return z;
}

Vector head(const Vector& z, std::size_t n) {
  Vector a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = z[i];
  return a;
}

Vector tail(const Vector& z, std::size_t n) {
  Vector b(n);
  const std::size_t off = z.size() - n;
  for (std::size_t i = 0; i < n; ++i) b[i] = z[off + i];
  return b;
}

// (G G^T)_{ij} / n, the normalized Gram entry.
double gram_entry(const Matrix& g, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t k = 0; k < g.cols(); ++k) s += g(i, k) * g(j, k);
  return s / static_cast<double>(g.cols());
}

Matrix random_gram(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gauss(rng);
  }
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = gram_entry(g, i, j);
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

}  // namespace

std::string ZooParams::to_string() const {
  std::ostringstream os;
  os << "seed=" << seed << ";m=" << m << ";n=" << n << ";mu_x=" << mu_x
     << ";mu_y=" << mu_y << ";coupling=" << coupling << ";sigma=" << sigma
     << ";outer_radius=" << outer_radius
     << ";inner_ball=" << (inner_ball ? 1 : 0)
     << ";inner_radius=" << inner_radius
     << ";inner_center_offset=" << inner_center_offset
     << ";linear_scale=" << linear_scale << ";quartic_dirs=" << quartic_dirs;
  return os.str();
}

ZooParams ZooParams::parse(const std::string& text) {
  ZooParams p;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("ZooParams::parse: malformed item '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    try {
      if (key == "seed") p.seed = std::stoull(val);
      else if (key == "m") p.m = std::stoull(val);
      else if (key == "n") p.n = std::stoull(val);
      else if (key == "mu_x") p.mu_x = std::stod(val);
      else if (key == "mu_y") p.mu_y = std::stod(val);
      else if (key == "coupling") p.coupling = std::stod(val);
      else if (key == "sigma") p.sigma = std::stod(val);
      else if (key == "outer_radius") p.outer_radius = std::stod(val);
      else if (key == "inner_ball") p.inner_ball = std::stoi(val) != 0;
      else if (key == "inner_radius") p.inner_radius = std::stod(val);
      else if (key == "inner_center_offset")
        p.inner_center_offset = std::stod(val);
      else if (key == "linear_scale") p.linear_scale = std::stod(val);
      else if (key == "quartic_dirs") p.quartic_dirs = std::stoull(val);
      else throw ConfigError("ZooParams::parse: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw ConfigError("ZooParams::parse: bad value for '" + key + "'");
    }
  }
  return p;
}

double QuadQuarticMinMin::value(const Vector& x, const Vector& y) const {
  double v = 0.5 * dot(x, A.apply(x)) + dot(b, x) + 0.5 * dot(y, B.apply(y)) +
             dot(c, y) + dot(x, C.apply(y));
  if (sigma > 0) {
    double q = 0.0;
    for (const Vector& d : quartic) {
      const double t = dot(d, y);
      q += t * t * t * t;
    }
    v += sigma / 12.0 * q;
  }
  return v;
}

Vector QuadQuarticMinMin::grad_x(const Vector& x, const Vector& y) const {
  Vector g = A.apply(x) + C.apply(y);
  g += b;
  return g;
}

Vector QuadQuarticMinMin::grad_y(const Vector& x, const Vector& y) const {
  Vector g = B.apply(y) + C.apply_transpose(x);
  g += c;
  if (sigma > 0) {
    for (const Vector& d : quartic) {
      const double t = dot(d, y);
      axpy(sigma / 3.0 * t * t * t, d, g);
    }
  }
  return g;
}

Matrix QuadQuarticMinMin::hess_yy(const Vector& y) const {
  Matrix h = B;
  if (sigma > 0) {
    const std::size_t n = dim_y();
    for (const Vector& d : quartic) {
      const double t = dot(d, y);
      const double w = sigma * t * t;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) h(i, j) += w * d[i] * d[j];
      }
    }
  }
  return h;
}

Vector QuadQuarticMinMin::third_yyy_dir(const Vector& y,
                                        const Vector& h) const {
  Vector out(dim_y());
  if (sigma > 0) {
    for (const Vector& d : quartic) {
      const double ty = dot(d, y);
      const double th = dot(d, h);
      axpy(2.0 * sigma * ty * th * th, d, out);
    }
  }
  return out;
}

Matrix QuadQuarticMinMin::joint_hessian(const Vector& y) const {
  const std::size_t m = dim_x();
  const std::size_t n = dim_y();
  Matrix h(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) h(i, j) = A(i, j);
    for (std::size_t j = 0; j < n; ++j) {
      h(i, m + j) = C(i, j);
      h(m + j, i) = C(i, j);
    }
  }
  const Matrix hyy = hess_yy(y);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(m + i, m + j) = hyy(i, j);
  }
  return h;
}

Vector QuadQuarticMinMin::joint_gradient(const Vector& x,
                                         const Vector& y) const {
  return concat(grad_x(x, y), grad_y(x, y));
}

namespace {

// Damped Newton on grad(z) + lam*(z - shift) = 0 style systems; the caller
// provides the full gradient and Hessian of the (strongly convex) merit.
Vector damped_newton(const std::function<Vector(const Vector&)>& grad,
                     const std::function<Matrix(const Vector&)>& hess,
                     Vector z, double tol, int max_iters) {
  Vector g = grad(z);
  double gn = norm(g);
  const double scale = std::max(1.0, gn);
  for (int it = 0; it < max_iters; ++it) {
    if (gn <= tol * scale || gn <= 1e-15 * scale) break;
    Matrix h = hess(z);
    Vector d;
    for (int jitter = 0;; ++jitter) {
      try {
        d = -Cholesky(h).solve(g);
        break;
      } catch (const NumericalError&) {
        if (jitter >= 3) throw;
        h.add_diagonal(1e-12 * std::max(1.0, h.max_abs()));
      }
    }
    double t = 1.0;
    Vector z_try = z + d;
    Vector g_try = grad(z_try);
    double gn_try = norm(g_try);
    while (gn_try > (1.0 - 1e-4 * t) * gn && t > 1e-14) {
      t *= 0.5;
      z_try = z + t * Vector(d);
      g_try = grad(z_try);
      gn_try = norm(g_try);
    }
    z = std::move(z_try);
    g = std::move(g_try);
    gn = gn_try;
  }
  return z;
}

// Finds lam >= 0 with ||z(lam) - center|| = radius for a distance that is
// non-increasing in lam. `solve_at` returns the stationary point for a given
// multiplier; it is expected to warm start internally.
double ball_multiplier(const std::function<Vector(double)>& solve_at,
                       const Vector& center, double radius) {
  const auto dist = [&](double lam) { return norm(solve_at(lam) - center); };
  if (dist(0.0) <= radius) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (dist(hi) > radius) {
    hi *= 4.0;
    if (++guard > 100) {
      throw NumericalError("reference_solve: ball multiplier not bracketed");
    }
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (dist(mid) > radius ? lo : hi) = mid;
  }
  return hi;
}

double projected_residual(const SimpleSet& set, const Vector& z,
                          const Vector& grad) {
  return norm(z - set.project(z - grad));
}

}  // namespace

ReferenceSolution reference_solve(const QuadQuarticMinMin& prob, double tol) {
  if (!(tol >= 1e-14)) {
    throw ContractViolation("reference_solve: tol must be >= 1e-14");
  }
  const std::size_t m = prob.dim_x();
  const std::size_t n = prob.dim_y();
  const SimpleSet& qx = prob.outer_set;
  const SimpleSet& qy = prob.inner_set;

  Vector z = concat(qx.project(Vector(m)), qy.project(Vector(n)));

  const auto grad_at = [&](const Vector& zz, double lx, double ly) {
    Vector g = prob.joint_gradient(head(zz, m), tail(zz, n));
    if (lx > 0) {
      for (std::size_t i = 0; i < m; ++i) {
        g[i] += lx * (zz[i] - qx.center()[i]);
      }
    }
    if (ly > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        g[m + i] += ly * (zz[m + i] - qy.center()[i]);
      }
    }
    return g;
  };
  const auto hess_at = [&](const Vector& zz, double lx, double ly) {
    Matrix h = prob.joint_hessian(tail(zz, n));
    for (std::size_t i = 0; i < m; ++i) h(i, i) += lx;
    for (std::size_t i = 0; i < n; ++i) h(m + i, m + i) += ly;
    return h;
  };
  const auto solve_fixed = [&](double lx, double ly) {
    z = damped_newton(
        [&](const Vector& zz) { return grad_at(zz, lx, ly); },
        [&](const Vector& zz) { return hess_at(zz, lx, ly); }, z, 0.05 * tol,
        200);
    return z;
  };

  double lam_x = 0.0, lam_y = 0.0;
  for (int round = 0; round < 50; ++round) {
    const double prev_x = lam_x, prev_y = lam_y;
    solve_fixed(lam_x, lam_y);
    if (qx.kind() == SimpleSet::Kind::EuclideanBall) {
      lam_x = ball_multiplier(
          [&](double l) { return head(solve_fixed(l, lam_y), m); },
          qx.center(), qx.radius());
    }
    if (qy.kind() == SimpleSet::Kind::EuclideanBall) {
      lam_y = ball_multiplier(
          [&](double l) { return tail(solve_fixed(lam_x, l), n); },
          qy.center(), qy.radius());
    }
    solve_fixed(lam_x, lam_y);
    const double moved = std::abs(lam_x - prev_x) / std::max(1.0, lam_x) +
                         std::abs(lam_y - prev_y) / std::max(1.0, lam_y);
    if (moved <= 1e-14) break;
  }

  ReferenceSolution out;
  out.x = head(z, m);
  out.y = tail(z, n);
  out.value = prob.value(out.x, out.y);
  out.kkt_residual = projected_residual(qx, out.x, prob.grad_x(out.x, out.y)) +
                     projected_residual(qy, out.y, prob.grad_y(out.x, out.y));
  const double scale = 1.0 + norm(prob.joint_gradient(out.x, out.y));
  if (out.kkt_residual > tol * scale) {
    throw ConvergenceError("reference_solve: KKT residual above tolerance",
                           out.kkt_residual, tol * scale, 0);
  }
  return out;
}

ReferenceSolution reference_inner_solve(const QuadQuarticMinMin& prob,
                                        const Vector& x, double tol) {
  if (!(tol >= 1e-14)) {
    throw ContractViolation("reference_inner_solve: tol must be >= 1e-14");
  }
  const std::size_t n = prob.dim_y();
  const SimpleSet& qy = prob.inner_set;
  Vector y = qy.project(Vector(n));

  const auto solve_fixed = [&](double ly) {
    y = damped_newton(
        [&](const Vector& yy) {
          Vector g = prob.grad_y(x, yy);
          if (ly > 0) {
            for (std::size_t i = 0; i < n; ++i) {
              g[i] += ly * (yy[i] - qy.center()[i]);
            }
          }
          return g;
        },
        [&](const Vector& yy) {
          Matrix h = prob.hess_yy(yy);
          h.add_diagonal(ly);
          return h;
        },
        y, 0.05 * tol, 200);
    return y;
  };

  double lam_y = 0.0;
  solve_fixed(0.0);
  if (qy.kind() == SimpleSet::Kind::EuclideanBall) {
    lam_y = ball_multiplier([&](double l) { return solve_fixed(l); },
                            qy.center(), qy.radius());
    solve_fixed(lam_y);
  }

  ReferenceSolution out;
  out.x = x;
  out.y = y;
  out.value = prob.value(x, y);
  out.kkt_residual = projected_residual(qy, y, prob.grad_y(x, y));
  const double scale = 1.0 + norm(prob.grad_y(x, y));
  if (out.kkt_residual > tol * scale) {
    throw ConvergenceError(
        "reference_inner_solve: KKT residual above tolerance",
        out.kkt_residual, tol * scale, 0);
  }
  return out;
}

InstancePtr make_instance(const ZooParams& params) {
  if (params.m < params.n || params.n < 1) {
    throw ContractViolation("make_instance: need m >= n >= 1");
  }
  if (!(params.mu_x > 0) || !(params.mu_y > 0) || params.sigma < 0) {
    throw ContractViolation("make_instance: bad curvature parameters");
  }
  auto prob = std::make_shared<QuadQuarticMinMin>();
  prob->params = params;
  prob->sigma = params.sigma;

  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t m = params.m;
  const std::size_t n = params.n;

  // Curvature blocks: shift randomized Gram matrices so that lambda_min(B)
  // and the Schur complement of the joint Hessian land on the requested
  // moduli exactly.
  Matrix a1 = random_gram(m, rng);
  a1.add_diagonal(-symmetric_eigen(a1).eigenvalues[0]);
  Matrix bm = random_gram(n, rng);
  bm.add_diagonal(params.mu_y - symmetric_eigen(bm).eigenvalues[0]);
  prob->B = bm;

  Matrix c(m, n);
  if (params.coupling > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) c(i, j) = gauss(rng);
    }
    Matrix ctc(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += c(k, i) * c(k, j);
        ctc(i, j) = s;
      }
    }
    const double smax =
        std::sqrt(std::max(0.0, symmetric_eigen(ctc).eigenvalues[n - 1]));
    if (smax > 0) c *= params.coupling / smax;
  } else {
    // keep the RNG stream identical whether or not coupling is used
    for (std::size_t i = 0; i < m * n; ++i) (void)gauss(rng);
  }
  prob->C = c;

  // Schur complement A - C B^{-1} C^T, then shift A.
  {
    const Cholesky bchol(prob->B);
    Matrix schur = a1;
    for (std::size_t i = 0; i < m; ++i) {
      Vector ci(n);
      for (std::size_t j = 0; j < n; ++j) ci[j] = c(i, j);
      const Vector bi = bchol.solve(ci);
      for (std::size_t k = i; k < m; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += c(k, j) * bi[j];
        schur(i, k) -= s;
        if (k != i) schur(k, i) = schur(i, k);
      }
    }
    const double shift = params.mu_x - symmetric_eigen(schur).eigenvalues[0];
    prob->A = a1;
    prob->A.add_diagonal(shift);
  }

  prob->b = Vector(m);
  prob->c = Vector(n);
  const double bs = params.linear_scale / std::sqrt(static_cast<double>(m));
  const double cs = params.linear_scale / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < m; ++i) prob->b[i] = bs * gauss(rng);
  for (std::size_t i = 0; i < n; ++i) prob->c[i] = cs * gauss(rng);

  const std::size_t k_dirs = std::max<std::size_t>(1, std::min(params.quartic_dirs, n));
  prob->quartic.clear();
  const double dir_scale = std::pow(static_cast<double>(k_dirs), -0.25);
  for (std::size_t j = 0; j < k_dirs; ++j) {
    Vector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = gauss(rng);
    const double dn = norm(d);
    d *= (dn > 0 ? dir_scale / dn : 0.0);
    prob->quartic.push_back(std::move(d));
  }

  prob->outer_set = SimpleSet::euclidean_ball(Vector(m), params.outer_radius);
  prob->inner_set = SimpleSet::whole_space(n);
  if (params.inner_ball) {
    // Center the inner ball near the unconstrained inner optimum at the
    // outer-set center so the feasible tube (and hence D) stays small.
    SimpleSet whole = SimpleSet::whole_space(n);
    QuadQuarticMinMin tmp = *prob;
    tmp.inner_set = whole;
    const Vector y_anchor =
        reference_inner_solve(tmp, Vector(m), 1e-12).y;
    Vector center = y_anchor;
    if (!prob->quartic.empty()) {
      Vector u = prob->quartic.front();
      const double un = norm(u);
      if (un > 0) {
        axpy(params.inner_center_offset * params.inner_radius / un, u, center);
      }
    }
    prob->inner_set = SimpleSet::euclidean_ball(center, params.inner_radius);
  }

  // Certified constants.
  const ReferenceSolution ref = reference_solve(*prob, 1e-12);
  const double x_max = params.outer_radius;  // outer ball is origin-centered
  const double y_max = params.inner_ball
                           ? norm(prob->inner_set.center()) + params.inner_radius
                           : 0.0;
  prob->cert_radius =
      std::max({10.0 * (norm(ref.x) + norm(ref.y)), x_max, y_max, 1.0});

  const double r2 = prob->cert_radius * prob->cert_radius;
  const auto eig_b = symmetric_eigen(prob->B);
  const auto eig_joint = symmetric_eigen(prob->joint_hessian(Vector(n)));
  Matrix schur_check = prob->A;  // recompute for the certified mu_x
  {
    const Cholesky bchol(prob->B);
    for (std::size_t i = 0; i < m; ++i) {
      Vector ci(n);
      for (std::size_t j = 0; j < n; ++j) ci[j] = c(i, j);
      const Vector bi = bchol.solve(ci);
      for (std::size_t k = i; k < m; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += c(k, j) * bi[j];
        schur_check(i, k) -= s;
        if (k != i) schur_check(k, i) = schur_check(i, k);
      }
    }
  }

  SmoothnessSpec sm;
  sm.mu_x = symmetric_eigen(schur_check).eigenvalues[0];
  sm.mu_y = eig_b.eigenvalues[0];
  sm.L_y = eig_b.eigenvalues[n - 1] + params.sigma * r2;
  sm.L_p_y = 2.0 * params.sigma;
  sm.L_xy = eig_joint.eigenvalues[m + n - 1] + params.sigma * r2;
  sm.p = 3;
  sm.validate();
  prob->smooth = sm;

  // Analytic upper bound on D, inflated by 2.
  const double c_norm = params.coupling;
  if (!params.inner_ball) {
    const double r = c_norm * x_max + norm(prob->c);
    prob->inner_gap_bound = r * r / sm.mu_y;  // 2 * r^2 / (2 mu_y)
  } else {
    const double diam = 2.0 * params.inner_radius;
    const double tube = c_norm / sm.mu_y * x_max +
                        params.inner_center_offset * params.inner_radius;
    const double outside = std::max(0.0, tube - params.inner_radius);
    prob->inner_gap_bound = 2.0 * diam * sm.L_y * (outside + diam);
  }

  return prob;
}

std::unique_ptr<SecondOrderOracle> make_inner_oracle(InstancePtr prob,
                                                     Vector x) {
  auto x_shared = std::make_shared<const Vector>(std::move(x));
  return std::make_unique<SecondOrderOracle>(
      [prob, x_shared](const Vector& y, Vector& grad) {
        grad = prob->grad_y(*x_shared, y);
        return prob->value(*x_shared, y);
      },
      [prob](const Vector& y) { return prob->hess_yy(y); },
      [prob](const Vector& y, const Vector& h) {
        return prob->third_yyy_dir(y, h);
      });
}

double derivative_check(const QuadQuarticMinMin& prob, const Vector& x,
                        const Vector& y, int order) {
  const std::size_t m = prob.dim_x();
  const std::size_t n = prob.dim_y();
  double worst = 0.0;
  const auto rel = [](double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
  };

  if (order == 1) {
    const double h = 1e-5;
    const Vector gx = prob.grad_x(x, y);
    const Vector gy = prob.grad_y(x, y);
    for (std::size_t i = 0; i < m; ++i) {
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      worst = std::max(
          worst, rel((prob.value(xp, y) - prob.value(xm, y)) / (2 * h), gx[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Vector yp = y, ym = y;
      yp[i] += h;
      ym[i] -= h;
      worst = std::max(
          worst, rel((prob.value(x, yp) - prob.value(x, ym)) / (2 * h), gy[i]));
    }
    return worst;
  }
  if (order == 2) {
    const double h = 1e-5;
    const Matrix hess = prob.hess_yy(y);
    for (std::size_t i = 0; i < n; ++i) {
      Vector yp = y, ym = y;
      yp[i] += h;
      ym[i] -= h;
      const Vector col =
          (1.0 / (2 * h)) * (prob.grad_y(x, yp) - prob.grad_y(x, ym));
      for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, rel(col[j], hess(j, i)));
      }
    }
    return worst;
  }
  if (order == 3) {
    const double h = 1e-5;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
      Vector dir(n);
      for (std::size_t i = 0; i < n; ++i) dir[i] = gauss(rng);
      dir *= 1.0 / std::max(norm(dir), 1e-300);
      Vector yp = y, ym = y;
      axpy(h, dir, yp);
      axpy(-h, dir, ym);
      const Matrix hp = prob.hess_yy(yp);
      const Matrix hm = prob.hess_yy(ym);
      const Vector want = prob.third_yyy_dir(y, dir);
      for (std::size_t j = 0; j < n; ++j) {
        double fd = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          fd += (hp(j, k) - hm(j, k)) / (2 * h) * dir[k];
        }
        worst = std::max(worst, rel(fd, want[j]));
      }
    }
    return worst;
  }
  throw ContractViolation("derivative_check: order must be 1, 2 or 3");
}

}  // namespace mixopt::zoo
