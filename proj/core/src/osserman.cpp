#include "acurv/osserman.hpp"

#include <algorithm>
#include <set>

#include "acurv/errors.hpp"

namespace acurv {

namespace {

void require_dim(const Matrix& m, const Metric& g, const char* what) {
  if (!m.is_square() || static_cast<int>(m.rows()) != g.dim()) {
    throw ShapeError(std::string(what) + ": expected a " + std::to_string(g.dim()) + "x" +
                     std::to_string(g.dim()) + " matrix");
  }
}

void require_dim(const Vector& x, const Metric& g, const char* what) {
  if (static_cast<int>(x.size()) != g.dim()) {
    throw ShapeError(std::string(what) + ": vector has length " + std::to_string(x.size()) +
                     ", metric dimension is " + std::to_string(g.dim()));
  }
}

// column * row^T
Matrix outer(const Vector& col, const Vector& row) {
  Matrix out(col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) out(i, j) = col[i] * row[j];
  }
  return out;
}

int sign_changes(const std::vector<Rational>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Rational point on the unit sphere of R^d.
Vector unit_point(Rng& rng, std::size_t d) {
  if (d == 1) return {Rational(rng.uniform(0, 1) == 0 ? 1 : -1)};
  Vector t(d - 1);
  Rational norm2 = 0;
  for (auto& ti : t) {
    ti = rng.rational(4, 3);
    norm2 += ti * ti;
  }
  Vector x(d);
  const Rational denom = norm2 + 1;
  for (std::size_t i = 0; i + 1 < d; ++i) x[i] = 2 * t[i] / denom;
  x[d - 1] = (norm2 - 1) / denom;
  return x;
}

}  // namespace

Metric Metric::signature(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) {
    throw DomainError("metric signature needs p, q >= 0 and p + q >= 1");
  }
  Vector d;
  for (int i = 0; i < p; ++i) d.emplace_back(1);
  for (int i = 0; i < q; ++i) d.emplace_back(-1);
  Matrix f = Matrix::diagonal(d);
  return Metric(f, f, p, q);
}

Metric Metric::from_matrix(Matrix g) {
  if (!g.is_square() || g.rows() == 0) throw ShapeError("metric matrix must be square and nonempty");
  if (!g.is_symmetric()) throw DomainError("metric matrix is not symmetric");
  auto inv = acurv::inverse(g);
  if (!inv) throw DomainError("metric matrix is singular");
  // All eigenvalues are real and nonzero, so sign changes count positive roots.
  const Polynomial chi = char_poly(g);
  const int p = sign_changes(chi.coeffs());
  const int q = static_cast<int>(g.rows()) - p;
  return Metric(std::move(g), std::move(*inv), p, q);
}

bool Metric::is_orthonormal_form() const {
  for (std::size_t i = 0; i < g_.rows(); ++i) {
    for (std::size_t j = 0; j < g_.cols(); ++j) {
      const Rational& v = g_(i, j);
      if (i == j ? (v != 1 && v != -1) : v != 0) return false;
    }
  }
  return true;
}

LinearMap Metric::raise(const Matrix& b, IndexConvention conv) const {
  require_dim(b, *this, "raise");
  // first slot: B = C^T G, so C = G^{-1} B^T. second slot: B = G C.
  return conv == IndexConvention::first_slot ? g_inv_ * b.transpose() : g_inv_ * b;
}

Matrix Metric::lower(const LinearMap& c, IndexConvention conv) const {
  require_dim(c, *this, "lower");
  return conv == IndexConvention::first_slot ? c.transpose() * g_ : g_ * c;
}

LinearMap jacobi_operator(const DenseTensor& t, const Metric& g, const Vector& x) {
  if (t.order() != 4) throw ShapeError("jacobi_operator: tensor must have order 4");
  if (t.dim() != g.dim()) throw ShapeError("jacobi_operator: tensor and metric dimensions differ");
  require_dim(x, g, "jacobi_operator");
  const int n = g.dim();
  // K(d, a) = T_abcd x^b x^c, then J = G^{-1} K.
  Matrix k(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Rational& xb = x[static_cast<std::size_t>(b)];
      if (xb == 0) continue;
      for (int c = 0; c < n; ++c) {
        const Rational& xc = x[static_cast<std::size_t>(c)];
        if (xc == 0) continue;
        const Rational w = xb * xc;
        for (int d = 0; d < n; ++d) {
          const Rational& v = t.at(a, b, c, d);
          if (v != 0) k(static_cast<std::size_t>(d), static_cast<std::size_t>(a)) += v * w;
        }
      }
    }
  }
  return g.inverse() * k;
}

LinearMap jacobi_gamma_closed(const Matrix& s, const Metric& g, const Vector& x) {
  if (!s.is_symmetric()) throw DomainError("jacobi_gamma_closed: matrix is not symmetric");
  require_dim(s, g, "jacobi_gamma_closed");
  require_dim(x, g, "jacobi_gamma_closed");
  const LinearMap c = g.raise(s);
  const Vector cx = c * x;
  // g(Cy, x) = y^T (C^T G x)
  const Vector row = c.transpose() * (g.matrix() * x);
  Matrix j = g.inner(cx, x) * c - outer(cx, row);
  j *= Rational(1, 3);
  return j;
}

LinearMap jacobi_alpha_closed(const Matrix& a, const Metric& g, const Vector& x) {
  if (!a.is_skew()) throw DomainError("jacobi_alpha_closed: matrix is not skew-symmetric");
  require_dim(a, g, "jacobi_alpha_closed");
  require_dim(x, g, "jacobi_alpha_closed");
  const LinearMap c = g.raise(a);
  const Vector cx = c * x;
  const Vector row = c.transpose() * (g.matrix() * x);
  return outer(cx, row);
}

bool clifford_check(const std::vector<LinearMap>& maps, const Metric& g, CliffordForm form) {
  const auto n = static_cast<std::size_t>(g.dim());
  const Matrix id = Matrix::identity(n);
  for (const auto& c : maps) {
    if (!c.is_square() || c.rows() != n) return false;
    if (!g.is_skew_adjoint(c)) return false;
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Matrix sq = maps[i] * maps[i];
    if (form == CliffordForm::strict) {
      if (sq != -id) return false;
    } else if (sq != id && sq != -id) {
      return false;
    }
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      if (!(maps[i] * maps[j] + maps[j] * maps[i]).is_zero()) return false;
    }
  }
  return true;
}

std::vector<LinearMap> quaternionic_triple() {
  using R = Rational;
  return {
      Matrix{{R(0), R(-1), R(0), R(0)}, {R(1), R(0), R(0), R(0)}, {R(0), R(0), R(0), R(-1)},
             {R(0), R(0), R(1), R(0)}},
      Matrix{{R(0), R(0), R(-1), R(0)}, {R(0), R(0), R(0), R(1)}, {R(1), R(0), R(0), R(0)},
             {R(0), R(-1), R(0), R(0)}},
      Matrix{{R(0), R(0), R(0), R(-1)}, {R(0), R(0), R(-1), R(0)}, {R(0), R(1), R(0), R(0)},
             {R(1), R(0), R(0), R(0)}},
  };
}

DenseTensor clifford_family(const Rational& lambda0, const std::vector<Rational>& lambdas,
                            const std::vector<LinearMap>& maps, const Metric& g) {
  if (lambdas.size() != maps.size()) {
    throw DomainError("clifford_family: " + std::to_string(lambdas.size()) + " coefficients for " +
                      std::to_string(maps.size()) + " maps");
  }
  if (!clifford_check(maps, g, CliffordForm::strict)) {
    throw DomainError(
        "clifford_family: maps must be skew-adjoint with C_i C_j + C_j C_i = -2 delta_ij Id");
  }
  DenseTensor t = Rational(3 * lambda0) * gamma(g.matrix());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (lambdas[i] == 0) continue;
    t += Rational(3 * lambdas[i]) * alpha(g.lower(maps[i]));
  }
  return t;
}

DenseTensor jordan_family(const std::vector<Rational>& cs, const Matrix& ccs,
                          const std::vector<Matrix>& as) {
  if (as.empty()) throw DomainError("jordan_family: no matrices given");
  if (cs.size() != as.size()) throw ShapeError("jordan_family: need one c_i per matrix");
  const std::size_t r = as.size();
  if (ccs.rows() != r || ccs.cols() != r) throw ShapeError("jordan_family: c_ij must be r x r");
  if (!ccs.is_symmetric()) throw DomainError("jordan_family: c_ij must be symmetric");
  const int n = static_cast<int>(as[0].rows());
  for (const auto& a : as) {
    if (!a.is_square() || static_cast<int>(a.rows()) != n) {
      throw ShapeError("jordan_family: matrices must share one square size");
    }
    if (!a.is_skew()) throw DomainError("jordan_family: matrix is not skew-symmetric");
  }
  DenseTensor t(4, n);
  for (std::size_t i = 0; i < r; ++i) {
    if (cs[i] != 0) t += cs[i] * alpha(as[i]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || ccs(i, j) == 0) continue;
      t += Rational(ccs(i, j) / 2) * alpha(as[i] + as[j]);
    }
  }
  return t;
}

Matrix nilpotent_sym_example(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("nilpotent_sym_example: negative signature entry");
  if (p == 0 || q == 0) {
    throw SignatureError(
        "nilpotent_sym_example: for a definite metric, a symmetric M with (M F)^2 = 0 "
        "must vanish, so no nonzero example exists");
  }
  const auto m = static_cast<std::size_t>(p + q);
  Matrix s(m, m);
  const auto a = static_cast<std::size_t>(p - 1), b = static_cast<std::size_t>(p);
  s(a, a) = 1;
  s(a, b) = 1;
  s(b, a) = 1;
  s(b, b) = 1;
  return s;
}

Matrix nilpotent_skew_example(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("nilpotent_skew_example: negative signature entry");
  if (p == 0 || q == 0) {
    throw SignatureError(
        "nilpotent_skew_example: for a definite metric, a skew A with (A F)^2 = 0 must "
        "vanish, so no nonzero example exists");
  }
  if (p < 2 || q < 2) {
    throw SignatureError(
        "nilpotent_skew_example: in Lorentzian signature every skew A with (A F)^2 = 0 "
        "vanishes; need p >= 2 and q >= 2");
  }
  const auto m = static_cast<std::size_t>(p + q);
  const auto P = static_cast<std::size_t>(p);
  Vector u(m), v(m);
  u[0] = 1;
  u[P] = 1;
  v[1] = 1;
  v[P + 1] = 1;
  return outer(u, v) - outer(v, u);
}

std::vector<Vector> pseudo_sphere_points(const Metric& g, int count, int sign, std::uint64_t seed) {
  if (sign != 1 && sign != -1) throw DomainError("pseudo_sphere_points: sign must be +1 or -1");
  if (!g.is_orthonormal_form()) {
    throw DomainError("pseudo_sphere_points: metric must be diagonal with entries +1 and -1");
  }
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < g.matrix().rows(); ++i) {
    (g.matrix()(i, i) == 1 ? pos : neg).push_back(i);
  }
  // The lead block carries g(x, x) = sign; the other block is the correction.
  const auto& lead = sign == 1 ? pos : neg;
  const auto& other = sign == 1 ? neg : pos;
  if (lead.empty()) {
    throw SignatureError(std::string("pseudo_sphere_points: signature (") + std::to_string(g.p()) +
                         "," + std::to_string(g.q()) + ") has no vectors with g(x,x) = " +
                         (sign == 1 ? "+1" : "-1"));
  }
  Rng rng(seed);
  std::set<Vector> seen;
  std::vector<Vector> out;
  const auto n = static_cast<std::size_t>(g.dim());
  // Bounded search; the parameter space is large, so this only guards pathologies.
  const int max_attempts = 1000 + 100 * count;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
    Vector x(n);
    const Vector u = unit_point(rng, lead.size());
    if (other.empty()) {
      for (std::size_t i = 0; i < lead.size(); ++i) x[lead[i]] = u[i];
    } else {
      // s^2 - s'^2 = 1 with s = (k^2 + 1) / 2k, s' = (k^2 - 1) / 2k.
      const Rational k = Rational(rng.uniform(1, 4), rng.uniform(1, 3));
      const Rational kk = k * k;
      const Rational s = (kk + 1) / (2 * k);
      const Rational s2 = (kk - 1) / (2 * k);
      const Vector w = unit_point(rng, other.size());
      for (std::size_t i = 0; i < lead.size(); ++i) x[lead[i]] = s * u[i];
      for (std::size_t i = 0; i < other.size(); ++i) x[other[i]] = s2 * w[i];
    }
    for (auto& xi : x) xi.canonicalize();
    if (g.inner(x, x) != sign) throw InvariantViolation("pseudo_sphere_points: g(x,x) off target");
    if (seen.insert(x).second) out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vector> probe_vectors(const Metric& g, int count, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(g.dim());
  std::vector<Vector> out;
  for (int i = 0; i < count; ++i) out.push_back(random_vector(rng, n));
  if (g.is_orthonormal_form()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g.matrix()(i, i) == 1 && g.matrix()(j, j) == -1) {
          Vector e(n);
          e[i] = 1;
          e[j] = 1;
          out.push_back(e);
        }
      }
    }
    for (int sign : {1, -1}) {
      if ((sign == 1 ? g.p() : g.q()) == 0) continue;
      auto pts = pseudo_sphere_points(g, count, sign, seed + static_cast<std::uint64_t>(sign + 2));
      out.insert(out.end(), pts.begin(), pts.end());
    }
  }
  return out;
}

SpectrumReport osserman_spectrum_sample(const DenseTensor& t, const Metric& g, int count, int sign,
                                        std::uint64_t seed) {
  if (t.order() != 4 || t.dim() != g.dim()) {
    throw ShapeError("osserman_spectrum_sample: need an order-4 tensor over the metric's space");
  }
  if (!is_algebraic_curvature(t)) {
    throw DomainError("osserman_spectrum_sample: tensor is not an algebraic curvature tensor");
  }
  SpectrumReport report;
  report.sign = sign;
  std::set<Rational> all_roots;
  for (auto& x : pseudo_sphere_points(g, count, sign, seed)) {
    SpectrumSample sample;
    sample.char_poly = char_poly(jacobi_operator(t, g, x));
    const RationalRoots rr = rational_roots(sample.char_poly);
    sample.roots = rr.roots;
    sample.rational = rr.fully_rational();
    for (const auto& [root, mult] : rr.roots) all_roots.insert(root);
    report.all_rational = report.all_rational && sample.rational;
    sample.x = std::move(x);
    report.samples.push_back(std::move(sample));
  }
  report.roots.assign(all_roots.begin(), all_roots.end());
  report.constant = true;
  for (const auto& s : report.samples) {
    if (!(s.char_poly == report.samples.front().char_poly)) report.constant = false;
  }
  if (!report.all_rational) {
    report.note = "non-rational spectrum - constancy checked at characteristic-polynomial level";
  }
  return report;
}

bool nilpotency_check(const DenseTensor& t, const Metric& g, int samples, std::uint64_t seed) {
  for (const auto& x : probe_vectors(g, samples, seed)) {
    const LinearMap j = jacobi_operator(t, g, x);
    if (!(j * j).is_zero()) return false;
  }
  return true;
}

LorentzReport lorentz_checks(int q, int trials, std::uint64_t seed) {
  if (q < 1) throw DomainError("lorentz_checks: need q >= 1");
  LorentzReport report;
  report.q = q;
  report.trials = trials;
  const Metric g = Metric::signature(1, q);
  const auto n = static_cast<std::size_t>(1 + q);
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const Matrix a = random_skew(rng, n);
    const Matrix af = a * g.matrix();
    if (!(af * af).is_zero()) ++report.skew_nonvanishing;
  }
  const DenseTensor t = gamma(nilpotent_sym_example(1, q));
  const auto probes = probe_vectors(g, std::max(trials, 1), seed + 7);
  report.jacobi_samples = static_cast<int>(probes.size());
  report.jacobi_vanishes = true;
  for (const auto& x : probes) {
    if (!jacobi_operator(t, g, x).is_zero()) report.jacobi_vanishes = false;
  }
  return report;
}

Matrix random_symmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  while (m.is_zero()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.rational(3, 3);
    }
  }
  return m;
}

Matrix random_skew(Rng& rng, std::size_t n) {
  if (n < 2) throw DomainError("random_skew: no nonzero skew matrix of size < 2");
  Matrix m(n, n);
  while (m.is_zero()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = rng.rational(3, 3);
        m(j, i) = -m(i, j);
      }
    }
  }
  return m;
}

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  bool zero = true;
  while (zero) {
    for (auto& vi : v) vi = rng.rational(4, 3);
    zero = std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
  }
  return v;
}

}  // namespace acurv
