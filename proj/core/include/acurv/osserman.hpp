#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acurv/curvature.hpp"
#include "acurv/polynomial.hpp"

namespace acurv {

// A linear map V -> V as a matrix acting on column vectors: (Cx)^k = C(k,i) x^i.
using LinearMap = Matrix;

// How a bilinear form B is attached to a linear map C.
enum class IndexConvention {
  first_slot,   // B(x, y) = g(Cx, y), i.e. B = C^T G
  second_slot,  // B(x, y) = g(x, Cy), i.e. B = G C
};

// Nondegenerate symmetric bilinear form of signature (p, q).
class Metric {
 public:
  // F = diag(+1 (p times), -1 (q times)).
  static Metric signature(int p, int q);
  static Metric euclidean(int m) { return signature(m, 0); }
  // Any symmetric invertible rational matrix. The signature is read off the
  // characteristic polynomial by Descartes' rule, exact because all roots of
  // a symmetric matrix are real.
  static Metric from_matrix(Matrix g);

  int dim() const { return static_cast<int>(g_.rows()); }
  int p() const { return p_; }
  int q() const { return q_; }
  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return g_inv_; }

  // Diagonal with entries +1 and -1.
  bool is_orthonormal_form() const;

  Rational inner(const Vector& x, const Vector& y) const { return bilinear(g_, x, y); }

  // Linear map C with B attached to C under `conv`.
  LinearMap raise(const Matrix& b, IndexConvention conv = IndexConvention::first_slot) const;
  Matrix lower(const LinearMap& c, IndexConvention conv = IndexConvention::first_slot) const;

  // g(Cx, y) = g(x, Cy), equivalently G C symmetric.
  bool is_self_adjoint(const LinearMap& c) const { return (g_ * c).is_symmetric(); }
  // g(Cx, y) = -g(x, Cy), equivalently G C skew.
  bool is_skew_adjoint(const LinearMap& c) const { return (g_ * c).is_skew(); }

 private:
  Metric(Matrix g, Matrix g_inv, int p, int q)
      : g_(std::move(g)), g_inv_(std::move(g_inv)), p_(p), q_(q) {}

  Matrix g_;
  Matrix g_inv_;
  int p_ = 0;
  int q_ = 0;
};

// g(J y, w) = T(y, x, x, w), i.e. J(e, a) = g^{ed} T_abcd x^b x^c. Any x is
// accepted; the unit condition matters only for spectra.
LinearMap jacobi_operator(const DenseTensor& t, const Metric& g, const Vector& x);

// J_{gamma(S)}(x) y = 1/3 (g(Cx, x) Cy - g(Cy, x) Cx), C = raise(S).
LinearMap jacobi_gamma_closed(const Matrix& s, const Metric& g, const Vector& x);

// J_{alpha(A)}(x) y = g(Cy, x) Cx, C = raise(A).
LinearMap jacobi_alpha_closed(const Matrix& a, const Metric& g, const Vector& x);

enum class CliffordForm {
  strict,       // C_i^2 = -Id
  generalized,  // C_i^2 = +Id or -Id
};

// Each C_i skew-adjoint for g, C_i C_j + C_j C_i = 0 for i != j, and squares
// as required by `form`.
bool clifford_check(const std::vector<LinearMap>& maps, const Metric& g,
                    CliffordForm form = CliffordForm::strict);

// Left multiplication by i, j, k on the quaternions H = R^4 with basis
// (1, i, j, k).
std::vector<LinearMap> quaternionic_triple();

// T = 3 l0 gamma(g) + 3 sum l_i alpha(lower(C_i)). Throws DomainError if the
// maps fail the strict Clifford relations or the counts differ.
DenseTensor clifford_family(const Rational& lambda0, const std::vector<Rational>& lambdas,
                            const std::vector<LinearMap>& maps, const Metric& g);

// T = sum c_i alpha(A_i) + 1/2 sum_{i != j} c_ij alpha(A_i + A_j), c_ij = c_ji.
DenseTensor jordan_family(const std::vector<Rational>& cs, const Matrix& ccs,
                          const std::vector<Matrix>& as);

// Nonzero symmetric S with (S F)^2 = 0 for F of signature (p, q): the block
// [[1,1],[1,1]] on coordinates p-1 and p. Throws SignatureError unless
// p, q >= 1.
Matrix nilpotent_sym_example(int p, int q);

// Nonzero skew A = u v^T - v u^T with (A F)^2 = 0, where u = e_1 + e_{p+1}
// and v = e_2 + e_{p+2} are null and orthogonal. Throws SignatureError
// unless p, q >= 2.
Matrix nilpotent_skew_example(int p, int q);

// `count` distinct rational points with g(x, x) = sign (+1 or -1), built by
// stereographic parametrization of the definite blocks. Deterministic in
// `seed`. Throws SignatureError if the pseudo-sphere is empty and
// DomainError unless g is in orthonormal form.
std::vector<Vector> pseudo_sphere_points(const Metric& g, int count, int sign, std::uint64_t seed);

// Mixed probe set: random rational vectors, null vectors e_i + e_j across
// the signature split, and pseudo-sphere points where available.
std::vector<Vector> probe_vectors(const Metric& g, int count, std::uint64_t seed);

struct SpectrumSample {
  Vector x;
  Polynomial char_poly;
  std::vector<std::pair<Rational, int>> roots;
  bool rational = true;  // whole spectrum rational
};

struct SpectrumReport {
  int sign = 1;
  std::vector<SpectrumSample> samples;
  std::vector<Rational> roots;  // distinct roots over all samples
  bool constant = false;        // identical characteristic polynomials
  bool all_rational = true;
  std::string note;
};

// Characteristic polynomials of J_T(x) at `count` points of the
// pseudo-sphere g(x, x) = sign.
SpectrumReport osserman_spectrum_sample(const DenseTensor& t, const Metric& g, int count, int sign,
                                        std::uint64_t seed = 1);

// J_T(x)^2 = 0 at every probe vector.
bool nilpotency_check(const DenseTensor& t, const Metric& g, int samples, std::uint64_t seed = 1);

struct LorentzReport {
  int q = 0;
  int trials = 0;
  int skew_nonvanishing = 0;  // random nonzero skew A with (A F)^2 != 0
  int jacobi_samples = 0;
  bool jacobi_vanishes = false;  // J_{gamma(S)}(x) = 0 for the nilpotent S

  bool ok() const { return skew_nonvanishing == trials && jacobi_vanishes; }
};

// Signature (1, q): no nonzero skew A has (A F)^2 = 0, and the Jacobi
// operator of gamma of the nilpotent symmetric example vanishes identically.
LorentzReport lorentz_checks(int q, int trials, std::uint64_t seed = 1);

// Random nonzero rational matrices, used by sampling and tests.
Matrix random_symmetric(Rng& rng, std::size_t n);
Matrix random_skew(Rng& rng, std::size_t n);
Vector random_vector(Rng& rng, std::size_t n);

}  // namespace acurv
