#pragma once

// Gibbs expectation values for the Bost–Connes dynamics in the standard
// representation on ℓ²(N): ⟨a⟩_β = ζ(β)⁻¹ Tr(π(a) e^{−βH}), where
// π(e(r)) ε_n = exp(2πi r n) ε_n and H ε_n = log(n) ε_n.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "bost/crossed_product.hpp"
#include "bost/equivariant.hpp"
#include "bost/group_ring.hpp"
#include "bost/qz.hpp"

namespace bost {

using Complex = std::complex<double>;

/// Σ_{k≥0} (k + a)^{−β} by Euler–Maclaurin summation with Bernoulli
/// corrections through B₈. Throws DomainError unless β > 1 and 0 < a <= 1.
double hurwitz_zeta(double beta, double a);
inline double riemann_zeta(double beta) { return hurwitz_zeta(beta, 1.0); }

/// Li_β(exp(2πi r)) = q^{−β} Σ_{m=1}^{q} ζ^m ζ(β, m/q) for r = p/q.
Complex polylog_at_root(double beta, const QZ& r);

/// ζ(β)⁻¹ Σ_r c_r Li_β(ζ_r).
Complex expectation(const GroupRingZ& x, double beta);
Complex expectation(const GroupRingQ& x, double beta);
/// Off-diagonal words μ̃_a x μ_b* with a ≠ b are traceless, so only the
/// (1, 1) coefficient contributes.
Complex expectation(const BCElem& u, double beta);

/// ⟨χ^Ẑ(x)⟩_β.
Complex expectation_class(const OrbitSum& x, double beta);

/// E^{p,q} ∈ Z[Q/Z], keyed by (p, q).
using HodgeTable = std::map<std::pair<int, int>, GroupRingZ>;

struct HodgeExpectation {
  /// Coefficient of u^p v^q.
  std::map<std::pair<int, int>, Complex> coefficients;

  /// The specialisation u = v = w, keyed by the power of w.
  std::map<int, Complex> weight_polynomial() const;
  Complex evaluate(Complex u, Complex v) const;
  /// W(1), which equals the expectation of Σ E^{p,q}.
  Complex at_one() const { return evaluate(1.0, 1.0); }
};

HodgeExpectation hodge_expectation(const HodgeTable& t, double beta);

/// "a+bi" with twelve digits after the decimal point in both parts; an
/// imaginary part that rounds to zero prints as "+0i".
std::string format_complex(Complex z);
std::string format_real(double x);

}  // namespace bost
