#pragma once

#include <string>
#include <vector>

#include "hopfbraid/suzuki.hpp"

namespace hopfbraid {

struct braiding_constraint_violated : std::runtime_error {
  explicit braiding_constraint_violated(const std::string& m)
      : std::runtime_error("braiding parameter constraint violated: " + m) {}
};

enum class BraidingFamily { sigma, tau };

// A braiding of a comatrix-generated algebra: the bilinear form's values on
// all basis pairs, together with its convolution inverse in (A (x) A)^* and
// the generator parameters it was built from.
//
// Family sigma is supported on odd-parity generator pairs,
//   sigma(x12,x12) = sigma(x21,x21) = alpha,
//   sigma(x12,x21) = sigma(x21,x12) = beta,
// and extends to a braiding iff alpha, beta != 0, (alpha beta)^N = nu and
// (alpha beta^{-1})^L = lambda.
//
// Family tau exists only for L = 2 and is supported on diagonal pairs,
//   tau(x11,x11) = tau(x22,x22) = gamma,
//   tau(x11,x22) = delta,  tau(x22,x11) = lambda delta,
// and extends to a braiding iff gamma, delta != 0, gamma^2 = delta^2 and
// gamma^{2N} = 1.
struct Braiding {
  BraidingFamily family = BraidingFamily::sigma;
  SuzukiParams params;
  CycloScalar par1;  // alpha (sigma) or gamma (tau)
  CycloScalar par2;  // beta (sigma) or delta (tau)
  HopfPtr A;
  Mat values;          // values.at(i, j) = sigma(b_i, b_j)
  Mat inverse_values;  // convolution inverse sigma^{-1}(b_i, b_j)

  CycloScalar value(const AlgebraElement& x, const AlgebraElement& y) const;
  CycloScalar inverse_value(const AlgebraElement& x,
                            const AlgebraElement& y) const;
  std::string label() const;
};

// Builds the braiding from its generator values, extending to all basis
// pairs through the comultiplication recursion; throws
// braiding_constraint_violated when the parameters do not satisfy the
// family's constraints (invalid_parameters for tau when L != 2).
Braiding make_sigma_braiding(const SuzukiAlgebra& S, const CycloScalar& alpha,
                             const CycloScalar& beta);
Braiding make_tau_braiding(const SuzukiAlgebra& S, const CycloScalar& gamma,
                           const CycloScalar& delta);

// Exhaustive structure-constant verification:
//   (B1)  sum sigma(x1,y1) x2 y2        = sum sigma(x2,y2) y1 x1
//   (B2)  sigma(xy,z)                   = sum sigma(x,z1) sigma(y,z2)
//   (B3)  sigma(x,yz)                   = sum sigma(x1,z) sigma(x2,y)
//   (B4)  sigma(1,x) = sigma(x,1) = eps(x)
// plus two-sided convolution invertibility of the value form.
AxiomReport verify_braiding(const Braiding& s);

// All braidings of the algebra in a fixed deterministic order: the sigma
// family indexed by (i < N, j < L, sign), with
//   alpha = sign * w^{L(2i + (1-nu)/2) + N(2j + (1-lambda)/2)},
//   beta  = sign * w^{L(2i + (1-nu)/2) - N(2j + (1-lambda)/2)}
// for w a fixed primitive 4NL-th root of unity, followed (when L = 2) by the
// tau family indexed by (i < 2N, sign) with gamma = w^{4i}, delta = sign gamma.
std::vector<Braiding> enumerate_braidings(const SuzukiAlgebra& S);

// Drinfeld functional of the braiding, Upsilon(a) = sum sigma(a_(2), S(a_(1))).
LinearFunctional drinfeld_functional(const Braiding& s);

// All algebra maps A -> k (the group-like functionals of the dual), in a
// fixed deterministic order.
std::vector<LinearFunctional> character_group(const SuzukiAlgebra& S);

// The central involutive characters ("spherical" functionals of the dual);
// for this family always {eps, p_{ -1 }} with p_{-1}(x_ij) = -delta_ij.
std::vector<LinearFunctional> spherical_characters(const SuzukiAlgebra& S);

// Coribbon functionals of (A, sigma): the convolutions p * Upsilon over the
// spherical characters p, each verified against the coribbon axioms.
std::vector<LinearFunctional> coribbon_set(const SuzukiAlgebra& S,
                                           const Braiding& s);

// Verification of the coribbon axioms for a functional theta:
//   (CR1)  theta is central in the dual algebra
//   (CR2)  theta(xy) = sum sigma^{-1}(x1,y1) theta(x2) theta(y2)
//                          sigma^{-1}(y3,x3)
//   (CR3)  theta(1) = 1
//   (CR4)  theta o S = theta
// plus convolution invertibility.
AxiomReport verify_coribbon(const Braiding& s, const LinearFunctional& theta);

}  // namespace hopfbraid
