#pragma once

#include <string>
#include <vector>

#include "hopfbraid/hopf_algebra.hpp"

namespace hopfbraid {

// A quasitriangular structure on a finite-dimensional Hopf algebra: an
// invertible element R of A (x) A intertwining the coproduct with its
// opposite.  The stored inverse is computed as (S (x) id)(R) and checked to
// be a two-sided inverse during construction of the cyclic family; for
// hand-built tensors use verify_quasitriangular.
struct RMatrix {
  HopfPtr A;
  Tensor2 R;
  Tensor2 Rinv;
  std::string name;
  int n = 0;  // cyclic family parameters, 0 when not applicable
  int d = 0;
};

// group Hopf algebra of the cyclic group of order n, basis 1, a, ..., a^{n-1}
HopfPtr cyclic_group_hopf(int n);

// R_d = sum_{k,l} w^{dkl} E_k (x) E_l on the cyclic group algebra, built from
// the idempotents E_k = (1/n) sum_i w^{-ik} a^i for a primitive n-th root w
RMatrix cyclic_r_matrix(int n, int d);

// Exhaustive structure-constant verification:
//   (QT1)  Delta^op(a) R = R Delta(a) for all a
//   (QT2)  (Delta (x) id)(R) = R_13 R_23
//   (QT3)  (id (x) Delta)(R) = R_13 R_12
//   (eps)  (eps (x) id)(R) = 1 = (id (x) eps)(R)
// plus two-sided invertibility of R with the stored inverse.
AxiomReport verify_quasitriangular(const RMatrix& rm);

// Drinfeld element u = sum S(R^(2)) R^(1)
AlgebraElement drinfeld_element(const RMatrix& rm);

// Properties of the Drinfeld element:
//   (DE1)  u is invertible and S^2(a) = u a u^{-1}
//   (DE2)  Delta(u) = (u (x) u)(R_21 R)^{-1} = (R_21 R)^{-1}(u (x) u)
//   (DE3)  eps(u) = 1
//   (DE4)  u^{-1} = sum R^(2) S^2(R^(1))
// together with R^{-1} = (S (x) id)(R) and R = (S (x) S)(R).
AxiomReport verify_drinfeld_properties(const RMatrix& rm);

// Ribbon axioms for an element v:
//   (Rib0)  v^2 = u S(u)      (Rib1)  v central
//   (Rib2)  Delta(v) = (v (x) v)(R_21 R)^{-1}
//   (Rib3)  eps(v) = 1        (Rib4)  S(v) = v
AxiomReport verify_ribbon(const RMatrix& rm, const AlgebraElement& v);

// Central involutive group-like elements found among the basis vectors.
// For group algebras every group-like element is a basis vector, so there
// this is the complete set of spherical elements.
std::vector<AlgebraElement> spherical_basis_grouplikes(HopfPtr A);

// All products g u over the spherical basis group-likes g that pass the
// ribbon axioms, in basis order of g (so the Drinfeld element comes first
// when it is itself a ribbon element).
std::vector<AlgebraElement> ribbon_set(const RMatrix& rm);

}  // namespace hopfbraid
