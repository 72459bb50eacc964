#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopfbraid/braiding.hpp"
#include "hopfbraid/rmatrix.hpp"
#include "hopfbraid/suzuki.hpp"

namespace hopfbraid {

struct division_not_exact : std::runtime_error {
  explicit division_not_exact(const std::string& what)
      : std::runtime_error(what) {}
};

// deterministic strict total order on scalars (by conductor, then by the
// printed normal form); used to canonicalize root multisets
bool scalar_less(const CycloScalar& a, const CycloScalar& b);

// monic polynomial in one variable whose roots lie in cyclotomic fields,
// stored as the sorted multiset of its roots; the empty multiset is the
// constant polynomial 1
class InvariantPolynomial {
 public:
  InvariantPolynomial() = default;

  static InvariantPolynomial one();
  static InvariantPolynomial from_roots(std::vector<CycloScalar> roots);

  const std::vector<CycloScalar>& roots() const { return roots_; }
  int degree() const { return (int)roots_.size(); }

  // coefficients in ascending powers of x; the leading coefficient is 1
  std::vector<CycloScalar> coefficients() const;
  CycloScalar evaluated_at(const CycloScalar& x) const;

  InvariantPolynomial operator*(const InvariantPolynomial& o) const;
  // exact quotient; the divisor's roots must form a sub-multiset of ours,
  // otherwise division_not_exact is thrown
  InvariantPolynomial divided_by(const InvariantPolynomial& o) const;

  bool operator==(const InvariantPolynomial& o) const;
  bool operator!=(const InvariantPolynomial& o) const { return !(*this == o); }
  std::string str() const;

 private:
  std::vector<CycloScalar> roots_;
};

// invariant data attached to one module dimension d:
//   P       collects x - (categorical dimension / d) over the simple
//           (co)modules of dimension d,
//   Ptilde  collects x - (scalar action) over the same simples for every
//           (co)ribbon structure,
//   Q       is the exact quotient Ptilde / P.
struct PolynomialTriple {
  int d = 1;
  InvariantPolynomial P, Ptilde, Q;

  bool operator==(const PolynomialTriple& o) const;
  bool operator!=(const PolynomialTriple& o) const { return !(*this == o); }
  std::string str() const;
};

// the triples for every module dimension carrying simple objects, in
// ascending dimension order
struct BraidedSignature {
  std::vector<PolynomialTriple> entries;

  bool operator==(const BraidedSignature& o) const;
  bool operator!=(const BraidedSignature& o) const { return !(*this == o); }
  std::string str() const;
};

// groups equal signatures: each group lists indices into `sigs`, groups are
// ordered by first occurrence and indices inside a group stay in input order
std::vector<std::vector<int>> partition_by_signature(
    const std::vector<BraidedSignature>& sigs);

// ---------------------------------------------------------------------------
// module side: quasitriangular cyclic group algebras
// ---------------------------------------------------------------------------

// scalar by which v acts on the one-dimensional module where the group
// generator acts as the k-th power of a fixed primitive root of unity
CycloScalar cyclic_module_scalar(const AlgebraElement& v, int k);

// the dimension-one triple of the cyclic R-matrix: P from the ribbon-free
// categorical dimensions (the scalar action of the Drinfeld element),
// Ptilde over the full ribbon set
PolynomialTriple cyclic_polynomial_triple(const RMatrix& rm);
BraidedSignature cyclic_signature(const RMatrix& rm);

// ---------------------------------------------------------------------------
// comodule side: the comatrix family
// ---------------------------------------------------------------------------

// scalar by which a central functional acts on an absolutely simple
// comodule; verifies that the whole action matrix is that scalar times the
// identity and throws construction_failed otherwise
CycloScalar comodule_scalar(const LinearFunctional& theta, const Comodule& m);

// categorical dimension of the comodule with respect to the braiding
CycloScalar categorical_dimension(const Braiding& braiding, const Comodule& m);

// triple in comodule dimension d over the simple comodules, with Ptilde
// running over the coribbon set of the braiding
PolynomialTriple braided_polynomial_triple(const SuzukiAlgebra& alg,
                                           const Braiding& braiding, int d);
BraidedSignature braided_signature(const SuzukiAlgebra& alg,
                                   const Braiding& braiding);

// closed-form prediction of the signature triples for the enumerated
// braidings, indexed exactly as in enumerate_braidings: the two-parameter
// family takes (i, j, sign), the one-parameter family takes i only
PolynomialTriple sigma_closed_form_triple(const SuzukiParams& p, int i, int j,
                                          int sign, int d);
PolynomialTriple tau_closed_form_triple(const SuzukiParams& p, int i, int d);

}  // namespace hopfbraid
