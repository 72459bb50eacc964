#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopfbraid/braiding.hpp"
#include "hopfbraid/invariants.hpp"

namespace hopfbraid {

struct automorphism_check_failed : std::runtime_error {
  explicit automorphism_check_failed(const std::string& w)
      : std::runtime_error("automorphism check failed: " + w) {}
};

struct iso_check_failed : std::runtime_error {
  explicit iso_check_failed(const std::string& w)
      : std::runtime_error("isomorphism check failed: " + w) {}
};

struct classification_mismatch : std::runtime_error {
  explicit classification_mismatch(const std::string& w)
      : std::runtime_error("classification mismatch: " + w) {}
};

// linear map between two Hopf algebras; row i of the matrix holds the
// coordinates of the image of the i-th source basis vector
struct HopfMorphism {
  HopfPtr source;
  HopfPtr target;
  Mat matrix;
  std::string name;

  AlgebraElement apply(const AlgebraElement& x) const;
  HopfMorphism then(const HopfMorphism& next) const;  // left-to-right composite
  bool operator==(const HopfMorphism& o) const;
  bool operator!=(const HopfMorphism& o) const { return !(*this == o); }
};

// exact checks: unit, multiplicativity (exhaustive on basis pairs),
// comultiplication and counit compatibility, antipode compatibility,
// bijectivity
AxiomReport verify_hopf_morphism(const HopfMorphism& f);

// the eight-dimensional member of the comatrix family, parameters
// (N, L, nu, lambda) = (1, 2, +, -)
SuzukiAlgebra h8();

// the dihedral group algebra of order eight carrying the non-cocommutative
// coproduct induced through the comatrix presentation; basis w^i t^k at
// index i + 4k with
//   Delta(w) = w (x) e0 w + w^{-1} (x) e1 w,
//   Delta(t) = w^{-1} t (x) e1 t + t (x) e0 t,
//   e0 = (1 + w^2)/2,  e1 = (1 - w^2)/2,
//   S(w) = w,  S(t) = (e0 - e1 w) t,  eps = 1 on the group basis.
HopfPtr twisted_dihedral_hopf();

// the isomorphism from the twisted dihedral algebra onto the
// eight-dimensional comatrix algebra: phi(t) = x12 + x22,
// phi(w) = x11 x22 - x21 x12
HopfMorphism kac_paljutkin_iso(const SuzukiAlgebra& S);

// full report: generator relations, Hopf-morphism checks, centrality and
// orthogonality of the idempotents, and the displayed inverse images;
// throws iso_check_failed if any item fails
AxiomReport kac_paljutkin_iso_check();

// the four Hopf automorphisms {id, f+, f-, f+-}; verifies every morphism
// invariant and the Klein four-group composition table, throwing
// automorphism_check_failed otherwise
std::vector<HopfMorphism> h8_automorphisms(const SuzukiAlgebra& S);

// braiding transported along an automorphism of its algebra:
// sigma'(b_i, b_j) = sigma(f(b_i), f(b_j)); the result is re-verified
Braiding transport_braiding(const SuzukiAlgebra& alg, const Braiding& s,
                            const HopfMorphism& f);

// a verified Hopf algebra isomorphism from the eight-dimensional comatrix
// algebra onto its dual, found among the nondegenerate braiding pairings
HopfMorphism h8_self_duality();

struct BraidedClass {
  std::vector<int> members;  // indices into the enumeration order
  BraidedSignature signature;
  std::vector<std::string> transport_witnesses;  // one per merged member
};

struct H8Classification {
  std::vector<Braiding> braidings;
  std::vector<BraidedClass> classes;
};

// partitions the eight braidings by signature, verifies every multi-member
// class is connected by automorphism transports, and checks the resulting
// shape (four two-parameter singletons, two one-parameter pairs); throws
// classification_mismatch on any disagreement
H8Classification classify_h8();

}  // namespace hopfbraid
