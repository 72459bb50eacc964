#pragma once

#include <string>
#include <vector>

#include "hopfbraid/hopf_algebra.hpp"
#include "hopfbraid/presentation.hpp"

namespace hopfbraid {

// Four-parameter family of 4NL-dimensional Hopf algebras generated by a
// 2x2 comatrix basis x11, x12, x21, x22 subject to
//   x22^2 = x11^2,  x21^2 = x12^2,  x_{ij} x_{lm} = 0 for i-j != l-m (mod 2),
//   x11^{2N} + nu*x12^{2N} = 1,  chi11^L = chi22^L,  chi21^L = lambda*chi12^L,
// where chi_{ij}^m is the alternating word of length m starting at x_{ij}.
struct SuzukiParams {
  int N = 1;
  int L = 2;
  int nu = +1;      // +1 or -1
  int lambda = -1;  // +1 or -1

  std::string str() const;
};

struct invalid_parameters : std::runtime_error {
  explicit invalid_parameters(const std::string& m) : std::runtime_error(m) {}
};

struct construction_failed : std::runtime_error {
  explicit construction_failed(const std::string& m) : std::runtime_error(m) {}
};

// letters of the generator alphabet
inline constexpr int LX11 = 0, LX12 = 1, LX21 = 2, LX22 = 3;

// alternating word of length m whose first letter is `first`
// (letters alternate 0 <-> 3 and 1 <-> 2)
Word alternating_word(int first, int m);

// rewriting system for the family parameters
Presentation suzuki_presentation(const SuzukiParams& p);

class SuzukiAlgebra {
 public:
  SuzukiParams params;
  HopfPtr A;

  // basis word x11^s chi22^t (family 0) or x12^s chi21^t (family 1),
  // 1 <= s <= 2N, 0 <= t <= L-1
  int even_index(int s, int t) const;
  int odd_index(int s, int t) const;

  AlgebraElement element_of_word(const Word& w) const;
  AlgebraElement element_of(const WordCombo& combo) const;
  AlgebraElement generator(int i, int j) const;  // x_ij, i,j in {1,2}

  const PresentedAlgebra& presented() const { return *presented_; }

  explicit SuzukiAlgebra(const SuzukiParams& p, bool verify_axioms = true);

 private:
  std::shared_ptr<PresentedAlgebra> presented_;
};

SuzukiAlgebra construct_suzuki(const SuzukiParams& p, bool verify_axioms = true);

// the 4N group-like elements: x11^{2s} +- x12^{2s} and
// x11^{2s+1} chi22^{L-1} +- sqrt(lambda) x12^{2s+1} chi21^{L-1}, 1 <= s <= N
std::vector<AlgebraElement> suzuki_group_likes(const SuzukiAlgebra& alg);

// A simple right comodule given by its coaction matrix: rho(v_i) =
// sum_j v_j (x) a[j][i] with every entry an element of the Hopf algebra.
struct Comodule {
  std::string label;
  std::vector<std::vector<AlgebraElement>> a;
  int dim() const { return (int)a.size(); }
  AlgebraElement character() const;  // sum of diagonal coaction entries
};

// checks Delta(a_ji) = sum_k a_jk (x) a_ki and eps(a_ji) = delta_ji
bool comodule_is_coaction(const Comodule& m, std::string* witness = nullptr);

// the 4N one-dimensional comodules (spanned by group-likes) followed by the
// N(L-1) two-dimensional ones V_{s,t}, 0 <= s <= N-1, 1 <= t <= L-1
std::vector<Comodule> suzuki_simple_comodules(const SuzukiAlgebra& alg);

struct GroupIsoReport {
  bool ok = true;
  std::string witness;
};

// For odd N with lambda = + exactly when L is odd, the algebra underlying the
// family member is isomorphic to the group algebra of
//   G = < h, t, w | t^2 = h^{2N} = 1, w^L = h^N, tw = w^{-1}t, ht=th, hw=wh >
// via h -> x11^2 - x12^2, t -> x12^N + x22^N,
// w -> x11^{2N-1}x22 - x21^{2N-1}x12.  Verifies the relations and that the
// 4NL images of group elements span.
GroupIsoReport verify_group_algebra_iso(const SuzukiAlgebra& alg);

}  // namespace hopfbraid
