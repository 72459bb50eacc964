#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "hopfbraid/linalg.hpp"

namespace hopfbraid {

// sparse vector of basis coefficients, sorted by index
using SVec = std::vector<std::pair<int, CycloScalar>>;
// sparse coproduct terms (left index, right index, coefficient)
using SPair = std::vector<std::tuple<int, int, CycloScalar>>;

struct dimension_mismatch : std::runtime_error {
  explicit dimension_mismatch(const std::string& w)
      : std::runtime_error("dimension mismatch: " + w) {}
};

struct not_a_group : std::runtime_error {
  explicit not_a_group(const std::string& w)
      : std::runtime_error("multiplication table is not a group: " + w) {}
};

struct not_invertible : std::runtime_error {
  explicit not_invertible(const std::string& w)
      : std::runtime_error("not invertible: " + w) {}
};

SVec sparsify(const std::vector<CycloScalar>& dense);
std::vector<CycloScalar> densify(const SVec& v, int dim);

class FiniteDimHopfAlgebra;
using HopfPtr = std::shared_ptr<const FiniteDimHopfAlgebra>;

// Finite-dimensional Hopf algebra given by structure constants on a fixed
// basis: sparse multiplication and comultiplication tensors, the unit and
// counit vectors, and the antipode matrix (row i holds the coordinates of
// S(b_i)).  Instances are immutable after construction.
class FiniteDimHopfAlgebra
    : public std::enable_shared_from_this<FiniteDimHopfAlgebra> {
 public:
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<SVec>> mult;  // mult[i][j] = coords of b_i b_j
  std::vector<CycloScalar> unit;        // coords of 1
  std::vector<SPair> comult;            // comult[i] = terms of Delta(b_i)
  std::vector<CycloScalar> counit;
  Mat antipode;

  // validates all tensor shapes, throws dimension_mismatch
  static HopfPtr make(int dim, std::vector<std::string> labels,
                      std::vector<std::vector<SVec>> mult,
                      std::vector<CycloScalar> unit, std::vector<SPair> comult,
                      std::vector<CycloScalar> counit, Mat antipode);

  std::vector<CycloScalar> mul_vec(const std::vector<CycloScalar>& a,
                                   const std::vector<CycloScalar>& b) const;
  std::vector<CycloScalar> antipode_vec(const std::vector<CycloScalar>& a) const;
  CycloScalar counit_vec(const std::vector<CycloScalar>& a) const;
  // iterated coproduct terms (a, b, c, coeff) of basis element i
  std::vector<std::tuple<int, int, int, CycloScalar>> comult2(int i) const;
  int index_of_label(const std::string& label) const;  // -1 if absent
};

// element of a fixed algebra, dense coordinates
struct AlgebraElement {
  HopfPtr A;
  std::vector<CycloScalar> coords;

  static AlgebraElement zero(HopfPtr a);
  static AlgebraElement unit_element(HopfPtr a);
  static AlgebraElement basis(HopfPtr a, int i);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(const CycloScalar& c) const;
  AlgebraElement antipode() const;
  AlgebraElement pow(long k) const;  // k >= 0
  CycloScalar counit() const;
  bool operator==(const AlgebraElement& o) const { return coords == o.coords; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
  bool is_zero() const;
  std::string str() const;
};

// element of A (x) A, stored as the coefficient matrix on b_i (x) b_j
struct Tensor2 {
  HopfPtr A;
  Mat t;

  static Tensor2 zero(HopfPtr a);
  static Tensor2 unit_tensor(HopfPtr a);  // 1 (x) 1
  static Tensor2 outer(const AlgebraElement& x, const AlgebraElement& y);

  Tensor2 operator*(const Tensor2& o) const;
  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 flipped() const;  // swap tensor legs
  bool operator==(const Tensor2& o) const { return t == o.t; }
  bool operator!=(const Tensor2& o) const { return !(*this == o); }
};

Tensor2 comult_element(const AlgebraElement& x);
bool is_grouplike(const AlgebraElement& x);
bool is_central(const AlgebraElement& x);

// linear functional on a fixed algebra; these are the elements of the dual
// Hopf algebra, with convolution as the dual multiplication
struct LinearFunctional {
  HopfPtr A;
  std::vector<CycloScalar> values;  // values on the basis

  static LinearFunctional counit_functional(HopfPtr a);

  CycloScalar operator()(const AlgebraElement& x) const;
  CycloScalar on_basis(int i) const { return values[i]; }

  LinearFunctional convolve(const LinearFunctional& o) const;
  LinearFunctional convolution_inverse() const;  // throws not_invertible
  LinearFunctional operator+(const LinearFunctional& o) const;
  LinearFunctional scaled(const CycloScalar& c) const;
  bool operator==(const LinearFunctional& o) const { return values == o.values; }
  bool operator!=(const LinearFunctional& o) const { return !(*this == o); }

  bool is_algebra_map() const;   // multiplicative and unital
  bool is_central() const;       // lies in the centre of the dual algebra
};

struct AxiomReport {
  struct Item {
    std::string name;
    bool ok;
    std::string witness;  // empty when ok
  };
  std::vector<Item> items;
  bool all_ok() const;
  std::string summary() const;
};

AxiomReport verify_hopf_axioms(const FiniteDimHopfAlgebra& A);

// group algebra kG from a multiplication table (indices into the element
// list); validates the group axioms and reports a witness on failure
HopfPtr group_algebra(const std::vector<std::vector<int>>& table,
                      std::vector<std::string> labels = {});

HopfPtr dual_hopf(const FiniteDimHopfAlgebra& A);

// tensor-level equality ignoring labels
bool structurally_equal(const FiniteDimHopfAlgebra& A,
                        const FiniteDimHopfAlgebra& B);

// basis of the centre of the dual algebra, as functionals on A
std::vector<LinearFunctional> central_dual_subspace(HopfPtr A);

// filters the candidates down to the verified central involutive group-like
// functionals (the "spherical" elements of the dual)
std::vector<LinearFunctional> sph_of_dual(
    HopfPtr A, const std::vector<LinearFunctional>& candidates);

}  // namespace hopfbraid
