#include "hopfbraid/rmatrix.hpp"

#include <utility>

namespace hopfbraid {

namespace {

// dense element of A (x) A (x) A, flat index (i n + j) n + k
struct Tensor3 {
  int n = 0;
  std::vector<CycloScalar> t;

  explicit Tensor3(int n_) : n(n_), t(size_t(n_) * n_ * n_) {}
  CycloScalar& at(int i, int j, int k) {
    return t[(size_t(i) * n + j) * n + k];
  }
  bool operator==(const Tensor3& o) const { return t == o.t; }
};

// (Delta (x) id)(R)
Tensor3 coproduct_on_first(const FiniteDimHopfAlgebra& A, const Mat& R) {
  Tensor3 out(A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      if (R.at(i, j).is_zero()) continue;
      for (const auto& [p, q, c] : A.comult[i])
        out.at(p, q, j) += R.at(i, j) * c;
    }
  return out;
}

// (id (x) Delta)(R)
Tensor3 coproduct_on_second(const FiniteDimHopfAlgebra& A, const Mat& R) {
  Tensor3 out(A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      if (R.at(i, j).is_zero()) continue;
      for (const auto& [p, q, c] : A.comult[j])
        out.at(i, p, q) += R.at(i, j) * c;
    }
  return out;
}

// R_13 R_23 = sum R[i][j] R[k][l]  b_i (x) b_k (x) b_j b_l
Tensor3 r13_r23(const FiniteDimHopfAlgebra& A, const Mat& R) {
  Tensor3 out(A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      if (R.at(i, j).is_zero()) continue;
      for (int k = 0; k < A.dim; ++k)
        for (int l = 0; l < A.dim; ++l) {
          if (R.at(k, l).is_zero()) continue;
          const CycloScalar c = R.at(i, j) * R.at(k, l);
          for (const auto& [r, mc] : A.mult[j][l]) out.at(i, k, r) += c * mc;
        }
    }
  return out;
}

// R_13 R_12 = sum R[i][j] R[k][l]  b_i b_k (x) b_l (x) b_j
Tensor3 r13_r12(const FiniteDimHopfAlgebra& A, const Mat& R) {
  Tensor3 out(A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      if (R.at(i, j).is_zero()) continue;
      for (int k = 0; k < A.dim; ++k)
        for (int l = 0; l < A.dim; ++l) {
          if (R.at(k, l).is_zero()) continue;
          const CycloScalar c = R.at(i, j) * R.at(k, l);
          for (const auto& [r, mc] : A.mult[i][k]) out.at(r, l, j) += c * mc;
        }
    }
  return out;
}

AlgebraElement inverse_element(const AlgebraElement& u) {
  const FiniteDimHopfAlgebra& A = *u.A;
  Mat left(A.dim, A.dim);  // multiplication by u from the left
  for (int i = 0; i < A.dim; ++i) {
    if (u.coords[i].is_zero()) continue;
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [r, c] : A.mult[i][j])
        left.at(r, j) += u.coords[i] * c;
  }
  std::vector<CycloScalar> x;
  try {
    x = solve_dense(left, A.unit);
  } catch (const singular_matrix&) {
    throw not_invertible("element " + u.str());
  } catch (const inconsistent_system&) {
    throw not_invertible("element " + u.str());
  }
  AlgebraElement inv{u.A, std::move(x)};
  if ((u * inv).coords != A.unit || (inv * u).coords != A.unit)
    throw not_invertible("element " + u.str());
  return inv;
}

Tensor2 monodromy_inverse(const RMatrix& rm) {
  // (R_21 R)^{-1} = R^{-1} (R^{-1})_21
  return rm.Rinv * rm.Rinv.flipped();
}

}  // namespace

HopfPtr cyclic_group_hopf(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    labels[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return group_algebra(table, std::move(labels));
}

RMatrix cyclic_r_matrix(int n, int d) {
  HopfPtr A = cyclic_group_hopf(n);
  std::vector<AlgebraElement> E;
  E.reserve(n);
  const Rational inv_n(1, n);
  for (int k = 0; k < n; ++k) {
    AlgebraElement e = AlgebraElement::zero(A);
    for (int i = 0; i < n; ++i)
      e.coords[i] =
          CycloScalar(inv_n) * CycloScalar::root_of_unity(n, -long(i) * k);
    E.push_back(std::move(e));
  }
  Tensor2 R = Tensor2::zero(A);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const CycloScalar c = CycloScalar::root_of_unity(n, long(d) * k * l);
      for (int i = 0; i < n; ++i) {
        if (E[k].coords[i].is_zero()) continue;
        for (int j = 0; j < n; ++j)
          R.t.at(i, j) += c * E[k].coords[i] * E[l].coords[j];
      }
    }

  // inverse candidate (S (x) id)(R), checked to be a two-sided inverse
  Tensor2 Rinv = Tensor2::zero(A);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (R.t.at(i, j).is_zero()) continue;
      for (int p = 0; p < n; ++p) {
        if (A->antipode.at(i, p).is_zero()) continue;
        Rinv.t.at(p, j) += A->antipode.at(i, p) * R.t.at(i, j);
      }
    }
  const Tensor2 unit = Tensor2::unit_tensor(A);
  if (R * Rinv != unit || Rinv * R != unit)
    throw not_invertible("cyclic R-matrix candidate n=" + std::to_string(n) +
                         ", d=" + std::to_string(d));
  return {A, std::move(R), std::move(Rinv), "R_" + std::to_string(d), n, d};
}

AxiomReport verify_quasitriangular(const RMatrix& rm) {
  const FiniteDimHopfAlgebra& A = *rm.A;
  AxiomReport rep;
  auto add = [&rep](const std::string& name, bool ok,
                    const std::string& witness) {
    rep.items.push_back({name, ok, ok ? std::string() : witness});
  };

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < A.dim && ok; ++i) {
      const Tensor2 delta = comult_element(AlgebraElement::basis(rm.A, i));
      if (delta.flipped() * rm.R != rm.R * delta) {
        ok = false;
        w = "a = " + A.basis_labels[i];
      }
    }
    add("(QT1) coproduct intertwiner", ok, w);
  }

  add("(QT2) coproduct on the first leg",
      coproduct_on_first(A, rm.R.t) == r13_r23(A, rm.R.t), "tensors differ");
  add("(QT3) coproduct on the second leg",
      coproduct_on_second(A, rm.R.t) == r13_r12(A, rm.R.t), "tensors differ");

  {
    std::vector<CycloScalar> left(A.dim), right(A.dim);
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j) {
        if (rm.R.t.at(i, j).is_zero()) continue;
        left[j] += A.counit[i] * rm.R.t.at(i, j);
        right[i] += A.counit[j] * rm.R.t.at(i, j);
      }
    add("counit legs", left == A.unit && right == A.unit,
        "(eps (x) id)(R) or (id (x) eps)(R) differs from 1");
  }

  {
    const Tensor2 unit = Tensor2::unit_tensor(rm.A);
    add("invertible", rm.R * rm.Rinv == unit && rm.Rinv * rm.R == unit,
        "stored inverse is not a two-sided inverse");
  }

  return rep;
}

AlgebraElement drinfeld_element(const RMatrix& rm) {
  const FiniteDimHopfAlgebra& A = *rm.A;
  AlgebraElement u = AlgebraElement::zero(rm.A);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      const CycloScalar& c = rm.R.t.at(i, j);
      if (c.is_zero()) continue;
      // S(b_j) b_i
      for (int p = 0; p < A.dim; ++p) {
        if (A.antipode.at(j, p).is_zero()) continue;
        const CycloScalar cp = c * A.antipode.at(j, p);
        for (const auto& [r, mc] : A.mult[p][i]) u.coords[r] += cp * mc;
      }
    }
  return u;
}

AxiomReport verify_drinfeld_properties(const RMatrix& rm) {
  const FiniteDimHopfAlgebra& A = *rm.A;
  const AlgebraElement u = drinfeld_element(rm);
  AxiomReport rep;
  auto add = [&rep](const std::string& name, bool ok,
                    const std::string& witness) {
    rep.items.push_back({name, ok, ok ? std::string() : witness});
  };

  AlgebraElement uinv = AlgebraElement::zero(rm.A);
  bool invertible = true;
  try {
    uinv = inverse_element(u);
  } catch (const not_invertible&) {
    invertible = false;
  }

  {
    bool ok = invertible;
    std::string w = "u is not invertible";
    for (int i = 0; i < A.dim && ok; ++i) {
      const AlgebraElement b = AlgebraElement::basis(rm.A, i);
      if (b.antipode().antipode() != u * b * uinv) {
        ok = false;
        w = "S^2 differs from conjugation at " + A.basis_labels[i];
      }
    }
    add("(DE1) square of the antipode", ok, w);
  }

  {
    const Tensor2 minv = monodromy_inverse(rm);
    const Tensor2 uu = Tensor2::outer(u, u);
    const Tensor2 du = comult_element(u);
    add("(DE2) coproduct of u", du == uu * minv && du == minv * uu,
        "Delta(u) differs from (u (x) u)(R_21 R)^{-1}");
  }

  add("(DE3) counit of u", u.counit() == CycloScalar(1),
      "eps(u) = " + u.counit().str());

  {
    bool ok = invertible;
    std::string w = "u is not invertible";
    if (ok) {
      AlgebraElement rhs = AlgebraElement::zero(rm.A);
      for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
          const CycloScalar& c = rm.R.t.at(i, j);
          if (c.is_zero()) continue;
          // b_j S^2(b_i)
          const AlgebraElement s2 =
              AlgebraElement::basis(rm.A, i).antipode().antipode();
          rhs = rhs + (AlgebraElement::basis(rm.A, j) * s2).scaled(c);
        }
      ok = uinv == rhs;
      w = "sum R^(2) S^2(R^(1)) differs from u^{-1}";
    }
    add("(DE4) inverse formula", ok, w);
  }

  {
    Tensor2 ss = Tensor2::zero(rm.A);
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j) {
        if (rm.R.t.at(i, j).is_zero()) continue;
        for (int p = 0; p < A.dim; ++p) {
          if (A.antipode.at(i, p).is_zero()) continue;
          const CycloScalar c = rm.R.t.at(i, j) * A.antipode.at(i, p);
          for (int q = 0; q < A.dim; ++q) {
            if (A.antipode.at(j, q).is_zero()) continue;
            ss.t.at(p, q) += c * A.antipode.at(j, q);
          }
        }
      }
    add("(S x S) invariance", ss == rm.R, "(S (x) S)(R) differs from R");
  }

  return rep;
}

AxiomReport verify_ribbon(const RMatrix& rm, const AlgebraElement& v) {
  const AlgebraElement u = drinfeld_element(rm);
  AxiomReport rep;
  auto add = [&rep](const std::string& name, bool ok,
                    const std::string& witness) {
    rep.items.push_back({name, ok, ok ? std::string() : witness});
  };
  add("(Rib0) square", v * v == u * u.antipode(),
      "v^2 differs from u S(u)");
  add("(Rib1) central", is_central(v), "v is not central");
  add("(Rib2) coproduct",
      comult_element(v) == Tensor2::outer(v, v) * monodromy_inverse(rm),
      "Delta(v) differs from (v (x) v)(R_21 R)^{-1}");
  add("(Rib3) counit", v.counit() == CycloScalar(1),
      "eps(v) = " + v.counit().str());
  add("(Rib4) antipode", v.antipode() == v, "S(v) differs from v");
  return rep;
}

std::vector<AlgebraElement> spherical_basis_grouplikes(HopfPtr A) {
  std::vector<AlgebraElement> out;
  const AlgebraElement one = AlgebraElement::unit_element(A);
  for (int i = 0; i < A->dim; ++i) {
    AlgebraElement g = AlgebraElement::basis(A, i);
    if (!is_grouplike(g) || !is_central(g)) continue;
    if (g * g != one) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<AlgebraElement> ribbon_set(const RMatrix& rm) {
  const AlgebraElement u = drinfeld_element(rm);
  std::vector<AlgebraElement> out;
  for (const AlgebraElement& g : spherical_basis_grouplikes(rm.A)) {
    AlgebraElement v = g * u;
    if (verify_ribbon(rm, v).all_ok()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hopfbraid
