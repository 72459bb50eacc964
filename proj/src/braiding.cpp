#include "hopfbraid/braiding.hpp"

#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace hopfbraid {

namespace {

bool letter_is_diagonal(int l) { return l == LX11 || l == LX22; }

bool word_all_diagonal(const Word& w) {
  for (int l : w)
    if (!letter_is_diagonal(l)) return false;
  return true;
}

// Evaluates a braiding form on pairs of words from its generator table,
// using the comultiplication recursion
//   sigma(x a', b)    = sum_rho sigma(x, b^rho_left) sigma(a', b^rho_right),
//   sigma(x_ij, y b') = sum_k sigma(x_ik, b') sigma(x_kj, y),
//   sigma(a, 1) = eps(a),  sigma(1, b) = eps(b).
// The first line uses that the coproduct of a parity-homogeneous word
// splits into exactly two nonzero legs, indexed by rho in {0,1}: each
// letter x_ij contributes x_ik (x) x_kj with k = i + rho mod 2.
class WordForm {
 public:
  WordForm(const CycloScalar table[4][4]) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) table_[a][b] = table[a][b];
  }

  CycloScalar value(const Word& a, const Word& b) {
    if (a.empty()) return word_all_diagonal(b) ? one() : CycloScalar();
    if (b.empty()) return word_all_diagonal(a) ? one() : CycloScalar();
    std::string k = key(a, b);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    CycloScalar acc;
    if (a.size() == 1) {
      const int i = a[0] / 2, j = a[0] % 2;
      const int y = b[0];
      const Word rest(b.begin() + 1, b.end());
      for (int kk = 0; kk < 2; ++kk) {
        const CycloScalar& right = table_[2 * kk + j][y];
        if (right.is_zero()) continue;
        CycloScalar left = value(Word{2 * i + kk}, rest);
        if (left.is_zero()) continue;
        acc = acc + left * right;
      }
    } else {
      const Word head{a[0]};
      const Word tail(a.begin() + 1, a.end());
      for (int rho = 0; rho < 2; ++rho) {
        Word left_w, right_w;
        left_w.reserve(b.size());
        right_w.reserve(b.size());
        for (int l : b) {
          const int i = l / 2, j = l % 2;
          const int kk = i ^ rho;
          left_w.push_back(2 * i + kk);
          right_w.push_back(2 * kk + j);
        }
        CycloScalar lv = value(head, left_w);
        if (lv.is_zero()) continue;
        CycloScalar rv = value(tail, right_w);
        if (rv.is_zero()) continue;
        acc = acc + lv * rv;
      }
    }
    memo_.emplace(std::move(k), acc);
    return acc;
  }

 private:
  static CycloScalar one() { return CycloScalar(1); }

  static std::string key(const Word& a, const Word& b) {
    std::string s;
    s.reserve(a.size() + b.size() + 1);
    for (int l : a) s.push_back(char('0' + l));
    s.push_back('|');
    for (int l : b) s.push_back(char('0' + l));
    return s;
  }

  CycloScalar table_[4][4];
  std::unordered_map<std::string, CycloScalar> memo_;
};

Mat values_from_table(const SuzukiAlgebra& S, const CycloScalar table[4][4]) {
  const auto& words = S.presented().basis_words();
  const int n = S.A->dim;
  WordForm form(table);
  Mat v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.at(i, j) = form.value(words[i], words[j]);
  return v;
}

// convolution inverse of a bilinear form on the tensor-square coalgebra,
// solved as a sparse linear system (at most four unknowns per equation)
Mat convolution_inverse_form(const FiniteDimHopfAlgebra& A, const Mat& v) {
  const int n = A.dim;
  std::vector<SparseRow> rows;
  std::vector<CycloScalar> rhs;
  rows.reserve(size_t(n) * n);
  rhs.reserve(size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::map<int, CycloScalar> row;
      for (const auto& [i1, i2, ci] : A.comult[i]) {
        for (const auto& [j1, j2, cj] : A.comult[j]) {
          CycloScalar c = ci * cj * v.at(i1, j1);
          if (c.is_zero()) continue;
          auto [it, fresh] = row.emplace(i2 * n + j2, c);
          if (!fresh) it->second = it->second + c;
        }
      }
      SparseRow r;
      for (auto& [col, c] : row)
        if (!c.is_zero()) r.emplace_back(col, c);
      rows.push_back(std::move(r));
      rhs.push_back(A.counit[i] * A.counit[j]);
    }
  }
  std::vector<CycloScalar> x = solve_sparse(std::move(rows), std::move(rhs),
                                            n * n);
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = x[size_t(i) * n + j];
  return inv;
}

Braiding build_braiding(const SuzukiAlgebra& S, BraidingFamily family,
                        const CycloScalar& p1, const CycloScalar& p2,
                        const CycloScalar table[4][4]) {
  Braiding s;
  s.family = family;
  s.params = S.params;
  s.par1 = p1;
  s.par2 = p2;
  s.A = S.A;
  s.values = values_from_table(S, table);
  s.inverse_values = convolution_inverse_form(*S.A, s.values);
  return s;
}

CycloScalar bilinear_eval(const Mat& v, const AlgebraElement& x,
                          const AlgebraElement& y) {
  if (x.A != y.A || v.rows() != int(x.coords.size()))
    throw dimension_mismatch("bilinear form arguments");
  CycloScalar acc;
  for (int i = 0; i < v.rows(); ++i) {
    if (x.coords[i].is_zero()) continue;
    CycloScalar row;
    for (int j = 0; j < v.cols(); ++j) {
      if (y.coords[j].is_zero()) continue;
      row = row + v.at(i, j) * y.coords[j];
    }
    acc = acc + x.coords[i] * row;
  }
  return acc;
}

// character determined by its values on the four generator letters,
// extended multiplicatively over the basis words
LinearFunctional character_from_letters(const SuzukiAlgebra& S,
                                        const CycloScalar vals[4]) {
  LinearFunctional p;
  p.A = S.A;
  p.values.resize(S.A->dim);
  const auto& words = S.presented().basis_words();
  for (int i = 0; i < S.A->dim; ++i) {
    CycloScalar acc(1);
    for (int l : words[i]) {
      acc = acc * vals[l];
      if (acc.is_zero()) break;
    }
    p.values[i] = acc;
  }
  return p;
}

}  // namespace

CycloScalar Braiding::value(const AlgebraElement& x,
                            const AlgebraElement& y) const {
  return bilinear_eval(values, x, y);
}

CycloScalar Braiding::inverse_value(const AlgebraElement& x,
                                    const AlgebraElement& y) const {
  return bilinear_eval(inverse_values, x, y);
}

std::string Braiding::label() const {
  std::ostringstream os;
  if (family == BraidingFamily::sigma)
    os << "sigma[alpha=" << par1.str() << ", beta=" << par2.str() << "]";
  else
    os << "tau[gamma=" << par1.str() << ", delta=" << par2.str() << "]";
  return os.str();
}

Braiding make_sigma_braiding(const SuzukiAlgebra& S, const CycloScalar& alpha,
                             const CycloScalar& beta) {
  if (alpha.is_zero() || beta.is_zero())
    throw braiding_constraint_violated("sigma requires alpha, beta != 0");
  const CycloScalar nu(S.params.nu), lambda(S.params.lambda);
  if ((alpha * beta).pow(S.params.N) != nu)
    throw braiding_constraint_violated("(alpha beta)^N != nu for alpha=" +
                                       alpha.str() + ", beta=" + beta.str());
  if ((alpha * beta.inverse()).pow(S.params.L) != lambda)
    throw braiding_constraint_violated(
        "(alpha beta^{-1})^L != lambda for alpha=" + alpha.str() +
        ", beta=" + beta.str());
  CycloScalar t[4][4];
  t[LX12][LX12] = alpha;
  t[LX12][LX21] = beta;
  t[LX21][LX12] = beta;
  t[LX21][LX21] = alpha;
  return build_braiding(S, BraidingFamily::sigma, alpha, beta, t);
}

Braiding make_tau_braiding(const SuzukiAlgebra& S, const CycloScalar& gamma,
                           const CycloScalar& delta) {
  if (S.params.L != 2)
    throw invalid_parameters("tau braidings require L = 2, got L = " +
                             std::to_string(S.params.L));
  if (gamma.is_zero() || delta.is_zero())
    throw braiding_constraint_violated("tau requires gamma, delta != 0");
  if (gamma * gamma != delta * delta)
    throw braiding_constraint_violated("gamma^2 != delta^2 for gamma=" +
                                       gamma.str() + ", delta=" + delta.str());
  if (gamma.pow(2 * S.params.N) != CycloScalar(1))
    throw braiding_constraint_violated("gamma^{2N} != 1 for gamma=" +
                                       gamma.str());
  const CycloScalar lambda(S.params.lambda);
  CycloScalar t[4][4];
  t[LX11][LX11] = gamma;
  t[LX11][LX22] = delta;
  t[LX22][LX11] = lambda * delta;
  t[LX22][LX22] = gamma;
  return build_braiding(S, BraidingFamily::tau, gamma, delta, t);
}

AxiomReport verify_braiding(const Braiding& s) {
  const FiniteDimHopfAlgebra& A = *s.A;
  const int n = A.dim;
  const Mat& v = s.values;
  AxiomReport rep;
  auto add = [&rep](const std::string& name, bool ok,
                    const std::string& witness) {
    rep.items.push_back({name, ok, ok ? std::string() : witness});
  };

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        std::vector<CycloScalar> lhs(n), rhs(n);
        for (const auto& [i1, i2, ci] : A.comult[i]) {
          for (const auto& [j1, j2, cj] : A.comult[j]) {
            const CycloScalar c = ci * cj;
            CycloScalar cl = c * v.at(i1, j1);
            if (!cl.is_zero())
              for (const auto& [r, mc] : A.mult[i2][j2])
                lhs[r] = lhs[r] + cl * mc;
            CycloScalar cr = c * v.at(i2, j2);
            if (!cr.is_zero())
              for (const auto& [r, mc] : A.mult[j1][i1])
                rhs[r] = rhs[r] + cr * mc;
          }
        }
        if (lhs != rhs) {
          ok = false;
          w = "x = " + A.basis_labels[i] + ", y = " + A.basis_labels[j];
        }
      }
    }
    add("(B1) braided commutativity", ok, w);
  }

  {
    bool ok2 = true, ok3 = true;
    std::string w2, w3;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (ok2) {
            CycloScalar lhs;
            for (const auto& [r, c] : A.mult[i][j]) lhs = lhs + c * v.at(r, k);
            CycloScalar rhs;
            for (const auto& [k1, k2, ck] : A.comult[k])
              rhs = rhs + ck * v.at(i, k1) * v.at(j, k2);
            if (lhs != rhs) {
              ok2 = false;
              w2 = "x = " + A.basis_labels[i] + ", y = " + A.basis_labels[j] +
                   ", z = " + A.basis_labels[k];
            }
          }
          if (ok3) {
            CycloScalar lhs;
            for (const auto& [r, c] : A.mult[j][k]) lhs = lhs + c * v.at(i, r);
            CycloScalar rhs;
            for (const auto& [i1, i2, ci] : A.comult[i])
              rhs = rhs + ci * v.at(i1, k) * v.at(i2, j);
            if (lhs != rhs) {
              ok3 = false;
              w3 = "x = " + A.basis_labels[i] + ", y = " + A.basis_labels[j] +
                   ", z = " + A.basis_labels[k];
            }
          }
        }
      }
    }
    add("(B2) product in the first argument", ok2, w2);
    add("(B3) product in the second argument", ok3, w3);
  }

  {
    bool ok = true;
    std::string w;
    for (int j = 0; j < n && ok; ++j) {
      CycloScalar left, right;
      for (int i = 0; i < n; ++i) {
        if (!A.unit[i].is_zero()) {
          left = left + A.unit[i] * v.at(i, j);
          right = right + A.unit[i] * v.at(j, i);
        }
      }
      if (left != A.counit[j] || right != A.counit[j]) {
        ok = false;
        w = "x = " + A.basis_labels[j];
      }
    }
    add("(B4) unit evaluations", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        CycloScalar left, right;
        for (const auto& [i1, i2, ci] : A.comult[i]) {
          for (const auto& [j1, j2, cj] : A.comult[j]) {
            const CycloScalar c = ci * cj;
            left = left + c * v.at(i1, j1) * s.inverse_values.at(i2, j2);
            right = right + c * s.inverse_values.at(i1, j1) * v.at(i2, j2);
          }
        }
        const CycloScalar e = A.counit[i] * A.counit[j];
        if (left != e || right != e) {
          ok = false;
          w = "x = " + A.basis_labels[i] + ", y = " + A.basis_labels[j];
        }
      }
    }
    add("convolution inverse", ok, w);
  }

  return rep;
}

std::vector<Braiding> enumerate_braidings(const SuzukiAlgebra& S) {
  const int N = S.params.N, L = S.params.L;
  const long m = 4L * N * L;
  auto root = [m](long k) {
    return CycloScalar::root_of_unity(m, ((k % m) + m) % m);
  };
  std::vector<Braiding> out;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < L; ++j) {
      const long e1 = L * (2L * i + (1 - S.params.nu) / 2);
      const long e2 = N * (2L * j + (1 - S.params.lambda) / 2);
      for (int sign : {+1, -1}) {
        CycloScalar alpha = CycloScalar(sign) * root(e1 + e2);
        CycloScalar beta = CycloScalar(sign) * root(e1 - e2);
        out.push_back(make_sigma_braiding(S, alpha, beta));
      }
    }
  }
  if (L == 2) {
    for (int i = 0; i < 2 * N; ++i) {
      CycloScalar gamma = root(4L * i);
      for (int sign : {+1, -1})
        out.push_back(make_tau_braiding(S, gamma, CycloScalar(sign) * gamma));
    }
  }
  return out;
}

LinearFunctional drinfeld_functional(const Braiding& s) {
  const FiniteDimHopfAlgebra& A = *s.A;
  LinearFunctional u;
  u.A = s.A;
  u.values.resize(A.dim);
  for (int i = 0; i < A.dim; ++i) {
    CycloScalar acc;
    for (const auto& [j, k, c] : A.comult[i]) {
      CycloScalar inner;
      for (int l = 0; l < A.dim; ++l) {
        if (A.antipode.at(j, l).is_zero()) continue;
        inner = inner + A.antipode.at(j, l) * s.values.at(k, l);
      }
      acc = acc + c * inner;
    }
    u.values[i] = acc;
  }
  return u;
}

std::vector<LinearFunctional> character_group(const SuzukiAlgebra& S) {
  const int N = S.params.N;
  const CycloScalar lambda(S.params.lambda);
  std::vector<LinearFunctional> out;
  auto push_if_character = [&](const CycloScalar vals[4]) {
    LinearFunctional p = character_from_letters(S, vals);
    if (!p.is_algebra_map()) return;
    for (const auto& q : out)
      if (q == p) return;
    out.push_back(std::move(p));
  };
  // diagonally supported candidates: x11 -> omega, x22 -> +/- omega
  for (int k = 0; k < 2 * N; ++k) {
    const CycloScalar omega = CycloScalar::root_of_unity(2 * N, k);
    for (int sign : {+1, -1}) {
      CycloScalar vals[4] = {omega, CycloScalar(), CycloScalar(),
                             CycloScalar(sign) * omega};
      push_if_character(vals);
    }
  }
  // antidiagonally supported candidates: x12 -> eta with eta^{2N} = nu,
  // x21 -> +/- lambda eta
  for (int k = 0; k < 2 * N; ++k) {
    const CycloScalar eta =
        CycloScalar::root_of_unity(4 * N, 2L * k + (1 - S.params.nu) / 2);
    for (int sign : {+1, -1}) {
      CycloScalar vals[4] = {CycloScalar(), eta,
                             CycloScalar(sign) * lambda * eta, CycloScalar()};
      push_if_character(vals);
    }
  }
  return out;
}

std::vector<LinearFunctional> spherical_characters(const SuzukiAlgebra& S) {
  return sph_of_dual(S.A, character_group(S));
}

std::vector<LinearFunctional> coribbon_set(const SuzukiAlgebra& S,
                                           const Braiding& s) {
  const LinearFunctional upsilon = drinfeld_functional(s);
  std::vector<LinearFunctional> out;
  for (const LinearFunctional& p : spherical_characters(S)) {
    LinearFunctional theta = p.convolve(upsilon);
    AxiomReport rep = verify_coribbon(s, theta);
    if (!rep.all_ok())
      throw construction_failed("coribbon candidate failed for " + s.label() +
                                ": " + rep.summary());
    out.push_back(std::move(theta));
  }
  return out;
}

AxiomReport verify_coribbon(const Braiding& s, const LinearFunctional& theta) {
  const FiniteDimHopfAlgebra& A = *s.A;
  const int n = A.dim;
  AxiomReport rep;
  auto add = [&rep](const std::string& name, bool ok,
                    const std::string& witness) {
    rep.items.push_back({name, ok, ok ? std::string() : witness});
  };

  add("(CR1) central", theta.is_central(), "not central in the dual");

  {
    bool ok = true;
    std::string w;
    std::vector<std::vector<std::tuple<int, int, int, CycloScalar>>> t2(n);
    for (int i = 0; i < n; ++i) t2[i] = A.comult2(i);
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        CycloScalar lhs;
        for (const auto& [r, c] : A.mult[i][j]) lhs = lhs + c * theta.values[r];
        CycloScalar rhs;
        for (const auto& [x1, x2, x3, ci] : t2[i]) {
          for (const auto& [y1, y2, y3, cj] : t2[j]) {
            CycloScalar c = ci * cj * s.inverse_values.at(x1, y1);
            if (c.is_zero()) continue;
            c = c * theta.values[x2] * theta.values[y2];
            if (c.is_zero()) continue;
            rhs = rhs + c * s.inverse_values.at(y3, x3);
          }
        }
        if (lhs != rhs) {
          ok = false;
          w = "x = " + A.basis_labels[i] + ", y = " + A.basis_labels[j];
        }
      }
    }
    add("(CR2) twisted multiplicativity", ok, w);
  }

  {
    CycloScalar at_unit;
    for (int i = 0; i < n; ++i)
      at_unit = at_unit + A.unit[i] * theta.values[i];
    add("(CR3) value 1 at the unit", at_unit == CycloScalar(1),
        "theta(1) = " + at_unit.str());
  }

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      CycloScalar v;
      for (int l = 0; l < n; ++l) {
        if (A.antipode.at(i, l).is_zero()) continue;
        v = v + A.antipode.at(i, l) * theta.values[l];
      }
      if (v != theta.values[i]) {
        ok = false;
        w = "x = " + A.basis_labels[i];
      }
    }
    add("(CR4) antipode invariance", ok, w);
  }

  {
    bool ok = true;
    try {
      (void)theta.convolution_inverse();
    } catch (const not_invertible&) {
      ok = false;
    }
    add("convolution invertible", ok, "no convolution inverse");
  }

  return rep;
}

}  // namespace hopfbraid
