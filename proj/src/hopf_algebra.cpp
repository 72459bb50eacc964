#include "hopfbraid/hopf_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopfbraid {

SVec sparsify(const std::vector<CycloScalar>& dense) {
  SVec v;
  for (size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.emplace_back((int)i, dense[i]);
  return v;
}

std::vector<CycloScalar> densify(const SVec& v, int dim) {
  std::vector<CycloScalar> d(dim);
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

HopfPtr FiniteDimHopfAlgebra::make(int dim, std::vector<std::string> labels,
                                   std::vector<std::vector<SVec>> mult,
                                   std::vector<CycloScalar> unit,
                                   std::vector<SPair> comult,
                                   std::vector<CycloScalar> counit,
                                   Mat antipode) {
  auto A = std::make_shared<FiniteDimHopfAlgebra>();
  A->dim = dim;
  if ((int)labels.size() != dim) throw dimension_mismatch("basis label count");
  if ((int)mult.size() != dim) throw dimension_mismatch("mult tensor rows");
  for (const auto& row : mult) {
    if ((int)row.size() != dim) throw dimension_mismatch("mult tensor cols");
    for (const auto& v : row)
      for (const auto& [k, c] : v) {
        (void)c;
        if (k < 0 || k >= dim) throw dimension_mismatch("mult tensor index");
      }
  }
  if ((int)unit.size() != dim) throw dimension_mismatch("unit vector length");
  if ((int)comult.size() != dim) throw dimension_mismatch("comult tensor rows");
  for (const auto& terms : comult)
    for (const auto& [j, k, c] : terms) {
      (void)c;
      if (j < 0 || j >= dim || k < 0 || k >= dim)
        throw dimension_mismatch("comult tensor index");
    }
  if ((int)counit.size() != dim) throw dimension_mismatch("counit vector length");
  if (antipode.rows() != dim || antipode.cols() != dim)
    throw dimension_mismatch("antipode matrix shape");
  A->basis_labels = std::move(labels);
  A->mult = std::move(mult);
  A->unit = std::move(unit);
  A->comult = std::move(comult);
  A->counit = std::move(counit);
  A->antipode = std::move(antipode);
  return A;
}

std::vector<CycloScalar> FiniteDimHopfAlgebra::mul_vec(
    const std::vector<CycloScalar>& a, const std::vector<CycloScalar>& b) const {
  std::vector<CycloScalar> r(dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      CycloScalar c = a[i] * b[j];
      for (const auto& [k, m] : mult[i][j]) r[k] += c * m;
    }
  }
  return r;
}

std::vector<CycloScalar> FiniteDimHopfAlgebra::antipode_vec(
    const std::vector<CycloScalar>& a) const {
  return antipode.apply_left(a);
}

CycloScalar FiniteDimHopfAlgebra::counit_vec(
    const std::vector<CycloScalar>& a) const {
  CycloScalar r;
  for (int i = 0; i < dim; ++i)
    if (!a[i].is_zero()) r += a[i] * counit[i];
  return r;
}

std::vector<std::tuple<int, int, int, CycloScalar>>
FiniteDimHopfAlgebra::comult2(int i) const {
  std::vector<std::tuple<int, int, int, CycloScalar>> out;
  for (const auto& [j, k, c] : comult[i])
    for (const auto& [a, b, c2] : comult[j]) out.emplace_back(a, b, k, c * c2);
  return out;
}

int FiniteDimHopfAlgebra::index_of_label(const std::string& label) const {
  for (int i = 0; i < dim; ++i)
    if (basis_labels[i] == label) return i;
  return -1;
}

AlgebraElement AlgebraElement::zero(HopfPtr a) {
  return {a, std::vector<CycloScalar>(a->dim)};
}

AlgebraElement AlgebraElement::unit_element(HopfPtr a) {
  return {a, a->unit};
}

AlgebraElement AlgebraElement::basis(HopfPtr a, int i) {
  std::vector<CycloScalar> c(a->dim);
  c.at(i) = CycloScalar(1);
  return {a, std::move(c)};
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r(*this);
  for (int i = 0; i < A->dim; ++i) r.coords[i] += o.coords[i];
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r(*this);
  for (int i = 0; i < A->dim; ++i) r.coords[i] -= o.coords[i];
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  return {A, A->mul_vec(coords, o.coords)};
}

AlgebraElement AlgebraElement::scaled(const CycloScalar& c) const {
  AlgebraElement r(*this);
  for (auto& v : r.coords) v *= c;
  return r;
}

AlgebraElement AlgebraElement::antipode() const {
  return {A, A->antipode_vec(coords)};
}

AlgebraElement AlgebraElement::pow(long k) const {
  AlgebraElement acc = unit_element(A), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

CycloScalar AlgebraElement::counit() const { return A->counit_vec(coords); }

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

std::string AlgebraElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < A->dim; ++i) {
    if (coords[i].is_zero()) continue;
    std::string c = coords[i].str();
    if (!first) out << " + ";
    if (c == "1")
      out << A->basis_labels[i];
    else if (c == "-1")
      out << "-" << A->basis_labels[i];
    else
      out << "(" << c << ")*" << A->basis_labels[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Tensor2 Tensor2::zero(HopfPtr a) { return {a, Mat(a->dim, a->dim)}; }

Tensor2 Tensor2::unit_tensor(HopfPtr a) {
  return outer(AlgebraElement::unit_element(a), AlgebraElement::unit_element(a));
}

Tensor2 Tensor2::outer(const AlgebraElement& x, const AlgebraElement& y) {
  Tensor2 r = zero(x.A);
  for (int i = 0; i < x.A->dim; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (int j = 0; j < x.A->dim; ++j) {
      if (y.coords[j].is_zero()) continue;
      r.t.at(i, j) = x.coords[i] * y.coords[j];
    }
  }
  return r;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
  const auto& alg = *A;
  Tensor2 r = zero(A);
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) {
      if (t.at(i, j).is_zero()) continue;
      for (int k = 0; k < alg.dim; ++k)
        for (int l = 0; l < alg.dim; ++l) {
          if (o.t.at(k, l).is_zero()) continue;
          CycloScalar c = t.at(i, j) * o.t.at(k, l);
          for (const auto& [p, cp] : alg.mult[i][k])
            for (const auto& [q, cq] : alg.mult[j][l])
              r.t.at(p, q) += c * cp * cq;
        }
    }
  return r;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const { return {A, t + o.t}; }
Tensor2 Tensor2::operator-(const Tensor2& o) const { return {A, t - o.t}; }
Tensor2 Tensor2::flipped() const { return {A, t.transposed()}; }

Tensor2 comult_element(const AlgebraElement& x) {
  Tensor2 r = Tensor2::zero(x.A);
  for (int i = 0; i < x.A->dim; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (const auto& [j, k, c] : x.A->comult[i]) r.t.at(j, k) += x.coords[i] * c;
  }
  return r;
}

bool is_grouplike(const AlgebraElement& x) {
  return x.counit() == CycloScalar(1) &&
         comult_element(x) == Tensor2::outer(x, x);
}

bool is_central(const AlgebraElement& x) {
  for (int i = 0; i < x.A->dim; ++i) {
    AlgebraElement b = AlgebraElement::basis(x.A, i);
    if (!(x * b == b * x)) return false;
  }
  return true;
}

LinearFunctional LinearFunctional::counit_functional(HopfPtr a) {
  return {a, a->counit};
}

CycloScalar LinearFunctional::operator()(const AlgebraElement& x) const {
  CycloScalar r;
  for (int i = 0; i < A->dim; ++i)
    if (!x.coords[i].is_zero()) r += x.coords[i] * values[i];
  return r;
}

LinearFunctional LinearFunctional::convolve(const LinearFunctional& o) const {
  std::vector<CycloScalar> out(A->dim);
  for (int i = 0; i < A->dim; ++i)
    for (const auto& [j, k, c] : A->comult[i]) out[i] += c * values[j] * o.values[k];
  return {A, std::move(out)};
}

LinearFunctional LinearFunctional::convolution_inverse() const {
  // (p * q)(b_i) = sum c p(b_j) q(b_k) over Delta(b_i) = eps(b_i)
  Mat m(A->dim, A->dim);
  for (int i = 0; i < A->dim; ++i)
    for (const auto& [j, k, c] : A->comult[i]) m.at(i, k) += c * values[j];
  try {
    return {A, solve_dense(std::move(m), A->counit)};
  } catch (const std::runtime_error&) {
    throw not_invertible("functional has no convolution inverse");
  }
}

LinearFunctional LinearFunctional::operator+(const LinearFunctional& o) const {
  LinearFunctional r(*this);
  for (int i = 0; i < A->dim; ++i) r.values[i] += o.values[i];
  return r;
}

LinearFunctional LinearFunctional::scaled(const CycloScalar& c) const {
  LinearFunctional r(*this);
  for (auto& v : r.values) v *= c;
  return r;
}

bool LinearFunctional::is_algebra_map() const {
  AlgebraElement one = AlgebraElement::unit_element(A);
  if ((*this)(one) != CycloScalar(1)) return false;
  for (int i = 0; i < A->dim; ++i)
    for (int j = 0; j < A->dim; ++j) {
      CycloScalar lhs;
      for (const auto& [k, c] : A->mult[i][j]) lhs += c * values[k];
      if (lhs != values[i] * values[j]) return false;
    }
  return true;
}

bool LinearFunctional::is_central() const {
  // p central in the dual iff sum p(b_i1) b_i2 = sum p(b_i2) b_i1 for all i
  for (int i = 0; i < A->dim; ++i) {
    std::vector<CycloScalar> lhs(A->dim), rhs(A->dim);
    for (const auto& [j, k, c] : A->comult[i]) {
      lhs[k] += c * values[j];
      rhs[j] += c * values[k];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool AxiomReport::all_ok() const {
  for (const auto& it : items)
    if (!it.ok) return false;
  return true;
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  for (const auto& it : items) {
    out << (it.ok ? "ok   " : "FAIL ") << it.name;
    if (!it.ok && !it.witness.empty()) out << "  [" << it.witness << "]";
    out << "\n";
  }
  return out.str();
}

namespace {

std::string triple_witness(const FiniteDimHopfAlgebra& A, int i, int j, int k) {
  std::ostringstream o;
  o << "(" << A.basis_labels[i] << ", " << A.basis_labels[j] << ", "
    << A.basis_labels[k] << ")";
  return o.str();
}

}  // namespace

AxiomReport verify_hopf_axioms(const FiniteDimHopfAlgebra& A) {
  AxiomReport rep;
  auto push = [&](const std::string& name, bool ok, const std::string& w) {
    rep.items.push_back({name, ok, ok ? "" : w});
  };
  const int n = A.dim;
  auto self = A.shared_from_this();

  {  // associativity
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
          std::vector<CycloScalar> lhs(n), rhs(n);
          for (const auto& [p, c] : A.mult[i][j])
            for (const auto& [q, c2] : A.mult[p][k]) lhs[q] += c * c2;
          for (const auto& [p, c] : A.mult[j][k])
            for (const auto& [q, c2] : A.mult[i][p]) rhs[q] += c * c2;
          if (lhs != rhs) {
            ok = false;
            w = "associativity fails at " + triple_witness(A, i, j, k);
          }
        }
    push("associativity", ok, w);
  }
  {  // unit
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<CycloScalar> e(n);
      e[i] = CycloScalar(1);
      if (A.mul_vec(A.unit, e) != e || A.mul_vec(e, A.unit) != e) {
        ok = false;
        w = "unit fails at " + A.basis_labels[i];
      }
    }
    push("unit", ok, w);
  }
  {  // coassociativity
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      std::map<std::tuple<int, int, int>, CycloScalar> lhs, rhs;
      for (const auto& [j, k, c] : A.comult[i])
        for (const auto& [a, b, c2] : A.comult[j]) lhs[{a, b, k}] += c * c2;
      for (const auto& [j, k, c] : A.comult[i])
        for (const auto& [a, b, c2] : A.comult[k]) rhs[{j, a, b}] += c * c2;
      for (auto& [key, v] : lhs) {
        auto it = rhs.find(key);
        CycloScalar other = (it == rhs.end()) ? CycloScalar(0) : it->second;
        if (v != other) {
          ok = false;
          w = "coassociativity fails at " + A.basis_labels[i];
          break;
        }
      }
      if (ok)
        for (auto& [key, v] : rhs) {
          if (lhs.find(key) == lhs.end() && !v.is_zero()) {
            ok = false;
            w = "coassociativity fails at " + A.basis_labels[i];
            break;
          }
        }
    }
    push("coassociativity", ok, w);
  }
  {  // counit
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<CycloScalar> left(n), right(n), e(n);
      e[i] = CycloScalar(1);
      for (const auto& [j, k, c] : A.comult[i]) {
        left[k] += c * A.counit[j];
        right[j] += c * A.counit[k];
      }
      if (left != e || right != e) {
        ok = false;
        w = "counit fails at " + A.basis_labels[i];
      }
    }
    push("counit", ok, w);
  }
  {  // comultiplication is an algebra map
    bool ok = true;
    std::string w;
    AlgebraElement one = AlgebraElement::unit_element(self);
    if (comult_element(one) != Tensor2::unit_tensor(self)) {
      ok = false;
      w = "Delta(1) != 1 (x) 1";
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        AlgebraElement bi = AlgebraElement::basis(self, i),
                       bj = AlgebraElement::basis(self, j);
        Tensor2 lhs = comult_element(bi * bj);
        Tensor2 rhs = comult_element(bi) * comult_element(bj);
        if (lhs != rhs) {
          ok = false;
          w = "Delta not multiplicative at (" + A.basis_labels[i] + ", " +
              A.basis_labels[j] + ")";
        }
      }
    push("comult_algebra_map", ok, w);
  }
  {  // counit is an algebra map
    bool ok = true;
    std::string w;
    if (A.counit_vec(A.unit) != CycloScalar(1)) {
      ok = false;
      w = "eps(1) != 1";
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        CycloScalar lhs;
        for (const auto& [k, c] : A.mult[i][j]) lhs += c * A.counit[k];
        if (lhs != A.counit[i] * A.counit[j]) {
          ok = false;
          w = "eps not multiplicative at (" + A.basis_labels[i] + ", " +
              A.basis_labels[j] + ")";
        }
      }
    push("counit_algebra_map", ok, w);
  }
  {  // antipode axiom, both sides
    bool okl = true, okr = true;
    std::string wl, wr;
    for (int i = 0; i < n; ++i) {
      std::vector<CycloScalar> left(n), right(n);
      for (const auto& [j, k, c] : A.comult[i]) {
        // S(b_j) b_k and b_j S(b_k)
        for (int l = 0; l < n; ++l) {
          if (!A.antipode.at(j, l).is_zero()) {
            CycloScalar cl = c * A.antipode.at(j, l);
            for (const auto& [q, cq] : A.mult[l][k]) left[q] += cl * cq;
          }
          if (!A.antipode.at(k, l).is_zero()) {
            CycloScalar cr = c * A.antipode.at(k, l);
            for (const auto& [q, cq] : A.mult[j][l]) right[q] += cr * cq;
          }
        }
      }
      std::vector<CycloScalar> want(n);
      for (int q = 0; q < n; ++q) want[q] = A.counit[i] * A.unit[q];
      if (okl && left != want) {
        okl = false;
        wl = "left antipode fails at " + A.basis_labels[i];
      }
      if (okr && right != want) {
        okr = false;
        wr = "right antipode fails at " + A.basis_labels[i];
      }
    }
    push("antipode_left", okl, wl);
    push("antipode_right", okr, wr);
  }
  return rep;
}

HopfPtr group_algebra(const std::vector<std::vector<int>>& table,
                      std::vector<std::string> labels) {
  const int n = (int)table.size();
  if (n == 0) throw not_a_group("empty table");
  for (const auto& row : table) {
    if ((int)row.size() != n) throw not_a_group("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw not_a_group("table entry out of range");
  }
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = (table[cand][x] == x && table[x][cand] == x);
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw not_a_group("no identity element");
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == e && table[y][x] == e) {
        inv[x] = y;
        break;
      }
    if (inv[x] < 0)
      throw not_a_group("element " + std::to_string(x) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw not_a_group("associativity fails at (" + std::to_string(a) +
                            ", " + std::to_string(b) + ", " + std::to_string(c) +
                            ")");
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  std::vector<std::vector<SVec>> mult(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[i][j] = {{table[i][j], CycloScalar(1)}};
  std::vector<CycloScalar> unit(n), counit(n, CycloScalar(1));
  unit[e] = CycloScalar(1);
  std::vector<SPair> comult(n);
  for (int i = 0; i < n; ++i) comult[i] = {{i, i, CycloScalar(1)}};
  Mat S(n, n);
  for (int i = 0; i < n; ++i) S.at(i, inv[i]) = CycloScalar(1);
  return FiniteDimHopfAlgebra::make(n, std::move(labels), std::move(mult),
                                    std::move(unit), std::move(comult),
                                    std::move(counit), std::move(S));
}

HopfPtr dual_hopf(const FiniteDimHopfAlgebra& A) {
  const int n = A.dim;
  // dual multiplication from the coproduct: (fg)(b_k) = sum f(b_k1) g(b_k2)
  std::vector<std::vector<SVec>> mult(n, std::vector<SVec>(n));
  for (int k = 0; k < n; ++k)
    for (const auto& [i, j, c] : A.comult[k]) {
      SVec& row = mult[i][j];
      bool found = false;
      for (auto& [idx, v] : row)
        if (idx == k) {
          v += c;
          found = true;
          break;
        }
      if (!found) row.emplace_back(k, c);
    }
  for (auto& row : mult)
    for (auto& v : row) {
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      v.erase(std::remove_if(v.begin(), v.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              v.end());
    }
  // dual comultiplication from the product: Delta(b^i) pairs with mult
  std::vector<SPair> comult(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (const auto& [i, c] : A.mult[j][k]) comult[i].emplace_back(j, k, c);
  std::vector<std::string> labels;
  for (const auto& l : A.basis_labels) labels.push_back(l + "*");
  return FiniteDimHopfAlgebra::make(n, std::move(labels), std::move(mult),
                                    A.counit, std::move(comult), A.unit,
                                    A.antipode.transposed());
}

bool structurally_equal(const FiniteDimHopfAlgebra& A,
                        const FiniteDimHopfAlgebra& B) {
  if (A.dim != B.dim) return false;
  auto norm = [](SVec v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (norm(A.mult[i][j]) != norm(B.mult[i][j])) return false;
  auto norm2 = [](SPair v) {
    std::map<std::pair<int, int>, CycloScalar> m;
    for (const auto& [a, b, c] : v) m[{a, b}] += c;
    SPair out;
    for (const auto& [k, c] : m)
      if (!c.is_zero()) out.emplace_back(k.first, k.second, c);
    return out;
  };
  for (int i = 0; i < A.dim; ++i)
    if (norm2(A.comult[i]) != norm2(B.comult[i])) return false;
  return A.unit == B.unit && A.counit == B.counit && A.antipode == B.antipode;
}

std::vector<LinearFunctional> central_dual_subspace(HopfPtr A) {
  const int n = A->dim;
  // unknown p in k^n; for each basis i the vector identity
  // sum c p(b_j) b_k = sum c p(b_k) b_j gives n scalar equations
  Mat sys(n * n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, k, c] : A->comult[i]) {
      // contribution to output slot k with weight p_j, minus slot j with p_k
      sys.at(i * n + k, j) += c;
      sys.at(i * n + j, k) -= c;
    }
  auto basis = nullspace(std::move(sys));
  std::vector<LinearFunctional> out;
  for (auto& v : basis) out.push_back({A, std::move(v)});
  return out;
}

std::vector<LinearFunctional> sph_of_dual(
    HopfPtr A, const std::vector<LinearFunctional>& candidates) {
  std::vector<LinearFunctional> out;
  LinearFunctional eps = LinearFunctional::counit_functional(A);
  for (const auto& p : candidates) {
    if (!p.is_algebra_map()) continue;
    if (!p.is_central()) continue;
    if (p.convolve(p) != eps) continue;
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace hopfbraid
