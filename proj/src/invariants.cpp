#include "hopfbraid/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace hopfbraid {

bool scalar_less(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  return a.str() < b.str();
}

InvariantPolynomial InvariantPolynomial::one() { return {}; }

InvariantPolynomial InvariantPolynomial::from_roots(
    std::vector<CycloScalar> roots) {
  std::sort(roots.begin(), roots.end(), scalar_less);
  InvariantPolynomial p;
  p.roots_ = std::move(roots);
  return p;
}

std::vector<CycloScalar> InvariantPolynomial::coefficients() const {
  std::vector<CycloScalar> c{CycloScalar(1)};
  for (const auto& r : roots_) {
    std::vector<CycloScalar> next(c.size() + 1, CycloScalar());
    for (size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] = next[k] - r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

CycloScalar InvariantPolynomial::evaluated_at(const CycloScalar& x) const {
  CycloScalar out(1);
  for (const auto& r : roots_) out *= x - r;
  return out;
}

InvariantPolynomial InvariantPolynomial::operator*(
    const InvariantPolynomial& o) const {
  std::vector<CycloScalar> all = roots_;
  all.insert(all.end(), o.roots_.begin(), o.roots_.end());
  return from_roots(std::move(all));
}

InvariantPolynomial InvariantPolynomial::divided_by(
    const InvariantPolynomial& o) const {
  std::vector<CycloScalar> rem = roots_;
  for (const auto& r : o.roots_) {
    auto it = std::find(rem.begin(), rem.end(), r);
    if (it == rem.end())
      throw division_not_exact("dividend has no factor with root " + r.str());
    rem.erase(it);
  }
  InvariantPolynomial q;
  q.roots_ = std::move(rem);  // a sub-multiset of a sorted list stays sorted
  return q;
}

bool InvariantPolynomial::operator==(const InvariantPolynomial& o) const {
  return roots_ == o.roots_;
}

std::string InvariantPolynomial::str() const {
  if (roots_.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  while (i < roots_.size()) {
    size_t j = i;
    while (j < roots_.size() && roots_[j] == roots_[i]) ++j;
    const std::string s = roots_[i].str();
    if (s == "0")
      out << "x";
    else if (s.find(' ') != std::string::npos)
      out << "(x - (" << s << "))";
    else if (s[0] == '-')
      out << "(x + " << s.substr(1) << ")";
    else
      out << "(x - " << s << ")";
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

bool PolynomialTriple::operator==(const PolynomialTriple& o) const {
  return d == o.d && P == o.P && Ptilde == o.Ptilde && Q == o.Q;
}

std::string PolynomialTriple::str() const {
  std::ostringstream out;
  out << "d=" << d << ": P = " << P.str() << ", Ptilde = " << Ptilde.str()
      << ", Q = " << Q.str();
  return out.str();
}

bool BraidedSignature::operator==(const BraidedSignature& o) const {
  return entries == o.entries;
}

std::string BraidedSignature::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out << "; ";
    out << entries[i].str();
  }
  return out.str();
}

std::vector<std::vector<int>> partition_by_signature(
    const std::vector<BraidedSignature>& sigs) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < (int)sigs.size(); ++i) {
    bool placed = false;
    for (auto& g : groups)
      if (sigs[(size_t)g[0]] == sigs[(size_t)i]) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }
  return groups;
}

CycloScalar cyclic_module_scalar(const AlgebraElement& v, int k) {
  const int n = v.A->dim;
  CycloScalar out;
  for (int i = 0; i < n; ++i)
    out += v.coords[(size_t)i] * CycloScalar::root_of_unity(n, (long)i * k);
  return out;
}

PolynomialTriple cyclic_polynomial_triple(const RMatrix& rm) {
  const int n = rm.n;
  const AlgebraElement u = drinfeld_element(rm);
  const std::vector<AlgebraElement> rib = ribbon_set(rm);
  std::vector<CycloScalar> proots, ptroots;
  for (int k = 0; k < n; ++k) proots.push_back(cyclic_module_scalar(u, k));
  for (const auto& v : rib)
    for (int k = 0; k < n; ++k) ptroots.push_back(cyclic_module_scalar(v, k));
  PolynomialTriple t;
  t.d = 1;
  t.P = InvariantPolynomial::from_roots(std::move(proots));
  t.Ptilde = InvariantPolynomial::from_roots(std::move(ptroots));
  t.Q = t.Ptilde.divided_by(t.P);
  return t;
}

BraidedSignature cyclic_signature(const RMatrix& rm) {
  BraidedSignature sig;
  sig.entries.push_back(cyclic_polynomial_triple(rm));
  return sig;
}

CycloScalar comodule_scalar(const LinearFunctional& theta, const Comodule& m) {
  const int d = m.dim();
  const CycloScalar xi =
      theta(m.character()) * CycloScalar(Rational(1, d));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      const CycloScalar entry = theta(m.a[(size_t)j][(size_t)i]);
      const CycloScalar want = i == j ? xi : CycloScalar();
      if (entry != want)
        throw construction_failed(
            "central functional does not act as a scalar on " + m.label);
    }
  return xi;
}

CycloScalar categorical_dimension(const Braiding& braiding, const Comodule& m) {
  return drinfeld_functional(braiding)(m.character());
}

namespace {

PolynomialTriple triple_for_dimension(const std::vector<Comodule>& mods,
                                      const LinearFunctional& upsilon,
                                      const std::vector<LinearFunctional>& crib,
                                      int d) {
  std::vector<CycloScalar> proots, ptroots;
  for (const auto& m : mods) {
    if (m.dim() != d) continue;
    proots.push_back(comodule_scalar(upsilon, m));
    for (const auto& th : crib) ptroots.push_back(comodule_scalar(th, m));
  }
  PolynomialTriple t;
  t.d = d;
  t.P = InvariantPolynomial::from_roots(std::move(proots));
  t.Ptilde = InvariantPolynomial::from_roots(std::move(ptroots));
  t.Q = t.Ptilde.divided_by(t.P);
  return t;
}

}  // namespace

PolynomialTriple braided_polynomial_triple(const SuzukiAlgebra& alg,
                                           const Braiding& braiding, int d) {
  const auto mods = suzuki_simple_comodules(alg);
  const auto upsilon = drinfeld_functional(braiding);
  const auto crib = coribbon_set(alg, braiding);
  return triple_for_dimension(mods, upsilon, crib, d);
}

BraidedSignature braided_signature(const SuzukiAlgebra& alg,
                                   const Braiding& braiding) {
  const auto mods = suzuki_simple_comodules(alg);
  const auto upsilon = drinfeld_functional(braiding);
  const auto crib = coribbon_set(alg, braiding);
  std::vector<int> dims;
  for (const auto& m : mods) dims.push_back(m.dim());
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  BraidedSignature sig;
  for (int d : dims)
    sig.entries.push_back(triple_for_dimension(mods, upsilon, crib, d));
  return sig;
}

namespace {

// scalar action of the Drinfeld functional of the two-parameter braiding
// (i, j, sign) on the simple comodule indexed by (s, t): t = 0 gives the
// even one-dimensional comodules, t = L the odd ones, 1 <= t < L the
// two-dimensional ones.  The second coribbon multiplies this by (-1)^t.
CycloScalar sigma_scalar(const SuzukiParams& p, int i, int j, int sign, long s,
                         long t) {
  const long m = 4L * p.N * p.L;
  const long eu = (long)p.L * (2L * i + (1 - p.nu) / 2);
  const long ev = (long)p.N * (2L * j + (1 - p.lambda) / 2);
  CycloScalar r =
      CycloScalar::root_of_unity(m, -(2 * s + t) * (2 * s + t) * eu + t * t * ev);
  if (sign < 0 && t % 2 == 1) r = CycloScalar(-1) * r;
  return r;
}

PolynomialTriple triple_from_root_lists(int d, std::vector<CycloScalar> proots,
                                        std::vector<CycloScalar> qroots) {
  PolynomialTriple t;
  t.d = d;
  t.P = InvariantPolynomial::from_roots(std::move(proots));
  t.Q = InvariantPolynomial::from_roots(std::move(qroots));
  t.Ptilde = t.P * t.Q;
  return t;
}

}  // namespace

PolynomialTriple sigma_closed_form_triple(const SuzukiParams& p, int i, int j,
                                          int sign, int d) {
  const int N = p.N, L = p.L;
  std::vector<CycloScalar> proots, qroots;
  if (d == 1) {
    for (int s = 1; s <= N; ++s)
      for (long t : {0L, (long)L}) {
        const CycloScalar r = sigma_scalar(p, i, j, sign, s, t);
        const CycloScalar rq = t % 2 == 1 ? CycloScalar(-1) * r : r;
        proots.push_back(r);
        proots.push_back(r);
        qroots.push_back(rq);
        qroots.push_back(rq);
      }
  } else if (d == 2) {
    for (int s = 0; s < N; ++s)
      for (int t = 1; t < L; ++t) {
        const CycloScalar r = sigma_scalar(p, i, j, sign, s, t);
        proots.push_back(r);
        qroots.push_back(t % 2 == 1 ? CycloScalar(-1) * r : r);
      }
  }
  return triple_from_root_lists(d, std::move(proots), std::move(qroots));
}

PolynomialTriple tau_closed_form_triple(const SuzukiParams& p, int i, int d) {
  if (p.L != 2)
    throw invalid_parameters("one-parameter braidings require L = 2");
  const int N = p.N;
  const long m = 8L * N;
  std::vector<CycloScalar> proots, qroots;
  if (d == 1) {
    for (long s = 1; s <= N; ++s) {
      const CycloScalar r1 = CycloScalar::root_of_unity(m, -16L * i * s * s);
      const CycloScalar r2 =
          CycloScalar(p.lambda) *
          CycloScalar::root_of_unity(m, -16L * i * (s + 1) * (s + 1));
      for (int rep = 0; rep < 2; ++rep) {
        proots.push_back(r1);
        proots.push_back(r2);
        qroots.push_back(r1);
        qroots.push_back(r2);
      }
    }
  } else if (d == 2) {
    for (long s = 0; s < N; ++s) {
      const CycloScalar r =
          CycloScalar::root_of_unity(m, -4L * i * (2 * s + 1) * (2 * s + 1));
      proots.push_back(r);
      qroots.push_back(CycloScalar(-1) * r);
    }
  }
  return triple_from_root_lists(d, std::move(proots), std::move(qroots));
}

}  // namespace hopfbraid
