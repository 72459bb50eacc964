#include "hopfbraid/suzuki.hpp"

#include <sstream>

namespace hopfbraid {

namespace {

int letter_parity(int l) { return (l == LX12 || l == LX21) ? 1 : 0; }

Word repeated(int letter, int count) { return Word((size_t)count, letter); }

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string power_label(const char* base, int s, const char* chi, int t) {
  std::ostringstream os;
  os << base;
  if (s != 1) os << "^" << s;
  if (t > 0) {
    os << " " << chi;
    if (t != 1) os << "^" << t;
  }
  return os.str();
}

}  // namespace

std::string SuzukiParams::str() const {
  std::ostringstream os;
  os << "A(" << N << "," << L << "," << (nu > 0 ? "+" : "-") << ","
     << (lambda > 0 ? "+" : "-") << ")";
  return os.str();
}

Word alternating_word(int first, int m) {
  Word w;
  w.reserve((size_t)m);
  int cur = first;
  for (int i = 0; i < m; ++i) {
    w.push_back(cur);
    cur = 3 - cur;
  }
  return w;
}

Presentation suzuki_presentation(const SuzukiParams& p) {
  if (p.N < 1 || p.L < 2 || (p.nu != 1 && p.nu != -1) ||
      (p.lambda != 1 && p.lambda != -1))
    throw invalid_parameters("family parameters require N >= 1, L >= 2, nu = +-1, lambda = +-1");

  Presentation pres;
  pres.generators = {"x11", "x12", "x21", "x22"};
  const CycloScalar one(1);

  // products of letters with different index parity vanish
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (letter_parity(a) != letter_parity(b))
        pres.rules.push_back({Word{a, b}, {}});

  pres.rules.push_back({Word{LX22, LX22}, {{Word{LX11, LX11}, one}}});
  pres.rules.push_back({Word{LX21, LX21}, {{Word{LX12, LX12}, one}}});
  pres.rules.push_back(
      {alternating_word(LX11, p.L), {{alternating_word(LX22, p.L), one}}});
  pres.rules.push_back({alternating_word(LX21, p.L),
                        {{alternating_word(LX12, p.L), CycloScalar(p.lambda)}}});
  pres.rules.push_back({repeated(LX11, 2 * p.N),
                        {{Word{}, one},
                         {repeated(LX12, 2 * p.N), CycloScalar(-p.nu)}}});
  // three derived consequences, required so that products and coproduct legs
  // of basis words always rewrite back into the basis span:
  //   x12^{2N+1} = nu x12,  x12^{2N} x21 = nu x21,  x21 x12^{2N} = nu x21
  // (all follow by multiplying with 1 = x11^{2N} + nu x12^{2N} and using the
  // parity relations)
  pres.rules.push_back(
      {repeated(LX12, 2 * p.N + 1), {{Word{LX12}, CycloScalar(p.nu)}}});
  Word shrink_l = repeated(LX12, 2 * p.N);
  shrink_l.push_back(LX21);
  pres.rules.push_back({shrink_l, {{Word{LX21}, CycloScalar(p.nu)}}});
  Word shrink_r = Word{LX21};
  shrink_r.insert(shrink_r.end(), (size_t)(2 * p.N), LX12);
  pres.rules.push_back({shrink_r, {{Word{LX21}, CycloScalar(p.nu)}}});
  return pres;
}

int SuzukiAlgebra::even_index(int s, int t) const {
  return (s - 1) * params.L + t;
}

int SuzukiAlgebra::odd_index(int s, int t) const {
  return 2 * params.N * params.L + (s - 1) * params.L + t;
}

AlgebraElement SuzukiAlgebra::element_of_word(const Word& w) const {
  return AlgebraElement{A, presented_->coords_of_word(w)};
}

AlgebraElement SuzukiAlgebra::element_of(const WordCombo& combo) const {
  return AlgebraElement{A, presented_->coords_of(combo)};
}

AlgebraElement SuzukiAlgebra::generator(int i, int j) const {
  if (i < 1 || i > 2 || j < 1 || j > 2)
    throw invalid_parameters("generator indices must be 1 or 2");
  if (i == 1 && j == 1) return AlgebraElement::basis(A, even_index(1, 0));
  if (i == 1 && j == 2) return AlgebraElement::basis(A, odd_index(1, 0));
  if (i == 2 && j == 2)
    // x22 = x11^{2N} chi22, using x11^{2N} + nu x12^{2N} = 1 and parity
    return AlgebraElement::basis(A, even_index(2 * params.N, 1));
  // x21 = nu x12^{2N} chi21
  return AlgebraElement::basis(A, odd_index(2 * params.N, 1))
      .scaled(CycloScalar(params.nu));
}

SuzukiAlgebra::SuzukiAlgebra(const SuzukiParams& p, bool verify_axioms)
    : params(p) {
  Presentation pres = suzuki_presentation(p);
  const int N = p.N, L = p.L;
  const int dim = 4 * N * L;

  std::vector<Word> basis((size_t)dim);
  std::vector<std::string> labels((size_t)dim);
  for (int s = 1; s <= 2 * N; ++s)
    for (int t = 0; t < L; ++t) {
      basis[(size_t)((s - 1) * L + t)] =
          concat(repeated(LX11, s), alternating_word(LX22, t));
      labels[(size_t)((s - 1) * L + t)] = power_label("x11", s, "chi22", t);
      basis[(size_t)(2 * N * L + (s - 1) * L + t)] =
          concat(repeated(LX12, s), alternating_word(LX21, t));
      labels[(size_t)(2 * N * L + (s - 1) * L + t)] =
          power_label("x12", s, "chi21", t);
    }

  presented_ = std::make_shared<PresentedAlgebra>(std::move(pres), basis);

  std::vector<SPair> comult((size_t)dim);
  std::vector<CycloScalar> counit((size_t)dim, CycloScalar(0));
  Mat antipode(dim, dim);
  for (int s = 1; s <= 2 * N; ++s)
    for (int t = 0; t < L; ++t) {
      const int ev = (s - 1) * L + t;
      const int od = 2 * N * L + (s - 1) * L + t;
      const int sp = (4 * N - 2) * (t + s) + s;

      // Delta(x11^s chi22^t) = (self (x) self) + (x12^s chi21^t (x) x21^s chi12^t)
      SPair& ce = comult[(size_t)ev];
      ce.emplace_back(ev, ev, CycloScalar(1));
      auto leg_e = presented_->coords_of_word(
          concat(repeated(LX21, s), alternating_word(LX12, t)));
      for (int k = 0; k < dim; ++k)
        if (!leg_e[(size_t)k].is_zero()) ce.emplace_back(od, k, leg_e[(size_t)k]);

      // Delta(x12^s chi21^t) = (x11^s chi22^t (x) self) + (self (x) x22^s chi11^t)
      SPair& co = comult[(size_t)od];
      co.emplace_back(ev, od, CycloScalar(1));
      auto leg_o = presented_->coords_of_word(
          concat(repeated(LX22, s), alternating_word(LX11, t)));
      for (int k = 0; k < dim; ++k)
        if (!leg_o[(size_t)k].is_zero()) co.emplace_back(od, k, leg_o[(size_t)k]);

      counit[(size_t)ev] = CycloScalar(1);  // counit is 0 on the odd family

      Word se = (s + t) % 2 == 0
                    ? concat(repeated(LX22, sp), alternating_word(LX11, t))
                    : concat(repeated(LX11, sp), alternating_word(LX22, t));
      Word so = (s + t) % 2 == 0
                    ? concat(repeated(LX12, sp), alternating_word(LX21, t))
                    : concat(repeated(LX21, sp), alternating_word(LX12, t));
      auto se_c = presented_->coords_of_word(se);
      auto so_c = presented_->coords_of_word(so);
      for (int k = 0; k < dim; ++k) {
        antipode.at(ev, k) = se_c[(size_t)k];
        antipode.at(od, k) = so_c[(size_t)k];
      }
    }

  A = FiniteDimHopfAlgebra::make(dim, labels, presented_->mult(),
                                 presented_->unit_coords(), comult, counit,
                                 antipode);

  if (verify_axioms) {
    AxiomReport rep = verify_hopf_axioms(*A);
    if (!rep.all_ok())
      throw construction_failed(params.str() + ": " + rep.summary());
  }
}

SuzukiAlgebra construct_suzuki(const SuzukiParams& p, bool verify_axioms) {
  return SuzukiAlgebra(p, verify_axioms);
}

std::vector<AlgebraElement> suzuki_group_likes(const SuzukiAlgebra& alg) {
  const int N = alg.params.N, L = alg.params.L;
  CycloScalar root = CycloScalar::sqrt_of_sign(CycloScalar(alg.params.lambda));
  std::vector<AlgebraElement> out;
  for (int s = 1; s <= N; ++s)
    for (int sign : {+1, -1}) {
      WordCombo first{{repeated(LX11, 2 * s), CycloScalar(1)},
                      {repeated(LX12, 2 * s), CycloScalar(sign)}};
      out.push_back(alg.element_of(first));
      WordCombo second{
          {concat(repeated(LX11, 2 * s + 1), alternating_word(LX22, L - 1)),
           CycloScalar(1)},
          {concat(repeated(LX12, 2 * s + 1), alternating_word(LX21, L - 1)),
           CycloScalar(sign) * root}};
      out.push_back(alg.element_of(second));
    }
  return out;
}

AlgebraElement Comodule::character() const {
  AlgebraElement ch = a[0][0];
  for (int i = 1; i < dim(); ++i) ch = ch + a[(size_t)i][(size_t)i];
  return ch;
}

bool comodule_is_coaction(const Comodule& m, std::string* witness) {
  const int d = m.dim();
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      Tensor2 lhs = comult_element(m.a[(size_t)j][(size_t)i]);
      Tensor2 rhs = Tensor2::zero(m.a[0][0].A);
      for (int k = 0; k < d; ++k)
        rhs = rhs + Tensor2::outer(m.a[(size_t)j][(size_t)k], m.a[(size_t)k][(size_t)i]);
      if (!(lhs == rhs)) {
        if (witness)
          *witness = m.label + ": comultiplication of entry (" +
                     std::to_string(j) + "," + std::to_string(i) +
                     ") differs from the matrix coproduct";
        return false;
      }
      CycloScalar eps = m.a[(size_t)j][(size_t)i].counit();
      if (!(eps == CycloScalar(i == j ? 1 : 0))) {
        if (witness)
          *witness = m.label + ": counit of entry (" + std::to_string(j) + "," +
                     std::to_string(i) + ") is not delta";
        return false;
      }
    }
  return true;
}

std::vector<Comodule> suzuki_simple_comodules(const SuzukiAlgebra& alg) {
  const int N = alg.params.N, L = alg.params.L;
  std::vector<Comodule> out;

  auto gl = suzuki_group_likes(alg);
  for (size_t idx = 0; idx < gl.size(); ++idx) {
    // label by the power of the leading word and the sign of the second one
    int s = (int)(idx / 4) + 1;
    int kind = (int)(idx % 4);         // 0: (2s,+), 1: (2s+1,+), 2: (2s,-), 3: (2s+1,-)
    int power = kind % 2 == 0 ? 2 * s : 2 * s + 1;
    const char* sign = kind < 2 ? "+" : "-";
    Comodule m;
    m.label = "kG(" + std::to_string(power) + "," + sign + ")";
    m.a = {{gl[idx]}};
    out.push_back(std::move(m));
  }

  for (int s = 0; s < N; ++s)
    for (int t = 1; t < L; ++t) {
      Comodule m;
      m.label = "V(" + std::to_string(s) + "," + std::to_string(t) + ")";
      auto entry = [&](int lead, int chi_first) {
        return alg.element_of_word(
            concat(repeated(lead, 2 * s), alternating_word(chi_first, t)));
      };
      // coaction matrix [[x11^{2s}chi22^t, x12^{2s}chi21^t],
      //                  [x21^{2s}chi12^t, x22^{2s}chi11^t]]
      m.a = {{entry(LX11, LX22), entry(LX12, LX21)},
             {entry(LX21, LX12), entry(LX22, LX11)}};
      out.push_back(std::move(m));
    }
  return out;
}

GroupIsoReport verify_group_algebra_iso(const SuzukiAlgebra& alg) {
  const int N = alg.params.N, L = alg.params.L;
  if (N % 2 == 0)
    throw invalid_parameters("group-algebra comparison requires odd N");
  if (alg.params.lambda != (L % 2 == 1 ? +1 : -1))
    throw invalid_parameters(
        "group-algebra comparison requires lambda = + exactly for odd L");

  GroupIsoReport rep;
  auto fail = [&](const std::string& w) {
    rep.ok = false;
    if (!rep.witness.empty()) rep.witness += "; ";
    rep.witness += w;
  };

  // The x12-coefficients carry nu-dependent adjustments (trivial for nu = +):
  // without them t^2 = 1 + (1 - nu) x12^{2N} fails to be 1 when nu = -.
  CycloScalar nu(alg.params.nu);
  CycloScalar root_nu = CycloScalar::sqrt_of_sign(nu);
  AlgebraElement h = alg.element_of(
      WordCombo{{Word{LX11, LX11}, CycloScalar(1)}, {Word{LX12, LX12}, -nu}});
  AlgebraElement t = alg.element_of(
      WordCombo{{repeated(LX12, N), root_nu}, {repeated(LX22, N), CycloScalar(1)}});
  AlgebraElement w = alg.element_of(
      WordCombo{{concat(repeated(LX11, 2 * N - 1), Word{LX22}), CycloScalar(1)},
                {concat(repeated(LX21, 2 * N - 1), Word{LX12}), -nu}});
  AlgebraElement one = AlgebraElement::unit_element(alg.A);

  if (!(t * t == one)) fail("t^2 != 1");
  if (!(h.pow(2 * N) == one)) fail("h^(2N) != 1");
  if (!(w.pow(L) == h.pow(N))) fail("w^L != h^N");
  if (!(t * w == w.pow(L - 1) * h.pow(N) * t)) fail("t w != w^{-1} t");
  if (!(h * t == t * h)) fail("h t != t h");
  if (!(h * w == w * h)) fail("h w != w h");

  const int dim = alg.A->dim;
  Mat span(dim, dim);
  int row = 0;
  for (int a = 0; a < 2 * N; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < L; ++c) {
        AlgebraElement g = h.pow(a) * t.pow(b) * w.pow(c);
        for (int k = 0; k < dim; ++k) span.at(row, k) = g.coords[(size_t)k];
        ++row;
      }
  if (span.rank() != dim) fail("group element images do not span");
  return rep;
}

}  // namespace hopfbraid
