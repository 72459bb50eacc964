#include "hopfbraid/h8.hpp"

#include <array>
#include <sstream>

namespace hopfbraid {

namespace {

int dihedral_index(int i, int k) {
  return ((i % 4) + 4) % 4 + 4 * (((k % 2) + 2) % 2);
}

std::string dihedral_label(int i, int k) {
  std::string out;
  if (i == 1)
    out = "w";
  else if (i > 1)
    out = "w^" + std::to_string(i);
  if (k) {
    if (!out.empty()) out += " ";
    out += "t";
  }
  if (out.empty()) out = "1";
  return out;
}

}  // namespace

AlgebraElement HopfMorphism::apply(const AlgebraElement& x) const {
  return AlgebraElement{target, matrix.apply_left(x.coords)};
}

HopfMorphism HopfMorphism::then(const HopfMorphism& next) const {
  return HopfMorphism{source, next.target, matrix * next.matrix,
                      name + " then " + next.name};
}

bool HopfMorphism::operator==(const HopfMorphism& o) const {
  return source.get() == o.source.get() && target.get() == o.target.get() &&
         matrix == o.matrix;
}

AxiomReport verify_hopf_morphism(const HopfMorphism& f) {
  AxiomReport rep;
  const FiniteDimHopfAlgebra& A = *f.source;
  const FiniteDimHopfAlgebra& B = *f.target;
  const int n = A.dim;
  auto add = [&](const std::string& name, bool ok, const std::string& w) {
    rep.items.push_back({name, ok, ok ? std::string() : w});
  };

  auto img = [&](int i) {
    std::vector<CycloScalar> row((size_t)B.dim);
    for (int j = 0; j < B.dim; ++j) row[(size_t)j] = f.matrix.at(i, j);
    return AlgebraElement{f.target, std::move(row)};
  };

  {
    const AlgebraElement one_a{f.source, A.unit};
    add("unit", f.apply(one_a) == AlgebraElement::unit_element(f.target),
        "image of the unit is not the unit");
  }

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        const AlgebraElement prod{f.source, densify(A.mult[(size_t)i][(size_t)j], n)};
        if (!(f.apply(prod) == img(i) * img(j))) {
          ok = false;
          w = "f(" + A.basis_labels[(size_t)i] + " * " +
              A.basis_labels[(size_t)j] + ") differs from the product of images";
        }
      }
    add("multiplicative", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Tensor2 rhs = Tensor2::zero(f.target);
      for (const auto& [a, b, c] : A.comult[(size_t)i])
        rhs = rhs + Tensor2::outer(img(a).scaled(c), img(b));
      if (!(comult_element(img(i)) == rhs)) {
        ok = false;
        w = "coproduct of the image of " + A.basis_labels[(size_t)i] +
            " differs from the image of the coproduct";
      }
    }
    add("comultiplicative", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      if (img(i).counit() != A.counit[(size_t)i]) {
        ok = false;
        w = "counit mismatch on " + A.basis_labels[(size_t)i];
      }
    add("counit", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<CycloScalar> srow((size_t)n);
      for (int j = 0; j < n; ++j) srow[(size_t)j] = A.antipode.at(i, j);
      const AlgebraElement s_then_f = f.apply(AlgebraElement{f.source, srow});
      if (!(s_then_f == img(i).antipode())) {
        ok = false;
        w = "antipode does not commute with the map on " +
            A.basis_labels[(size_t)i];
      }
    }
    add("antipode", ok, w);
  }

  add("bijective", A.dim == B.dim && f.matrix.rank() == n,
      "matrix is not invertible");
  return rep;
}

SuzukiAlgebra h8() { return construct_suzuki({1, 2, +1, -1}); }

HopfPtr twisted_dihedral_hopf() {
  const int n = 8;
  std::vector<std::vector<int>> table((size_t)n, std::vector<int>(n));
  std::vector<std::string> labels((size_t)n);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 2; ++k) {
      labels[(size_t)dihedral_index(i, k)] = dihedral_label(i, k);
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 2; ++l)
          table[(size_t)dihedral_index(i, k)][(size_t)dihedral_index(j, l)] =
              dihedral_index(i + (k == 0 ? j : -j), k + l);
    }
  const HopfPtr G = group_algebra(table, labels);

  const AlgebraElement w = AlgebraElement::basis(G, dihedral_index(1, 0));
  const AlgebraElement t = AlgebraElement::basis(G, dihedral_index(0, 1));
  const AlgebraElement one = AlgebraElement::unit_element(G);
  const CycloScalar half(Rational(1, 2));
  const AlgebraElement e0 = (one + w.pow(2)).scaled(half);
  const AlgebraElement e1 = (one - w.pow(2)).scaled(half);

  const Tensor2 dw = Tensor2::outer(w, e0 * w) + Tensor2::outer(w.pow(3), e1 * w);
  const Tensor2 dt =
      Tensor2::outer(w.pow(3) * t, e1 * t) + Tensor2::outer(t, e0 * t);

  std::vector<SPair> comult((size_t)n);
  std::vector<CycloScalar> counit((size_t)n, CycloScalar(1));
  Mat antipode(n, n);
  const AlgebraElement st = (e0 - e1 * w) * t;  // S(t)
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 2; ++k) {
      const int idx = dihedral_index(i, k);
      Tensor2 d = Tensor2::unit_tensor(G);
      for (int a = 0; a < i; ++a) d = d * dw;
      if (k) d = d * dt;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (!d.t.at(r, c).is_zero())
            comult[(size_t)idx].emplace_back(r, c, d.t.at(r, c));
      // S is an anti-homomorphism: S(w^i t^k) = S(t)^k w^i
      const AlgebraElement s_img = st.pow(k) * w.pow(i);
      for (int c = 0; c < n; ++c) antipode.at(idx, c) = s_img.coords[(size_t)c];
    }

  return FiniteDimHopfAlgebra::make(n, labels, G->mult, G->unit,
                                    std::move(comult), std::move(counit),
                                    std::move(antipode));
}

HopfMorphism kac_paljutkin_iso(const SuzukiAlgebra& S) {
  const HopfPtr D = twisted_dihedral_hopf();
  const AlgebraElement phi_w =
      S.generator(1, 1) * S.generator(2, 2) - S.generator(2, 1) * S.generator(1, 2);
  const AlgebraElement phi_t = S.generator(1, 2) + S.generator(2, 2);
  Mat m(8, 8);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 2; ++k) {
      const AlgebraElement image = phi_w.pow(i) * phi_t.pow(k);
      for (int c = 0; c < 8; ++c)
        m.at(dihedral_index(i, k), c) = image.coords[(size_t)c];
    }
  return HopfMorphism{D, S.A, std::move(m), "phi"};
}

AxiomReport kac_paljutkin_iso_check() {
  const SuzukiAlgebra S = h8();
  const HopfMorphism phi = kac_paljutkin_iso(S);
  const HopfPtr D = phi.source;

  AxiomReport rep;
  auto add = [&](const std::string& name, bool ok, const std::string& w) {
    rep.items.push_back({name, ok, ok ? std::string() : w});
  };

  const AlgebraElement phi_w = phi.apply(AlgebraElement::basis(D, dihedral_index(1, 0)));
  const AlgebraElement phi_t = phi.apply(AlgebraElement::basis(D, dihedral_index(0, 1)));
  const AlgebraElement one = AlgebraElement::unit_element(S.A);
  add("relation w^4 = 1", phi_w.pow(4) == one, "fourth power of phi(w) is not 1");
  add("relation t^2 = 1", phi_t.pow(2) == one, "square of phi(t) is not 1");
  add("relation t w t = w^-1", phi_t * phi_w * phi_t == phi_w.pow(3),
      "conjugation relation fails in the image");

  const AlgebraElement w = AlgebraElement::basis(D, dihedral_index(1, 0));
  const AlgebraElement t = AlgebraElement::basis(D, dihedral_index(0, 1));
  const AlgebraElement oneD = AlgebraElement::unit_element(D);
  const CycloScalar half(Rational(1, 2));
  const AlgebraElement e0 = (oneD + w.pow(2)).scaled(half);
  const AlgebraElement e1 = (oneD - w.pow(2)).scaled(half);
  add("idempotents", e0 * e0 == e0 && e1 * e1 == e1 && (e0 * e1).is_zero() &&
                         e0 + e1 == oneD,
      "e0, e1 are not orthogonal idempotents summing to 1");
  add("idempotents central", is_central(e0) && is_central(e1),
      "e0 or e1 fails to be central");

  for (const auto& item : verify_hopf_morphism(phi).items)
    rep.items.push_back(item);

  const AlgebraElement x11 = phi.apply((w + w.pow(3)).scaled(half) * t);
  const AlgebraElement x12 = phi.apply(e1 * t);
  const AlgebraElement x21 = phi.apply((w.pow(3) - w).scaled(half) * t);
  const AlgebraElement x22 = phi.apply(e0 * t);
  add("inverse images",
      x11 == S.generator(1, 1) && x12 == S.generator(1, 2) &&
          x21 == S.generator(2, 1) && x22 == S.generator(2, 2),
      "displayed preimages of the comatrix generators do not map back");

  if (!rep.all_ok()) throw iso_check_failed(rep.summary());
  return rep;
}

std::vector<HopfMorphism> h8_automorphisms(const SuzukiAlgebra& S) {
  const int n = S.A->dim;
  // letter images (x11, x12, x21, x22) of the three nontrivial maps
  const AlgebraElement x11 = S.generator(1, 1), x12 = S.generator(1, 2),
                       x21 = S.generator(2, 1), x22 = S.generator(2, 2);
  const std::array<std::array<AlgebraElement, 4>, 3> images = {{
      {x22, x21.scaled(CycloScalar(-1)), x12.scaled(CycloScalar(-1)), x11},
      {x22, x21, x12, x11},
      {x11, x12.scaled(CycloScalar(-1)), x21.scaled(CycloScalar(-1)), x22},
  }};
  const std::array<std::string, 3> names = {"f+", "f-", "f+-"};

  std::vector<HopfMorphism> out;
  out.push_back(HopfMorphism{S.A, S.A, Mat::identity(n), "id"});
  for (size_t m = 0; m < images.size(); ++m) {
    Mat mat(n, n);
    const auto& words = S.presented().basis_words();
    for (int i = 0; i < n; ++i) {
      AlgebraElement image = AlgebraElement::unit_element(S.A);
      for (int letter : words[(size_t)i]) image = image * images[m][(size_t)letter];
      for (int c = 0; c < n; ++c) mat.at(i, c) = image.coords[(size_t)c];
    }
    out.push_back(HopfMorphism{S.A, S.A, std::move(mat), names[m]});
  }

  for (const auto& f : out) {
    const AxiomReport rep = verify_hopf_morphism(f);
    if (!rep.all_ok())
      throw automorphism_check_failed(f.name + ": " + rep.summary());
  }
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b)
      if (out[a].matrix == out[b].matrix)
        throw automorphism_check_failed(out[a].name + " and " + out[b].name +
                                        " coincide");
  // composition table of the Klein four-group: indices compose by XOR
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b)
      if (out[a].then(out[b]).matrix != out[a ^ b].matrix)
        throw automorphism_check_failed("composition " + out[a].name + " * " +
                                        out[b].name + " is not " +
                                        out[a ^ b].name);
  return out;
}

Braiding transport_braiding(const SuzukiAlgebra& alg, const Braiding& s,
                            const HopfMorphism& f) {
  if (f.source.get() != s.A.get() || f.target.get() != s.A.get() ||
      alg.A.get() != s.A.get())
    throw invalid_parameters(
        "transport requires an automorphism of the braiding's algebra");
  Braiding out = s;
  out.values = f.matrix * s.values * f.matrix.transposed();
  out.inverse_values = f.matrix * s.inverse_values * f.matrix.transposed();
  if (s.family == BraidingFamily::sigma) {
    out.par1 = out.value(alg.generator(1, 2), alg.generator(1, 2));
    out.par2 = out.value(alg.generator(1, 2), alg.generator(2, 1));
  } else {
    out.par1 = out.value(alg.generator(1, 1), alg.generator(1, 1));
    out.par2 = out.value(alg.generator(1, 1), alg.generator(2, 2));
  }
  const AxiomReport rep = verify_braiding(out);
  if (!rep.all_ok())
    throw construction_failed("transported form is not a braiding: " +
                              rep.summary());
  return out;
}

HopfMorphism h8_self_duality() {
  const SuzukiAlgebra S = h8();
  const HopfPtr D = dual_hopf(*S.A);
  const int n = S.A->dim;

  // the comatrix transpose x_rs -> x_sr: a coproduct-reversing algebra
  // automorphism, used to undo the co-opposite twist of the pairings
  Mat transpose_map(n, n);
  {
    const std::array<AlgebraElement, 4> im = {
        S.generator(1, 1), S.generator(2, 1), S.generator(1, 2),
        S.generator(2, 2)};
    const auto& words = S.presented().basis_words();
    for (int i = 0; i < n; ++i) {
      AlgebraElement e = AlgebraElement::unit_element(S.A);
      for (int letter : words[(size_t)i]) e = e * im[(size_t)letter];
      for (int c = 0; c < n; ++c) transpose_map.at(i, c) = e.coords[(size_t)c];
    }
  }

  const std::vector<std::pair<std::string, Mat>> pres = {
      {"", Mat::identity(n)},
      {" (antipode precomposed)", S.A->antipode},
      {" (transpose precomposed)", transpose_map},
      {" (antipode and transpose precomposed)", S.A->antipode * transpose_map},
  };

  for (const auto& br : enumerate_braidings(S)) {
    const std::array<Mat, 4> sides = {br.values, br.values.transposed(),
                                      br.inverse_values,
                                      br.inverse_values.transposed()};
    for (const Mat& base : sides)
      for (const auto& [pre_name, pre] : pres)
        for (int post = 0; post < 2; ++post) {
          Mat cand = pre * base;
          if (post) cand = cand * D->antipode;
          HopfMorphism f{S.A, D, std::move(cand),
                         "pairing " + br.label() + pre_name +
                             (post ? " (antipode postcomposed)" : "")};
          if (verify_hopf_morphism(f).all_ok()) return f;
        }
  }
  throw construction_failed(
      "no pairing candidate yields a self-duality isomorphism");
}

H8Classification classify_h8() {
  const SuzukiAlgebra S = h8();
  H8Classification out;
  out.braidings = enumerate_braidings(S);
  if (out.braidings.size() != 8)
    throw classification_mismatch("expected 8 braidings, found " +
                                  std::to_string(out.braidings.size()));

  std::vector<BraidedSignature> sigs;
  for (const auto& br : out.braidings) sigs.push_back(braided_signature(S, br));
  const auto groups = partition_by_signature(sigs);
  const auto autos = h8_automorphisms(S);

  for (const auto& g : groups) {
    BraidedClass cls;
    cls.members = g;
    cls.signature = sigs[(size_t)g[0]];
    for (size_t m = 1; m < g.size(); ++m) {
      bool found = false;
      for (const auto& f : autos) {
        const Braiding tr = transport_braiding(S, out.braidings[(size_t)g[0]], f);
        if (tr.values == out.braidings[(size_t)g[m]].values) {
          cls.transport_witnesses.push_back(
              out.braidings[(size_t)g[m]].label() + " = " +
              out.braidings[(size_t)g[0]].label() + " transported along " +
              f.name);
          found = true;
          break;
        }
      }
      if (!found)
        throw classification_mismatch(
            "no automorphism transport links " +
            out.braidings[(size_t)g[0]].label() + " with " +
            out.braidings[(size_t)g[m]].label() +
            " although their signatures agree");
    }
    out.classes.push_back(std::move(cls));
  }

  if (out.classes.size() != 6)
    throw classification_mismatch("expected 6 classes, found " +
                                  std::to_string(out.classes.size()));
  for (int c = 0; c < 4; ++c) {
    const auto& cls = out.classes[(size_t)c];
    if (cls.members.size() != 1 ||
        out.braidings[(size_t)cls.members[0]].family != BraidingFamily::sigma)
      throw classification_mismatch(
          "class " + std::to_string(c) +
          " should be a singleton of the two-parameter family");
  }
  for (int c = 4; c < 6; ++c) {
    const auto& cls = out.classes[(size_t)c];
    bool pair_ok = cls.members.size() == 2;
    if (pair_ok) {
      const Braiding& a = out.braidings[(size_t)cls.members[0]];
      const Braiding& b = out.braidings[(size_t)cls.members[1]];
      pair_ok = a.family == BraidingFamily::tau &&
                b.family == BraidingFamily::tau && a.par1 == b.par1 &&
                a.par2 == CycloScalar(-1) * b.par2;
    }
    if (!pair_ok)
      throw classification_mismatch(
          "class " + std::to_string(c) +
          " should pair one-parameter braidings with opposite second "
          "parameter");
  }
  return out;
}

}  // namespace hopfbraid
