#include "hopfbraid/json_io.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace hopfbraid {

namespace {

Rational rational_from_decimal_string(const std::string& s) {
  if (s.empty()) throw json_parse_error("empty rational component");
  size_t k = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = (s[0] == '-');
    k = 1;
  }
  if (k == s.size()) throw json_parse_error("sign without digits: " + s);
  Rational v(0);
  const Rational ten(10);
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw json_parse_error("bad digit in rational component: " + s);
    v = v * ten + Rational(s[k] - '0');
  }
  return neg ? -v : v;
}

Json integer_component(const Rational& r, bool numerator) {
  if (r.is_small())
    return numerator ? r.num_small() : r.den_small();
  const BigRational b = r.to_big();
  const auto part = numerator ? boost::multiprecision::numerator(b)
                              : boost::multiprecision::denominator(b);
  return part.str();
}

Rational component_value(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return rational_from_decimal_string(j.get<std::string>());
  throw json_parse_error("rational component must be integer or string");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw json_parse_error(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& r) {
  return Json::array({integer_component(r, true), integer_component(r, false)});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw json_parse_error("rational must be a [numerator, denominator] pair");
  const Rational num = component_value(j[0]);
  const Rational den = component_value(j[1]);
  if (den.is_zero()) throw json_parse_error("zero denominator");
  return num / den;
}

Json to_json(const CycloScalar& s) {
  Json coeffs = Json::array();
  for (const Rational& c : s.dense_coeffs()) coeffs.push_back(to_json(c));
  return Json{{"conductor", s.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycloScalar scalar_from_json(const Json& j) {
  const long conductor = field(j, "conductor").get<long>();
  if (conductor < 1) throw json_parse_error("conductor must be positive");
  const Json& cj = field(j, "coeffs");
  if (!cj.is_array()) throw json_parse_error("coeffs must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(cj.size());
  for (const Json& c : cj) coeffs.push_back(rational_from_json(c));
  return CycloScalar::from_dense(conductor, coeffs);
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{
      {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat mat_from_json(const Json& j) {
  const int rows = field(j, "rows").get<int>();
  const int cols = field(j, "cols").get<int>();
  const Json& ej = field(j, "entries");
  if (rows < 0 || cols < 0 || !ej.is_array() || (int)ej.size() != rows)
    throw json_parse_error("matrix shape mismatch");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = ej[(size_t)r];
    if (!row.is_array() || (int)row.size() != cols)
      throw json_parse_error("matrix row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(row[(size_t)c]);
  }
  return m;
}

Json to_json(const InvariantPolynomial& p) {
  Json roots = Json::array();
  for (const CycloScalar& r : p.roots()) roots.push_back(to_json(r));
  Json coeffs = Json::array();
  for (const CycloScalar& c : p.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"roots", std::move(roots)}, {"coeffs", std::move(coeffs)}};
}

InvariantPolynomial polynomial_from_json(const Json& j) {
  const Json& rj = field(j, "roots");
  if (!rj.is_array()) throw json_parse_error("roots must be an array");
  std::vector<CycloScalar> roots;
  roots.reserve(rj.size());
  for (const Json& r : rj) roots.push_back(scalar_from_json(r));
  InvariantPolynomial p = InvariantPolynomial::from_roots(std::move(roots));
  if (j.is_object() && j.contains("coeffs")) {
    const Json& cj = j.at("coeffs");
    const std::vector<CycloScalar> expect = p.coefficients();
    if (!cj.is_array() || cj.size() != expect.size())
      throw json_parse_error("coefficient list does not match the roots");
    for (size_t k = 0; k < expect.size(); ++k)
      if (scalar_from_json(cj[k]) != expect[k])
        throw json_parse_error("coefficient list does not match the roots");
  }
  return p;
}

Json to_json(const PolynomialTriple& t) {
  return Json{{"d", t.d},
              {"P", to_json(t.P)},
              {"Ptilde", to_json(t.Ptilde)},
              {"Q", to_json(t.Q)}};
}

PolynomialTriple triple_from_json(const Json& j) {
  PolynomialTriple t;
  t.d = field(j, "d").get<int>();
  t.P = polynomial_from_json(field(j, "P"));
  t.Ptilde = polynomial_from_json(field(j, "Ptilde"));
  t.Q = polynomial_from_json(field(j, "Q"));
  return t;
}

Json to_json(const BraidedSignature& s) {
  Json entries = Json::array();
  for (const PolynomialTriple& t : s.entries) entries.push_back(to_json(t));
  return Json{{"entries", std::move(entries)}};
}

BraidedSignature signature_from_json(const Json& j) {
  const Json& ej = field(j, "entries");
  if (!ej.is_array()) throw json_parse_error("entries must be an array");
  BraidedSignature s;
  for (const Json& t : ej) s.entries.push_back(triple_from_json(t));
  return s;
}

Json algebra_to_json(const FiniteDimHopfAlgebra& A) {
  Json labels = Json::array();
  for (const std::string& l : A.basis_labels) labels.push_back(l);

  Json unit = Json::array();
  for (const CycloScalar& c : A.unit) unit.push_back(to_json(c));
  Json counit = Json::array();
  for (const CycloScalar& c : A.counit) counit.push_back(to_json(c));

  Json mult = Json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [k, c] : A.mult[(size_t)i][(size_t)j])
        mult.push_back(Json::array({i, j, k, to_json(c)}));

  Json comult = Json::array();
  for (int i = 0; i < A.dim; ++i)
    for (const auto& [a, b, c] : A.comult[(size_t)i])
      comult.push_back(Json::array({i, a, b, to_json(c)}));

  return Json{{"dim", A.dim},
              {"labels", std::move(labels)},
              {"unit", std::move(unit)},
              {"counit", std::move(counit)},
              {"mult", std::move(mult)},
              {"comult", std::move(comult)},
              {"antipode", to_json(A.antipode)}};
}

HopfPtr algebra_from_json(const Json& j) {
  const int n = field(j, "dim").get<int>();
  if (n < 1) throw json_parse_error("dimension must be positive");

  const Json& lj = field(j, "labels");
  if (!lj.is_array() || (int)lj.size() != n)
    throw json_parse_error("label count does not match the dimension");
  std::vector<std::string> labels;
  labels.reserve((size_t)n);
  for (const Json& l : lj) labels.push_back(l.get<std::string>());

  auto dense_vector = [&](const char* key) {
    const Json& vj = field(j, key);
    if (!vj.is_array() || (int)vj.size() != n)
      throw json_parse_error(std::string(key) + " length mismatch");
    std::vector<CycloScalar> v;
    v.reserve((size_t)n);
    for (const Json& c : vj) v.push_back(scalar_from_json(c));
    return v;
  };

  std::vector<std::vector<SVec>> mult(
      (size_t)n, std::vector<SVec>((size_t)n));
  for (const Json& e : field(j, "mult")) {
    if (!e.is_array() || e.size() != 4)
      throw json_parse_error("mult entries must be [i, j, k, scalar]");
    const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n)
      throw json_parse_error("mult index out of range");
    mult[(size_t)i][(size_t)jj].emplace_back(k, scalar_from_json(e[3]));
  }

  std::vector<SPair> comult((size_t)n);
  for (const Json& e : field(j, "comult")) {
    if (!e.is_array() || e.size() != 4)
      throw json_parse_error("comult entries must be [i, a, b, scalar]");
    const int i = e[0].get<int>(), a = e[1].get<int>(), b = e[2].get<int>();
    if (i < 0 || i >= n || a < 0 || a >= n || b < 0 || b >= n)
      throw json_parse_error("comult index out of range");
    comult[(size_t)i].emplace_back(a, b, scalar_from_json(e[3]));
  }

  return FiniteDimHopfAlgebra::make(
      n, std::move(labels), std::move(mult), dense_vector("unit"),
      std::move(comult), dense_vector("counit"),
      mat_from_json(field(j, "antipode")));
}

Json functional_to_json(const LinearFunctional& f) {
  Json values = Json::array();
  for (const CycloScalar& c : f.values) values.push_back(to_json(c));
  return Json{{"values", std::move(values)}};
}

LinearFunctional functional_from_json(HopfPtr A, const Json& j) {
  const Json& vj = field(j, "values");
  if (!A || !vj.is_array() || (int)vj.size() != A->dim)
    throw json_parse_error("functional length does not match the algebra");
  LinearFunctional f{std::move(A), {}};
  f.values.reserve(vj.size());
  for (const Json& c : vj) f.values.push_back(scalar_from_json(c));
  return f;
}

Json braiding_to_json(const Braiding& b) {
  return Json{{"label", b.label()},
              {"family", b.family == BraidingFamily::sigma ? "sigma" : "tau"},
              {"N", b.params.N},
              {"L", b.params.L},
              {"nu", b.params.nu},
              {"lambda", b.params.lambda},
              {"par1", to_json(b.par1)},
              {"par2", to_json(b.par2)},
              {"values", to_json(b.values)},
              {"inverse_values", to_json(b.inverse_values)}};
}

Json classification_to_json(const H8Classification& c) {
  Json braidings = Json::array();
  for (const Braiding& b : c.braidings) braidings.push_back(b.label());

  Json classes = Json::array();
  for (const BraidedClass& cl : c.classes) {
    Json members = Json::array();
    for (int m : cl.members) members.push_back(m);
    Json witnesses = Json::array();
    for (const std::string& w : cl.transport_witnesses) witnesses.push_back(w);
    classes.push_back(
        Json{{"members", std::move(members)},
             {"representative", c.braidings[(size_t)cl.members[0]].label()},
             {"signature", to_json(cl.signature)},
             {"transport_witnesses", std::move(witnesses)}});
  }
  return Json{{"family", "h8"},
              {"braidings", std::move(braidings)},
              {"classes", std::move(classes)}};
}

std::vector<std::vector<int>> classes_from_json(const Json& j) {
  const Json& cj = field(j, "classes");
  if (!cj.is_array()) throw json_parse_error("classes must be an array");
  std::vector<std::vector<int>> out;
  for (const Json& c : cj) {
    const Json& members =
        c.is_object() ? field(c, "members") : c;
    if (!members.is_array())
      throw json_parse_error("class members must be an array");
    std::vector<int> ids;
    for (const Json& m : members) ids.push_back(m.get<int>());
    out.push_back(std::move(ids));
  }
  return out;
}

}  // namespace hopfbraid
