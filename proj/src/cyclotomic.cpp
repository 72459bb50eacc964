#include "hopfbraid/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfbraid {

unsigned long euler_phi(unsigned long m) {
  unsigned long r = m, n = m;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

std::vector<long> divisors_of(long m) {
  std::vector<long> d;
  for (long i = 1; i * i <= m; ++i)
    if (m % i == 0) {
      d.push_back(i);
      if (i != m / i) d.push_back(m / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

bool conductor_canonical(long m) { return m >= 1 && m % 4 != 2; }

// exact division of integer polynomials, monic divisor, ascending coefficients
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  if (num.size() < den.size()) throw std::logic_error("bad poly division");
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    long long c = num[i + den.size() - 1];
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (long long v : num)
    if (v != 0) throw std::logic_error("non-exact poly division");
  return q;
}

std::recursive_mutex g_phi_mutex;
std::map<long, std::vector<long long>> g_phi_cache;

const std::vector<long long>& cyclotomic_polynomial_locked(long m) {
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  std::vector<long long> result;
  if (m == 1) {
    result = {-1, 1};  // x - 1
  } else {
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;  // x^m - 1
    for (long d : divisors_of(m))
      if (d < m) num = poly_div_exact(num, cyclotomic_polynomial_locked(d));
    result = std::move(num);
  }
  return g_phi_cache.emplace(m, std::move(result)).first->second;
}

using SparseIntRow = std::vector<std::pair<int, long long>>;

// small dense rational Gauss-Jordan inverse, row-major
std::vector<std::vector<Rational>> invert_rational(
    std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular matrix in cyclotomic tables");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r)
      if (r != col && a[r][col] != 0) {
        Rational f = a[r][col];
        for (size_t j = 0; j < n; ++j) {
          a[r][j] -= f * a[col][j];
          inv[r][j] -= f * inv[col][j];
        }
      }
  }
  return inv;
}

struct SubfieldSolver {
  long d = 1;
  int phi_d = 1;
  std::vector<int> pivot_rows;
  std::vector<std::vector<Rational>> inv;                     // phi_d x phi_d
  std::vector<std::vector<std::pair<int, Rational>>> embed;   // per basis vector of Q(zeta_d)
};

struct Tables {
  long m = 1;
  int phi = 1;
  std::vector<SparseIntRow> red;      // x^e mod Phi_m for e in [phi, m)
  std::vector<SubfieldSolver> subs;   // ascending proper canonical divisors
};

std::mutex g_tables_mutex;
std::map<long, std::unique_ptr<Tables>> g_tables_cache;

const Tables& tables_for(long m) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto it = g_tables_cache.find(m);
  if (it != g_tables_cache.end()) return *it->second;

  auto t = std::make_unique<Tables>();
  t->m = m;
  t->phi = static_cast<int>(euler_phi(m));
  const int phi = t->phi;

  std::vector<long long> cyc;
  {
    std::lock_guard<std::recursive_mutex> lk(g_phi_mutex);
    cyc = cyclotomic_polynomial_locked(m);
  }

  // reduction rows: x^phi = -sum cyc[i] x^i, then multiply by x repeatedly
  if (m > 1) {
    std::vector<long long> cur(phi, 0);
    for (int i = 0; i < phi; ++i) cur[i] = -cyc[i];
    for (long e = phi; e < m; ++e) {
      SparseIntRow row;
      for (int i = 0; i < phi; ++i)
        if (cur[i] != 0) row.emplace_back(i, cur[i]);
      t->red.push_back(std::move(row));
      // cur <- x * cur mod Phi_m
      std::vector<long long> nxt(phi, 0);
      long long top = cur[phi - 1];
      for (int i = phi - 1; i > 0; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      if (top != 0)
        for (int i = 0; i < phi; ++i) nxt[i] += top * (-cyc[i]);
      cur = std::move(nxt);
    }
  }

  // subfield solvers
  for (long d : divisors_of(m)) {
    if (d == m || !conductor_canonical(d)) continue;
    SubfieldSolver s;
    s.d = d;
    s.phi_d = static_cast<int>(euler_phi(d));
    // embedding of zeta_d^i as reduced coordinates at conductor m
    std::vector<std::vector<Rational>> dense_cols;
    for (int i = 0; i < s.phi_d; ++i) {
      long e = i * (m / d);
      std::vector<Rational> col(phi, 0);
      if (e < phi) {
        col[e] = 1;
      } else {
        for (const auto& [ex, c] : t->red[e - phi]) col[ex] = c;
      }
      dense_cols.push_back(col);
      std::vector<std::pair<int, Rational>> sp;
      for (int r = 0; r < phi; ++r)
        if (col[r] != 0) sp.emplace_back(r, col[r]);
      s.embed.push_back(std::move(sp));
    }
    // pick phi_d rows of the embedding matrix forming an invertible block
    std::vector<std::vector<Rational>> basis;  // elimination workspace
    std::vector<int> basis_pivot;
    for (int r = 0; r < phi && (int)s.pivot_rows.size() < s.phi_d; ++r) {
      std::vector<Rational> row(s.phi_d);
      for (int i = 0; i < s.phi_d; ++i) row[i] = dense_cols[i][r];
      for (size_t b = 0; b < basis.size(); ++b) {
        int p = basis_pivot[b];
        if (row[p] != 0) {
          Rational f = row[p];
          for (int i = 0; i < s.phi_d; ++i) row[i] -= f * basis[b][i];
        }
      }
      int p = -1;
      for (int i = 0; i < s.phi_d; ++i)
        if (row[i] != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      Rational f = row[p];
      for (int i = 0; i < s.phi_d; ++i) row[i] /= f;
      basis.push_back(row);
      basis_pivot.push_back(p);
      s.pivot_rows.push_back(r);
    }
    if ((int)s.pivot_rows.size() != s.phi_d)
      throw std::logic_error("embedding matrix rank defect");
    std::vector<std::vector<Rational>> block(s.phi_d,
                                             std::vector<Rational>(s.phi_d));
    for (int i = 0; i < s.phi_d; ++i)
      for (int j = 0; j < s.phi_d; ++j)
        block[i][j] = dense_cols[j][s.pivot_rows[i]];
    s.inv = invert_rational(std::move(block));
    t->subs.push_back(std::move(s));
  }

  const Tables& ref = *t;
  g_tables_cache.emplace(m, std::move(t));
  return ref;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long m) {
  std::lock_guard<std::recursive_mutex> lk(g_phi_mutex);
  return cyclotomic_polynomial_locked(m);
}

CycloScalar::CycloScalar(const Rational& r) : conductor_(1) {
  if (r != 0) terms_.emplace_back(0, r);
}

CycloScalar::CycloScalar(long long n) : conductor_(1) {
  if (n != 0) terms_.emplace_back(0, Rational(n));
}

CycloScalar CycloScalar::root_of_unity(long m, long k) {
  if (m <= 0) throw std::invalid_argument("root_of_unity: modulus must be positive");
  k %= m;
  if (k < 0) k += m;
  long g = std::gcd(k, m);
  long n = m / g;
  long e = (g == 0) ? 0 : (k / g) % n;
  bool negate = false;
  if (n % 4 == 2) {
    long u = n / 2;  // odd
    negate = (e % 2 != 0);
    e = (e % u) * ((u + 1) / 2) % u;
    n = u;
  }
  CycloScalar z;
  if (n == 1) {
    z = CycloScalar(Rational(1));
  } else {
    const Tables& t = tables_for(n);
    z.conductor_ = n;
    if (e < t.phi) {
      z.terms_.emplace_back(static_cast<int>(e), Rational(1));
    } else {
      for (const auto& [ex, c] : t.red[e - t.phi])
        z.terms_.emplace_back(ex, Rational(c));
    }
    z.canonicalize();
  }
  if (negate) z = -z;
  return z;
}

CycloScalar CycloScalar::sqrt_of_sign(const CycloScalar& sign) {
  if (sign == CycloScalar(1)) return CycloScalar(1);
  if (sign == CycloScalar(-1)) return root_of_unity(4, 1);
  throw invalid_sign(sign.str());
}

Rational CycloScalar::rational_value() const {
  if (conductor_ != 1) throw std::domain_error("value is not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

CycloScalar CycloScalar::lifted(long target) const {
  if (target == conductor_) return *this;
  const Tables& t = tables_for(target);
  long step = target / conductor_;
  std::vector<Rational> dense(t.phi, 0);
  for (const auto& [e, c] : terms_) {
    long E = e * step;  // < target
    if (E < t.phi) {
      dense[E] += c;
    } else {
      for (const auto& [ex, ic] : t.red[E - t.phi]) dense[ex] += c * ic;
    }
  }
  CycloScalar r;
  r.conductor_ = target;
  for (int i = 0; i < t.phi; ++i)
    if (dense[i] != 0) r.terms_.emplace_back(i, dense[i]);
  return r;
}

void CycloScalar::canonicalize() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
  if (terms_.empty()) {
    conductor_ = 1;
    return;
  }
  if (conductor_ == 1) return;
  if (terms_.size() == 1) {
    // monomial c * zeta_m^e: its conductor is the canonical form of m/gcd(e,m),
    // no subfield scan needed
    const auto [e, c] = terms_[0];
    if (e == 0) {
      conductor_ = 1;
      return;
    }
    long g = std::gcd(static_cast<long>(e), conductor_);
    if (g == 1) return;
    long n = conductor_ / g, e2 = e / g;
    bool negate = false;
    if (n % 4 == 2) {
      long u = n / 2;
      negate = (e2 % 2 != 0);
      e2 = (e2 % u) * ((u + 1) / 2) % u;
      n = u;
    }
    Rational coeff = negate ? -c : c;
    conductor_ = n;
    terms_.clear();
    if (n == 1) {
      terms_.emplace_back(0, coeff);
      return;
    }
    const Tables& tn = tables_for(n);
    if (e2 < tn.phi) {
      terms_.emplace_back(static_cast<int>(e2), coeff);
    } else {
      for (const auto& [ex, ic] : tn.red[e2 - tn.phi])
        terms_.emplace_back(ex, coeff * ic);
    }
    canonicalize();
    return;
  }
  const Tables& t = tables_for(conductor_);
  for (const auto& s : t.subs) {
    if (s.d == 1) {
      // handled by the single-term shortcut above; a nontrivial tail means
      // the value is rational only if all basis coords beyond 0 vanish,
      // which the shortcut already covers
      continue;
    }
    // candidate coordinates c = inv * v|pivot
    std::vector<Rational> vp(s.phi_d, 0);
    {
      size_t ti = 0;
      for (int i = 0; i < s.phi_d; ++i) {
        int want = s.pivot_rows[i];
        while (ti < terms_.size() && terms_[ti].first < want) ++ti;
        if (ti < terms_.size() && terms_[ti].first == want) vp[i] = terms_[ti].second;
      }
    }
    std::vector<Rational> c(s.phi_d, 0);
    for (int i = 0; i < s.phi_d; ++i) {
      Rational acc = 0;
      for (int j = 0; j < s.phi_d; ++j)
        if (vp[j] != 0) acc += s.inv[i][j] * vp[j];
      c[i] = acc;
    }
    // verify embedding reproduces v exactly
    std::vector<Rational> dense(t.phi, 0);
    for (int i = 0; i < s.phi_d; ++i)
      if (c[i] != 0)
        for (const auto& [r, ec] : s.embed[i]) dense[r] += c[i] * ec;
    bool ok = true;
    {
      size_t ti = 0;
      for (int r = 0; r < t.phi && ok; ++r) {
        Rational have = (ti < terms_.size() && terms_[ti].first == r)
                            ? terms_[ti++].second
                            : Rational(0);
        if (dense[r] != have) ok = false;
      }
      if (ti != terms_.size()) ok = false;
    }
    if (ok) {
      conductor_ = s.d;
      terms_.clear();
      for (int i = 0; i < s.phi_d; ++i)
        if (c[i] != 0) terms_.emplace_back(i, c[i]);
      canonicalize();  // single-term rational shortcut, nothing deeper
      return;
    }
  }
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  long L = std::lcm(conductor_, o.conductor_);
  CycloScalar a = lifted(L), b = o.lifted(L);
  std::vector<Term> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      merged.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      merged.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].second + b.terms_[j].second;
      if (c != 0) merged.emplace_back(a.terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  conductor_ = L;
  terms_ = std::move(merged);
  canonicalize();
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  if (is_zero() || o.is_zero()) {
    conductor_ = 1;
    terms_.clear();
    return *this;
  }
  long L = std::lcm(conductor_, o.conductor_);
  CycloScalar a = lifted(L), b = o.lifted(L);
  if (L == 1) {
    Rational c = a.terms_[0].second * b.terms_[0].second;
    conductor_ = 1;
    terms_.clear();
    if (c != 0) terms_.emplace_back(0, c);
    return *this;
  }
  const Tables& t = tables_for(L);
  std::vector<Rational> dense(t.phi, 0);
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) {
      long e = e1 + e2;
      if (e >= L) e -= L;
      Rational c = c1 * c2;
      if (e < t.phi) {
        dense[e] += c;
      } else {
        for (const auto& [ex, ic] : t.red[e - t.phi]) dense[ex] += c * ic;
      }
    }
  conductor_ = L;
  terms_.clear();
  for (int i = 0; i < t.phi; ++i)
    if (dense[i] != 0) terms_.emplace_back(i, dense[i]);
  canonicalize();
  return *this;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw division_by_zero();
  if (conductor_ == 1) return CycloScalar(Rational(1) / terms_[0].second);
  if (terms_.size() == 1) {
    const auto& [e, c] = terms_[0];
    return CycloScalar(Rational(1) / c) * root_of_unity(conductor_, conductor_ - e);
  }
  // multiplication-by-value matrix over Q, solve M x = e_0
  const Tables& t = tables_for(conductor_);
  const int n = t.phi;
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, 0));
  for (int j = 0; j < n; ++j) {
    // column j: value * x^j
    for (const auto& [e1, c1] : terms_) {
      long e = e1 + j;
      if (e >= conductor_) e -= conductor_;
      if (e < n) {
        M[e][j] += c1;
      } else {
        for (const auto& [ex, ic] : t.red[e - n]) M[ex][j] += c1 * ic;
      }
    }
  }
  std::vector<std::vector<Rational>> Minv = invert_rational(std::move(M));
  CycloScalar r;
  r.conductor_ = conductor_;
  for (int i = 0; i < n; ++i)
    if (Minv[i][0] != 0) r.terms_.emplace_back(i, Minv[i][0]);
  r.canonicalize();
  return r;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) {
  return *this *= o.inverse();
}

CycloScalar CycloScalar::pow(long e) const {
  if (e == 0) return CycloScalar(1);
  if (e < 0) return inverse().pow(-e);
  CycloScalar base(*this), acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

CycloScalar CycloScalar::galois(long j) const {
  long m = conductor_;
  long jm = j % m;
  if (jm < 0) jm += m;
  if (std::gcd(jm, m) != 1)
    throw std::invalid_argument("galois exponent not coprime to conductor");
  if (m == 1) return *this;
  const Tables& t = tables_for(m);
  std::vector<Rational> dense(t.phi, 0);
  for (const auto& [e, c] : terms_) {
    long E = (e * jm) % m;
    if (E < t.phi) {
      dense[E] += c;
    } else {
      for (const auto& [ex, ic] : t.red[E - t.phi]) dense[ex] += c * ic;
    }
  }
  CycloScalar r;
  r.conductor_ = m;
  for (int i = 0; i < t.phi; ++i)
    if (dense[i] != 0) r.terms_.emplace_back(i, dense[i]);
  r.canonicalize();
  return r;
}

bool CycloScalar::operator<(const CycloScalar& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
  std::vector<Rational> a = dense_coeffs(), b = o.dense_coeffs();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::optional<long> CycloScalar::multiplicative_order() const {
  if (is_zero()) throw zero_input();
  long m = conductor_;
  long bound = (m % 2 == 1) ? 2 * m : m;
  if (pow(bound) != CycloScalar(1)) return std::nullopt;
  for (long d : divisors_of(bound))
    if (pow(d) == CycloScalar(1)) return d;
  return std::nullopt;  // unreachable
}

std::vector<Rational> CycloScalar::dense_coeffs() const {
  size_t phi = euler_phi(conductor_);
  std::vector<Rational> dense(phi, 0);
  for (const auto& [e, c] : terms_) dense[e] = c;
  return dense;
}

CycloScalar CycloScalar::from_dense(long conductor,
                                    const std::vector<Rational>& coeffs) {
  if (!conductor_canonical(conductor))
    throw std::invalid_argument("conductor must be >= 1 and not 2 mod 4");
  if (coeffs.size() != euler_phi(conductor))
    throw std::invalid_argument("coefficient vector has wrong length");
  CycloScalar r;
  r.conductor_ = conductor;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) r.terms_.emplace_back(static_cast<int>(i), coeffs[i]);
  r.canonicalize();
  return r;
}

std::string CycloScalar::str() const {
  if (terms_.empty()) return "0";
  if (conductor_ == 1) return rational_str(terms_[0].second);
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational ac = c < 0 ? Rational(-c) : c;
    bool neg = c < 0;
    std::string base;
    if (e == 0) {
      base = "";
    } else if (conductor_ == 4) {
      base = "i";
    } else {
      base = "z" + std::to_string(conductor_);
      if (e > 1) base += "^" + std::to_string(e);
    }
    std::string piece;
    if (base.empty()) {
      piece = rational_str(ac);
    } else if (ac == 1) {
      piece = base;
    } else {
      piece = rational_str(ac) + "*" + base;
    }
    if (first) {
      out << (neg ? "-" : "") << piece;
      first = false;
    } else {
      out << (neg ? " - " : " + ") << piece;
    }
  }
  return out.str();
}

}  // namespace hopfbraid
