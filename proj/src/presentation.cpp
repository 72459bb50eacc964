#include "hopfbraid/presentation.hpp"

#include <algorithm>

namespace hopfbraid {

namespace {

// Does rule.lhs occur in w starting at position pos?
bool matches_at(const Word& w, const Word& lhs, size_t pos) {
  if (pos + lhs.size() > w.size()) return false;
  for (size_t i = 0; i < lhs.size(); ++i)
    if (w[pos + i] != lhs[i]) return false;
  return true;
}

// Leftmost redex; among rules matching at the same position the shortest
// left-hand side wins, then list order.  Returns (pos, rule) or rule == -1.
std::pair<size_t, int> find_redex(const Word& w,
                                  const std::vector<RewriteRule>& rules) {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    int best = -1;
    for (size_t r = 0; r < rules.size(); ++r) {
      if (!matches_at(w, rules[r].lhs, pos)) continue;
      if (best < 0 || rules[r].lhs.size() < rules[best].lhs.size()) best = (int)r;
    }
    if (best >= 0) return {pos, best};
  }
  return {0, -1};
}

void add_term(WordCombo& combo, const Word& w, const CycloScalar& c) {
  auto it = combo.find(w);
  if (it == combo.end()) {
    if (!c.is_zero()) combo.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) combo.erase(it);
}

}  // namespace

std::string Presentation::key(const Word& w) {
  std::string k;
  k.reserve(w.size());
  for (int g : w) k.push_back((char)(g + 1));
  return k;
}

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    if (w[i] >= 0 && w[i] < (int)generators.size())
      s += generators[w[i]];
    else
      s += "g?" + std::to_string(w[i]);
  }
  return s;
}

WordCombo Presentation::normal_form(const Word& w) const {
  auto cached = cache_.find(key(w));
  if (cached != cache_.end()) return cached->second;

  WordCombo result;
  std::vector<std::pair<Word, CycloScalar>> work;
  work.emplace_back(w, CycloScalar(1));
  long steps = 0;

  while (!work.empty()) {
    auto [cur, coeff] = std::move(work.back());
    work.pop_back();
    if (coeff.is_zero()) continue;

    if (!(cur == w)) {
      auto hit = cache_.find(key(cur));
      if (hit != cache_.end()) {
        for (const auto& [nw, nc] : hit->second) add_term(result, nw, coeff * nc);
        continue;
      }
    }

    auto [pos, rule] = find_redex(cur, rules);
    if (rule < 0) {
      add_term(result, cur, coeff);
      continue;
    }
    if (++steps > step_budget) throw rewrite_budget_exceeded(word_str(w));

    const RewriteRule& rr = rules[rule];
    for (const auto& [piece, pc] : rr.rhs) {
      Word next;
      next.reserve(cur.size() - rr.lhs.size() + piece.size());
      next.insert(next.end(), cur.begin(), cur.begin() + pos);
      next.insert(next.end(), piece.begin(), piece.end());
      next.insert(next.end(), cur.begin() + pos + rr.lhs.size(), cur.end());
      work.emplace_back(std::move(next), coeff * pc);
    }
  }

  cache_.emplace(key(w), result);
  return result;
}

WordCombo Presentation::normal_form(const WordCombo& combo) const {
  WordCombo result;
  for (const auto& [w, c] : combo) {
    if (c.is_zero()) continue;
    for (const auto& [nw, nc] : normal_form(w)) add_term(result, nw, c * nc);
  }
  return result;
}

PresentedAlgebra::PresentedAlgebra(Presentation pres, std::vector<Word> basis_words)
    : pres_(std::move(pres)), basis_(std::move(basis_words)) {
  const int n = (int)basis_.size();
  if (n == 0) throw basis_mismatch("empty basis");
  for (const auto& r : pres_.rules)
    if (r.lhs.empty()) throw basis_mismatch("rewrite rule with empty left-hand side");

  std::vector<WordCombo> nf(n);
  for (int i = 0; i < n; ++i) nf[i] = pres_.normal_form(basis_[i]);

  // Column space: every normal-form word reachable from the basis, plus the
  // empty word so the unit can be expressed.
  for (const auto& combo : nf)
    for (const auto& [w, c] : combo) {
      (void)c;
      if (!nf_index_.count(w)) nf_index_.emplace(w, (int)nf_index_.size());
    }
  if (!nf_index_.count(Word{})) nf_index_.emplace(Word{}, (int)nf_index_.size());
  const int m = (int)nf_index_.size();

  // B[i][col] = coefficient of normal-form word `col` in nf(basis_[i]).
  // Solving x * B = target is done through a row reduction of B^T recorded in
  // solve_transform_, so products can be expressed back in the chosen basis.
  Mat bt(m, n);
  for (int i = 0; i < n; ++i)
    for (const auto& [w, c] : nf[i]) bt.at(nf_index_.at(w), i) = c;

  solve_transform_ = Mat::identity(m);
  pivot_row_of_basis_.assign(n, -1);
  row_is_pivot_.assign(m, false);
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = row; r < m; ++r)
      if (!bt.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0)
      throw basis_mismatch("basis words are linearly dependent: " +
                           pres_.word_str(basis_[col]));
    if (piv != row) {
      for (int c2 = 0; c2 < n; ++c2) std::swap(bt.at(piv, c2), bt.at(row, c2));
      for (int c2 = 0; c2 < m; ++c2)
        std::swap(solve_transform_.at(piv, c2), solve_transform_.at(row, c2));
    }
    CycloScalar inv = bt.at(row, col).inverse();
    for (int c2 = 0; c2 < n; ++c2) bt.at(row, c2) *= inv;
    for (int c2 = 0; c2 < m; ++c2) solve_transform_.at(row, c2) *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || bt.at(r, col).is_zero()) continue;
      CycloScalar f = bt.at(r, col);
      for (int c2 = 0; c2 < n; ++c2) bt.at(r, c2) -= f * bt.at(row, c2);
      for (int c2 = 0; c2 < m; ++c2)
        solve_transform_.at(r, c2) -= f * solve_transform_.at(row, c2);
    }
    pivot_row_of_basis_[col] = row;
    row_is_pivot_[row] = true;
    ++row;
  }

  unit_ = solve(WordCombo{{Word{}, CycloScalar(1)}});

  mult_.assign(n, std::vector<SVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Word prod = basis_[i];
      prod.insert(prod.end(), basis_[j].begin(), basis_[j].end());
      mult_[i][j] = sparsify(solve(pres_.normal_form(prod)));
    }
}

std::vector<CycloScalar> PresentedAlgebra::solve(const WordCombo& nf_combo) const {
  const int n = (int)basis_.size();
  const int m = (int)row_is_pivot_.size();
  // y = solve_transform_ * target, accumulated column by column since the
  // target combos are sparse.
  std::vector<CycloScalar> y(m, CycloScalar(0));
  for (const auto& [w, c] : nf_combo) {
    auto it = nf_index_.find(w);
    if (it == nf_index_.end())
      throw basis_mismatch("word outside the basis span: " + pres_.word_str(w));
    for (int r = 0; r < m; ++r) {
      const CycloScalar& e = solve_transform_.at(r, it->second);
      if (!e.is_zero()) y[r] += c * e;
    }
  }
  for (int r = 0; r < m; ++r)
    if (!row_is_pivot_[r] && !y[r].is_zero())
      throw basis_mismatch("combination outside the basis span");
  std::vector<CycloScalar> x(n, CycloScalar(0));
  for (int j = 0; j < n; ++j) x[j] = y[pivot_row_of_basis_[j]];
  return x;
}

std::vector<CycloScalar> PresentedAlgebra::coords_of_word(const Word& w) const {
  return solve(pres_.normal_form(w));
}

std::vector<CycloScalar> PresentedAlgebra::coords_of(const WordCombo& combo) const {
  return solve(pres_.normal_form(combo));
}

}  // namespace hopfbraid
