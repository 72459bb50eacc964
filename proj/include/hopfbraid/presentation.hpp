#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfbraid/hopf_algebra.hpp"

namespace hopfbraid {

struct rewrite_budget_exceeded : std::runtime_error {
  explicit rewrite_budget_exceeded(const std::string& w)
      : std::runtime_error("rewrite budget exceeded on word " + w) {}
};

struct basis_mismatch : std::runtime_error {
  explicit basis_mismatch(const std::string& w)
      : std::runtime_error("presented basis mismatch: " + w) {}
};

using Word = std::vector<int>;               // generator indices
using WordCombo = std::map<Word, CycloScalar>;

struct RewriteRule {
  Word lhs;        // nonempty
  WordCombo rhs;   // may be empty (rewrite to zero)
};

// String rewriting system over a generator alphabet with linear right-hand
// sides.  normal_form applies leftmost matches (shortest rule first on ties)
// until no rule applies; termination is enforced by a step budget because the
// rule sets used here are validated a posteriori (associativity + dimension
// of the resulting algebra) rather than by a confluence proof.
class Presentation {
 public:
  std::vector<std::string> generators;
  std::vector<RewriteRule> rules;
  long step_budget = 100000;

  WordCombo normal_form(const Word& w) const;
  WordCombo normal_form(const WordCombo& combo) const;

  std::string word_str(const Word& w) const;

 private:
  mutable std::unordered_map<std::string, WordCombo> cache_;
  static std::string key(const Word& w);
};

// Structure constants of the subalgebra spanned by a fixed list of basis
// words.  Products falling outside the span raise basis_mismatch.
class PresentedAlgebra {
 public:
  PresentedAlgebra(Presentation pres, std::vector<Word> basis_words);

  const Presentation& presentation() const { return pres_; }
  const std::vector<Word>& basis_words() const { return basis_; }
  int dim() const { return (int)basis_.size(); }

  const std::vector<std::vector<SVec>>& mult() const { return mult_; }
  const std::vector<CycloScalar>& unit_coords() const { return unit_; }

  // expected-basis coordinates of arbitrary words / linear combinations
  std::vector<CycloScalar> coords_of_word(const Word& w) const;
  std::vector<CycloScalar> coords_of(const WordCombo& combo) const;

 private:
  Presentation pres_;
  std::vector<Word> basis_;
  std::vector<std::vector<SVec>> mult_;
  std::vector<CycloScalar> unit_;

  std::map<Word, int> nf_index_;          // normal-form word -> column
  Mat solve_transform_;                   // E with E * B^T in reduced form
  std::vector<int> pivot_row_of_basis_;   // row of R giving each coordinate
  std::vector<bool> row_is_pivot_;
  std::vector<CycloScalar> solve(const WordCombo& nf_combo) const;
};

}  // namespace hopfbraid
