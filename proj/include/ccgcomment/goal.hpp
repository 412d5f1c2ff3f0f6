#pragma once

#include <string>
#include <vector>

#include "ccgcomment/lambda.hpp"

namespace ccgc {

/// A communicative goal: a non-empty multiset of ground predicates that a
/// sentence must express, no more and no less.
class Goal {
 public:
  /// Throws std::invalid_argument if `predicates` is empty or holds anything
  /// but ground Pred terms.
  explicit Goal(std::vector<Term> predicates);

  const std::vector<Term>& predicates() const { return predicates_; }

  /// The conjunction of all predicates, in order.
  Term as_term() const { return conj_all(predicates_); }

  /// Each predicate in the printed term syntax.
  std::vector<std::string> printed() const;

  /// Multiset equality, predicates compared with `equivalent`.
  friend bool operator==(const Goal& a, const Goal& b);

 private:
  std::vector<Term> predicates_;
};

}  // namespace ccgc
