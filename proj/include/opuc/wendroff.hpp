#pragma once

// Inverse theorems: recover (word, lambda, mu) from two interlacing
// paraorthogonal zero sets, and (word, lambda) from first/second kind zero
// sets obeying the product condition.

#include <vector>

#include "opuc/common.hpp"
#include "opuc/szego.hpp"

namespace opuc {

// Two lists of n+1 unimodular points each, stored in increasing argument.
class CircularConfiguration {
 public:
  CircularConfiguration(std::vector<cx> first, std::vector<cx> second);

  const std::vector<cx>& first() const { return first_; }
  const std::vector<cx>& second() const { return second_; }
  int size() const { return static_cast<int>(first_.size()); }

 private:
  std::vector<cx> first_, second_;
};

// True iff every circular arc between consecutive members of `first` holds
// exactly one member of `second`.  Arcs sharing an endpoint within 1e-9 of
// argument are treated as non-interlacing rather than perturbed.
bool interlace_check(const CircularConfiguration& cfg);

struct TwoPopucResult {
  VerblunskyWord word;  // interior only
  cx lambda;
  cx mu;
};

// Zeros of Phi_{n+1}(.;lambda) and Phi_{n+1}(.;mu) -> the unique (word,
// lambda, mu).  Non-interlacing data surfaces as a root of the reconstructed
// Phi_n on or outside the circle (NotRealizableError).
TwoPopucResult reconstruct_from_two_popuc(const CircularConfiguration& cfg);

struct SecondKindResult {
  VerblunskyWord word;  // interior only
  cx lambda;
};

// First kind zeros w and second kind zeros y with prod y == -prod w ->
// (word, lambda), via the quasi-Caratheodory residue measure at the w's.
SecondKindResult reconstruct_second_kind(const CircularConfiguration& cfg);

}  // namespace opuc
