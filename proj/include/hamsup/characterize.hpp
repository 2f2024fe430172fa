#pragma once

#include <optional>
#include <string>

#include "hamsup/constructions.hpp"
#include "hamsup/grid_function.hpp"
#include "hamsup/spectra.hpp"

namespace hamsup {

enum class FactorizeStatus {
  Certified,               // certificate found and re-validated
  NotMember,               // no permutation turns f into a family member
  UncharacterizedRegime,   // i < j with i+j > n: no family template applies
};
const char* to_string(FactorizeStatus status);

struct FactorizeResult {
  FactorizeStatus status = FactorizeStatus::NotMember;
  std::optional<FactorizationCertificate> certificate;
  // Why the peeling stopped, for NotMember.
  std::string reason;
};

// Decides whether f_σ ∈ F1(n,q,i,j) (n >= i+j) or f_σ ∈ F2(n,q,i,i)
// (2i > n) for some σ. Requires f ≠ 0 and f ∈ U_[i,j](n,q); throws
// std::invalid_argument otherwise.
//
// Single-coordinate factors are peeled first by slice inspection (a4: one
// nonzero slice; a3: all slices equal; a2: two nonzero slices that are
// negatives of each other), then a1 pairs by a rank-one test of the
// (x_r, x_s) unfolding. Every certificate is rebuilt and compared exactly
// before it is returned.
FactorizeResult factorize(const GridFunction& f, EigenRange range);

enum class Verdict {
  MinimumCharacterized,    // support equals the bound and f is a family member
  MinimumNotInFamily,      // support equals the bound, no certificate
  MinimumUncharacterized,  // support equals the bound, regime has no template
  BelowBoundOpenRegime,    // support below the formula where q is outside its hypothesis
  BoundViolated,           // support below a bound that should hold here
  AboveMinimum,
};
const char* to_string(Verdict verdict);

struct CharacterizationVerdict {
  std::size_t support = 0;
  SupportBound bound;
  bool attains_bound = false;
  FactorizeResult factorization;
  Verdict verdict = Verdict::AboveMinimum;
};

CharacterizationVerdict is_minimum_and_characterized(const GridFunction& f, EigenRange range);

}  // namespace hamsup
