#pragma once

#include <iosfwd>
#include <vector>

#include "lnr/geometry.hpp"

namespace lnr {

/// One weighted subensemble row: outcomes A, B for Bob's first setting and B2
/// for his second, all in {-1,+1}.
struct OutcomeEntry {
  double weight;
  int a;
  int b;
  int b2;
};

/// Discrete weighted subensemble of +-1 outcomes. Weights are strictly
/// positive and sum to 1 within 1e-12; continuous hidden-variable averages
/// become weighted sums, which is lossless for the linear inequalities
/// checked here.
class OutcomeTable {
 public:
  explicit OutcomeTable(std::vector<OutcomeEntry> entries);

  const std::vector<OutcomeEntry>& entries() const { return entries_; }

 private:
  std::vector<OutcomeEntry> entries_;
};

/// -1 + |A+B| = AB = 1 - |A-B| for A,B in {-1,+1}; throws for other inputs.
bool check_pointwise_identity(int a, int b);

struct SubensembleReport {
  double lhs_plus;   // |mean(A) + mean(B)|
  double lhs_minus;  // |mean(A) - mean(B)|
  double rhs_plus;   // 1 + mean(AB)
  double rhs_minus;  // 1 - mean(AB)
  bool holds;
};

/// |mean(A) +- mean(B)| <= 1 +- mean(AB), both sign variants.
SubensembleReport check_subensemble_inequality(const OutcomeTable& t);

struct TriangleStepReport {
  double lhs_plus;   // |mean(AB) + mean(AB2)|
  double lhs_minus;  // |mean(AB) - mean(AB2)|
  double rhs_plus;   // 2 - |mean(B) - mean(B2)|
  double rhs_minus;  // 2 - |mean(B) + mean(B2)|
  bool holds;
};

/// |mean(AB) +- mean(AB2)| <= 2 - |mean(B) -+ mean(B2)|, both sign variants.
TriangleStepReport check_triangle_step(const OutcomeTable& t);

/// Parse the CLI table format: CSV with header `weight,A,B,B2`.
OutcomeTable load_outcome_table_csv(std::istream& in);

}  // namespace lnr
