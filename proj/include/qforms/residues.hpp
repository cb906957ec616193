#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qforms {

/// Number of x in [0, n) with x^2 = a (mod n).
int64_t res_count(int64_t a, int64_t n);
/// 2^{r+u}: r odd prime divisors of n, u = 0, 1, 2 for 4 not dividing n, 4 || n, 8 | n.
int64_t res_rule(int64_t n);

int64_t th75_count(int64_t p, int64_t q);
int64_t th75_rule(int64_t p, int64_t q);

struct ImpossibilityResult {
  bool counterexample = false;
  int64_t x = 0;
  int64_t y = 0;
  int symbol = 0;
};

ImpossibilityResult impossibility_check(int64_t a, int64_t b, int64_t n);

struct ResidueClassification {
  int64_t t = 0;
  std::vector<int64_t> S1, Sm1, S0, S11, S12;
};

ResidueClassification th78_classify(int64_t t);

}  // namespace qforms
