#pragma once

#include "fresco/fresco.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fresco {

struct UnsupportedShape : std::domain_error {
  using std::domain_error::domain_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

enum class Rank3Case { C1, C2, C3, C4, C4p, C5, C6, C6p, C6pp, C6ppp, C7, C8, C8p, C8pp };

std::string case_tag(Rank3Case c);
// exponents the normalized S_1 may carry in this case
// beta_zero matters only in case (3)
std::vector<int> case_support(Rank3Case c, int p1, int p2, bool beta_zero = false);
std::string case_template(Rank3Case c);

struct Rank3NormalForm {
  Rank3Case tag = Rank3Case::C1;
  Scalar lambda1, p1, p2;
  std::vector<std::pair<std::string, Scalar>> params;
  FrescoPresentation pres;  // realized normal form
  IsoResult check;          // normal form against the input

  Scalar param(const std::string& name) const;
  bool has_param(const std::string& name) const;
};

Rank3NormalForm normal_form_rank3(const FrescoPresentation& p);
// case (4'): the equivalent form 1 + alpha b^p1 + delta b^(p1+1) with alpha gamma = (p1 - 1) delta
FrescoPresentation alternative_4prime(const Rank3NormalForm& nf);
std::string format_normal_form(const Rank3NormalForm& nf);

Scalar gamma3(const FrescoPresentation& p);
// rank-3 slice (lambda_h, lambda_h+1, lambda_h+2) of a standard presentation, 1-based h
FrescoPresentation slice3(const FrescoPresentation& p, int h);
Scalar gamma_h(const FrescoPresentation& p, int h);
Scalar pi_ij(const FrescoPresentation& p, int i, int j);
Scalar alpha2(const FrescoPresentation& p);

}  // namespace fresco
