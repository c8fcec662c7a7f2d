#pragma once

#include <string>
#include <vector>

#include "tcla/linalg.hpp"
#include "tcla/verma.hpp"

namespace tcla {

/// T_chi^Lambda: rows and columns indexed by the downward paths of weight
/// chi; entry (i, j) is the v_Lambda-coefficient of theta^j theta_i v_Lambda.
struct ShapMatrix {
  RootVector chi;
  std::vector<PBWMonomial> monomials;
  Matrix entries;
};

/// Upward path of theta applied to v. The dual raising element of the
/// first factor of theta acts first, so the composite operator is the
/// reversal of theta with each f (x) t^i replaced by dual(f) (x) t^i.
VermaVector ascend(const VermaModule& module, const PBWMonomial& theta, VermaVector v);

ShapMatrix shap_matrix(const WeightFunctional& lambda, const RootVector& chi, const TruncatedAlgebra& alg);
ShapMatrix shap_matrix(const VermaModule& module, const RootVector& chi);

/// Same matrix over a caller-chosen ordering of the monomials.
ShapMatrix shap_matrix(const VermaModule& module, const RootVector& chi, std::vector<PBWMonomial> monomials);

Rat shap_det(const WeightFunctional& lambda, const RootVector& chi, const TruncatedAlgebra& alg);
Rat shap_det(const VermaModule& module, const RootVector& chi);

/// {"chi": [...], "monomials": [...], "entries": [["p/q", ...], ...], "det": "p/q"}
std::string shap_to_json(const ShapMatrix& m, const Rat& det);

}  // namespace tcla
