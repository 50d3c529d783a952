#pragma once

#include <string>
#include <vector>

#include "artin/module.hpp"
#include "artin/ring.hpp"

namespace testing_helpers {

using artin::PrimeField;

inline artin::RingPtr<PrimeField> ring(const std::vector<std::string>& vars,
                                       const std::vector<std::string>& rels, unsigned p = 101) {
  return artin::make_ring(PrimeField(p), artin::parse_presentation(vars, rels));
}

inline artin::RingPtr<PrimeField> agp_ring() {
  return ring({"x1", "x2", "x3", "x4"},
              {"x1^2", "x1*x2 - x3*x4", "x1*x2 - x4^2", "x1*x3 - x2*x4", "x1*x4 - x2^2",
               "x1*x4 - x2*x3", "x1*x4 - x3^2"});
}

/// Presentation matrix from polynomial strings, row-major.
inline artin::RMatrix<PrimeField> rmatrix(const artin::RingPtr<PrimeField>& r,
                                          const std::vector<std::vector<std::string>>& rows) {
  artin::RMatrix<PrimeField> m(r, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = r->normal_form(artin::parse_polynomial(rows[i][j], r->presentation().vars));
  return m;
}

inline artin::FiniteModule<PrimeField> agp_M(const artin::RingPtr<PrimeField>& r) {
  return artin::from_presentation(rmatrix(r, {{"x3", "x1"}, {"x4", "x2"}}));
}

}  // namespace testing_helpers
