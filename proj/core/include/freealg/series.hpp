#pragma once

#include <vector>

#include "freealg/ncpoly.hpp"

namespace freealg {

// exp(f) truncated at total degree max_degree; f must have zero constant
// term.
NCPoly exp_trunc(const NCPoly& f, int max_degree);

// log(f) truncated at total degree max_degree; f must have constant term 1.
NCPoly log_trunc(const NCPoly& f, int max_degree);

// log(exp(x1) exp(x2)) truncated at total degree max_degree, as an arity-2
// element. Every homogeneous component is a Lie element.
NCPoly bch(int max_degree);

// Substitutes args[i-1] for the letter xi of f (all args share one arity),
// truncating at total degree max_degree. Degrees only grow under
// multiplication, so intermediate truncation is exact.
NCPoly series_compose(const NCPoly& f, const std::vector<NCPoly>& args,
                      int max_degree);

}  // namespace freealg
