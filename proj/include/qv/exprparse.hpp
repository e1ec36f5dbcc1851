#pragma once

// Bundle expression mini-language:
//   expr  := atom (' '* '*' ' '* atom)*
//   atom  := 'O' twist? | 'H' | 'U' digits '^'? twist?
//   twist := '(' '-'? digits 'H' ')'
// Examples: "O", "U1", "U2^", "O(2H)", "U1^ * U2 * O(-1H)", "H".

#include <string>

#include "qv/bundle.hpp"
#include "qv/quiver.hpp"

namespace qv {

BundleExpr parse_bundle_expr(const std::string& text, const Quiver& q, const DimVec& d);

}  // namespace qv
