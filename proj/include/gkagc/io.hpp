#pragma once

#include <iosfwd>

#include "gkagc/codes.hpp"

namespace gkagc {

/// GKMAT/1: deterministic ASCII matrix format.
///   line 1: "GKMAT/1"
///   line 2: "p=<p> m=<m> irr=<c0,...,cm>"            (field spec)
///   line 3: "qbar=<> orbit=<> kind=<Cl:ell|Ctilde:d> n=<> rows=<>"
///   then one line per row: space-separated integer encodings.
void write_gkmat(std::ostream& os, const EvalMatrix& m);

}  // namespace gkagc
