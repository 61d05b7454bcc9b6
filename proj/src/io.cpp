#include "gkagc/io.hpp"

#include <ostream>

namespace gkagc {

void write_gkmat(std::ostream& os, const EvalMatrix& m) {
  os << "GKMAT/1\n";
  os << "p=" << m.field->p() << " m=" << m.field->m() << " irr=";
  const auto& irr = m.field->modulus();
  for (std::size_t i = 0; i < irr.size(); ++i) os << (i ? "," : "") << irr[i];
  os << "\n";
  os << "qbar=" << m.qbar << " orbit=" << to_string(m.orbit) << " kind=" << m.kind << ":"
     << m.param << " n=" << m.n << " rows=" << m.rows.size() << "\n";
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << row[j];
    }
    os << '\n';
  }
}

}  // namespace gkagc
