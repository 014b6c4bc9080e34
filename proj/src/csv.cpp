#include "qinvar/csv.hpp"

#include <cstdio>

namespace qinvar::csv {

std::string format_double(double x) {
  char buf[32];
  // "%.17g" is locale-sensitive only through the decimal point, and the
  // library never calls setlocale.
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

void write_isotropic(std::ostream& out, std::span<const IsotropicRow> rows) {
  out << "F,I1,I2,tangle_eq8,lhs,rhs\n";
  for (const auto& r : rows) {
    out << format_double(r.fidelity) << ',' << format_double(r.info_1) << ',' << format_double(r.info_2) << ','
        << format_double(r.tangle) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << '\n';
  }
}

void write_decoherence(std::ostream& out, ChannelKind kind, std::span<const DecoherenceRow> rows) {
  const bool closed = kind == ChannelKind::kDepolarization;
  out << (closed ? "a,p,I_bits,I_closed\n" : "a,p,I_bits\n");
  for (const auto& r : rows) {
    out << format_double(r.a) << ',' << format_double(r.p) << ',' << format_double(r.info);
    if (closed) out << ',' << format_double(r.info_closed);
    out << '\n';
  }
}

void write_mub(std::ostream& out, const MubSet& set) {
  out << "basis,vector,component,re,im\n";
  for (std::size_t a = 0; a < set.bases.size(); ++a) {
    const Matrix& u = set.bases[a];
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      for (Eigen::Index m = 0; m < u.rows(); ++m)
        out << a << ',' << j << ',' << m << ',' << format_double(u(m, j).real()) << ','
            << format_double(u(m, j).imag()) << '\n';
  }
}

}  // namespace qinvar::csv
