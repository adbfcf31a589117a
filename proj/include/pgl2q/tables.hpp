#ifndef PGL2Q_TABLES_HPP
#define PGL2Q_TABLES_HPP

#include <string>
#include <vector>

#include "pgl2q/sl2.hpp"

namespace pgl2q {

// Reference dimension/degree data for the varieties cut out by one family,
// covering every cell 2 <= r <= 13, 1 <= m <= floor(r/2). Non-certified
// entries are carried as reference values only.
struct TableCell {
  int r;
  int m;
  int dim;
  long degree;
};

const std::vector<TableCell>& reference_table();

// The three families of cells whose dimension and degree follow exactly from
// a rank certificate at a single witness.
enum class CertificateClass {
  hypersurface,  // r = 2m: one quadric of maximal rank, dim r-1, degree 2
  codim3,        // odd r >= 5, m = (r-1)/2: rank 3 = n+1, dim r-3, degree 8
  codim5,        // even r >= 8, m = r/2-1: rank 5 = n+1, dim r-5, degree 32
  none,
};

CertificateClass certificate_class(const Params& params);

struct TableCheck {
  bool pass = true;
  std::string report;
};

// Certifies every reference cell with r <= r_max (clamped to the table range)
// and checks, per cell: dim_lower <= dim <= dim_upper; exact reproduction of
// dimension and degree in the three certificate classes; exact dimension in
// the m = 1 row (the bounds collapse); and degree_claim = table degree
// whenever a claim is emitted.
TableCheck tables_report(int r_max);

}  // namespace pgl2q

#endif  // PGL2Q_TABLES_HPP
