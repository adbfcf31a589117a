#include "pgl2q/tables.hpp"

#include <sstream>

#include "pgl2q/certificates.hpp"

namespace pgl2q {

const std::vector<TableCell>& reference_table() {
  // {r, m, dim, degree}, ascending r then m
  static const std::vector<TableCell> table = {
      {2, 1, 1, 2},
      {3, 1, 1, 3},
      {4, 1, 1, 4},   {4, 2, 3, 2},
      {5, 1, 1, 5},   {5, 2, 2, 8},
      {6, 1, 1, 6},   {6, 2, 3, 5},   {6, 3, 5, 2},
      {7, 1, 1, 7},   {7, 2, 2, 12},  {7, 3, 4, 8},
      {8, 1, 1, 8},   {8, 2, 2, 14},  {8, 3, 3, 32},  {8, 4, 7, 2},
      {9, 1, 1, 9},   {9, 2, 2, 16},  {9, 3, 3, 21},  {9, 4, 6, 8},
      {10, 1, 1, 10}, {10, 2, 2, 18}, {10, 3, 5, 12}, {10, 4, 5, 32}, {10, 5, 9, 2},
      {11, 1, 1, 11}, {11, 2, 2, 20}, {11, 3, 3, 27}, {11, 4, 4, 128}, {11, 5, 8, 8},
      {12, 1, 1, 12}, {12, 2, 3, 22}, {12, 3, 3, 30}, {12, 4, 4, 36}, {12, 5, 7, 32},
      {12, 6, 11, 2},
      {13, 1, 1, 13}, {13, 2, 2, 24}, {13, 3, 3, 33}, {13, 4, 4, 40}, {13, 5, 6, 128},
      {13, 6, 10, 8},
  };
  return table;
}

CertificateClass certificate_class(const Params& params) {
  if (params.r == 2 * params.m) return CertificateClass::hypersurface;
  if (params.r % 2 == 1 && params.r >= 5 && 2 * params.m == params.r - 1)
    return CertificateClass::codim3;
  if (params.r % 2 == 0 && params.r >= 8 && 2 * params.m == params.r - 2)
    return CertificateClass::codim5;
  return CertificateClass::none;
}

namespace {

const char* class_name(CertificateClass c) {
  switch (c) {
    case CertificateClass::hypersurface:
      return "hypersurface";
    case CertificateClass::codim3:
      return "codim-3";
    case CertificateClass::codim5:
      return "codim-5";
    default:
      return "-";
  }
}

}  // namespace

TableCheck tables_report(int r_max) {
  TableCheck check;
  std::ostringstream out;
  const int hi = std::min(r_max, 13);
  out << "reference table check, 2 <= r <= " << hi << "\n";
  if (r_max > 13) out << "(reference data ends at r = 13; higher r not checked)\n";

  int cells = 0;
  for (const TableCell& cell : reference_table()) {
    if (cell.r > hi) continue;
    ++cells;
    const Params params = make_params(cell.r, cell.m);
    const CertificateReport report = certify(params);
    const CertificateClass cls = certificate_class(params);

    std::vector<std::string> faults;
    const int lower = *report.dim_lower;
    const int upper = *report.dim_upper;
    if (!(lower <= cell.dim && cell.dim <= upper)) faults.push_back("dimension outside bounds");
    if (cls != CertificateClass::none) {
      // Jacobian rank n+1 at a member witness forces codim >= n+1, and n+1
      // equations can cut codimension at most n+1, so dim = r-(n+1) = upper
      // exactly; degree_claim presence records the attained rank.
      if (!report.degree_claim || upper != cell.dim) faults.push_back("dimension not exact");
    } else if (cell.m == 1) {
      // The bounds collapse on the m = 1 row.
      if (lower != cell.dim || upper != cell.dim) faults.push_back("dimension not exact");
    }
    if (cls != CertificateClass::none) {
      const long expected = cls == CertificateClass::hypersurface ? 2
                            : cls == CertificateClass::codim3     ? 8
                                                                  : 32;
      if (cell.degree != expected || !report.degree_claim ||
          *report.degree_claim != expected)
        faults.push_back("degree not certified");
    }
    if (report.degree_claim && *report.degree_claim != cell.degree)
      faults.push_back("degree claim contradicts the reference degree");

    out << "r=" << cell.r << " m=" << cell.m << "  dim " << cell.dim << " in [" << lower << ", "
        << upper << "]  degree " << cell.degree << " claim "
        << (report.degree_claim ? report.degree_claim->get_str() : std::string("-")) << "  class "
        << class_name(cls) << "  ";
    if (faults.empty()) {
      out << "ok\n";
    } else {
      check.pass = false;
      out << "FAIL:";
      for (const std::string& fault : faults) out << " " << fault << ";";
      out << "\n";
    }
  }
  out << (check.pass ? "all " : "FAILURES among ") << cells << " cells checked\n";
  check.report = out.str();
  return check;
}

}  // namespace pgl2q
