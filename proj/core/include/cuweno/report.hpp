#pragma once

// Plain-text and CSV output: solution snapshots, convergence tables and
// per-scheme error comparisons.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cuweno/harness.hpp"

namespace cuweno {

/// Header row plus one row per fluid cell: coordinates, conserved, then
/// primitive variables.
void write_snapshot_csv(const Snapshot& s, std::ostream& os);

/// Aligned table: N, then error and order for L1, L2 and Linf.
void write_error_table(const ErrorReport& r, std::ostream& os);
void write_error_csv(const ErrorReport& r, std::ostream& os);

using SchemeErrors = std::vector<std::pair<std::string, ErrorNorms>>;

/// Rows L1, L2, Linf; one column per scheme.
void write_comparison_table(const SchemeErrors& e, std::ostream& os);
void write_comparison_csv(const SchemeErrors& e, std::ostream& os);

/// printf-style "%.*e" formatting, independent of stream state.
std::string sci(double v, int digits = 3);

}  // namespace cuweno
