#pragma once

#include <iosfwd>
#include <string>

#include "gfbm/ensemble.hpp"

namespace gfbm {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// Path CSV: one self-describing comment line
//   # gfbm a=<a> b=<b> H=<H> seed=<seed> method=<method>
// then a header row `t,path_0,...,path_{k-1}` and one row per grid point.
// UTF-8, LF line endings, '.' decimal point; numbers in shortest round-trip
// form, so writing is byte-deterministic and reading loses nothing.
void write_ensemble_csv(const PathEnsemble& ensemble, std::ostream& out);
void write_ensemble_csv(const PathEnsemble& ensemble, const std::string& file_path);

// Throws csv_parse_error (with 1-based line and field position) on malformed
// input. The returned ensemble carries the params/seed/method parsed from the
// header comment.
PathEnsemble read_ensemble_csv(std::istream& in);
PathEnsemble read_ensemble_csv(const std::string& file_path);

}  // namespace gfbm
