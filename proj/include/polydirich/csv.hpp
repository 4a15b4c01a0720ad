#pragma once

#include <iosfwd>
#include <string>

#include "polydirich/series.hpp"

namespace polydirich {

/// Coefficient grid as CSV with header `k,l,re,im`, row-major over the full
/// degree box. Readers infer the degrees from the largest indices present;
/// absent entries are zero. Malformed rows throw std::runtime_error.
void write_csv(std::ostream& os, const TruncatedSeries& f);
void write_csv_file(const std::string& path, const TruncatedSeries& f);
TruncatedSeries read_csv(std::istream& is);
TruncatedSeries read_csv_file(const std::string& path);

}  // namespace polydirich
