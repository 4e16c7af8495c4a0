#pragma once

#include <string>

#include "sarima/time_series.hpp"

namespace sarima {

struct IngestReport {
    int n = 0;
    YearMonth first;
    YearMonth last;
    double min = 0.0;
    double max = 0.0;
};

// Parses `date,value` CSV text: header exactly "date,value", dates YYYY-MM
// in strictly consecutive months.  Violations raise DataError naming the
// offending line (1-based, header is line 1).  `origin` labels the source in
// error messages.
std::pair<TimeSeries, IngestReport> parse_series_csv(const std::string& text,
                                                     const std::string& origin,
                                                     int period = 12);

// parse_series_csv over a file's contents; missing file raises DataError.
std::pair<TimeSeries, IngestReport> read_series_csv(const std::string& path,
                                                    int period = 12);

std::string series_to_csv(const TimeSeries& s);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace sarima
