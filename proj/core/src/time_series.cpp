#include "sarima/time_series.hpp"

#include <cmath>
#include <cstdio>

#include "sarima/errors.hpp"

namespace sarima {

YearMonth YearMonth::plus(int months) const {
    int o = ordinal() + months;
    // floor division keeps negative ordinals correct
    int y = o / 12;
    int m = o % 12;
    if (m < 0) {
        m += 12;
        y -= 1;
    }
    return YearMonth{y, m + 1};
}

std::string YearMonth::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

std::string YearMonth::short_name() const {
    static const char* names[12] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    return names[(month - 1) % 12];
}

YearMonth YearMonth::parse(const std::string& text) {
    int y = 0, m = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d-%d%c", &y, &m, &extra) != 2 || text.size() != 7 ||
        text[4] != '-') {
        throw DataError("bad month '" + text + "', expected YYYY-MM");
    }
    if (m < 1 || m > 12) {
        throw DataError("bad month '" + text + "', month must be 01..12");
    }
    return YearMonth{y, m};
}

TimeSeries::TimeSeries(YearMonth start, int period, std::vector<double> values)
    : start_(start), period_(period), values_(std::move(values)) {
    if (values_.empty()) throw DataError("series must not be empty");
    if (period_ < 1) throw DataError("period must be >= 1");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DataError("non-finite value at index " + std::to_string(i));
        }
    }
}

TimeSeries TimeSeries::head(std::size_t n) const {
    if (n == 0 || n > size()) throw DataError("head: bad length");
    return TimeSeries(start_, period_,
                      std::vector<double>(values_.begin(), values_.begin() + n));
}

TimeSeries TimeSeries::tail_from(std::size_t n) const {
    if (n >= size()) throw DataError("tail_from: bad offset");
    return TimeSeries(start_.plus(static_cast<int>(n)), period_,
                      std::vector<double>(values_.begin() + n, values_.end()));
}

std::pair<TimeSeries, TimeSeries> split_by_count(const TimeSeries& s, int test_count) {
    if (test_count <= 0 || static_cast<std::size_t>(test_count) >= s.size()) {
        throw DataError("split: test count must be in (0, series length)");
    }
    std::size_t n_train = s.size() - static_cast<std::size_t>(test_count);
    return {s.head(n_train), s.tail_from(n_train)};
}

std::pair<TimeSeries, TimeSeries> split_by_date(const TimeSeries& s, YearMonth train_end) {
    int offset = train_end.ordinal() - s.start().ordinal();
    if (offset < 0 || static_cast<std::size_t>(offset) + 1 >= s.size()) {
        throw DataError("split: train end " + train_end.str() + " leaves no test data");
    }
    std::size_t n_train = static_cast<std::size_t>(offset) + 1;
    return {s.head(n_train), s.tail_from(n_train)};
}

}  // namespace sarima
