#pragma once

#include <string>
#include <vector>

namespace sarima {

// Calendar month, the only time index the toolkit understands.
struct YearMonth {
    int year = 0;
    int month = 1;  // 1..12

    // Months since year 0, used for all arithmetic and comparison.
    int ordinal() const { return year * 12 + (month - 1); }

    YearMonth plus(int months) const;

    bool operator==(const YearMonth& o) const { return ordinal() == o.ordinal(); }
    bool operator!=(const YearMonth& o) const { return !(*this == o); }
    bool operator<(const YearMonth& o) const { return ordinal() < o.ordinal(); }

    // "2017-03"
    std::string str() const;
    // "Mar"
    std::string short_name() const;

    // Parses "YYYY-MM"; throws DataError on anything else.
    static YearMonth parse(const std::string& text);
};

// Monthly series: a start month, a seasonal period and contiguous values.
// Index i holds the observation for start.plus(i).
class TimeSeries {
public:
    TimeSeries() = default;
    // Throws DataError when values is empty, contains a non-finite entry,
    // or period < 1.
    TimeSeries(YearMonth start, int period, std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    YearMonth start() const { return start_; }
    int period() const { return period_; }

    YearMonth month_at(std::size_t i) const { return start_.plus(static_cast<int>(i)); }
    YearMonth end() const { return month_at(size() - 1); }

    // First n observations / observations from index n on.
    TimeSeries head(std::size_t n) const;
    TimeSeries tail_from(std::size_t n) const;

private:
    YearMonth start_{};
    int period_ = 12;
    std::vector<double> values_;
};

// Splits into (train, test) so that test has test_count observations.
// Throws DataError when test_count is not in (0, size).
std::pair<TimeSeries, TimeSeries> split_by_count(const TimeSeries& s, int test_count);

// Splits so that train ends at train_end (inclusive).
std::pair<TimeSeries, TimeSeries> split_by_date(const TimeSeries& s, YearMonth train_end);

}  // namespace sarima
