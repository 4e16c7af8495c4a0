#include "sarima/csv_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sarima/errors.hpp"

namespace sarima {

std::pair<TimeSeries, IngestReport> parse_series_csv(const std::string& text,
                                                     const std::string& origin,
                                                     int period) {
    std::istringstream in(text);
    std::string line;
    auto where = [&origin](int lineno) {
        return origin + ":" + std::to_string(lineno);
    };

    if (!std::getline(in, line)) {
        throw DataError(origin + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "date,value") {
        throw DataError(where(1) + ": header must be exactly 'date,value', got '" + line +
                        "'");
    }

    std::vector<double> values;
    YearMonth start{};
    YearMonth prev{};
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DataError(where(lineno) + ": expected 'YYYY-MM,value'");
        }
        std::string date_part = line.substr(0, comma);
        std::string value_part = line.substr(comma + 1);

        YearMonth ym;
        try {
            ym = YearMonth::parse(date_part);
        } catch (const DataError& e) {
            throw DataError(where(lineno) + ": " + e.what());
        }

        char* endp = nullptr;
        double v = std::strtod(value_part.c_str(), &endp);
        if (endp == value_part.c_str() || *endp != '\0' || !std::isfinite(v)) {
            throw DataError(where(lineno) + ": unparseable value '" + value_part + "'");
        }

        if (values.empty()) {
            start = ym;
        } else {
            int step = ym.ordinal() - prev.ordinal();
            if (step == 0) {
                throw DataError(where(lineno) + ": duplicate month " + ym.str());
            }
            if (step < 0) {
                throw DataError(where(lineno) + ": month " + ym.str() +
                                " is out of order");
            }
            if (step > 1) {
                throw DataError(where(lineno) + ": gap before " + ym.str() +
                                ", expected " + prev.plus(1).str());
            }
        }
        prev = ym;
        values.push_back(v);
    }

    if (values.empty()) {
        throw DataError(origin + ": no data rows");
    }

    TimeSeries series(start, period, values);
    IngestReport report;
    report.n = static_cast<int>(values.size());
    report.first = start;
    report.last = series.end();
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    report.min = *mn;
    report.max = *mx;
    return {std::move(series), report};
}

std::pair<TimeSeries, IngestReport> read_series_csv(const std::string& path, int period) {
    return parse_series_csv(read_text_file(path), path, period);
}

std::string series_to_csv(const TimeSeries& s) {
    std::string out = "date,value\n";
    char buf[64];
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s,%.6f\n", s.month_at(i).str().c_str(), s[i]);
        out += buf;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << content;
    if (!out) throw DataError("short write to " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace sarima
