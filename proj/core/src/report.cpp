#include "sarima/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sarima/errors.hpp"

namespace sarima {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

std::string format_currency(double v) { return fmt("%.3f", v); }
std::string format_coef(double v) { return fmt("%.4f", v); }
std::string format_stat(double v) { return fmt("%.4f", v); }

std::string format_p(double p, int clamp) {
    if (clamp < 0) return "<" + fmt("%.2f", p);
    if (clamp > 0) return ">" + fmt("%.2f", p);
    if (p < 0.01) return "<0.01";
    return fmt("%.4f", p);
}

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows,
                         const std::string& align) {
    const std::size_t ncol = headers.size();
    if (align.size() != ncol) throw ArgumentError("render_table: alignment mismatch");
    std::vector<std::size_t> width(ncol);
    for (std::size_t c = 0; c < ncol; ++c) width[c] = headers[c].size();
    for (const auto& row : rows) {
        if (row.size() != ncol) throw ArgumentError("render_table: ragged row");
        for (std::size_t c = 0; c < ncol; ++c) width[c] = std::max(width[c], row[c].size());
    }

    auto pad = [&](const std::string& s, std::size_t w, char a) {
        std::string out;
        if (a == 'r') out.append(w - s.size(), ' ');
        out += s;
        if (a == 'l') out.append(w - s.size(), ' ');
        return out;
    };

    std::string out;
    for (std::size_t c = 0; c < ncol; ++c) {
        out += pad(headers[c], width[c], align[c]);
        out += (c + 1 < ncol) ? "  " : "";
    }
    out += '\n';
    for (std::size_t c = 0; c < ncol; ++c) {
        out += std::string(width[c], '-');
        out += (c + 1 < ncol) ? "  " : "";
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < ncol; ++c) {
            out += pad(row[c], width[c], align[c]);
            out += (c + 1 < ncol) ? "  " : "";
        }
        out += '\n';
    }
    return out;
}

std::string render_test_table(
    const std::vector<std::pair<std::string, TestReport>>& tests) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [label, rep] : tests) {
        rows.push_back({label, format_stat(rep.statistic), rep.p_text()});
    }
    return render_table({"test", "statistic", "p-value"}, rows, "lrr");
}

std::string render_coefficient_table(const FittedModel& model) {
    auto names = CoefficientSet::names(model.spec);
    std::vector<double> est = model.coef.flat();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < est.size(); ++i) {
        std::vector<std::string> row{names[i], format_coef(est[i])};
        if (model.std_errors) {
            row.push_back(format_coef((*model.std_errors)[i]));
            row.push_back(format_coef(model.z_values[i]));
            row.push_back(format_p(model.p_values[i]));
        } else {
            row.insert(row.end(), {"--", "--", "--"});
        }
        rows.push_back(std::move(row));
    }
    return render_table({"term", "estimate", "std error", "z", "p-value"}, rows, "lrrrr");
}

std::string render_ranking_table(const SelectionOutcome& outcome) {
    std::vector<std::vector<std::string>> rows;
    int rank = 0;
    for (const auto& c : outcome.candidates) {
        ++rank;
        rows.push_back({std::to_string(rank), c.spec.str(),
                        c.model ? fmt("%.2f", c.aic) : "--", verdict_name(c.verdict),
                        c.reason});
    }
    return render_table({"rank", "model", "aic", "verdict", "note"}, rows, "rlrll");
}

std::string render_forecast_table(const ForecastSet& fc) {
    std::vector<std::vector<std::string>> rows;
    for (int j = 0; j < fc.horizon; ++j) {
        YearMonth m = fc.origin.plus(j);
        rows.push_back({m.short_name() + " " + std::to_string(m.year),
                        format_currency(fc.point[j]), format_currency(fc.lower[j]),
                        format_currency(fc.upper[j])});
    }
    char head[48];
    std::snprintf(head, sizeof(head), "%.0f%% lower", 100.0 * fc.level);
    std::string lo = head;
    std::snprintf(head, sizeof(head), "%.0f%% upper", 100.0 * fc.level);
    std::string hi = head;
    return render_table({"month", "forecast", lo, hi}, rows, "lrrr");
}

std::string render_ledger_table(const HoldoutLedger& ledger) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : ledger.rows) {
        rows.push_back({r.month.short_name() + " " + std::to_string(r.month.year),
                        format_currency(r.actual), format_currency(r.forecast),
                        format_currency(r.error)});
    }
    std::string out =
        render_table({"month", "actual", "forecast", "error"}, rows, "lrrr");
    out += "\nMAPE: " + fmt("%.2f", ledger.mape) + "%\n";
    return out;
}

std::string correlogram_svg(const Correlogram& c, const std::string& title) {
    const int n_lags = static_cast<int>(c.values.size());
    const double w = 640.0, h = 360.0;
    const double ml = 50.0, mr = 15.0, mt = 40.0, mb = 40.0;
    const double pw = w - ml - mr, ph = h - mt - mb;

    double ymax = c.band * 1.3;
    for (double v : c.values) ymax = std::max(ymax, std::abs(v) * 1.1);
    ymax = std::min(1.05, std::max(ymax, 0.2));

    auto xpos = [&](int lag) { return ml + pw * lag / (n_lags + 1.0); };
    auto ypos = [&](double v) { return mt + ph * (1.0 - (v + ymax) / (2.0 * ymax)); };

    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  w, h, w, h);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" "
                  "text-anchor=\"middle\">%s</text>\n",
                  ml + pw / 2, title.c_str());
    svg += buf;

    // zero axis
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                  "stroke=\"black\" stroke-width=\"1\"/>\n",
                  ml, ypos(0.0), w - mr, ypos(0.0));
    svg += buf;

    // confidence band
    for (double b : {c.band, -c.band}) {
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"#4466cc\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n",
                      ml, ypos(b), w - mr, ypos(b));
        svg += buf;
    }

    // stems
    for (int k = 1; k <= n_lags; ++k) {
        double v = c.values[k - 1];
        bool outside = std::abs(v) > c.band;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"%s\" stroke-width=\"2\"/>\n",
                      xpos(k), ypos(0.0), xpos(k), ypos(v),
                      outside ? "#cc3333" : "#333333");
        svg += buf;
    }

    // y-axis labels
    for (double v : {-ymax, -c.band, 0.0, c.band, ymax}) {
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                      "font-size=\"11\" text-anchor=\"end\">%.2f</text>\n",
                      ml - 6, ypos(v) + 4, v);
        svg += buf;
    }
    // x-axis labels every few lags
    int step = std::max(1, n_lags / 12);
    for (int k = step; k <= n_lags; k += step) {
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                      "font-size=\"11\" text-anchor=\"middle\">%d</text>\n",
                      xpos(k), h - mb + 18, k);
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

std::string correlogram_csv(const Correlogram& c) {
    std::string out = "lag,value,band\n";
    char buf[96];
    for (std::size_t k = 0; k < c.values.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%zu,%.6f,%.6f\n", k + 1, c.values[k], c.band);
        out += buf;
    }
    return out;
}

std::string forecast_csv(const ForecastSet& fc) {
    std::string out = "date,forecast,lower,upper\n";
    char buf[160];
    for (int j = 0; j < fc.horizon; ++j) {
        std::snprintf(buf, sizeof(buf), "%s,%.3f,%.3f,%.3f\n",
                      fc.origin.plus(j).str().c_str(), fc.point[j], fc.lower[j],
                      fc.upper[j]);
        out += buf;
    }
    return out;
}

std::string ledger_csv(const HoldoutLedger& ledger) {
    std::string out = "date,actual,forecast,error\n";
    char buf[160];
    for (const auto& r : ledger.rows) {
        std::snprintf(buf, sizeof(buf), "%s,%.3f,%.3f,%.3f\n", r.month.str().c_str(),
                      r.actual, r.forecast, r.error);
        out += buf;
    }
    return out;
}

std::string ranking_csv(const SelectionOutcome& outcome) {
    std::string out = "rank,model,aic,verdict,note\n";
    char buf[320];
    int rank = 0;
    for (const auto& c : outcome.candidates) {
        ++rank;
        std::string note = c.reason;
        std::replace(note.begin(), note.end(), ',', ';');
        if (c.model) {
            std::snprintf(buf, sizeof(buf), "%d,%s,%.4f,%s,%s\n", rank,
                          c.spec.str().c_str(), c.aic, verdict_name(c.verdict).c_str(),
                          note.c_str());
        } else {
            std::snprintf(buf, sizeof(buf), "%d,%s,,%s,%s\n", rank, c.spec.str().c_str(),
                          verdict_name(c.verdict).c_str(), note.c_str());
        }
        out += buf;
    }
    return out;
}

}  // namespace sarima
