#include "sarima/model_io.hpp"

#include <json.hpp>

#include "sarima/csv_io.hpp"
#include "sarima/errors.hpp"

namespace sarima {

using nlohmann::json;

namespace {

json spec_to_json(const ModelSpec& s) {
    return json{{"p", s.p}, {"d", s.d}, {"q", s.q},
                {"P", s.P}, {"D", s.D}, {"Q", s.Q}, {"s", s.s}};
}

ModelSpec spec_from_json(const json& j) {
    ModelSpec s;
    s.p = j.at("p").get<int>();
    s.d = j.at("d").get<int>();
    s.q = j.at("q").get<int>();
    s.P = j.at("P").get<int>();
    s.D = j.at("D").get<int>();
    s.Q = j.at("Q").get<int>();
    s.s = j.at("s").get<int>();
    s.validate();
    return s;
}

}  // namespace

std::string model_to_json(const FittedModel& m) {
    json j;
    j["spec"] = spec_to_json(m.spec);
    j["coefficients"] = {{"ar", m.coef.ar},
                         {"ma", m.coef.ma},
                         {"sar", m.coef.sar},
                         {"sma", m.coef.sma},
                         {"sigma2", m.coef.sigma2}};
    if (m.std_errors) {
        j["std_errors"] = *m.std_errors;
        j["z_values"] = m.z_values;
        j["p_values"] = m.p_values;
    } else {
        j["std_errors"] = nullptr;
    }
    j["loglik"] = m.loglik;
    j["aic"] = m.aic;
    j["mean"] = m.mean;
    json diffs = json::array();
    for (const auto& st : m.transform.diffs) {
        diffs.push_back({{"lag", st.lag}, {"initial_values", st.initial_values}});
    }
    j["transform"] = {{"lambda", m.transform.lambda ? json(*m.transform.lambda) : json()},
                      {"diffs", diffs}};
    j["train"] = {{"start", m.train.start().str()},
                  {"period", m.train.period()},
                  {"values", m.train.values()}};
    j["residuals"] = m.residuals;
    return j.dump(2) + "\n";
}

FittedModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("model JSON: ") + e.what());
    }
    try {
        FittedModel m;
        m.spec = spec_from_json(j.at("spec"));
        const json& c = j.at("coefficients");
        m.coef.ar = c.at("ar").get<std::vector<double>>();
        m.coef.ma = c.at("ma").get<std::vector<double>>();
        m.coef.sar = c.at("sar").get<std::vector<double>>();
        m.coef.sma = c.at("sma").get<std::vector<double>>();
        m.coef.sigma2 = c.at("sigma2").get<double>();
        if (j.contains("std_errors") && !j.at("std_errors").is_null()) {
            m.std_errors = j.at("std_errors").get<std::vector<double>>();
            m.z_values = j.at("z_values").get<std::vector<double>>();
            m.p_values = j.at("p_values").get<std::vector<double>>();
        }
        m.loglik = j.at("loglik").get<double>();
        m.aic = j.at("aic").get<double>();
        m.mean = j.at("mean").get<double>();
        const json& tr = j.at("transform");
        if (!tr.at("lambda").is_null()) m.transform.lambda = tr.at("lambda").get<double>();
        for (const json& st : tr.at("diffs")) {
            DiffStage stage;
            stage.lag = st.at("lag").get<int>();
            stage.initial_values = st.at("initial_values").get<std::vector<double>>();
            m.transform.diffs.push_back(std::move(stage));
        }
        const json& t = j.at("train");
        m.train = TimeSeries(YearMonth::parse(t.at("start").get<std::string>()),
                             t.at("period").get<int>(),
                             t.at("values").get<std::vector<double>>());
        m.residuals = j.at("residuals").get<std::vector<double>>();
        return m;
    } catch (const json::exception& e) {
        throw DataError(std::string("model JSON: ") + e.what());
    }
}

void save_model(const FittedModel& model, const std::string& path) {
    write_text_file(path, model_to_json(model));
}

FittedModel load_model(const std::string& path) {
    return model_from_json(read_text_file(path));
}

}  // namespace sarima
