#include "artin/json_io.hpp"

#include <ostream>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

json cycnum_to_json(const CycNum& v) {
    json coeffs = json::array();
    for (const Rat& c : v.coeffs())
        coeffs.push_back(json::array({c.get_num().get_str(), c.get_den().get_str()}));
    return json{{"order", v.order()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j) {
    int order = j.at("order").get<int>();
    std::vector<Rat> coeffs;
    for (const auto& pair : j.at("coeffs"))
        coeffs.push_back(rat_from_strings(pair.at(0).get<std::string>(),
                                          pair.at(1).get<std::string>()));
    return CycNum::from_coeffs(order, std::move(coeffs));
}

json rat_to_json(const Rat& r) {
    return json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rat rat_from_json(const json& j) {
    return rat_from_strings(j.at(0).get<std::string>(), j.at(1).get<std::string>());
}

json class_function_to_json(const ClassFunction& cf) {
    json values = json::array();
    for (const CycNum& v : cf.values) values.push_back(cycnum_to_json(v));
    return json{{"group_order", cf.group_order}, {"values", values}};
}

ClassFunction class_function_from_json(const json& j) {
    ClassFunction cf;
    cf.group_order = j.at("group_order").get<long>();
    for (const auto& v : j.at("values")) cf.values.push_back(cycnum_from_json(v));
    return cf;
}

json density_report_to_json(const DensityReport& rep) {
    json keys = json::object();
    for (const auto& [key, st] : rep.per_key) {
        keys[key] = json{{"count", st.count},
                         {"empirical", st.empirical},
                         {"predicted", rat_to_json(st.predicted)},
                         {"li_predicted", st.li_predicted}};
    }
    return json{{"limit", rep.limit},
                {"total", rep.total},
                {"ramified_skipped", rep.ramified_skipped},
                {"li", rep.li_value},
                {"keys", keys}};
}

DensityReport density_report_from_json(const json& j) {
    DensityReport rep;
    rep.limit = j.at("limit").get<uint64_t>();
    rep.total = j.at("total").get<long>();
    rep.ramified_skipped = j.at("ramified_skipped").get<long>();
    rep.li_value = j.at("li").get<double>();
    for (const auto& [key, st] : j.at("keys").items()) {
        KeyStats s;
        s.count = st.at("count").get<long>();
        s.empirical = st.at("empirical").get<double>();
        s.predicted = rat_from_json(st.at("predicted"));
        s.li_predicted = st.at("li_predicted").get<double>();
        rep.per_key.emplace(key, std::move(s));
    }
    return rep;
}

json exponent_matrix_to_json(const ExponentMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (long v : row) r.push_back(std::to_string(v));
        rows.push_back(r);
    }
    return json{{"columns", m.col_names}, {"rows", rows}};
}

ExponentMatrix exponent_matrix_from_json(const json& j) {
    ExponentMatrix m;
    for (const auto& name : j.at("columns")) m.col_names.push_back(name.get<std::string>());
    for (const auto& row : j.at("rows")) {
        std::vector<long> r;
        for (const auto& v : row) r.push_back(std::stol(v.get<std::string>()));
        m.entries.push_back(std::move(r));
    }
    return m;
}

void density_report_to_csv(const DensityReport& rep, std::ostream& out) {
    out << "key,count,empirical,predicted,li_predicted\n";
    std::ostringstream line;
    line.precision(10);
    for (const auto& [key, st] : rep.per_key) {
        line.str("");
        line << key << ',' << st.count << ',' << st.empirical << ','
             << st.predicted.get_num().get_str() << '/' << st.predicted.get_den().get_str()
             << ',' << st.li_predicted;
        out << line.str() << '\n';
    }
}

} // namespace artin
