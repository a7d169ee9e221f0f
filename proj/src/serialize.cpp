#include "hilbq/serialize.hpp"

#include <nlohmann/json.hpp>

namespace hilbq {

json qseries_to_json(const QSeries& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s[i].get_str());
    return json{{"offset_numerator", to_string(s.offset().get_num())},
                {"offset_denominator", to_string(s.offset().get_den())},
                {"order", std::to_string(s.order())},
                {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const json& j) {
    const int order = std::stoi(j.at("order").get<std::string>());
    QSeries s(order, rat_from_strings(j.at("offset_numerator").get<std::string>(),
                                      j.at("offset_denominator").get<std::string>()));
    const json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("QSeries json: coeffs length must be order+1");
    for (int i = 0; i <= order; ++i) {
        Rat c(coeffs[i].get<std::string>());
        c.canonicalize();
        s.at(i) = c;
    }
    return s;
}

json quadform_to_json(const QuadraticForm& q) {
    json coeffs = json::array();
    for (int i = 0; i < q.rank(); ++i)
        for (int j2 = i; j2 < q.rank(); ++j2)
            if (q.coeff(i, j2) != 0)
                coeffs.push_back(json::array({std::to_string(i + 1), std::to_string(j2 + 1),
                                              std::to_string(q.coeff(i, j2))}));
    return json{{"rank", std::to_string(q.rank())}, {"coeffs", std::move(coeffs)}};
}

QuadraticForm quadform_from_json(const json& j) {
    const int rank = std::stoi(j.at("rank").get<std::string>());
    std::vector<std::vector<long long>> upper(rank, std::vector<long long>(rank, 0));
    for (const json& entry : j.at("coeffs")) {
        const int a = std::stoi(entry.at(0).get<std::string>());
        const int b = std::stoi(entry.at(1).get<std::string>());
        if (a < 1 || b < 1 || a > b || b > rank)
            throw std::invalid_argument("QuadraticForm json: need 1 <= i <= j <= rank");
        upper[a - 1][b - 1] = std::stoll(entry.at(2).get<std::string>());
    }
    return QuadraticForm(rank, upper);
}

json terms_to_json(const std::vector<DecompositionTerm>& terms) {
    json out = json::array();
    for (const DecompositionTerm& t : terms)
        out.push_back(json{{"coefficient_num", to_string(t.coefficient.get_num())},
                           {"coefficient_den", to_string(t.coefficient.get_den())},
                           {"form", quadform_to_json(t.form)}});
    return out;
}

std::vector<DecompositionTerm> terms_from_json(const json& j) {
    std::vector<DecompositionTerm> terms;
    for (const json& entry : j) {
        terms.push_back({rat_from_strings(entry.at("coefficient_num").get<std::string>(),
                                          entry.at("coefficient_den").get<std::string>()),
                         quadform_from_json(entry.at("form"))});
    }
    return terms;
}

}  // namespace hilbq
