#include "entgeo/serialize.hpp"

#include <stdexcept>

namespace entgeo {

nlohmann::json scalar_to_json(const CycNum& x) {
    if (x.is_rational()) return x.rational_value().str();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : x.coeffs()) coeffs.push_back(c.str());
    return nlohmann::json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycNum scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return CycNum(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return CycNum(static_cast<long>(j.get<long long>()));
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw std::invalid_argument("bad scalar encoding");
    unsigned m = j.at("conductor").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (coeffs.size() != euler_totient(m))
        throw std::invalid_argument("scalar coefficient length mismatch");
    return CycNum::from_poly(m, std::move(coeffs));
}

CycNum parse_scalar(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&]() -> void { throw std::invalid_argument("bad scalar literal: " + text); };
    if (text.empty()) fail();

    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }

    auto zeta_at = [&](std::size_t p) { return text.compare(p, 5, "zeta(") == 0; };

    Rational coeff(1);
    if (!zeta_at(pos)) {
        std::size_t star = text.find('*', pos);
        std::size_t end = star == std::string::npos ? text.size() : star;
        coeff = Rational::parse(text.substr(pos, end - pos));
        pos = end;
        if (star != std::string::npos) ++pos;
    }
    if (negative) coeff = -coeff;

    if (pos == text.size()) return CycNum(coeff);
    if (!zeta_at(pos)) fail();
    pos += 5;
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos || close == pos) fail();
    unsigned m = 0;
    for (std::size_t i = pos; i < close; ++i) {
        if (text[i] < '0' || text[i] > '9') fail();
        m = m * 10 + static_cast<unsigned>(text[i] - '0');
    }
    if (m == 0) fail();
    pos = close + 1;
    long k = 1;
    if (pos < text.size()) {
        if (text[pos] != '^') fail();
        ++pos;
        bool neg_exp = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg_exp = text[pos] == '-';
            ++pos;
        }
        if (pos == text.size()) fail();
        k = 0;
        for (; pos < text.size(); ++pos) {
            if (text[pos] < '0' || text[pos] > '9') fail();
            k = k * 10 + (text[pos] - '0');
        }
        if (neg_exp) k = -k;
    }
    return CycNum(coeff) * CycNum::zeta_pow(m, k);
}

nlohmann::json state_to_json(const StateVector& psi) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t r = 0; r < psi.dim(); ++r) out.push_back(scalar_to_json(psi.at(r)));
    return out;
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json rational_vector_to_json(const std::vector<Rational>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& x : v) out.push_back(x.str());
    return out;
}

}  // namespace entgeo
