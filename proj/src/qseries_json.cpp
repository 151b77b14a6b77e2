#include "mlde/qseries_json.hpp"

namespace mlde
{

nlohmann::json to_json(const PuiseuxSeries &s)
{
    nlohmann::json j;
    j["offset"] = to_string(s.offset());
    j["grid"] = s.grid();
    auto arr = nlohmann::json::array();
    for (const auto &c : s.coeffs())
        arr.push_back(to_string(c));
    j["coeffs"] = arr;
    if (s.trunc())
        j["trunc"] = to_string(*s.trunc());
    else
        j["trunc"] = nullptr;
    return j;
}

PuiseuxSeries series_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("offset") || !j.contains("grid") || !j.contains("coeffs"))
        throw std::invalid_argument("series JSON needs offset, grid and coeffs");
    Rational offset = parse_rational(j.at("offset").get<std::string>());
    long grid = j.at("grid").get<long>();
    std::vector<Rational> coeffs;
    for (const auto &c : j.at("coeffs"))
        coeffs.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
    std::optional<Rational> trunc;
    if (j.contains("trunc") && !j.at("trunc").is_null())
        trunc = parse_rational(j.at("trunc").get<std::string>());
    return PuiseuxSeries(offset, grid, std::move(coeffs), trunc);
}

} // namespace mlde
