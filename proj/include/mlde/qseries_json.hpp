#ifndef MLDE_QSERIES_JSON_HPP
#define MLDE_QSERIES_JSON_HPP

#include "mlde/qseries.hpp"

#include <json.hpp>

namespace mlde
{

// {"offset":"p/q","grid":D,"coeffs":["n/d",...],"trunc":"p/q"}; trunc is null for exact series
nlohmann::json to_json(const PuiseuxSeries &s);
PuiseuxSeries series_from_json(const nlohmann::json &j);

} // namespace mlde

#endif
