#ifndef BERN_JSON_IO_HPP
#define BERN_JSON_IO_HPP

#include <json.hpp>

#include "bern/bernstein.hpp"
#include "bern/norms.hpp"
#include "bern/rational.hpp"

namespace bern {

using Json = nlohmann::json;

Json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);

Json to_json(const NormResult& res);
Json to_json(const BernsteinEstimate& e);
Json to_json(const LimitCheckReport& rep);

}  // namespace bern

#endif
