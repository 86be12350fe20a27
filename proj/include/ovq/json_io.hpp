#pragma once

#include <string>

#include <json.hpp>

#include "ovq/errors.hpp"
#include "ovq/ov.hpp"
#include "ovq/quiver.hpp"
#include "ovq/ratfn.hpp"
#include "ovq/rr.hpp"
#include "ovq/series.hpp"

namespace ovq {

using Json = nlohmann::ordered_json;

// u-exponents are serialized as integers; exponent e encodes q^(e/2).
inline const char* kExponentNote = "exponent e means q^(e/2)";

Json laurent_to_json(const IntLaurent& p);   // [[e, "coeff"], ...], e ascending
IntLaurent laurent_from_json(const Json& j);

Json ratfn_to_json(const RationalFn& f);     // {"num": ..., "den": ...}
RationalFn ratfn_from_json(const Json& j);

Json xseries_to_json(const XSeries& s);      // array of RationalFn, index = x-degree
XSeries xseries_from_json(const Json& j);

Json ov_table_to_json(const OVTable& t);
OVTable ov_table_from_json(const Json& j);
std::string ov_table_to_csv(const OVTable& t);  // header m,k,N

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);
Quiver load_quiver(const std::string& path);

Json kac_table_to_json(const KacTable& t);
Json gpoly_to_json(const GPoly& g);
Json betti_to_json(const std::vector<std::pair<int, BigInt>>& betti);
Json product_report_to_json(const ProductReport& r);
Json rr_report_to_json(const RRReport& r);
Json deformed_report_to_json(const DeformedReport& r);
Json hlrv_report_to_json(const HlrvReport& r);
Json divisibility_report_to_json(const DivisibilityReport& r);
Json error_to_json(const Error& e);

}  // namespace ovq
