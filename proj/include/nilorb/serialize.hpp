#pragma once

#include "json.hpp"

#include "nilorb/pipeline.hpp"

namespace nilorb {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const ClassicalOrbit& o);
Json to_json(const SpecialDecomposition& d);
Json to_json(const WeylFactor& f);
Json to_json(const WeylRepLabel& r);
Json to_json(const LusztigQuotient& q);
Json to_json(const Vec& v);
Json to_json(const RootSystem& rs);
Json to_json(const Subsystem& s);
Json to_json(const ExcOrbitRecord& r);
Json to_json(const FactorReport& f);
Json to_json(const UnipotentReport& r);
Json to_json(const RowResult& r);
Json to_json(const TableReport& t);
Json to_json(const SuiteReport& s);

Partition partition_from_json(const Json& j);
ClassicalOrbit orbit_from_json(const Json& j);
SpecialDecomposition decomposition_from_json(const Json& j);
WeylFactor weyl_factor_from_json(const Json& j);
WeylRepLabel weyl_label_from_json(const Json& j);
LusztigQuotient quotient_from_json(const Json& j);
Vec vec_from_json(const Json& j);
UnipotentReport report_from_json(const Json& j);

}
