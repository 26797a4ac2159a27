#ifndef KLV_JSON_IO_HPP
#define KLV_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "klv/bimod_char.hpp"
#include "klv/fiber_calc.hpp"
#include "klv/klv_engine.hpp"
#include "klv/lv_datum.hpp"

namespace klv {

using json = nlohmann::json;

/// Datum file schema: {coxeter: {type | matrix}, theta, wk?, params, table,
/// closure?}. The validator is the schema's executable definition.
OrbitDatum datum_from_json(const json& j);
json datum_to_json(const OrbitDatum& datum);

/// "builtin:<name>" or a filesystem path. The returned datum is not yet
/// validated unless it came from a builtin.
OrbitDatum load_datum(const std::string& uri);
void save_datum(const OrbitDatum& datum, const std::string& path);

json lvvector_to_json(const OrbitDatum& datum, const LVVector& x);
LVVector lvvector_from_json(const OrbitDatum& datum, const json& j);

json klv_table_to_json(const OrbitDatum& datum, const KLVTable& table, bool raw_ch = false);
json blocks_to_json(const OrbitDatum& datum);
json validation_to_json(const ValidationReport& report);

ResolutionSpec resolution_spec_from_json(const OrbitDatum& datum, const json& j);

RingsSpec rings_spec_from_json(const json& j);
json rings_spec_to_json(const RingsSpec& spec);

} // namespace klv

#endif
