#pragma once

#include <json.hpp>

#include "repring/lattice.hpp"
#include "repring/units.hpp"

namespace repring {

using Json = nlohmann::ordered_json;

extern const char* const kVersion;

Json cyc_to_json(const CycInt& z);  // {e, coeffs}, coefficients as decimal strings
CycInt cyc_from_json(const Json& j);

Json index_to_json(Ring tag, const GhostContext& ctx, int position);
Json ghost_to_json(const GhostVector& v);
GhostVector ghost_from_json(const Json& j, const CtxPtr& ctx);

Json context_to_json(const GhostContext& ctx);
Json lattice_to_json(const Lattice& l, const std::string& emit);  // basis | snf | rank
Json unit_group_to_json(const UnitGroup& u, bool with_certificates);

std::string lattice_to_tsv(const Lattice& l);
std::string units_to_tsv(const UnitGroup& u);

}  // namespace repring
