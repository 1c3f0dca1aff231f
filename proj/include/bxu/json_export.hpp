#pragma once

#include <string>

#include <json.hpp>

#include "bxu/burnside.hpp"
#include "bxu/simple_form.hpp"
#include "bxu/units.hpp"

namespace bxu {

using Json = nlohmann::json;

std::string rat_string(const Rat& r); // "p" or "p/q"

Json group_json(const SubgroupLattice& lat);
Json mark_matrix_json(const SubgroupLattice& lat, const MarkMatrix& m);
Json unit_json(const SubgroupLattice& lat, const F2Vec& bits);
Json subspace_json(const UnitSubspace& s);
Json idempotent_json(const SubgroupLattice& lat, const RationalIdempotent& e);
Json burnside_element_json(const SubgroupLattice& lat, const BurnsideElement& b);
Json gram_json(const SubgroupLattice& lat, const GramMatrixF2& m);

// RFC-4180 field quoting: quotes only when the field needs it.
std::string csv_field(const std::string& s);

} // namespace bxu
