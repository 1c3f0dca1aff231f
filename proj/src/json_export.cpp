#include "bxu/json_export.hpp"

namespace bxu {

std::string rat_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Json group_json(const SubgroupLattice& lat) {
    const FiniteGroup& g = *lat.group;
    Json j;
    j["label"] = g.label;
    j["order"] = g.order;
    j["abelian"] = is_abelian(g);
    j["center_order"] = center_of(g).count();
    j["num_subgroups"] = lat.num_subgroups();
    j["num_classes"] = lat.num_classes();
    auto labels = class_labels(lat);
    Json classes = Json::array();
    for (int c = 0; c < lat.num_classes(); ++c) {
        Json row;
        row["label"] = labels[c];
        row["order"] = lat.rep(c).order;
        row["size"] = lat.class_members[c].size();
        row["normal"] = lat.class_members[c].size() == 1;
        classes.push_back(row);
    }
    j["classes"] = classes;
    auto pd = recognize_pseudodihedral(g);
    j["pseudodihedral"] = pd.has_value();
    if (pd) {
        SubgroupView v = subgroup_as_group(g, pd->n);
        j["pd_invariants"] = abelian_invariants(*v.group);
    }
    return j;
}

Json mark_matrix_json(const SubgroupLattice& lat, const MarkMatrix& m) {
    Json j;
    j["classes"] = class_labels(lat);
    Json rows = Json::array();
    for (int r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.size(); ++c)
            row.push_back(long(m.at(r, c)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

Json unit_json(const SubgroupLattice& lat, const F2Vec& bits) {
    Json j;
    j["classes"] = class_labels(lat);
    j["bits"] = bits.to_string();
    return j;
}

Json subspace_json(const UnitSubspace& s) {
    Json j = Json::array();
    for (const Unit& u : s.basis()) j.push_back(unit_json(*s.lat, u.bits));
    return j;
}

Json idempotent_json(const SubgroupLattice& lat, const RationalIdempotent& e) {
    Json j;
    j["classes"] = class_labels(lat);
    Json coeffs = Json::array();
    for (const Rat& r : e.coeffs) coeffs.push_back(rat_string(r));
    j["coeffs"] = coeffs;
    return j;
}

Json burnside_element_json(const SubgroupLattice& lat, const BurnsideElement& b) {
    Json j;
    j["classes"] = class_labels(lat);
    Json coeffs = Json::array();
    for (const Int& v : b.coeffs) coeffs.push_back(v.str());
    j["coeffs"] = coeffs;
    return j;
}

Json gram_json(const SubgroupLattice&, const GramMatrixF2& m) {
    Json j;
    Json sections = Json::array();
    for (const SectionPair& p : m.basis) {
        Json s;
        s["top_order"] = p.top.count();
        s["bottom_order"] = p.bottom.count();
        s["top"] = p.top.elements();
        s["bottom"] = p.bottom.elements();
        sections.push_back(s);
    }
    j["sections"] = sections;
    Json rows = Json::array();
    for (const F2Vec& r : m.rows) rows.push_back(r.to_string());
    j["rows"] = rows;
    j["rank"] = m.rank();
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace bxu
