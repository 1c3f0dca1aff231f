// bxu: unit groups of Burnside rings for small finite groups.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bxu/checks.hpp"
#include "bxu/errors.hpp"
#include "bxu/functors.hpp"
#include "bxu/json_export.hpp"
#include "bxu/selfcheck.hpp"
#include "bxu/simple_form.hpp"
#include "bxu/units.hpp"

using namespace bxu;

namespace {

struct Options {
    std::string format = "text";
    int cap = kDefaultEnumCap;
};

LatticePtr lattice_of(const std::string& spec) {
    return subgroup_lattice(construct_group(spec));
}

// n with G = D_{2n}; handles the degenerate D2 = C2 and D4 = C2 x C2.
std::optional<long> dihedral_param(const FiniteGroup& g) {
    if (g.order == 2) return 1;
    if (g.order == 4 && is_abelian(g)) {
        for (int a = 0; a < 4; ++a)
            if (g.elem_order[a] == 4) return std::nullopt; // C4
        return 2;
    }
    auto pd = recognize_pseudodihedral(g);
    if (!pd) return std::nullopt;
    SubgroupView v = subgroup_as_group(g, pd->n);
    for (int a = 0; a < v.group->order; ++a)
        if (v.group->elem_order[a] == v.group->order) return v.group->order;
    return std::nullopt;
}

void emit(const Options& opt, const Json& payload, const std::string& text) {
    if (opt.format == "json")
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

std::string class_table_text(const SubgroupLattice& lat) {
    auto labels = class_labels(lat);
    std::string out = "  class  order  size  normal\n";
    char buf[128];
    for (int c = 0; c < lat.num_classes(); ++c) {
        std::snprintf(buf, sizeof buf, "  %-6s %5d %5zu  %s\n", labels[c].c_str(),
                      lat.rep(c).order, lat.class_members[c].size(),
                      lat.class_members[c].size() == 1 ? "yes" : "no");
        out += buf;
    }
    return out;
}

int cmd_describe(const Options& opt, const std::string& spec) {
    auto lat = lattice_of(spec);
    Json j = group_json(*lat);
    std::string text = "group " + lat->group->label + " = " +
                       structure_name(*lat->group) + "\n";
    text += "  order " + std::to_string(lat->group->order);
    text += ", center " + std::to_string(center_of(*lat->group).count());
    text += ", subgroups " + std::to_string(lat->num_subgroups());
    text += ", classes " + std::to_string(lat->num_classes());
    text += is_abelian(*lat->group) ? ", abelian" : ", nonabelian";
    auto pd = recognize_pseudodihedral(*lat->group);
    text += pd ? ", pseudodihedral\n" : "\n";
    text += class_table_text(*lat);
    emit(opt, j, text);
    return 0;
}

int cmd_tom(const Options& opt, const std::string& spec, bool idempotents) {
    auto lat = lattice_of(spec);
    MarkMatrix m = table_of_marks(*lat);
    auto labels = class_labels(*lat);
    if (idempotents) {
        MobiusTable mu = mobius(*lat, PosetKind::Subgroups);
        Json all = Json::array();
        std::string text = "primitive idempotents of QB(" + lat->group->label + ")\n";
        for (int h = 0; h < lat->num_classes(); ++h) {
            RationalIdempotent e = gluck_idempotent(*lat, mu, h);
            Json j = idempotent_json(*lat, e);
            j["class"] = labels[h];
            all.push_back(j);
            text += "  e[" + labels[h] + "] =";
            for (int c = 0; c < lat->num_classes(); ++c)
                if (e.coeffs[c] != 0)
                    text += " + " + rat_string(e.coeffs[c]) + "*[G/" + labels[c] + "]";
            text += "\n";
        }
        emit(opt, all, text);
        return 0;
    }
    if (opt.format == "csv") {
        std::string header = "class";
        for (const auto& l : labels) header += "," + csv_field(l);
        std::cout << header << "\r\n";
        for (int r = 0; r < m.size(); ++r) {
            std::string row = csv_field(labels[r]);
            for (int c = 0; c < m.size(); ++c) row += "," + m.at(r, c).str();
            std::cout << row << "\r\n";
        }
        return 0;
    }
    std::string text = "table of marks of " + lat->group->label + "\n";
    for (int r = 0; r < m.size(); ++r) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "  %-6s", labels[r].c_str());
        text += buf;
        for (int c = 0; c < m.size(); ++c) {
            std::snprintf(buf, sizeof buf, " %4s", m.at(r, c).str().c_str());
            text += buf;
        }
        text += "\n";
    }
    emit(opt, mark_matrix_json(*lat, m), text);
    return 0;
}

std::string subspace_text(const UnitSubspace& s, const std::string& title) {
    auto labels = class_labels(*s.lat);
    std::string text = title + ": dim " + std::to_string(s.dim()) + "\n  classes:";
    for (const auto& l : labels) text += " " + l;
    text += "\n";
    for (const Unit& u : s.basis()) text += "  " + u.bits.to_string() + "\n";
    return text;
}

int cmd_units(const Options& opt, const std::string& spec, const std::string& method) {
    auto lat = lattice_of(spec);
    UnitSubspace result{lat, F2Span(lat->num_classes())};
    if (method == "brute") {
        result = unit_group(lat, opt.cap);
    } else if (method == "standard") {
        result = standard_basis(lat);
    } else {
        UnitSubspace brute = unit_group(lat, opt.cap);
        UnitSubspace basis = standard_basis(lat);
        if (brute.dim() != basis.dim() || !brute.span.contains_span(basis.span))
            throw check_error("brute-force and standard-basis unit groups disagree");
        result = brute;
    }
    Json j;
    j["group"] = lat->group->label;
    j["dim"] = result.dim();
    j["method"] = method;
    j["basis"] = subspace_json(result);
    emit(opt, j, subspace_text(result, "B^x(" + lat->group->label + ")"));
    return 0;
}

int cmd_phi(const Options& opt, const std::string& spec) {
    auto lat = lattice_of(spec);
    PhiElement p = phi(lat);
    MarkMatrix m = table_of_marks(*lat);
    auto sol = ghost_solve(m, sign_vector(p.unit.bits));
    auto labels = class_labels(*lat);

    const char* kind = p.kind == PhiKind::Trivial ? "trivial"
                       : p.kind == PhiKind::C2    ? "c2"
                                                  : "pseudodihedral";
    Json j = unit_json(*lat, p.unit.bits);
    j["kind"] = kind;
    std::string text = "phi(" + lat->group->label + "), kind " + kind + "\n";
    text += "  bits " + p.unit.bits.to_string() + "\n  as sum of transitive sets:";
    if (sol) {
        Json coeffs = Json::array();
        std::string expr;
        for (int c = 0; c < lat->num_classes(); ++c) {
            coeffs.push_back(sol->coeffs[c].str());
            if (sol->coeffs[c] == 0) continue;
            std::string term = sol->coeffs[c].str() + "*[G/" + labels[c] + "]";
            expr += (expr.empty() ? " " : " + ") + term;
        }
        j["coeffs"] = coeffs;
        text += expr + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_basis(const Options& opt, const std::string& spec) {
    auto lat = lattice_of(spec);
    UnitSubspace basis = standard_basis(lat);
    Json j;
    j["group"] = lat->group->label;
    j["dim"] = basis.dim();
    j["basis"] = subspace_json(basis);
    emit(opt, j, subspace_text(basis, "standard basis of B^x(" + lat->group->label + ")"));
    return 0;
}

int cmd_residual(const Options& opt, const std::string& spec) {
    auto lat = lattice_of(spec);
    ClassifierVerdict v = classify_residual(*lat->group);
    UnitSubspace boundary = boundary_subspace(lat, opt.cap);
    UnitSubspace units = unit_group(lat, opt.cap);
    bool brute = boundary.dim() < units.dim();
    if (brute != v.residual)
        throw check_error("residual classifier disagrees with brute force on " + spec);
    Json j;
    j["group"] = lat->group->label;
    j["residual"] = v.residual;
    j["reason"] = reason_tag(v.reason);
    j["dim_units"] = units.dim();
    j["dim_boundary"] = boundary.dim();
    std::string text = "group " + lat->group->label + ": residual = " +
                       (v.residual ? "true" : "false") + " (reason " +
                       reason_tag(v.reason) + ")\n  dim B^x = " +
                       std::to_string(units.dim()) +
                       ", dim from smaller groups = " + std::to_string(boundary.dim()) +
                       "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_simple_dim(const Options& opt, const std::string& gspec,
                   const std::string& hspec, const std::string& route) {
    GroupPtr g = construct_group(gspec);
    auto lath = lattice_of(hspec);

    std::vector<std::pair<std::string, long>> values;
    bool want_all = route == "all";
    if (want_all || route == "subfunctor")
        values.push_back({"subfunctor", simple_dim(g, lath)});
    if (want_all || route == "gram")
        values.push_back({"gram", gram_rank(*lath, g)});
    if (want_all || route == "closed-form") {
        std::optional<long> k = dihedral_param(*lath->group);
        std::optional<long> n =
            g->order == 1 ? std::optional<long>(0) : dihedral_param(*g);
        if (k && n) {
            values.push_back({"closed-form", *n == 0 ? s_formula(*k)
                                                     : dihedral_simple_dim(*n, *k)});
        } else if (!want_all) {
            throw domain_error("closed-form route needs a trivial or dihedral G and a "
                               "dihedral H");
        }
    }
    if (values.empty()) throw parse_error("unknown route " + route);
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].second != values[0].second)
            throw check_error("simple-dim routes disagree");

    Json j;
    j["g"] = g->label;
    j["h"] = lath->group->label;
    j["dim"] = values[0].second;
    Json routes;
    std::string text = "dim S_{" + g->label + ",F2}(" + lath->group->label + ") = " +
                       std::to_string(values[0].second) + "\n";
    for (const auto& [name, value] : values) {
        routes[name] = value;
        text += "  route " + name + ": " + std::to_string(value) + "\n";
    }
    j["routes"] = routes;
    emit(opt, j, text);
    return 0;
}

int cmd_expo(const Options& opt, const std::string& spec) {
    auto lat = lattice_of(spec);
    int image = exponential_image(lat).dim();
    int units = unit_group(lat, opt.cap).dim();
    bool surjective = image == units;
    Json j;
    j["group"] = lat->group->label;
    j["dim_image"] = image;
    j["dim_units"] = units;
    j["surjective"] = surjective;
    std::string text = "exponential map on " + lat->group->label + ": dim image = " +
                       std::to_string(image) + ", dim B^x = " + std::to_string(units) +
                       ", surjective = " + (surjective ? "true" : "false") + "\n";
    if (auto n = dihedral_param(*lat->group); n && *n >= 3) {
        bool totient = expo_surjective_dihedral(*n);
        if (totient != surjective)
            throw check_error("totient criterion disagrees with the direct computation");
        j["totient_criterion"] = totient;
        text += "  totient criterion agrees (phi(" + std::to_string(*n) + ") = " +
                std::to_string(euler_phi(*n)) + ")\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_scan(const Options& opt, const std::string& range) {
    auto dots = range.find("..");
    if (dots == std::string::npos)
        throw parse_error("scan range must look like nmin..nmax");
    long lo = std::stol(range.substr(0, dots));
    long hi = std::stol(range.substr(dots + 2));
    if (lo < 3 || hi < lo) throw parse_error("bad scan range");

    struct Row {
        long n;
        int dim_bx;
        long s_n;
        bool expo;
        bool residual;
    };
    std::vector<Row> rows;
    for (long n = lo; n <= hi; ++n) {
        auto lat = lattice_of("dihedral:" + std::to_string(n));
        rows.push_back(Row{n, standard_basis(lat).dim(), s_formula(n),
                           expo_surjective_dihedral(n), dihedral_residual(n)});
    }
    if (opt.format == "json") {
        Json j = Json::array();
        for (const Row& r : rows) {
            Json row;
            row["n"] = r.n;
            row["dim_bx"] = r.dim_bx;
            row["s_n"] = r.s_n;
            row["expo_surjective"] = r.expo;
            row["residual"] = r.residual;
            j.push_back(row);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (opt.format == "csv") {
        std::cout << "n,dim_bx,s_n,expo_surjective,residual\r\n";
        for (const Row& r : rows)
            std::cout << r.n << "," << r.dim_bx << "," << r.s_n << ","
                      << (r.expo ? "true" : "false") << ","
                      << (r.residual ? "true" : "false") << "\r\n";
        return 0;
    }
    std::printf("   n  dim_bx  s_n  expo  residual\n");
    for (const Row& r : rows)
        std::printf("%4ld %7d %4ld  %-5s %s\n", r.n, r.dim_bx, r.s_n,
                    r.expo ? "true" : "false", r.residual ? "true" : "false");
    return 0;
}

int cmd_selfcheck(const Options& opt) {
    int failures = run_selfcheck(
        [](const std::string& name, bool ok) {
            std::printf("%s %s\n", ok ? "ok  " : "FAIL", name.c_str());
            std::fflush(stdout);
        },
        opt.cap);
    if (failures) {
        std::printf("selfcheck: %d check(s) failed\n", failures);
        return 3;
    }
    std::printf("selfcheck: all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit groups of Burnside rings for small finite groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "print help"); // frees -h / --h for simple-dim

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cap", opt.cap, "unit enumeration cap on |S_G|")
        ->envname("BXU_CAP")
        ->capture_default_str();

    std::string spec, gspec, hspec, range;
    std::string method = "standard", route = "all";

    auto* describe = app.add_subcommand("describe", "group, subgroup classes, kind");
    describe->add_option("spec", spec)->required();
    auto* tom = app.add_subcommand("tom", "table of marks");
    tom->add_option("spec", spec)->required();
    bool idempotents = false;
    tom->add_flag("--idempotents", idempotents, "emit the primitive idempotents of QB(G)");
    auto* units = app.add_subcommand("units", "unit group of the Burnside ring");
    units->add_option("spec", spec)->required();
    units->add_option("--method", method, "brute | standard | both")
        ->check(CLI::IsMember({"brute", "standard", "both"}));
    auto* phiCmd = app.add_subcommand("phi", "distinguished faithful-unit data");
    phiCmd->add_option("spec", spec)->required();
    auto* basis = app.add_subcommand("basis", "standard basis of the unit group");
    basis->add_option("spec", spec)->required();
    auto* residual = app.add_subcommand("residual", "residual test, both routes");
    residual->add_option("spec", spec)->required();
    auto* simple = app.add_subcommand("simple-dim", "dimension of a simple functor value");
    simple->add_option("--g", gspec, "residual group")->required();
    simple->add_option("--h", hspec, "evaluation group")->required();
    simple->add_option("--route", route, "subfunctor | closed-form | gram | all")
        ->check(CLI::IsMember({"subfunctor", "closed-form", "gram", "all"}));
    auto* expo = app.add_subcommand("expo", "exponential map image and surjectivity");
    expo->add_option("spec", spec)->required();
    auto* scan = app.add_subcommand("scan", "dihedral family table");
    scan->add_option("--dihedral", range, "range nmin..nmax")->required();
    app.add_subcommand("selfcheck", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (describe->parsed()) return cmd_describe(opt, spec);
        if (tom->parsed()) return cmd_tom(opt, spec, idempotents);
        if (units->parsed()) return cmd_units(opt, spec, method);
        if (phiCmd->parsed()) return cmd_phi(opt, spec);
        if (basis->parsed()) return cmd_basis(opt, spec);
        if (residual->parsed()) return cmd_residual(opt, spec);
        if (simple->parsed()) return cmd_simple_dim(opt, gspec, hspec, route);
        if (expo->parsed()) return cmd_expo(opt, spec);
        if (scan->parsed()) return cmd_scan(opt, range);
        return cmd_selfcheck(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const check_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
