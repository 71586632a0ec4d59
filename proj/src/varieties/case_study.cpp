#include <fstream>
#include <sstream>

#include "json.hpp"
#include "okb/errors.hpp"
#include "okb/varieties.hpp"

namespace okb {

namespace {

HomogPoly var(std::size_t nv, std::size_t i) { return HomogPoly::variable(nv, i); }

CaseStudy projective_space(unsigned n, unsigned c) {
    CaseStudy cs;
    cs.name = "p" + std::to_string(n);
    const std::size_t nv = n + 1;
    for (std::size_t i = 0; i < nv; ++i) cs.var_names.push_back("x" + std::to_string(i));
    cs.flag.ambient_vars = nv;
    for (std::size_t i = 1; i < n; ++i) cs.flag.steps.push_back(var(nv, i));
    cs.flag.final_form = var(nv, n);
    cs.flag.point.assign(nv, Rat(0));
    cs.flag.point[0] = Rat(1);
    cs.flag.chart_var = 0;
    cs.flag.parameter_var = n;
    cs.n = n;
    cs.r = n + 1;
    cs.c = c;
    cs.d = 1;
    return cs;
}

CaseStudy quadric_surface(unsigned c, bool tangent) {
    CaseStudy cs;
    cs.name = tangent ? "quadric_surface" : "quadric_surface_nontangent";
    cs.var_names = {"x", "y", "z", "w"};
    cs.relation = parse_poly("x*w - y*z", cs.var_names);
    cs.flag.ambient_vars = 4;
    cs.flag.relation = cs.relation;
    // Y_1 = Q n {z = y} is the smooth conic xw = y^2.
    cs.flag.steps = {parse_poly("z - y", cs.var_names)};
    // {w = 0} is the tangent plane of Q at (1:0:0:0); {y = 0} is not.
    cs.flag.final_form = parse_poly(tangent ? "w" : "y", cs.var_names);
    cs.flag.point = {Rat(1), Rat(0), Rat(0), Rat(0)};
    cs.flag.chart_var = 0;
    cs.flag.parameter_var = 1;
    cs.n = 2;
    cs.r = 2;
    cs.c = c;
    cs.d = 2;
    return cs;
}

CaseStudy fermat_cubic(unsigned c) {
    CaseStudy cs;
    cs.name = "fermat_cubic";
    cs.var_names = {"x", "y", "z", "w"};
    cs.relation = parse_poly("x^3 + y^3 + z^3 + w^3", cs.var_names);
    cs.flag.ambient_vars = 4;
    cs.flag.relation = cs.relation;
    cs.flag.steps = {parse_poly("w", cs.var_names)};
    // (1:-1:0) is a flex of x^3 + y^3 + z^3 with tangent x + y = 0.
    cs.flag.final_form = parse_poly("x + y", cs.var_names);
    cs.flag.point = {Rat(1), Rat(-1), Rat(0), Rat(0)};
    cs.flag.chart_var = 0;
    cs.flag.parameter_var = 2;
    cs.n = 2;
    cs.r = 1;
    cs.c = c;
    cs.d = 3;
    return cs;
}

void check_multiple(unsigned c) {
    if (c < 1) throw InvalidArgument("case study: c must be at least 1");
}

}  // namespace

const std::vector<std::string>& case_names() {
    static const std::vector<std::string> names{"p2", "p3", "quadric_surface", "fermat_cubic"};
    return names;
}

CaseStudy make_case(std::string_view name, unsigned c) {
    check_multiple(c);
    if (name == "p2") return projective_space(2, c);
    if (name == "p3") return projective_space(3, c);
    if (name == "quadric_surface") return quadric_surface(c, true);
    if (name == "fermat_cubic") return fermat_cubic(c);
    throw InvalidArgument("unknown case study '" + std::string(name) + "'");
}

CaseStudy quadric_nontangent_control(unsigned c) {
    check_multiple(c);
    return quadric_surface(c, false);
}

CaseStudy case_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("fixture: ") + e.what());
    }
    try {
        CaseStudy cs;
        cs.name = j.value("name", std::string("fixture"));
        cs.var_names = j.at("variables").get<std::vector<std::string>>();
        const std::size_t nv = cs.var_names.size();
        if (nv < 2) throw InvalidArgument("fixture: need at least two variables");
        if (j.contains("relation") && !j["relation"].is_null()) {
            cs.relation = parse_poly(j["relation"].get<std::string>(), cs.var_names);
        }
        cs.flag.ambient_vars = nv;
        cs.flag.relation = cs.relation;
        for (const auto& s : j.at("steps")) cs.flag.steps.push_back(parse_poly(s.get<std::string>(), cs.var_names));
        cs.flag.final_form = parse_poly(j.at("final_form").get<std::string>(), cs.var_names);
        for (const auto& x : j.at("point")) {
            cs.flag.point.push_back(x.is_string() ? Rat::parse(x.get<std::string>()) : Rat(x.get<long>()));
        }
        auto index_of = [&](const std::string& key) {
            const auto name = j.at(key).get<std::string>();
            for (std::size_t i = 0; i < nv; ++i) {
                if (cs.var_names[i] == name) return i;
            }
            throw InvalidArgument("fixture: unknown variable '" + name + "' for " + key);
        };
        cs.flag.chart_var = index_of("chart");
        cs.flag.parameter_var = index_of("parameter");
        cs.n = static_cast<unsigned>(cs.flag.steps.size() + 1);
        cs.r = j.value("r", 0U);
        const int c = j.value("c", 1);
        if (c < 1) throw InvalidArgument("fixture: c must be at least 1");
        cs.c = static_cast<unsigned>(c);
        cs.d = cs.relation ? cs.relation->degree() : 1;
        return cs;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("fixture: ") + e.what());
    }
}

CaseStudy load_case_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("fixture: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return case_from_json(buf.str());
}

}  // namespace okb
