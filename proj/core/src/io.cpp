#include "mehr/io.hpp"

#include <cstdlib>
#include <iostream>

#include <json.hpp>

namespace mehr {

using nlohmann::json;

namespace {

Coord int_field(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw InputError(where + ": expected an integer");
    return j.get<Coord>();
}

LatticePolytope parse_builtin(const json& obj, const std::string& where) {
    const std::string kind = obj.at("builtin").get<std::string>();
    if (!obj.contains("dim")) throw InputError(where + ".dim: missing");
    const Coord dim = int_field(obj.at("dim"), where + ".dim");
    if (dim < 1) throw InputError(where + ".dim: must be positive");
    Coord scale = 1;
    if (obj.contains("scale")) {
        scale = int_field(obj.at("scale"), where + ".scale");
        if (scale < 0) throw InputError(where + ".scale: must be non-negative");
    }
    const int d = static_cast<int>(dim);
    if (kind == "cube") {
        std::vector<Point> corners;
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            Point p(static_cast<size_t>(d), 0);
            for (int i = 0; i < d; ++i)
                if (mask & (1u << i)) p[static_cast<size_t>(i)] = scale;
            corners.push_back(std::move(p));
        }
        return LatticePolytope(d, std::move(corners));
    }
    if (kind == "simplex") {
        std::vector<Point> gens = {Point(static_cast<size_t>(d), 0)};
        for (int i = 0; i < d; ++i) {
            Point p(static_cast<size_t>(d), 0);
            p[static_cast<size_t>(i)] = scale;
            gens.push_back(std::move(p));
        }
        return LatticePolytope(d, std::move(gens));
    }
    if (kind == "segment") {
        Point end(static_cast<size_t>(d), 0);
        end[0] = scale;
        return LatticePolytope(d, {Point(static_cast<size_t>(d), 0), std::move(end)});
    }
    throw InputError(where + ".builtin: unknown builtin '" + kind + "'");
}

LatticePolytope parse_polytope(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + ": expected a polytope object");
    if (obj.contains("builtin")) return parse_builtin(obj, where);
    if (!obj.contains("vertices")) throw InputError(where + ".vertices: missing");
    const json& verts = obj.at("vertices");
    if (!verts.is_array() || verts.empty())
        throw InputError(where + ".vertices: expected a non-empty array");
    std::vector<Point> points;
    std::optional<size_t> dim;
    for (size_t i = 0; i < verts.size(); ++i) {
        const std::string at = where + ".vertices[" + std::to_string(i) + "]";
        const json& row = verts[i];
        if (!row.is_array()) throw InputError(at + ": expected an array of integers");
        Point p;
        p.reserve(row.size());
        for (size_t j2 = 0; j2 < row.size(); ++j2)
            p.push_back(int_field(row[j2], at + "[" + std::to_string(j2) + "]"));
        if (!dim) dim = p.size();
        else if (*dim != p.size()) throw InputError(at + ": point length mismatch");
        points.push_back(std::move(p));
    }
    return LatticePolytope(static_cast<int>(*dim), std::move(points));
}

json parse_json_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const Rat& c : p.coefficients()) coeffs.push_back(to_string(c));
    return coeffs;
}

json rat_vector_to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const Rat& c : v) out.push_back(to_string(c));
    return out;
}

json int_vector_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& c : v) {
        if (c.fits_slong_p()) out.push_back(c.get_si());
        else out.push_back(c.get_str());
    }
    return out;
}

json subset_trace_to_json(const std::vector<SubsetCount>& trace) {
    json rows = json::array();
    for (const SubsetCount& row : trace)
        rows.push_back(json{{"subset", row.subset}, {"points", row.points}});
    return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

CollectionSpec parse_collection(const std::string& text) {
    const json root = parse_json_or_throw(text);
    CollectionSpec spec;
    const json* list = nullptr;
    if (root.is_array()) {
        list = &root;
    } else if (root.is_object() && root.contains("polytopes")) {
        if (root.contains("name")) {
            if (!root.at("name").is_string()) throw InputError("name: expected a string");
            spec.name = root.at("name").get<std::string>();
        }
        if (!root.at("polytopes").is_array())
            throw InputError("polytopes: expected an array");
        list = &root.at("polytopes");
    } else if (root.is_object()) {
        spec.polytopes.push_back(parse_polytope(root, "polytope"));
        return spec;
    } else {
        throw InputError("input: expected a collection object, an array, or a polytope object");
    }
    if (list->empty()) throw InputError("polytopes: must not be empty");
    for (size_t i = 0; i < list->size(); ++i)
        spec.polytopes.push_back(parse_polytope((*list)[i], "polytopes[" + std::to_string(i) + "]"));
    for (size_t i = 1; i < spec.polytopes.size(); ++i)
        if (spec.polytopes[i].ambient_dimension() != spec.polytopes[0].ambient_dimension())
            throw InputError("polytopes[" + std::to_string(i) + "]: ambient dimension mismatch");
    return spec;
}

std::string render_polytope(const LatticePolytope& p) {
    json verts = json::array();
    for (const Point& v : p.vertices()) verts.push_back(v);
    return dump(json{{"vertices", verts}});
}

std::string render_count(const CountResult& c) {
    return dump(json{{"total", c.total}, {"interior", c.interior}});
}

std::string render_ehrhart(const EhrhartPolynomial& e) {
    return dump(json{{"dimension", e.dimension},
                     {"coefficients", polynomial_to_json(e.polynomial)},
                     {"polynomial", e.polynomial.str()}});
}

std::string render_multivariate(const MultivariatePolynomial& e) {
    json terms = json::array();
    for (const auto& [alpha, c] : e.terms())
        terms.push_back(json{{"alpha", alpha}, {"coefficient", to_string(c)}});
    return dump(json{{"arity", e.arity()},
                     {"total_degree", e.total_degree()},
                     {"terms", terms}});
}

std::string render_hstar(const HStarVector& h) {
    return dump(json{{"degree", h.degree}, {"entries", int_vector_to_json(h.entries)}});
}

std::string render_mixed_hstar(const MixedHStarVector& h) {
    return dump(json{{"degree", h.degree}, {"entries", int_vector_to_json(h.entries)}});
}

std::string render_mixed_volume_table(const MixedVolumeTable& t) {
    json entries = json::array();
    for (const auto& [alpha, mv] : t.entries)
        entries.push_back(json{{"alpha", alpha}, {"mv", to_string(mv)}});
    return dump(json{{"arity", t.arity}, {"dimension", t.dimension}, {"entries", entries}});
}

std::string render_dmv(const Int& value, const std::vector<SubsetCount>* trace) {
    json out{{"dmv", value.get_str()}};
    if (trace) out["subsets"] = subset_trace_to_json(*trace);
    return dump(out);
}

std::string render_mixed_ehrhart(const MixedEhrhartResult& me, int degree,
                                 const std::vector<SubsetCount>* trace) {
    json out{{"coefficients", rat_vector_to_json(me.coefficients)},
             {"dmv", me.dmv.get_str()},
             {"polynomial", me.polynomial.str()}};
    out["degree"] = me.polynomial.is_zero() ? json("zero") : json(me.polynomial.degree());
    out["degree_bound"] = degree;
    if (trace) out["subsets"] = subset_trace_to_json(*trace);
    return dump(out);
}

std::string render_me_check(const std::vector<Rat>& inclusion_exclusion,
                            const std::vector<Rat>& from_multivariate, bool agree) {
    return dump(json{{"agree", agree},
                     {"inclusion_exclusion", rat_vector_to_json(inclusion_exclusion)},
                     {"from_multivariate", rat_vector_to_json(from_multivariate)}});
}

std::string render_root_report(const MixedHStarVector& h, const RootReport& r) {
    json roots = json::array();
    for (const IsolatedRoot& root : r.roots)
        roots.push_back(json{{"lo", to_string(root.lo)},
                             {"hi", to_string(root.hi)},
                             {"multiplicity", root.multiplicity}});
    return dump(json{{"hstar", int_vector_to_json(h.entries)},
                     {"real_rooted", r.real_rooted},
                     {"roots", roots}});
}

std::string render_dilation_report(const DilationReport& rep) {
    return json{{"r", rep.r},
                {"hstar", int_vector_to_json(rep.hstar.entries)},
                {"real_rooted", rep.real_rooted},
                {"positive_tail", rep.positive_tail},
                {"log_concave", rep.log_concave},
                {"unimodal", rep.unimodal},
                {"limit_distance", to_string(rep.limit_distance)}}
               .dump() +
           "\n";
}

std::string render_find_r(const std::optional<Coord>& r, Coord r_max) {
    json out{{"r_max", r_max}, {"kind", "empirical witness"}};
    if (r) {
        out["found"] = true;
        out["min_r"] = *r;
    } else {
        out["found"] = false;
        out["min_r"] = nullptr;
        out["note"] = "not found below r_max";
    }
    return dump(out);
}

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("MIXED_EHRHART_LOG");
        if (!env) return LogLevel::Quiet;
        const std::string value(env);
        if (value == "info") return LogLevel::Info;
        if (value == "trace") return LogLevel::Trace;
        return LogLevel::Quiet;
    }();
    return level;
}

void log_info(const std::string& message) {
    if (log_level() >= LogLevel::Info) std::cerr << "[info] " << message << "\n";
}

void log_trace(const std::string& message) {
    if (log_level() >= LogLevel::Trace) std::cerr << "[trace] " << message << "\n";
}

}  // namespace mehr
