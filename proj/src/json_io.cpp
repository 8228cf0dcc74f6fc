#include "limspace/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace limspace {

namespace {

json vecs_to_json(const std::vector<Vec>& vs) {
    json out = json::array();
    for (const Vec& v : vs) out.push_back(v);
    return out;
}

std::vector<Vec> vecs_from_json(const json& j) {
    std::vector<Vec> out;
    for (const auto& v : j) out.push_back(v.get<Vec>());
    return out;
}

}  // namespace

json to_json(const ExtendedReal& t) {
    if (t.is_pos_inf()) return "inf";
    if (t.is_neg_inf()) return "-inf";
    return t.value();
}

ExtendedReal extended_real_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return ExtendedReal::pos_inf();
        if (s == "-inf") return ExtendedReal::neg_inf();
        throw std::invalid_argument("extended real: expected \"inf\", \"-inf\" or a number");
    }
    return ExtendedReal::finite(j.get<double>());
}

json to_json(const StepFunction& f) {
    return json{{"breaks", f.breaks()}, {"values", vecs_to_json(f.values())}};
}

StepFunction step_function_from_json(const json& j) {
    return StepFunction(j.at("breaks").get<std::vector<double>>(), vecs_from_json(j.at("values")));
}

json to_json(const GridFunction& f) {
    return json{{"breaks", f.breaks()}, {"values", vecs_to_json(f.values())}};
}

GridFunction grid_function_from_json(const json& j) {
    return GridFunction(j.at("breaks").get<std::vector<double>>(), vecs_from_json(j.at("values")));
}

json to_json(const SignedMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms()) atoms.push_back(json{{"loc", to_json(a.location)}, {"w", a.weight}});
    return json{{"domain", domain_name(mu.domain())}, {"atoms", atoms}, {"density", to_json(mu.density())}};
}

SignedMeasure measure_from_json(const json& j) {
    std::string d = j.at("domain").get<std::string>();
    Domain domain = d == "half" ? Domain::Half : d == "line" ? Domain::Line : Domain::Finite;
    if (d != "half" && d != "line" && d != "finite")
        throw std::invalid_argument("measure: unknown domain tag");
    std::vector<SignedMeasure::Atom> atoms;
    for (const auto& a : j.value("atoms", json::array()))
        atoms.push_back({extended_real_from_json(a.at("loc")), a.at("w").get<Vec>()});
    StepFunction density;
    if (j.contains("density") && !j.at("density").at("breaks").empty())
        density = step_function_from_json(j.at("density"));
    if (atoms.empty() && density.empty()) return SignedMeasure(domain, 1);
    return SignedMeasure(domain, std::move(atoms), std::move(density));
}

json to_json(const LimFunctionHalf& x) {
    json j = to_json(x.core());
    j["limit"] = x.limit();
    return j;
}

LimFunctionHalf lim_half_from_json(const json& j) {
    Vec limit = j.at("limit").get<Vec>();
    GridFunction core =
        j.at("breaks").empty() ? GridFunction(limit.size()) : grid_function_from_json(j);
    return LimFunctionHalf(std::move(core), std::move(limit));
}

json to_json(const LimFunctionLine& x) {
    json j = to_json(x.core());
    j["limit"] = x.limit_pos();
    j["limit_neg"] = x.limit_neg();
    return j;
}

LimFunctionLine lim_line_from_json(const json& j) {
    Vec limit_pos = j.at("limit").get<Vec>();
    Vec limit_neg = j.at("limit_neg").get<Vec>();
    GridFunction core =
        j.at("breaks").empty() ? GridFunction(limit_pos.size()) : grid_function_from_json(j);
    return LimFunctionLine(std::move(core), std::move(limit_neg), std::move(limit_pos));
}

json to_json(const MeasureFunctionalHalf& f) {
    return json{{"mu", to_json(f.mu)}, {"alpha", f.alpha}};
}

MeasureFunctionalHalf measure_functional_from_json(const json& j) {
    return MeasureFunctionalHalf(measure_from_json(j.at("mu")), j.at("alpha").get<Vec>());
}

json to_json(const DensityFunctionalHalf& f) {
    return json{{"y", to_json(f.y)}, {"q", f.q}, {"alpha", f.alpha}};
}

DensityFunctionalHalf density_functional_from_json(const json& j) {
    StepFunction y = j.at("y").at("breaks").empty() ? StepFunction(j.at("alpha").size())
                                                    : step_function_from_json(j.at("y"));
    return DensityFunctionalHalf(std::move(y), j.value("q", 2.0), j.at("alpha").get<Vec>());
}

json to_json(const SequenceFunctional& f) {
    return json{{"y", f.y}, {"alpha", f.alpha}};
}

SequenceFunctional sequence_functional_from_json(const json& j) {
    return SequenceFunctional{j.at("y").get<std::vector<double>>(), j.at("alpha").get<double>()};
}

json to_json(const Coefficients& c) {
    return json{{"limit", c.limit}, {"core", c.core}};
}

json to_json(const DualNormReport& r) {
    return json{{"value", r.value},
                {"certified", r.certified},
                {"gap", r.gap},
                {"restarts", r.restarts},
                {"witness", json{{"core", r.witness_core}, {"limit", r.witness_limit}}}};
}

namespace {

void dump_rec(const json& j, std::string& out, int indent, int depth) {
    auto pad = [&](int d) {
        if (indent >= 0) {
            out.push_back('\n');
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out.push_back('{');
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out.push_back(',');
                first = false;
                pad(depth + 1);
                out += json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            pad(depth);
            out.push_back('}');
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out.push_back('[');
            bool first = true;
            for (const auto& v : j) {
                if (!first) out.push_back(',');
                first = false;
                pad(depth + 1);
                dump_rec(v, out, indent, depth + 1);
            }
            pad(depth);
            out.push_back(']');
            return;
        }
        case json::value_t::number_float: {
            double v = j.get<double>();
            if (std::isnan(v)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string canonical_dump(const json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    if (indent >= 0) out.push_back('\n');
    return out;
}

}  // namespace limspace
