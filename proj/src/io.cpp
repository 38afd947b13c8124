#include "sobnull/io.hpp"

#include <sstream>
#include <stdexcept>

namespace sobnull::io {

using sets::CantorFamily;
using sets::CantorSpec;

json to_json(const sets::IntervalSet& A) {
    json arr = json::array();
    for (const auto& [a, b] : A.intervals()) {
        json pair = json::array();
        pair.push_back({boost::multiprecision::numerator(a).str(),
                        boost::multiprecision::denominator(a).str()});
        pair.push_back({boost::multiprecision::numerator(b).str(),
                        boost::multiprecision::denominator(b).str()});
        arr.push_back(pair);
    }
    return json{{"intervals", arr}, {"exact", true}};
}

json to_json(const sets::FloatIntervalSet& A) {
    json arr = json::array();
    std::ostringstream os;
    os.precision(static_cast<int>(A.precision_bits * 0.302) + 2);
    for (const auto& [a, b] : A.intervals) {
        os.str("");
        os << a;
        std::string sa = os.str();
        os.str("");
        os << b;
        arr.push_back({sa, os.str()});
    }
    return json{{"intervals", arr}, {"exact", false}, {"precision_bits", A.precision_bits}};
}

sets::IntervalSet interval_set_from_json(const json& j) {
    const json& arr = j.contains("intervals") ? j.at("intervals") : j;
    std::vector<sets::IntervalSet::Interval> iv;
    for (const auto& pair : arr) {
        auto endpoint = [](const json& e) -> Rational {
            if (e.is_array())
                return Rational(BigInt(e.at(0).get<std::string>()),
                                BigInt(e.at(1).get<std::string>()));
            return rational_from_string(e.get<std::string>());
        };
        iv.emplace_back(endpoint(pair.at(0)), endpoint(pair.at(1)));
    }
    return sets::IntervalSet::from_intervals(std::move(iv));
}

json spec_to_json(const CantorSpec& spec) {
    json params = json::object();
    switch (spec.family) {
        case CantorFamily::Explicit: {
            json l = json::array();
            for (const auto& q : spec.explicit_l) l.push_back(to_fraction_string(q));
            params["l"] = l;
            break;
        }
        case CantorFamily::Geometric:
            params["ratio"] = to_fraction_string(spec.ratio);
            break;
        case CantorFamily::FatCantor:
            params["alpha"] = to_fraction_string(spec.alpha);
            params["beta"] = to_fraction_string(spec.beta);
            break;
        case CantorFamily::SuperFat:
            params["gamma"] = spec.gamma;
            params["delta"] = spec.delta;
            break;
        case CantorFamily::E_dpstar:
        case CantorFamily::F_dpstar:
            params["d"] = spec.d;
            params["pstar"] = spec.pstar;
            break;
        case CantorFamily::F_d1:
        case CantorFamily::F_dinf:
            params["d"] = spec.d;
            break;
        case CantorFamily::F_0pstar:
            params["pstar"] = spec.pstar;
            break;
        default:
            break;
    }
    return json{{"family", family_name(spec.family)}, {"params", params}, {"n", spec.n}};
}

CantorSpec spec_from_json(const json& j) {
    require_keys_subset(j, {"family", "params", "n", "depth"}, "cantor spec");
    const std::string fam = j.at("family").get<std::string>();
    auto f = sets::family_from_name(fam);
    if (!f) throw std::invalid_argument("unknown cantor family: " + fam);
    const int n = j.at("n").get<int>();
    const int depth = j.value("depth", 32);
    const json params = j.value("params", json::object());
    auto rat = [&params](const char* key) {
        const json& v = params.at(key);
        if (v.is_string()) return rational_from_string(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
        throw std::invalid_argument(std::string("parameter '") + key +
                                    "' must be an exact rational string");
    };
    switch (*f) {
        case CantorFamily::Explicit: {
            require_keys_subset(params, {"l"}, "explicit params");
            std::vector<Rational> l;
            for (const auto& e : params.at("l")) l.push_back(rational_from_string(e.get<std::string>()));
            return sets::make_explicit(std::move(l), n, depth);
        }
        case CantorFamily::Geometric:
            require_keys_subset(params, {"ratio"}, "geometric params");
            return sets::make_geometric(rat("ratio"), n, depth);
        case CantorFamily::FatCantor:
            require_keys_subset(params, {"alpha", "beta"}, "fat_cantor params");
            return sets::make_fat_cantor(rat("alpha"), rat("beta"), n, depth);
        case CantorFamily::SuperFat:
            require_keys_subset(params, {"gamma", "delta"}, "superfat params");
            return sets::make_superfat(params.at("gamma").get<double>(),
                                       params.at("delta").get<double>(), n, depth);
        default: {
            require_keys_subset(params, {"d", "pstar"}, "zoo params");
            const double d = params.value("d", 0.0);
            const double pstar = params.value("pstar", 0.0);
            return sets::make_zoo(*f, d, pstar, n, depth);
        }
    }
}

json verdict_to_json(const nullity::NullityVerdict& v, double s, double p,
                     const std::string& family) {
    return json{{"verdict", nullity::verdict_name(v.verdict)},
                {"justification", nullity::justification_name(v.justification)},
                {"detail", v.detail},
                {"s", s},
                {"p", p},
                {"family", family}};
}

json report_to_json(const capacity::SolveReport& rep) {
    return json{{"value", rep.value},
                {"iterations", rep.iterations},
                {"residual", rep.residual},
                {"active_set_size", rep.active_set_size},
                {"converged", rep.converged},
                {"grid", {{"L", rep.L}, {"N", rep.N}, {"s", rep.s}}}};
}

json cloud_to_json(const sets::BallCloud& cloud) {
    json balls = json::array();
    for (const auto& g : cloud.balls) {
        json b{{"radius", g.radius}, {"count", g.count}};
        if (!g.center.empty()) b["center"] = g.center;
        balls.push_back(b);
    }
    return json{{"n", cloud.n},
                {"domain", {{"lo", cloud.domain.lo}, {"hi", cloud.domain.hi}}},
                {"balls", balls},
                {"inner_ball", {{"center", cloud.inner_center}, {"radius", cloud.inner_radius}}},
                {"positive_measure", cloud.positive_measure},
                {"dense_centers_hint", cloud.dense_centers_hint}};
}

void require_keys_subset(const json& j, const std::vector<std::string>& allowed,
                         const std::string& context) {
    if (!j.is_object()) throw std::invalid_argument(context + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok)
            throw std::invalid_argument(context + ": unknown field '" + it.key() + "'");
    }
}

} // namespace sobnull::io
