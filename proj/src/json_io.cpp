#include "smf2/json_io.hpp"

namespace smf2 {

namespace {

Int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw Error("SchemaViolation", std::string("missing or non-integer field: ") + key);
    return j.at(key).get<Int>();
}

void require_keys(const Json& j, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (!j.contains(k))
            throw Error("SchemaViolation", std::string("missing field: ") + k);
}

}  // namespace

Json qexp_to_json(const QExpansion& f) {
    Json j;
    j["p"] = f.p().value();
    j["N"] = f.level();
    j["weight"] = Json::array({f.weight().k1, f.weight().k2});
    j["max_trace"] = f.max_trace();
    Json coeffs = Json::array();
    for (const auto& [t, v] : f.coeffs()) {
        Json item;
        item["T"] = Json::array({t.a, t.b, t.c});
        item["v"] = v;
        coeffs.push_back(std::move(item));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

QExpansion qexp_from_json(const Json& j) {
    require_keys(j, {"p", "N", "weight", "max_trace", "coeffs"});
    const Prime p(get_int(j, "p"));
    const Int level = get_int(j, "N");
    const auto& w = j.at("weight");
    if (!w.is_array() || w.size() != 2)
        throw Error("SchemaViolation", "weight must be [k1, k2]");
    const Weight weight(w.at(0).get<Int>(), w.at(1).get<Int>());
    const Int max_trace = get_int(j, "max_trace");

    QExpansion::CoeffMap coeffs;
    const auto& arr = j.at("coeffs");
    if (!arr.is_array()) throw Error("SchemaViolation", "coeffs must be an array");
    for (const auto& item : arr) {
        require_keys(item, {"T", "v"});
        const auto& tj = item.at("T");
        if (!tj.is_array() || tj.size() != 3)
            throw Error("SchemaViolation", "T must be [a, b, c]");
        TMatrix t{tj.at(0).get<Int>(), tj.at(1).get<Int>(), tj.at(2).get<Int>()};
        const auto& vj = item.at("v");
        if (!vj.is_array()) throw Error("SchemaViolation", "v must be an array");
        std::vector<Int> v;
        for (const auto& x : vj) v.push_back(x.get<Int>());
        if (!coeffs.emplace(t, std::move(v)).second)
            throw Error("SchemaViolation", "duplicate T in coeffs",
                        {{"a", t.a}, {"b", t.b}, {"c", t.c}});
    }
    return QExpansion(p, level, weight, max_trace, std::move(coeffs));
}

std::string dump_canonical(const Json& j) {
    // nlohmann::json objects iterate in sorted key order; compact dump is
    // therefore canonical.
    return j.dump();
}

Json cycle_to_json(const CycleResult& r) {
    Json j;
    j["p"] = r.p;
    j["r"] = r.r;
    j["k"] = r.k;
    j["semi_ordinary"] = r.semi_ordinary;
    j["values"] = r.values;
    Json lows = Json::array();
    for (const auto& lp : r.low_points) {
        Json item;
        item["type"] = lp.type;
        item["c"] = lp.low_number;
        item["b"] = lp.jumping_number;
        item["anchor"] = lp.anchor;
        lows.push_back(std::move(item));
    }
    j["low_points"] = std::move(lows);
    switch (r.provenance) {
        case CycleProvenance::closed_form: j["provenance"] = "closed_form"; break;
        case CycleProvenance::solver: j["provenance"] = "solver"; break;
        case CycleProvenance::degenerate: j["provenance"] = "degenerate"; break;
    }
    if (r.trigger_collision) j["trigger_collision"] = true;
    return j;
}

std::string ram_flag_str(RamFlag f) {
    switch (f) {
        case RamFlag::peu: return "peu";
        case RamFlag::ramified: return "ramified";
        case RamFlag::tres: return "tres";
    }
    return "?";
}

RamFlag ram_flag_parse(const std::string& s) {
    if (s == "peu") return RamFlag::peu;
    if (s == "ramified") return RamFlag::ramified;
    if (s == "tres") return RamFlag::tres;
    throw Error("SchemaViolation", "ramification flag must be peu|ramified|tres");
}

namespace {

RamFlag ram_of(const Json& j, const char* key) {
    if (!j.contains("ram") || !j.at("ram").contains(key))
        throw Error("SchemaViolation", std::string("missing ram flag: ") + key);
    return ram_flag_parse(j.at("ram").at(key).get<std::string>());
}

std::vector<SerreWeight> candidates_of(const Json& j) {
    std::vector<SerreWeight> out;
    for (const auto& c : j.at("candidates")) {
        if (!c.is_array() || c.size() != 3)
            throw Error("SchemaViolation", "candidates must be [k1, k2, w] triples");
        out.push_back(SerreWeight{c.at(0).get<Int>(), c.at(1).get<Int>(), c.at(2).get<Int>()});
    }
    return out;
}

}  // namespace

DescriptorInput descriptor_from_json(const Json& j) {
    if (!j.contains("type"))
        throw Error("SchemaViolation", "descriptor needs a type field");
    const std::string type = j.at("type").get<std::string>();

    if (type == "borel") {
        BorelDescriptor d{Prime(get_int(j, "p")), get_int(j, "a"), get_int(j, "b"),
                          get_int(j, "c")};
        d.ram_b1 = ram_of(j, "b1");
        d.ram_b2 = ram_of(j, "b2");
        d.ram_b3 = ram_of(j, "b3");
        d.ram_t0 = ram_of(j, "t0");
        return LocalRepDescriptor{d};
    }
    if (type == "siegel") {
        SiegelDescriptor d{Prime(get_int(j, "p")), get_int(j, "a"), get_int(j, "b"),
                           get_int(j, "c")};
        d.ram_t3 = ram_of(j, "t3");
        return LocalRepDescriptor{d};
    }
    if (type == "klingen") {
        const Prime p(get_int(j, "p"));
        const Int a = get_int(j, "a"), b = get_int(j, "b"), c = get_int(j, "c");
        const RamFlag t = ram_of(j, "t");
        if (p.is_odd() && a - b == (p.value() + 1) / 2)
            return LocalRepDescriptor{KlingenSplitDescriptor{p, a, b, c, t}};
        return LocalRepDescriptor{KlingenGenericDescriptor{p, a, b, c, t}};
    }
    if (type == "klingen2") {
        if (j.contains("p") && get_int(j, "p") != 2)
            throw Error("SchemaViolation", "klingen2 is the p = 2 case");
        return Klingen2Input{get_int(j, "c"), ram_of(j, "t")};
    }
    if (type == "endoscopic") {
        EndoscopicDescriptor d{Prime(get_int(j, "p")), {}};
        if (!j.contains("candidates"))
            throw Error("SchemaViolation", "endoscopic descriptor needs candidates");
        d.candidates = candidates_of(j);
        return LocalRepDescriptor{d};
    }
    if (type == "irreducible") {
        IrreducibleDescriptor d{Prime(get_int(j, "p")), get_int(j, "a"), get_int(j, "c"), {}};
        if (j.contains("candidates")) d.candidates = candidates_of(j);
        return LocalRepDescriptor{d};
    }
    throw Error("SchemaViolation", "unknown descriptor type: " + type);
}

namespace {

Json candidates_json(const std::vector<SerreWeight>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(Json::array({c.k1, c.k2, c.w}));
    return arr;
}

}  // namespace

Json descriptor_to_json(const DescriptorInput& input) {
    Json j;
    if (const auto* k2 = std::get_if<Klingen2Input>(&input)) {
        j["type"] = "klingen2";
        j["p"] = 2;
        j["c"] = k2->c;
        j["ram"] = Json{{"t", ram_flag_str(k2->ram)}};
        return j;
    }
    const auto& d = std::get<LocalRepDescriptor>(input);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BorelDescriptor>) {
                j["type"] = "borel";
                j["p"] = v.p.value();
                j["a"] = v.a;
                j["b"] = v.b;
                j["c"] = v.c;
                j["ram"] = Json{{"b1", ram_flag_str(v.ram_b1)},
                                {"b2", ram_flag_str(v.ram_b2)},
                                {"b3", ram_flag_str(v.ram_b3)},
                                {"t0", ram_flag_str(v.ram_t0)}};
            } else if constexpr (std::is_same_v<T, SiegelDescriptor>) {
                j["type"] = "siegel";
                j["p"] = v.p.value();
                j["a"] = v.a;
                j["b"] = v.b;
                j["c"] = v.c;
                j["ram"] = Json{{"t3", ram_flag_str(v.ram_t3)}};
            } else if constexpr (std::is_same_v<T, KlingenGenericDescriptor>) {
                j["type"] = "klingen";
                j["p"] = v.p.value();
                j["a"] = v.a;
                j["b"] = v.b;
                j["c"] = v.c;
                j["ram"] = Json{{"t", ram_flag_str(v.ram_t)}};
            } else if constexpr (std::is_same_v<T, KlingenSplitDescriptor>) {
                j["type"] = "klingen";
                j["p"] = v.p.value();
                j["a"] = v.a;
                j["b"] = v.b;
                j["c"] = v.c;
                j["ram"] = Json{{"t", ram_flag_str(v.ram_max)}};
            } else if constexpr (std::is_same_v<T, EndoscopicDescriptor>) {
                j["type"] = "endoscopic";
                j["p"] = v.p.value();
                j["candidates"] = candidates_json(v.candidates);
            } else if constexpr (std::is_same_v<T, IrreducibleDescriptor>) {
                j["type"] = "irreducible";
                j["p"] = v.p.value();
                j["a"] = v.a;
                j["c"] = v.c;
                if (v.candidates) j["candidates"] = candidates_json(*v.candidates);
            }
        },
        d);
    return j;
}

Json serre_weight_to_json(const SerreWeight& sw) {
    Json j;
    j["k1"] = sw.k1;
    j["k2"] = sw.k2;
    j["w"] = sw.w;
    return j;
}

}  // namespace smf2
