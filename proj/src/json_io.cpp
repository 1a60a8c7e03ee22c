#include "charfield/json_io.hpp"

#include <stdexcept>

namespace charfield::json_io {

namespace {

template <class T>
T required(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw std::invalid_argument(std::string("bad value for key: ") + key);
    }
}

std::optional<int> optional_label(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_number_integer()) throw std::invalid_argument(std::string("bad value for key: ") + key);
    return j.at(key).get<int>();
}

json label_json(std::optional<int> v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json group_to_json(const GroupSpec& g) {
    return {{"family", family_name(g.family)}, {"n", g.n}, {"q", g.q}, {"twist", g.eps_twist}};
}

GroupSpec group_from_json(const json& j) {
    const Family fam = parse_family(required<std::string>(j, "family"));
    const int twist = j.contains("twist") ? required<int>(j, "twist") : 1;
    return GroupSpec(fam, required<int>(j, "n"), required<i64>(j, "q"), twist);
}

json class_to_json(const SemisimpleClass& s) {
    json j = group_to_json(s.group());
    json orbits = json::array();
    for (const auto& o : s.orbits()) orbits.push_back({{"frac", to_string(o.frac)}, {"mult", o.mult}});
    j["orbits"] = orbits;
    j["plus_type"] = label_json(s.plus_type());
    j["minus_type"] = label_json(s.minus_type());
    return j;
}

SemisimpleClass class_from_json(const json& j) {
    const GroupSpec g = group_from_json(j);
    if (!j.contains("orbits") || !j.at("orbits").is_array()) throw std::invalid_argument("missing key: orbits");
    std::vector<EigOrbit> orbits;
    for (const auto& o : j.at("orbits")) orbits.push_back({parse_frac(required<std::string>(o, "frac")), required<int>(o, "mult")});
    return SemisimpleClass(g, orbits, optional_label(j, "minus_type"), optional_label(j, "plus_type"));
}

json field_to_json(const CharField& f) {
    return {{"d", f.base.d},
            {"stab", f.base.stab},
            {"degree", f.degree()},
            {"adjoin_sqrt_omega_p", f.adjoin_sqrt_omega_p},
            {"real", f.real()}};
}

json partition_to_json(const Partition& p) { return p.parts(); }

json symbol_to_json(const LSymbol& s) {
    return {{"top", s.top}, {"bottom", s.bottom}, {"gap", s.gap}, {"rank", s.rank()}, {"defect", s.defect()}};
}

json criterion_to_json(const acceptance::CriterionResult& r) {
    return {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

}  // namespace charfield::json_io
