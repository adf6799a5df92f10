#include "ck/json_io.hpp"

namespace ck {

using nlohmann::json;

json matrix_to_json(const CKMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) {
            json cell = json::array();
            for (int u = 0; u < 4; ++u) cell.push_back(m.at(i, j).coord(u).str());
            row.push_back(cell);
        }
        entries.push_back(row);
    }
    return json{{"order", m.order()}, {"field", field_name(m.tag())}, {"entries", entries}};
}

CKMatrix matrix_from_json(const json& j) {
    int order = j.at("order").get<int>();
    Field f = field_from_name(j.at("field").get<std::string>());
    CKMatrix m(order, f);
    const auto& entries = j.at("entries");
    for (int i = 0; i < order; ++i)
        for (int k = 0; k < order; ++k) {
            const auto& cell = entries.at(i).at(k);
            m.set(i, k,
                  KElement(f, Rational::from_string(cell.at(0).get<std::string>()),
                           Rational::from_string(cell.at(1).get<std::string>()),
                           Rational::from_string(cell.at(2).get<std::string>()),
                           Rational::from_string(cell.at(3).get<std::string>())));
        }
    return m;
}

json descriptor_to_json(const AlgebraDescriptor& d) {
    json omega = json::array();
    for (const auto& w : d.omega.values()) omega.push_back(w.str());
    return json{{"series", series_name(d.series)},
                {"field", field_name(d.field)},
                {"N", d.N},
                {"omega", omega},
                {"dim", d.dim},
                {"signature",
                 json{{"plus", d.sig.plus}, {"minus", d.sig.minus}, {"zero", d.sig.zero}}},
                {"character", d.chi},
                {"standard_name", d.standard_name},
                {"cartan_label", d.cartan_label}};
}

AlgebraDescriptor descriptor_from_json(const json& j) {
    AlgebraDescriptor d;
    d.series = series_from_name(j.at("series").get<std::string>());
    d.field = field_from_name(j.at("field").get<std::string>());
    d.N = j.at("N").get<int>();
    std::vector<Rational> w;
    for (const auto& s : j.at("omega")) w.push_back(Rational::from_string(s.get<std::string>()));
    d.omega = OmegaVector(w);
    d.dim = j.at("dim").get<long>();
    d.sig.plus = j.at("signature").at("plus").get<std::size_t>();
    d.sig.minus = j.at("signature").at("minus").get<std::size_t>();
    d.sig.zero = j.at("signature").at("zero").get<std::size_t>();
    d.chi = j.at("character").get<long>();
    d.standard_name = j.at("standard_name").get<std::string>();
    d.cartan_label = j.at("cartan_label").get<std::string>();
    return d;
}

json generators_to_json(Series s, Field f, int N, const OmegaVector& w,
                        const std::vector<LabeledMatrix>& gens) {
    json omega = json::array();
    for (const auto& x : w.values()) omega.push_back(x.str());
    json list = json::array();
    for (const auto& g : gens)
        list.push_back(json{{"label", g.label.str()}, {"matrix", matrix_to_json(g.matrix)}});
    return json{{"series", series_name(s)},
                {"field", field_name(f)},
                {"N", N},
                {"omega", omega},
                {"generators", list}};
}

json structure_constants_to_json(const StructureConstants& sc,
                                 const std::vector<std::string>& labels) {
    json recs = json::array();
    for (const auto& r : sc.records())
        recs.push_back(json{{"i", r.i}, {"j", r.j}, {"k", r.k}, {"value", r.value.str()}});
    return json{{"dim", sc.dim()}, {"labels", labels}, {"brackets", recs}};
}

} // namespace ck
