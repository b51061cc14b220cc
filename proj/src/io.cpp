#include "cellres/io.hpp"

#include <sstream>

namespace cellres {

Json ideal_to_json(const MonomialIdeal& ideal) {
    Json j;
    j["n"] = ideal.vars();
    j["gens"] = Json::array();
    for (const auto& g : ideal.gens()) j["gens"].push_back(g.exponents());
    return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& item : j.at("gens")) {
        auto exps = item.get<std::vector<std::int32_t>>();
        if (static_cast<int>(exps.size()) != n)
            throw ParseError("generator exponent vector has wrong length", 0);
        gens.emplace_back(std::move(exps));
    }
    if (gens.empty()) return MonomialIdeal(n);
    return MonomialIdeal(n, std::move(gens));
}

Json order_to_json(const AdmissibleOrder& order) {
    Json j;
    j["order"] = order.perm();
    j["q"] = Json::array();
    for (int k = 0; k < order.size(); ++k) j["q"].push_back(varset_to_vars(order.q(k)));
    return j;
}

Json complex_to_json(const FreeComplex& fc) {
    Json j;
    j["ranks"] = fc.ranks();
    j["maps"] = Json::array();
    for (const auto& dmap : fc.maps) {
        Json m;
        m["i"] = dmap.degree;
        m["entries"] = Json::array();
        for (const auto& e : dmap.entries) {
            Json entry;
            entry["row"] = e.row;
            entry["col"] = e.col;
            entry["sign"] = e.coeff;
            entry["mono"] = e.mono.exponents();
            m["entries"].push_back(std::move(entry));
        }
        j["maps"].push_back(std::move(m));
    }
    return j;
}

Json cell_complex_to_json(const CellComplex& X) {
    Json j;
    j["cells"] = Json::array();
    for (int id = 0; id < static_cast<int>(X.cells.size()); ++id) {
        const Cell& c = X.cells[id];
        Json cell;
        cell["id"] = id;
        cell["dim"] = c.dim;
        cell["u"] = c.gen;
        cell["sigma"] = varset_to_vars(c.sigma);
        cell["label"] = c.label.exponents();
        cell["faces"] = Json::array();
        for (const auto& [fid, sign] : c.faces) {
            Json f;
            f["id"] = fid;
            f["sign"] = sign;
            cell["faces"].push_back(std::move(f));
        }
        j["cells"].push_back(std::move(cell));
    }
    return j;
}

Json simplicial_to_json(const SimplicialComplex& K) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : K.vertex_labels) j["vertices"].push_back(v.exponents());
    j["facets"] = Json::array();
    for (std::uint64_t f : K.facets) {
        std::vector<int> verts;
        for (int v = 0; v < K.vertex_count(); ++v)
            if (f & (std::uint64_t{1} << v)) verts.push_back(v);
        j["facets"].push_back(std::move(verts));
    }
    return j;
}

Json betti_to_json(const BettiTable& table) {
    Json j;
    j["entries"] = Json::array();
    for (const auto& [key, v] : table.entries()) {
        Json e;
        e["i"] = key.first;
        e["deg"] = key.second;
        e["beta"] = v;
        j["entries"].push_back(std::move(e));
    }
    return j;
}

std::string face_poset_text(const CellComplex& X) {
    std::ostringstream out;
    for (int id = 0; id < static_cast<int>(X.cells.size()); ++id) {
        const Cell& c = X.cells[id];
        out << id << ": dim " << c.dim << "  B(" << varset_to_string(c.sigma) << ", "
            << to_string(X.gen_labels[c.gen]) << ")  label " << to_string(c.label);
        if (!c.faces.empty()) {
            out << "  faces";
            for (const auto& [fid, sign] : c.faces)
                out << ' ' << (sign > 0 ? '+' : '-') << fid;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cellres
