#include "ope/io.hpp"

#include <fstream>
#include <set>
#include <json.hpp>
#include <sstream>

namespace ope {

using nlohmann::json;

namespace {

std::pair<int, int> offset_to_line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + e.what(),
                         line, col);
    }
}

const json& need(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'", 0, 0);
    return j.at(key);
}

Complex complex_from_json(const json& j, ComplexKind kind) {
    Complex out;
    out.kind = kind;
    const json& levels = need(j, "levels");
    if (!levels.is_array() || levels.empty()) throw ParseError("'levels' must be a nonempty array", 0, 0);
    for (const json& lv : levels) {
        std::vector<std::string> nodes = need(lv, "nodes").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> covers;
        for (const json& e : need(lv, "covers")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("a cover must be a [child, parent] pair", 0, 0);
            covers.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        try {
            out.levels.push_back(Poset::from_covers(nodes, covers));
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad level: ") + e.what(), 0, 0);
        }
    }
    const json& cons = need(j, "constellations");
    if (!cons.is_array() || cons.size() + 1 != out.levels.size())
        throw ParseError("expected one constellation per consecutive level pair", 0, 0);
    for (size_t i = 0; i < cons.size(); ++i) {
        const Poset& lower = out.levels[i];
        const Poset& upper = out.levels[i + 1];
        std::vector<std::vector<int>> sigma(upper.size());
        std::vector<bool> given(upper.size(), false);
        for (auto it = cons[i].begin(); it != cons[i].end(); ++it) {
            auto u = upper.find(it.key());
            if (!u) throw ParseError("constellation " + std::to_string(i) + " keyed by unknown node '" +
                                         it.key() + "'",
                                     0, 0);
            given[*u] = true;
            std::set<int> carrier;
            for (const json& m : it.value()) {
                auto low = lower.find(m.get<std::string>());
                if (!low)
                    throw ParseError("constellation " + std::to_string(i) + " refers to unknown node '" +
                                         m.get<std::string>() + "'",
                                     0, 0);
                if (!carrier.insert(*low).second)
                    throw ParseError("duplicate member '" + m.get<std::string>() + "' in constellation " +
                                         std::to_string(i),
                                     0, 0);
            }
            sigma[*u].assign(carrier.begin(), carrier.end());
        }
        for (int u = 0; u < upper.size(); ++u)
            if (!given[u])
                throw ParseError("constellation " + std::to_string(i) + " misses node '" + upper.name(u) +
                                     "'",
                                 0, 0);
        out.sigmas.push_back(std::move(sigma));
    }
    return out;
}

Hypergraph hypergraph_from_json(const json& j) {
    std::vector<std::vector<std::string>> faces;
    for (const json& lv : need(j, "faces")) faces.push_back(lv.get<std::vector<std::string>>());
    std::map<std::string, std::string> gamma;
    std::map<std::string, std::vector<std::string>> delta;
    for (auto it = need(j, "gamma").begin(); it != need(j, "gamma").end(); ++it)
        gamma[it.key()] = it.value().get<std::string>();
    for (auto it = need(j, "delta").begin(); it != need(j, "delta").end(); ++it) {
        std::vector<std::string> ds = it.value().get<std::vector<std::string>>();
        std::set<std::string> uniq(ds.begin(), ds.end());
        if (uniq.size() != ds.size())
            throw ParseError("duplicate delta entry for '" + it.key() + "'", 0, 0);
        delta[it.key()] = ds;
    }
    try {
        return Hypergraph(faces, gamma, delta);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad hypergraph: ") + e.what(), 0, 0);
    }
}

json complex_to_json(const Complex& c) {
    json j;
    j["kind"] = c.kind == ComplexKind::Tree ? "tree-complex" : "thicket-complex";
    json levels = json::array();
    for (const Poset& lv : c.levels) {
        json l;
        l["nodes"] = lv.names();
        json covers = json::array();
        for (auto [ch, p] : lv.cover_pairs()) covers.push_back({lv.name(ch), lv.name(p)});
        l["covers"] = covers;
        levels.push_back(l);
    }
    j["levels"] = levels;
    json cons = json::array();
    for (size_t i = 0; i < c.sigmas.size(); ++i) {
        json m = json::object();
        const Poset& upper = c.levels[i + 1];
        const Poset& lower = c.levels[i];
        for (int u = 0; u < upper.size(); ++u) {
            std::vector<std::string> members;
            for (int low : c.sigmas[i][u]) members.push_back(lower.name(low));
            std::sort(members.begin(), members.end());
            m[upper.name(u)] = members;
        }
        cons.push_back(m);
    }
    j["constellations"] = cons;
    return j;
}

json hypergraph_to_json(const Hypergraph& h) {
    json j;
    switch (h.classification().kind) {
        case HypergraphClass::PositiveOpetope: j["kind"] = "opetope"; break;
        case HypergraphClass::OpetopicCardinal: j["kind"] = "cardinal"; break;
        case HypergraphClass::Hypergraph: j["kind"] = "hypergraph"; break;
    }
    json faces = json::array();
    for (int k = 0; k <= h.dim(); ++k) faces.push_back(h.faces(k));
    j["faces"] = faces;
    json gamma = json::object(), delta = json::object();
    for (int k = 1; k <= h.dim(); ++k)
        for (const std::string& n : h.faces(k)) {
            FaceRef f = h.face(n);
            gamma[n] = h.name(h.gamma(f));
            std::vector<std::string> ds;
            for (FaceRef d : h.delta_faces(f)) ds.push_back(h.name(d));
            std::sort(ds.begin(), ds.end());
            delta[n] = ds;
        }
    j["gamma"] = gamma;
    j["delta"] = delta;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ParsedDocument parse_endpoint_or_path(const json& j, const std::string& base_dir) {
    if (j.is_string()) {
        std::string path = j.get<std::string>();
        if (!base_dir.empty() && !path.empty() && path[0] != '/') path = base_dir + "/" + path;
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open referenced file '" + path + "'", 0, 0);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_document(ss.str(), base_dir);
    }
    return parse_document(j.dump(), base_dir);
}

}  // namespace

std::string doc_kind_name(DocKind k) {
    switch (k) {
        case DocKind::TreeComplex: return "tree-complex";
        case DocKind::ThicketComplex: return "thicket-complex";
        case DocKind::Opetope: return "opetope";
        case DocKind::Cardinal: return "cardinal";
        case DocKind::HypergraphDoc: return "hypergraph";
        case DocKind::IotaMorphism: return "iota";
        case DocKind::ComplexMorphism: return "complex";
        case DocKind::FaceMorphism: return "face";
    }
    return "?";
}

DocKind doc_kind_from(const std::string& name) {
    for (DocKind k : {DocKind::TreeComplex, DocKind::ThicketComplex, DocKind::Opetope,
                      DocKind::Cardinal, DocKind::HypergraphDoc, DocKind::IotaMorphism,
                      DocKind::ComplexMorphism, DocKind::FaceMorphism})
        if (doc_kind_name(k) == name) return k;
    throw ParseError("unknown kind '" + name + "'", 0, 0);
}

ParsedDocument parse_document(const std::string& text, const std::string& base_dir) {
    json j = parse_json(text);
    std::string kind = need(j, "kind").get<std::string>();
    DocKind k = doc_kind_from(kind);
    ParsedDocument out;
    out.kind = k;
    switch (k) {
        case DocKind::TreeComplex:
        case DocKind::ThicketComplex: {
            Complex c = complex_from_json(
                j, k == DocKind::TreeComplex ? ComplexKind::Tree : ComplexKind::Thicket);
            ValidationReport rep = validate_complex(c);
            if (!rep.ok())
                throw std::invalid_argument("document does not validate as " + kind + ": " +
                                            rep.summary());
            out.value = std::move(c);
            break;
        }
        case DocKind::Opetope:
        case DocKind::Cardinal:
        case DocKind::HypergraphDoc: {
            Hypergraph h = hypergraph_from_json(j);
            const Classification& cl = h.classification();
            if (k == DocKind::Opetope && cl.kind != HypergraphClass::PositiveOpetope)
                throw std::invalid_argument("declared opetope but classifies lower: " +
                                            cl.axioms.summary());
            if (k == DocKind::Cardinal && cl.kind == HypergraphClass::Hypergraph)
                throw std::invalid_argument("declared cardinal but classifies lower: " +
                                            cl.axioms.summary());
            if (k == DocKind::Cardinal && cl.kind == HypergraphClass::PositiveOpetope)
                out.note = "declared cardinal, classifies as opetope";
            if (k == DocKind::HypergraphDoc && cl.kind != HypergraphClass::Hypergraph)
                out.note = "declared hypergraph, classifies as " +
                           std::string(cl.kind == HypergraphClass::PositiveOpetope ? "opetope"
                                                                                   : "cardinal");
            out.value = std::move(h);
            break;
        }
        case DocKind::IotaMorphism:
        case DocKind::FaceMorphism: {
            ParsedDocument src = parse_endpoint_or_path(need(j, "source"), base_dir);
            ParsedDocument dst = parse_endpoint_or_path(need(j, "target"), base_dir);
            const Hypergraph* sh = std::get_if<Hypergraph>(&src.value);
            const Hypergraph* th = std::get_if<Hypergraph>(&dst.value);
            if (!sh || !th)
                throw std::invalid_argument("iota/face morphism endpoints must be hypergraph documents");
            std::map<std::string, std::string> assignment;
            for (auto it = need(j, "map").begin(); it != need(j, "map").end(); ++it)
                assignment[it.key()] = it.value().get<std::string>();
            if (k == DocKind::IotaMorphism) {
                IotaMap m{*sh, *th, assignment};
                IotaReport rep = validate_iota_map(m);
                if (!rep.report.ok())
                    throw std::invalid_argument("iota map does not validate: " + rep.report.summary());
                out.value = std::move(m);
            } else {
                FaceMap m{*sh, *th, assignment};
                ValidationReport rep = validate_face_map(m);
                if (!rep.ok())
                    throw std::invalid_argument("face map does not validate: " + rep.summary());
                out.value = std::move(m);
            }
            break;
        }
        case DocKind::ComplexMorphism: {
            ParsedDocument src = parse_endpoint_or_path(need(j, "source"), base_dir);
            ParsedDocument dst = parse_endpoint_or_path(need(j, "target"), base_dir);
            const Complex* sc = std::get_if<Complex>(&src.value);
            const Complex* tc = std::get_if<Complex>(&dst.value);
            if (!sc || !tc)
                throw std::invalid_argument("complex morphism endpoints must be complex documents");
            const json& maps = need(j, "map");
            if (!maps.is_array() || static_cast<int>(maps.size()) != sc->dim() + 1)
                throw std::invalid_argument("complex morphism needs one map per source level");
            ComplexMorphism m;
            m.source = *sc;
            m.target = *tc;
            for (int i = 0; i <= sc->dim(); ++i) {
                std::vector<int> level(sc->levels[i].size(), -1);
                for (auto it = maps[i].begin(); it != maps[i].end(); ++it) {
                    auto a = sc->levels[i].find(it.key());
                    auto b = tc->levels[i].find(it.value().get<std::string>());
                    if (!a || !b)
                        throw ParseError("level " + std::to_string(i) + " map refers to unknown node",
                                         0, 0);
                    level[*a] = *b;
                }
                for (int v : level)
                    if (v < 0)
                        throw std::invalid_argument("level " + std::to_string(i) + " map is partial");
                m.maps.push_back(std::move(level));
            }
            ValidationReport rep = validate_complex_morphism(m);
            if (!rep.ok())
                throw std::invalid_argument("complex morphism does not validate: " + rep.summary());
            out.value = std::move(m);
            break;
        }
    }
    return out;
}

ParsedDocument parse_document(const std::string& text, DocKind expected, const std::string& base_dir) {
    ParsedDocument doc = parse_document(text, base_dir);
    auto family = [](DocKind k) {
        switch (k) {
            case DocKind::TreeComplex:
            case DocKind::ThicketComplex: return 0;
            case DocKind::Opetope:
            case DocKind::Cardinal:
            case DocKind::HypergraphDoc: return 1;
            default: return 2;
        }
    };
    if (family(doc.kind) != family(expected) ||
        (family(expected) == 2 && doc.kind != expected))
        throw std::invalid_argument("expected a " + doc_kind_name(expected) + " document, got " +
                                    doc_kind_name(doc.kind));
    return doc;
}

std::string serialize(const Complex& c) { return dump(complex_to_json(c)); }
std::string serialize(const Hypergraph& h) { return dump(hypergraph_to_json(h)); }

std::string serialize(const IotaMap& m) {
    json j;
    j["kind"] = "iota";
    j["source"] = hypergraph_to_json(m.source);
    j["target"] = hypergraph_to_json(m.target);
    j["map"] = m.assignment;
    return dump(j);
}

std::string serialize(const FaceMap& m) {
    json j;
    j["kind"] = "face";
    j["source"] = hypergraph_to_json(m.source);
    j["target"] = hypergraph_to_json(m.target);
    j["map"] = m.assignment;
    return dump(j);
}

std::string serialize(const ComplexMorphism& m) {
    json j;
    j["kind"] = "complex";
    j["source"] = complex_to_json(m.source);
    j["target"] = complex_to_json(m.target);
    json maps = json::array();
    for (size_t i = 0; i < m.maps.size(); ++i) {
        json level = json::object();
        for (size_t a = 0; a < m.maps[i].size(); ++a)
            level[m.source.levels[i].name(static_cast<int>(a))] =
                m.target.levels[i].name(m.maps[i][a]);
        maps.push_back(level);
    }
    j["map"] = maps;
    return dump(j);
}

std::string serialize_compact(const Complex& c) { return complex_to_json(c).dump() + "\n"; }
std::string serialize_compact(const Hypergraph& h) { return hypergraph_to_json(h).dump() + "\n"; }

}  // namespace ope
