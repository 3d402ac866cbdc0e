#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ope/enumerate.hpp"
#include "ope/fixtures.hpp"
#include "ope/io.hpp"
#include "ope/render.hpp"
#include "ope/sweep.hpp"

using namespace ope;

namespace {

struct Options {
    bool quiet = false;
    std::string diagnostics = "text";
};

int report_error(const Options& opt, const std::string& what, int code) {
    if (opt.diagnostics == "json")
        std::cerr << "{\"ok\": false, \"error\": " << nlohmann::json(what).dump() << "}\n";
    else if (!opt.quiet)
        std::cerr << "error: " << what << "\n";
    return code;
}

void report_ok(const Options& opt, const std::string& message) {
    if (opt.quiet) return;
    if (opt.diagnostics == "json")
        std::cout << "{\"ok\": true, \"info\": " << nlohmann::json(message).dump() << "}\n";
    else
        std::cout << message << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

void write_out(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'", 0, 0);
        out << text;
    }
}

/// Runs a body that may throw; maps exceptions to the exit-code contract:
/// 1 for validation failures, 2 for parse and I/O problems.
int guarded(const Options& opt, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return report_error(opt, e.what(), 2);
    } catch (const std::invalid_argument& e) {
        return report_error(opt, e.what(), 1);
    } catch (const InternalError& e) {
        return report_error(opt, std::string("internal error: ") + e.what(), 1);
    } catch (const std::exception& e) {
        return report_error(opt, e.what(), 2);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"validation, duality and enumeration for positive opetopes and tree complexes"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--quiet", opt.quiet, "suppress informational output");
    app.add_option("--diagnostics", opt.diagnostics, "diagnostics format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file, out_path, format = "ascii", labels = "own", kind = "tree";
    std::string iota_conv = "facewise", fixture_name;
    int max_nodes = 6, max_level = 3;
    int dim = -1;
    bool dualize_flag = false;

    CLI::App* validate = app.add_subcommand("validate", "validate a document");
    validate->add_option("file", file)->required();

    CLI::App* dual = app.add_subcommand("dual", "dualize a complex or an opetopic cardinal");
    dual->add_option("file", file)->required();
    dual->add_option("-o,--out", out_path);

    CLI::App* dual_map = app.add_subcommand("dual-map", "dualize a morphism document");
    dual_map->add_option("file", file)->required();
    dual_map->add_option("-o,--out", out_path);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "run eta or epsilon and report");
    roundtrip->add_option("file", file)->required();

    CLI::App* check_map = app.add_subcommand("check-map", "validate a morphism document");
    check_map->add_option("file", file)->required();

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "stream complexes up to isomorphism");
    enumerate_cmd->add_option("--kind", kind)->check(CLI::IsMember({"tree", "thicket"}));
    enumerate_cmd->add_option("--max-nodes", max_nodes)->required();
    enumerate_cmd->add_option("--dim", dim);
    enumerate_cmd->add_flag("--dualize", dualize_flag, "stream the dual hypergraphs instead");

    CLI::App* render_cmd = app.add_subcommand("render", "draw the constellation columns");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "svg", "ascii"}));
    render_cmd->add_option("--labels", labels)->check(CLI::IsMember({"own", "intro"}));
    render_cmd->add_option("-o,--out", out_path);

    CLI::App* omega_cmd = app.add_subcommand("omega", "check the omega-category laws");
    omega_cmd->add_option("file", file)->required();
    omega_cmd->add_option("--max-level", max_level);
    omega_cmd->add_option("--iota", iota_conv)->check(CLI::IsMember({"facewise", "setlevel"}));

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list or dump the built-ins");
    CLI::App* fx_list = fixtures_cmd->add_subcommand("list", "print fixture names");
    CLI::App* fx_dump = fixtures_cmd->add_subcommand("dump", "print one fixture document");
    fx_dump->add_option("name", fixture_name)->required();
    fx_dump->add_option("-o,--out", out_path);
    fixtures_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        return guarded(opt, [&] {
            ParsedDocument doc = parse_document(slurp(file), dir_of(file));
            std::string msg = "valid " + doc_kind_name(doc.kind);
            if (!doc.note.empty()) msg += " (" + doc.note + ")";
            report_ok(opt, msg);
            return 0;
        });
    }
    if (dual->parsed()) {
        return guarded(opt, [&] {
            ParsedDocument doc = parse_document(slurp(file), dir_of(file));
            if (const Complex* c = std::get_if<Complex>(&doc.value)) {
                write_out(out_path, serialize(dualize_complex(*c)));
            } else if (const Hypergraph* h = std::get_if<Hypergraph>(&doc.value)) {
                write_out(out_path, serialize(dualize_opetope(*h)));
            } else {
                throw std::invalid_argument("dual expects a complex or hypergraph document");
            }
            return 0;
        });
    }
    if (dual_map->parsed()) {
        return guarded(opt, [&] {
            ParsedDocument doc = parse_document(slurp(file), dir_of(file));
            if (const IotaMap* m = std::get_if<IotaMap>(&doc.value)) {
                write_out(out_path, serialize(dualize_iota_epi(*m)));
            } else if (const ComplexMorphism* m = std::get_if<ComplexMorphism>(&doc.value)) {
                write_out(out_path, serialize(dualize_complex_morphism(*m)));
            } else {
                throw std::invalid_argument("dual-map expects an iota or complex morphism");
            }
            return 0;
        });
    }
    if (roundtrip->parsed()) {
        return guarded(opt, [&] {
            ParsedDocument doc = parse_document(slurp(file), dir_of(file));
            if (const Complex* c = std::get_if<Complex>(&doc.value)) {
                NaturalIsoWitness w = eta_iso(*c);
                report_ok(opt, "eta: isomorphism onto the double dual, " +
                                   std::to_string(w.components.size()) + " levels");
            } else if (const Hypergraph* h = std::get_if<Hypergraph>(&doc.value)) {
                NaturalIsoWitness w = epsilon_iso(*h);
                report_ok(opt, "epsilon: isomorphism from the double dual, " +
                                   std::to_string(w.components.size()) + " dimensions");
            } else {
                throw std::invalid_argument("roundtrip expects a complex or hypergraph document");
            }
            return 0;
        });
    }
    if (check_map->parsed()) {
        return guarded(opt, [&] {
            ParsedDocument doc = parse_document(slurp(file), dir_of(file));
            if (const IotaMap* m = std::get_if<IotaMap>(&doc.value)) {
                IotaReport rep = validate_iota_map(*m);
                std::string msg = "valid iota map; kernel size " +
                                  std::to_string(rep.kernel.size()) +
                                  (rep.epi ? "; epi" : "; not epi");
                report_ok(opt, msg);
            } else if (std::get_if<ComplexMorphism>(&doc.value)) {
                report_ok(opt, "valid complex morphism");
            } else if (std::get_if<FaceMap>(&doc.value)) {
                report_ok(opt, "valid face map");
            } else {
                throw std::invalid_argument("check-map expects a morphism document");
            }
            return 0;
        });
    }
    if (enumerate_cmd->parsed()) {
        return guarded(opt, [&] {
            EnumSpec spec;
            spec.kind = kind == "tree" ? ComplexKind::Tree : ComplexKind::Thicket;
            spec.max_total_nodes = max_nodes;
            if (dim >= 0) spec.dimension = dim;
            enumerate_complexes(spec, [&](const Complex& c) {
                if (dualize_flag)
                    std::cout << serialize_compact(dualize_complex(c));
                else
                    std::cout << serialize_compact(c);
            });
            return 0;
        });
    }
    if (render_cmd->parsed()) {
        return guarded(opt, [&] {
            ParsedDocument doc = parse_document(slurp(file), dir_of(file));
            RenderFormat fmt = format == "dot"   ? RenderFormat::Dot
                               : format == "svg" ? RenderFormat::Svg
                                                 : RenderFormat::Ascii;
            LabelConvention lc =
                labels == "intro" ? LabelConvention::Intro : LabelConvention::Own;
            if (const Complex* c = std::get_if<Complex>(&doc.value))
                write_out(out_path, render(*c, fmt, lc));
            else if (const Hypergraph* h = std::get_if<Hypergraph>(&doc.value))
                write_out(out_path, render(*h, fmt, lc));
            else
                throw std::invalid_argument("render expects a complex or hypergraph document");
            return 0;
        });
    }
    if (omega_cmd->parsed()) {
        return guarded(opt, [&] {
            ParsedDocument doc = parse_document(slurp(file), dir_of(file));
            const Hypergraph* h = std::get_if<Hypergraph>(&doc.value);
            if (!h) throw std::invalid_argument("omega expects a hypergraph document");
            IotaConvention conv =
                iota_conv == "setlevel" ? IotaConvention::SetLevel : IotaConvention::Facewise;
            ValidationReport rep = check_omega_laws(*h, max_level, conv);
            if (rep.ok()) {
                report_ok(opt, "omega laws hold up to level " + std::to_string(max_level));
                return 0;
            }
            return report_error(opt, rep.summary(), 1);
        });
    }
    if (fixtures_cmd->parsed()) {
        return guarded(opt, [&] {
            if (fx_list->parsed()) {
                for (const std::string& n : fixtures::names()) std::cout << n << "\n";
                return 0;
            }
            if (fx_dump->parsed()) {
                if (!fixtures::has(fixture_name))
                    throw std::invalid_argument("no fixture named '" + fixture_name + "'");
                write_out(out_path, fixtures::document(fixture_name));
            }
            return 0;
        });
    }
    return 2;
}
