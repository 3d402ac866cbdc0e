#include "ope/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ope {

namespace {

struct RenderNode {
    int node;  // index in the column's constellation order
    std::vector<RenderNode> children;
    std::vector<int> refs;  // extra parents' children shown as references
};

struct Column {
    ConstellationOrder ct;
    std::vector<RenderNode> forest;           // maximal nodes
    std::vector<std::pair<int, int>> extras;  // (child, extra parent) beyond the primary
};

/// Containment forest of a column: every node hangs under its canonically
/// first Hasse parent; further parents (possible in thicket columns) are kept
/// as extra containment edges.
Column make_column(ConstellationOrder ct) {
    Column col;
    const Poset& p = ct.poset;
    std::vector<int> primary(p.size(), -1);
    for (int x = 0; x < p.size(); ++x) {
        const auto& ps = p.parents(x);
        if (ps.empty()) continue;
        std::vector<int> sorted = sorted_by_name(p, ps);
        primary[x] = sorted[0];
        for (size_t i = 1; i < sorted.size(); ++i) col.extras.emplace_back(x, sorted[i]);
    }
    std::function<RenderNode(int)> build = [&](int x) {
        RenderNode n{x, {}, {}};
        for (int c : sorted_by_name(p, p.children(x)))
            if (primary[c] == x) n.children.push_back(build(c));
        for (auto [c, par] : col.extras)
            if (par == x) n.refs.push_back(c);
        return n;
    };
    for (int x : sorted_by_name(p, p.maximal_elements())) col.forest.push_back(build(x));
    col.ct = std::move(ct);
    return col;
}

struct Labels {
    std::vector<std::vector<std::string>> per_column;  // by CT node index
};

Labels make_labels(const Complex& c, const std::vector<Column>& cols, LabelConvention conv,
                   const Hypergraph* original) {
    Labels out;
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
        const ConstellationOrder& ct = cols[i].ct;
        std::vector<std::string> lab(ct.poset.size());
        for (int n = 0; n < ct.poset.size(); ++n) {
            const OrderNode& nd = ct.nodes[n];
            const std::string base =
                nd.kind == OrderNode::Vertex ? c.levels[i].name(nd.index) : c.levels[i + 1].name(nd.index);
            if (conv == LabelConvention::Own) {
                lab[n] = base;
            } else if (original) {
                lab[n] = nd.kind == OrderNode::Vertex
                             ? base
                             : original->name(original->gamma(original->face(base)));
            } else {
                lab[n] = ct.poset.name(n);  // marked dual-face name
            }
        }
        out.per_column.push_back(std::move(lab));
    }
    return out;
}

std::string ascii_node(const Column& col, const std::vector<std::string>& lab, const RenderNode& n) {
    const bool circle = col.ct.is_circle(n.node);
    if (!circle && n.children.empty() && n.refs.empty()) return "*" + lab[n.node];
    std::string s = "(" + lab[n.node];
    for (const RenderNode& c : n.children) s += " " + ascii_node(col, lab, c);
    for (int r : n.refs) s += " &" + lab[r];
    s += ")";
    return s;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char ch : s) out += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
    return out;
}

void dot_node(std::ostream& os, const Column& col, const std::vector<std::string>& lab,
              const RenderNode& n, int column, int depth) {
    std::string indent(2 * (depth + 2), ' ');
    if (col.ct.is_circle(n.node)) {
        os << indent << "subgraph cluster_c" << column << "_" << sanitize(lab[n.node]) << " {\n";
        os << indent << "  label=\"" << lab[n.node] << "\";\n";
        for (const RenderNode& c : n.children) dot_node(os, col, lab, c, column, depth + 1);
        if (n.children.empty())
            os << indent << "  anchor_c" << column << "_" << sanitize(lab[n.node])
               << " [style=invis shape=point];\n";
        os << indent << "}\n";
    } else {
        os << indent << "v" << column << "_" << sanitize(lab[n.node]) << " [label=\"" << lab[n.node]
           << "\" shape=circle];\n";
        for (const RenderNode& c : n.children) dot_node(os, col, lab, c, column, depth + 1);
    }
}

struct Box {
    double w = 0, h = 0;
};

constexpr double kPad = 8, kText = 14, kVertexH = 22, kGap = 6;

Box measure(const Column& col, const std::vector<std::string>& lab, const RenderNode& n) {
    double w = 10.0 + 7.0 * lab[n.node].size();
    if (!col.ct.is_circle(n.node)) return {std::max(w, 24.0), kVertexH};
    Box inner;
    for (const RenderNode& c : n.children) {
        Box b = measure(col, lab, c);
        inner.w = std::max(inner.w, b.w);
        inner.h += b.h + kGap;
    }
    return {std::max(w, inner.w) + 2 * kPad, inner.h + kText + 2 * kPad};
}

void emit_svg(std::ostream& os, const Column& col, const std::vector<std::string>& lab,
              const RenderNode& n, double x, double y) {
    Box b = measure(col, lab, n);
    if (col.ct.is_circle(n.node)) {
        os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << b.w << "\" height=\"" << b.h
           << "\" rx=\"10\" fill=\"none\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << x + kPad << "\" y=\"" << y + b.h - kPad << "\" font-size=\"11\">"
           << lab[n.node] << "</text>\n";
        double cy = y + kPad;
        for (const RenderNode& c : n.children) {
            emit_svg(os, col, lab, c, x + kPad, cy);
            cy += measure(col, lab, c).h + kGap;
        }
    } else {
        os << "  <circle cx=\"" << x + 6 << "\" cy=\"" << y + 10 << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text x=\"" << x + 14 << "\" y=\"" << y + 14 << "\" font-size=\"11\">" << lab[n.node]
           << "</text>\n";
    }
}

std::string render_complex(const Complex& c, RenderFormat format, LabelConvention conv,
                           const Hypergraph* original) {
    std::vector<Column> cols;
    for (int i = 0; i <= c.dim(); ++i) cols.push_back(make_column(complex_order_at(c, i)));
    Labels labels = make_labels(c, cols, conv, original);

    if (format == RenderFormat::Ascii) {
        std::ostringstream os;
        for (int i = 0; i <= c.dim(); ++i) {
            os << "dim " << i << " |";
            for (const RenderNode& n : cols[i].forest)
                os << " " << ascii_node(cols[i], labels.per_column[i], n);
            os << "\n";
        }
        return os.str();
    }
    if (format == RenderFormat::Dot) {
        std::ostringstream os;
        os << "digraph complex {\n  rankdir=LR;\n";
        for (int i = 0; i <= c.dim(); ++i) {
            os << "  subgraph cluster_dim" << i << " {\n    label=\"dim " << i << "\";\n";
            for (const RenderNode& n : cols[i].forest)
                dot_node(os, cols[i], labels.per_column[i], n, i, 0);
            os << "  }\n";
            for (auto [child, par] : cols[i].extras)
                os << "  // node " << labels.per_column[i][child] << " also sits inside "
                   << labels.per_column[i][par] << "\n";
        }
        os << "}\n";
        return os.str();
    }
    // Svg
    std::ostringstream os;
    std::ostringstream body;
    double x = 10, total_h = 0;
    for (int i = 0; i <= c.dim(); ++i) {
        body << "  <text x=\"" << x << "\" y=\"20\" font-size=\"12\">dim " << i << "</text>\n";
        double y = 30, colw = 40;
        for (const RenderNode& n : cols[i].forest) {
            Box b = measure(cols[i], labels.per_column[i], n);
            emit_svg(body, cols[i], labels.per_column[i], n, x, y);
            y += b.h + 2 * kGap;
            colw = std::max(colw, b.w);
        }
        total_h = std::max(total_h, y);
        x += colw + 30;
    }
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << x << "\" height=\"" << total_h + 10
       << "\">\n"
       << body.str() << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render(const Complex& c, RenderFormat format, LabelConvention labels) {
    ValidationReport rep = validate_complex(c);
    if (!rep.ok()) throw std::invalid_argument("render: complex does not validate: " + rep.summary());
    return render_complex(c, format, labels, nullptr);
}

std::string render(const Hypergraph& h, RenderFormat format, LabelConvention labels) {
    Complex dual = dualize_opetope(h);
    return render_complex(dual, format, labels, labels == LabelConvention::Intro ? &h : nullptr);
}

}  // namespace ope
