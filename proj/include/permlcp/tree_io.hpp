#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "decomposition.hpp"

namespace permlcp {

/// "+", "-", the prime label, or the leaf value.
inline std::string node_caption(const DecompNode& node) {
    switch (node.kind) {
    case NodeKind::leaf: return std::to_string(node.value);
    case NodeKind::linear: return std::string(1, sign_char(node.sign));
    case NodeKind::prime: return node.label.to_string();
    }
    return {};
}

/// One-line nested form, e.g. "P3142(5,1,+(-(10,9,+(6,7,8)),11),+(2,-(4,3)))".
inline std::string to_bracket(const DecompNode& node) {
    if (node.is_leaf()) return std::to_string(node.value);
    std::string out = node.kind == NodeKind::prime ? "P" + detail::join(node.label.values(), "")
                                                   : std::string(1, sign_char(node.sign));
    out += '(';
    for (std::size_t t = 0; t < node.children.size(); ++t) {
        if (t) out += ',';
        out += to_bracket(node.children[t]);
    }
    return out + ')';
}

inline std::string to_bracket(const DecompTree& tree) { return to_bracket(tree.root); }

/// Indented outline, one node per line, with positions and values.
inline std::string to_text(const DecompTree& tree) {
    std::ostringstream os;
    for_each_node(tree.root, [&](const DecompNode& node, int depth) {
        os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
        switch (node.kind) {
        case NodeKind::leaf: os << node.value; break;
        case NodeKind::linear: os << "L " << sign_char(node.sign); break;
        case NodeKind::prime: os << "P " << node.label.to_string(); break;
        }
        os << "  positions " << node.span.lo << ".." << node.span.hi << "  values " << node.value_range.min << ".."
           << node.value_range.max << '\n';
    });
    return os.str();
}

/// Graphviz digraph; node ids follow preorder numbering.
inline std::string to_dot(const DecompTree& tree, const std::string& name = "decomposition") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  node [fontname=\"Helvetica\"];\n";
    std::size_t next = 0;
    auto emit = [&](auto&& self, const DecompNode& node) -> std::size_t {
        const std::size_t id = next++;
        os << "  n" << id << " [label=\"" << node_caption(node) << "\", shape="
           << (node.is_leaf() ? "plaintext" : node.kind == NodeKind::prime ? "box" : "circle") << "];\n";
        for (const auto& child : node.children) {
            const std::size_t cid = self(self, child);
            os << "  n" << id << " -> n" << cid << ";\n";
        }
        return id;
    };
    emit(emit, tree.root);
    os << "}\n";
    return os.str();
}

/// Recursive {kind, sign?, label?, span, value_range, children}.
inline nlohmann::ordered_json to_json(const DecompNode& node) {
    nlohmann::ordered_json j;
    switch (node.kind) {
    case NodeKind::leaf: j["kind"] = "leaf"; break;
    case NodeKind::linear:
        j["kind"] = "linear";
        j["sign"] = std::string(1, sign_char(node.sign));
        break;
    case NodeKind::prime:
        j["kind"] = "prime";
        j["label"] = node.label.values();
        break;
    }
    j["span"] = {node.span.lo, node.span.hi};
    j["value_range"] = {node.value_range.min, node.value_range.max};
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : node.children) j["children"].push_back(to_json(c));
    return j;
}

inline nlohmann::ordered_json to_json(const DecompTree& tree) { return to_json(tree.root); }

} // namespace permlcp
