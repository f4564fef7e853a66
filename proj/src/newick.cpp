#include "treecompat/newick.hpp"

#include <cctype>

namespace treecompat {

namespace {

bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '|' ||
           c == '-';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<ATree> run() {
        std::vector<ATree> trees;
        skip_ws();
        while (pos_ < text_.size()) {
            trees.push_back(parse_tree());
            skip_ws();
        }
        return trees;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<ATree::NodeSpec> slots_;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    ATree parse_tree() {
        slots_.clear();
        parse_subtree(kNoNode);
        skip_ws();
        if (peek() != ';') {
            throw SyntaxError(pos_, "expected ';' after tree");
        }
        ++pos_;
        return ATree::assemble(std::move(slots_));
    }

    NodeId new_node(NodeId parent) {
        ATree::NodeSpec spec;
        spec.present = true;
        spec.parent = parent;
        slots_.push_back(std::move(spec));
        return static_cast<NodeId>(slots_.size() - 1);
    }

    std::string parse_label() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_label_char(text_[pos_])) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void reject_suffix() {
        if (peek() == ':') {
            throw SyntaxError(pos_, "branch lengths are not supported");
        }
        if (peek() == '[') {
            throw SyntaxError(pos_, "comments are not supported");
        }
    }

    NodeId parse_subtree(NodeId parent) {
        skip_ws();
        char c = peek();
        if (c == '(') {
            NodeId v = new_node(parent);
            ++pos_;
            parse_subtree(v);
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                parse_subtree(v);
                skip_ws();
            }
            if (peek() != ')') {
                throw SyntaxError(pos_, "expected ',' or ')'");
            }
            ++pos_;
            skip_ws();
            if (is_label_char(peek())) {
                slots_[v].label = parse_label();
            } else if (peek() == '\'' || peek() == '"') {
                throw SyntaxError(pos_, "quoted labels are not supported");
            }
            reject_suffix();
            return v;
        }
        if (is_label_char(c)) {
            NodeId v = new_node(parent);
            slots_[v].label = parse_label();
            reject_suffix();
            return v;
        }
        if (c == '\'' || c == '"') {
            throw SyntaxError(pos_, "quoted labels are not supported");
        }
        if (c == ':') {
            throw SyntaxError(pos_, "branch lengths are not supported");
        }
        if (c == ',' || c == ')' || c == ';' || c == '\0') {
            throw TreeError(ErrorCode::UnlabeledLeaf,
                            "missing leaf label at position " + std::to_string(pos_));
        }
        throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
    }
};

void write_subtree(const ATree& t, NodeId v, std::string& out) {
    if (!t.is_leaf(v)) {
        out += '(';
        bool first = true;
        for (NodeId c : canonical_child_order(t, v)) {
            if (!first) {
                out += ',';
            }
            first = false;
            write_subtree(t, c, out);
        }
        out += ')';
    }
    if (t.label(v)) {
        out += *t.label(v);
    }
}

}  // namespace

std::vector<ATree> parse_newick(std::string_view text) {
    return Parser(text).run();
}

ATree parse_newick_tree(std::string_view text) {
    std::vector<ATree> trees = parse_newick(text);
    if (trees.size() != 1) {
        throw SyntaxError(text.size(), "expected exactly one tree, found " +
                                           std::to_string(trees.size()));
    }
    return std::move(trees.front());
}

std::string serialize_newick(const ATree& t) {
    if (t.empty()) {
        throw TreeError(ErrorCode::EmptyTree, "cannot serialize an empty tree");
    }
    std::string out;
    write_subtree(t, t.root(), out);
    out += ';';
    return out;
}

}  // namespace treecompat
