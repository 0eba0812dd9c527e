#include "wli/gp/rule_tree.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace wli::gp {

namespace {

constexpr std::string_view kLogicNames[] = {"and", "or", "nand", "nor"};

// Attribute id pools per concrete numeric type.
const std::vector<int>& attribute_pool(ValueType t) {
    static const std::vector<int> pct = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    static const std::vector<int> dbl = {10, 11, 12, 13, 14, 15, 16, 17, 18,
                                         19, 20, 21, 22, 23, 24, 25, 26, 27,
                                         28, 29, 31};
    static const std::vector<int> itg = {30, 32};
    switch (t) {
        case ValueType::Percentage: return pct;
        case ValueType::Double: return dbl;
        case ValueType::Integer: return itg;
        default: throw std::logic_error("no attributes of this type");
    }
}

constexpr ValueType kComparableTypes[] = {ValueType::Percentage,
                                          ValueType::Double,
                                          ValueType::Integer};

std::unique_ptr<RuleNode> make_bool_const(bool v) {
    auto n = std::make_unique<RuleNode>();
    n->kind = RuleNode::Kind::BoolConst;
    n->type = ValueType::Bool;
    n->truth = v;
    return n;
}

double sample_constant(Rng& rng, ValueType t) {
    switch (t) {
        case ValueType::Percentage: return rng.real();
        case ValueType::Double: return rng.range(0.0, 250.0);
        case ValueType::Integer:
            return static_cast<double>(1 + rng.index(10));
        default: throw std::logic_error("not a numeric type");
    }
}

std::unique_ptr<RuleNode> new_terminal(Rng& rng, ValueType t) {
    if (t == ValueType::Bool) return make_bool_const(rng.index(2) == 1);
    auto n = std::make_unique<RuleNode>();
    n->type = t;
    if (rng.index(2) == 0) {
        const auto& pool = attribute_pool(t);
        n->kind = RuleNode::Kind::Attribute;
        n->attr_id = pool[rng.index(pool.size())];
    } else {
        n->kind = RuleNode::Kind::NumberConst;
        n->number = sample_constant(rng, t);
    }
    return n;
}

std::unique_ptr<RuleNode> new_comparison(Rng& rng) {
    auto n = std::make_unique<RuleNode>();
    n->kind = RuleNode::Kind::Compare;
    n->type = ValueType::Bool;
    n->cmp_op = rng.index(2) == 0 ? CmpOp::Less : CmpOp::Greater;
    ValueType t = kComparableTypes[rng.index(3)];
    n->left = new_terminal(rng, t);
    n->right = new_terminal(rng, t);
    return n;
}

// Grow-style boolean subtree of depth <= max_depth.
std::unique_ptr<RuleNode> grow_bool(Rng& rng, int max_depth) {
    if (max_depth <= 1) return make_bool_const(rng.index(2) == 1);
    int choices = max_depth >= 3 ? 3 : 2;  // logic only if children fit
    switch (rng.index(choices)) {
        case 0: return new_comparison(rng);
        case 1: return make_bool_const(rng.index(2) == 1);
        default: {
            auto n = std::make_unique<RuleNode>();
            n->kind = RuleNode::Kind::Logic;
            n->type = ValueType::Bool;
            n->logic_op = static_cast<BoolOp>(rng.index(4));
            n->left = grow_bool(rng, max_depth - 1);
            n->right = grow_bool(rng, max_depth - 1);
            return n;
        }
    }
}

std::unique_ptr<RuleNode> full_tree(Rng& rng, int depth) {
    if (depth == 1) throw std::logic_error("full tree bottoms out at depth 2");
    if (depth == 2) return new_comparison(rng);
    auto n = std::make_unique<RuleNode>();
    n->kind = RuleNode::Kind::Logic;
    n->type = ValueType::Bool;
    n->logic_op = static_cast<BoolOp>(rng.index(4));
    n->left = full_tree(rng, depth - 1);
    n->right = full_tree(rng, depth - 1);
    return n;
}

int node_count(const RuleNode* n) {
    if (!n) return 0;
    return 1 + node_count(n->left.get()) + node_count(n->right.get());
}

double eval_number(const RuleNode& n, const AttributeVector& attrs) {
    if (n.kind == RuleNode::Kind::Attribute) {
        return attribute_value(attrs, n.attr_id);
    }
    return n.number;
}

bool eval_node(const RuleNode& n, const AttributeVector& attrs) {
    switch (n.kind) {
        case RuleNode::Kind::Logic: {
            bool l = eval_node(*n.left, attrs);
            bool r = eval_node(*n.right, attrs);
            switch (n.logic_op) {
                case BoolOp::And: return l && r;
                case BoolOp::Or: return l || r;
                case BoolOp::Nand: return !(l && r);
                case BoolOp::Nor: return !(l || r);
            }
            return false;
        }
        case RuleNode::Kind::Compare: {
            double l = eval_number(*n.left, attrs);
            double r = eval_number(*n.right, attrs);
            return n.cmp_op == CmpOp::Less ? l < r : l > r;
        }
        case RuleNode::Kind::BoolConst: return n.truth;
        default: throw std::logic_error("numeric node in boolean position");
    }
}

bool check_node(const RuleNode& n) {
    switch (n.kind) {
        case RuleNode::Kind::Logic:
            return n.type == ValueType::Bool && n.left && n.right &&
                   n.left->type == ValueType::Bool &&
                   n.right->type == ValueType::Bool && check_node(*n.left) &&
                   check_node(*n.right);
        case RuleNode::Kind::Compare:
            return n.type == ValueType::Bool && n.left && n.right &&
                   n.left->type != ValueType::Bool &&
                   n.left->type == n.right->type && check_node(*n.left) &&
                   check_node(*n.right);
        case RuleNode::Kind::Attribute:
            return !n.left && !n.right && n.attr_id >= 0 &&
                   n.attr_id < kAttributeCount &&
                   n.type == attribute_type(n.attr_id);
        case RuleNode::Kind::NumberConst:
            return !n.left && !n.right && n.type != ValueType::Bool;
        case RuleNode::Kind::BoolConst:
            return !n.left && !n.right && n.type == ValueType::Bool;
    }
    return false;
}

void render_number(std::string& out, const RuleNode& n) {
    if (n.type == ValueType::Integer) {
        out += std::to_string(static_cast<long long>(n.number));
        return;
    }
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, n.number);
    std::string text(buf, res.ptr);
    if (text.find('.') == std::string::npos &&
        text.find('e') == std::string::npos) {
        text += ".0";  // keep the non-integer types visibly real
    }
    out += text;
}

void render_node(std::string& out, const RuleNode& n) {
    switch (n.kind) {
        case RuleNode::Kind::Logic:
            out += '(';
            out += kLogicNames[static_cast<int>(n.logic_op)];
            out += ' ';
            render_node(out, *n.left);
            out += ' ';
            render_node(out, *n.right);
            out += ')';
            break;
        case RuleNode::Kind::Compare:
            out += '(';
            out += n.cmp_op == CmpOp::Less ? '<' : '>';
            out += ' ';
            render_node(out, *n.left);
            out += ' ';
            render_node(out, *n.right);
            out += ')';
            break;
        case RuleNode::Kind::Attribute:
            out += attribute_name(n.attr_id);
            break;
        case RuleNode::Kind::NumberConst:
            render_number(out, n);
            break;
        case RuleNode::Kind::BoolConst:
            out += n.truth ? "true" : "false";
            break;
    }
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                     text[pos] == '\n' || text[pos] == '\r')) {
            ++pos;
        }
    }

    std::string_view token() {
        skip_ws();
        if (pos >= text.size()) throw std::invalid_argument("rule truncated");
        if (text[pos] == '(' || text[pos] == ')') {
            return text.substr(pos++, 1);
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ' ' && text[pos] != '(' &&
               text[pos] != ')' && text[pos] != '\t' && text[pos] != '\n' &&
               text[pos] != '\r') {
            ++pos;
        }
        return text.substr(start, pos - start);
    }

    std::string_view peek() {
        std::size_t saved = pos;
        auto t = token();
        pos = saved;
        return t;
    }

    std::unique_ptr<RuleNode> parse_bool() {
        auto t = token();
        if (t == "true" || t == "false") return make_bool_const(t == "true");
        if (t != "(") throw std::invalid_argument("expected boolean expression");
        auto op = token();
        auto n = std::make_unique<RuleNode>();
        n->type = ValueType::Bool;
        if (op == "<" || op == ">") {
            n->kind = RuleNode::Kind::Compare;
            n->cmp_op = op == "<" ? CmpOp::Less : CmpOp::Greater;
            n->left = parse_operand();
            n->right = parse_operand();
            resolve_types(*n);
        } else {
            n->kind = RuleNode::Kind::Logic;
            bool found = false;
            for (int i = 0; i < 4; ++i) {
                if (op == kLogicNames[i]) {
                    n->logic_op = static_cast<BoolOp>(i);
                    found = true;
                }
            }
            if (!found) {
                throw std::invalid_argument("unknown operator: " +
                                            std::string(op));
            }
            n->left = parse_bool();
            n->right = parse_bool();
        }
        if (token() != ")") throw std::invalid_argument("expected )");
        return n;
    }

    std::unique_ptr<RuleNode> parse_operand() {
        auto t = token();
        auto n = std::make_unique<RuleNode>();
        char first = t.front();
        if ((first >= '0' && first <= '9') || first == '-' || first == '.') {
            n->kind = RuleNode::Kind::NumberConst;
            double v = 0.0;
            auto res = std::from_chars(t.data(), t.data() + t.size(), v);
            if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
                throw std::invalid_argument("bad number: " + std::string(t));
            }
            n->number = v;
            // Provisional; fixed up against the sibling in resolve_types.
            bool integral = t.find('.') == std::string_view::npos &&
                            t.find('e') == std::string_view::npos;
            n->type = integral ? ValueType::Integer
                               : (v <= 1.0 ? ValueType::Percentage
                                           : ValueType::Double);
        } else {
            n->kind = RuleNode::Kind::Attribute;
            n->attr_id = parse_attribute(t);
            n->type = attribute_type(n->attr_id);
        }
        return n;
    }

    // A constant adopts its sibling attribute's type so the tree checks.
    static void resolve_types(RuleNode& cmp) {
        RuleNode& l = *cmp.left;
        RuleNode& r = *cmp.right;
        if (l.kind == RuleNode::Kind::Attribute) {
            r.type = l.type;
        } else if (r.kind == RuleNode::Kind::Attribute) {
            l.type = r.type;
        } else {
            r.type = l.type;
        }
    }
};

// Collects every unique_ptr slot in preorder (root first).
void collect_slots(std::unique_ptr<RuleNode>& slot,
                   std::vector<std::unique_ptr<RuleNode>*>& out) {
    out.push_back(&slot);
    if (slot->left) collect_slots(slot->left, out);
    if (slot->right) collect_slots(slot->right, out);
}

// Slots present in both trees (same path) whose subtree types match.
void collect_common(std::unique_ptr<RuleNode>& a, std::unique_ptr<RuleNode>& b,
                    std::vector<std::pair<std::unique_ptr<RuleNode>*,
                                          std::unique_ptr<RuleNode>*>>& out) {
    if (a->type == b->type) out.push_back({&a, &b});
    if (a->left && b->left) collect_common(a->left, b->left, out);
    if (a->right && b->right) collect_common(a->right, b->right, out);
}

}  // namespace

ValueType attribute_type(int attr_id) {
    if (attr_id < 0 || attr_id >= kAttributeCount) {
        throw std::out_of_range("attribute id out of range");
    }
    if (attr_id < 10) return ValueType::Percentage;
    if (attr_id < 30 || attr_id == 31) return ValueType::Double;
    return ValueType::Integer;  // variation, no_segments
}

std::unique_ptr<RuleNode> RuleNode::clone() const {
    auto n = std::make_unique<RuleNode>();
    n->kind = kind;
    n->type = type;
    n->logic_op = logic_op;
    n->cmp_op = cmp_op;
    n->attr_id = attr_id;
    n->number = number;
    n->truth = truth;
    if (left) n->left = left->clone();
    if (right) n->right = right->clone();
    return n;
}

RuleTree RuleTree::clone() const { return RuleTree{root->clone()}; }

int RuleTree::size() const { return node_count(root.get()); }

RuleTree init_tree(Rng& rng, int depth) {
    if (depth < 2) throw std::invalid_argument("tree depth must be >= 2");
    return RuleTree{full_tree(rng, depth)};
}

bool eval_rule(const RuleTree& rule, const AttributeVector& attrs) {
    return eval_node(*rule.root, attrs);
}

bool type_check(const RuleTree& rule) {
    return rule.root && rule.root->type == ValueType::Bool &&
           check_node(*rule.root);
}

std::string render_rule(const RuleTree& rule) {
    std::string out;
    render_node(out, *rule.root);
    return out;
}

RuleTree parse_rule(std::string_view text) {
    Parser p{text};
    auto root = p.parse_bool();
    p.skip_ws();
    if (p.pos != text.size()) {
        throw std::invalid_argument("trailing text after rule");
    }
    return RuleTree{std::move(root)};
}

std::pair<RuleTree, RuleTree> homologous_crossover(const RuleTree& p1,
                                                   const RuleTree& p2,
                                                   Rng& rng) {
    RuleTree c1 = p1.clone();
    RuleTree c2 = p2.clone();
    std::vector<std::pair<std::unique_ptr<RuleNode>*,
                          std::unique_ptr<RuleNode>*>> common;
    collect_common(c1.root, c2.root, common);
    // Roots share type bool, so the list is never empty.
    auto [sa, sb] = common[rng.index(common.size())];
    std::swap(*sa, *sb);
    return {std::move(c1), std::move(c2)};
}

RuleTree and_crossover(const RuleTree& p1, const RuleTree& p2) {
    auto n = std::make_unique<RuleNode>();
    n->kind = RuleNode::Kind::Logic;
    n->type = ValueType::Bool;
    n->logic_op = BoolOp::And;
    n->left = p1.root->clone();
    n->right = p2.root->clone();
    return RuleTree{std::move(n)};
}

RuleTree or_crossover(const RuleTree& p1, const RuleTree& p2) {
    auto n = std::make_unique<RuleNode>();
    n->kind = RuleNode::Kind::Logic;
    n->type = ValueType::Bool;
    n->logic_op = BoolOp::Or;
    n->left = p1.root->clone();
    n->right = p2.root->clone();
    return RuleTree{std::move(n)};
}

RuleTree mutate_tree(const RuleTree& p, Rng& rng) {
    RuleTree child = p.clone();
    std::vector<std::unique_ptr<RuleNode>*> slots;
    collect_slots(child.root, slots);
    std::unique_ptr<RuleNode>& slot = *slots[rng.index(slots.size())];

    bool subtree_mode = rng.index(2) == 1;
    if (subtree_mode) {
        if (slot->type == ValueType::Bool) {
            slot = grow_bool(rng, 4);
        } else {
            slot = new_terminal(rng, slot->type);
        }
        return child;
    }
    switch (slot->kind) {
        case RuleNode::Kind::Logic:
            slot->logic_op = static_cast<BoolOp>(
                rng.index_excluding(4, static_cast<int>(slot->logic_op)));
            break;
        case RuleNode::Kind::Compare:
            slot->cmp_op =
                slot->cmp_op == CmpOp::Less ? CmpOp::Greater : CmpOp::Less;
            break;
        default: {
            ValueType t = slot->type;
            slot = new_terminal(rng, t);
            break;
        }
    }
    return child;
}

}  // namespace wli::gp
