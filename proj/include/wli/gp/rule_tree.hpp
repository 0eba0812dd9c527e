#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "wli/attributes.hpp"
#include "wli/rng.hpp"

namespace wli::gp {

enum class ValueType : std::uint8_t { Bool, Percentage, Double, Integer };

enum class BoolOp : std::uint8_t { And, Or, Nand, Nor };
enum class CmpOp : std::uint8_t { Less, Greater };

// Type of an attribute leaf: symbol% is percentage, thicknesses are double,
// the two count-like attributes are integer.
ValueType attribute_type(int attr_id);

struct RuleNode {
    enum class Kind : std::uint8_t {
        Logic,        // and/or/nand/nor over two bool children
        Compare,      // </> over two numeric children of one concrete type
        Attribute,    // numeric terminal
        NumberConst,  // numeric terminal, value fixed at creation
        BoolConst,    // bool terminal
    };

    Kind kind = Kind::BoolConst;
    ValueType type = ValueType::Bool;  // value type of this node
    BoolOp logic_op = BoolOp::And;
    CmpOp cmp_op = CmpOp::Less;
    int attr_id = -1;
    double number = 0.0;
    bool truth = false;
    std::unique_ptr<RuleNode> left;
    std::unique_ptr<RuleNode> right;

    std::unique_ptr<RuleNode> clone() const;
};

struct RuleTree {
    std::unique_ptr<RuleNode> root;

    RuleTree clone() const;
    int size() const;  // node count
};

// Full binary tree of the given depth: boolean operators down to the
// comparison level, then typed terminals. Node count is 2^depth - 1.
RuleTree init_tree(Rng& rng, int depth = 6);

bool eval_rule(const RuleTree& rule, const AttributeVector& attrs);

// Verifies operator arities and that comparison children share one concrete
// numeric type.
bool type_check(const RuleTree& rule);

// Parenthesized prefix text, e.g. (and (> a% 0.9) (< no_segments 3)).
std::string render_rule(const RuleTree& rule);
RuleTree parse_rule(std::string_view text);

// Genetic operators. All outputs type-check by construction.
std::pair<RuleTree, RuleTree> homologous_crossover(const RuleTree& p1,
                                                   const RuleTree& p2,
                                                   Rng& rng);
RuleTree and_crossover(const RuleTree& p1, const RuleTree& p2);
RuleTree or_crossover(const RuleTree& p1, const RuleTree& p2);

// Point mutation (operator swap, comparison flip, terminal resample) or
// subtree regrowth to depth <= 4, mode chosen uniformly.
RuleTree mutate_tree(const RuleTree& p, Rng& rng);

}  // namespace wli::gp
