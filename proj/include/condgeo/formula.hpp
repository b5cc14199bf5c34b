#ifndef CONDGEO_FORMULA_HPP
#define CONDGEO_FORMULA_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "condgeo/errors.hpp"
#include "condgeo/worldset.hpp"

namespace condgeo {

// ---------------------------------------------------------------------------
// The two-layer conditional language. Level 0 is classical propositional
// logic; level 1 is Boolean combinations of conditionals over level-0
// formulas. Letters occur only inside conditionals at level 1, and
// conditionals never nest.
// ---------------------------------------------------------------------------

enum class PropKind { Letter, Top, Bot, Not, And, Or, Implies, Iff };

struct PropNode;
using PropPtr = std::shared_ptr<const PropNode>;

struct PropNode {
    PropKind kind;
    std::string letter;  // Letter only
    PropPtr lhs, rhs;    // Not uses lhs only
};

PropPtr mkLetter(std::string name);
PropPtr mkTop();
PropPtr mkBot();
PropPtr mkNot(PropPtr f);
PropPtr mkAnd(PropPtr a, PropPtr b);
PropPtr mkOr(PropPtr a, PropPtr b);
PropPtr mkImplies(PropPtr a, PropPtr b);
PropPtr mkIff(PropPtr a, PropPtr b);

enum class StepKind { Cond, Not, And, Or, Implies, Iff };

struct StepNode;
using StepPtr = std::shared_ptr<const StepNode>;

struct StepNode {
    StepKind kind;
    PropPtr ant, cons;  // Cond only
    StepPtr lhs, rhs;   // Not uses lhs only
};

StepPtr mkCond(PropPtr ant, PropPtr cons);
StepPtr mkNot(StepPtr f);
StepPtr mkAnd(StepPtr a, StepPtr b);
StepPtr mkOr(StepPtr a, StepPtr b);
StepPtr mkImplies(StepPtr a, StepPtr b);
StepPtr mkIff(StepPtr a, StepPtr b);

bool equal(const PropPtr& a, const PropPtr& b);
bool equal(const StepPtr& a, const StepPtr& b);

// Substitute prop formulas for letters; used to instantiate axiom schemata.
PropPtr substitute(const PropPtr& f, const std::map<std::string, PropPtr>& sigma);
StepPtr substitute(const StepPtr& f, const std::map<std::string, PropPtr>& sigma);

// Parse result: either a purely propositional formula or a one-step formula,
// plus the sorted set of letters occurring in it.
struct ParsedFormula {
    std::variant<PropPtr, StepPtr> tree;
    std::vector<std::string> letters;

    bool isLevel1() const { return std::holds_alternative<StepPtr>(tree); }
    const PropPtr& level0() const { return std::get<PropPtr>(tree); }
    const StepPtr& level1() const { return std::get<StepPtr>(tree); }
};

// ASCII connectives: ~ & | -> <-> ~> with constants T and F; the usual
// unicode glyphs are accepted as input aliases. Precedence
// ~ > & > | > {~>, ->, <->}; the bottom tier is non-associative.
ParsedFormula parse(std::string_view text);

std::string render(const ParsedFormula& f);
std::string render(const PropPtr& f);
std::string render(const StepPtr& f);

std::vector<std::string> lettersOf(const PropPtr& f);
std::vector<std::string> lettersOf(const StepPtr& f);

using Valuation = std::map<std::string, WorldSet>;

// Extension of a propositional formula: the set of worlds satisfying it.
// width is the ground-set size; every valuation set must have that width.
WorldSet extension(const PropPtr& f, int width, const Valuation& valuation);

}  // namespace condgeo

#endif
