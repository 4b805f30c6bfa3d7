#include "linrank/catalog.hpp"

#include <set>
#include <stdexcept>

#include "linrank/shannon.hpp"

namespace linrank {

namespace {

struct Row {
    const char* tag;
    CatalogGroup group;
    int vars;
    const char* text;
    const char* recipe; // one declaration per line
    bool inferred;
};

using G = CatalogGroup;

constexpr const char* kAB = "Z = CI(A ; B)";
constexpr const char* kABC = "Z = CI(A ; B,C)";
constexpr const char* kABCD = "Z = CI(A,B ; C,D)";
constexpr const char* kAB_AC = "Z = CI(A ; B)\nY = CI(A ; C)";

// clang-format off
const Row kRows[] = {
    {"(Ingleton)", G::ingleton, 4, "I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D)", kAB, false},
    {"(inginst1)", G::ingleton, 5, "I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D)", kAB, false},
    {"(inginst2)", G::ingleton, 5, "I(A;B) <= I(A;B|C)+I(A;B|D,E)+I(C;D,E)", kAB, false},
    {"(inginst3)", G::ingleton, 5, "I(A;B,C) <= I(A;B,C|D)+I(A;B,C|E)+I(D;E)", kABC, false},
    {"(inginst4)", G::ingleton, 5, "I(A,B;A,C) <= I(A,B;A,C|A,D)+I(A,B;A,C|A,E)+I(A,D;A,E)",
     "Z = CI(A,B ; A,C)", false},

    {"(1)", G::five, 5, "I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D|E)+I(A;E)", kAB, false},
    {"(2)", G::five, 5, "I(A;B) <= I(A;B|C)+I(A;C|D)+I(A;D|E)+I(B;E)", kAB, false},
    {"(3)", G::five, 5, "I(A;B) <= I(A;C)+I(A;B|D)+I(B;E|C)+I(A;D|C,E)", kAB, false},
    {"(4)", G::five, 5, "I(A;B) <= I(A;C)+I(A;B|D,E)+I(B;D|C)+I(A;E|C,D)", kAB, false},
    {"(5)", G::five, 5, "I(A;B) <= I(A;C)+I(B;D|C)+I(A;E|D)+I(A;B|C,E)+I(B;C|D,E)", kAB, false},
    {"(6)", G::five, 5, "I(A;B) <= I(A;C)+I(B;D|E)+I(D;E|C)+I(A;B|C,D)+I(A;C|D,E)", kAB, false},
    {"(7)", G::five, 5, "I(A;B) <= I(A;C|D)+I(A;E|C)+I(B;D)+I(B;D|C,E)+I(A;B|D,E)", kAB, false},
    {"(8)", G::five, 5, "2I(A;B) <= I(A;B|C)+I(A;B|D)+I(A;B|E)+I(C;D)+I(C,D;E)", kAB, false},
    {"(9)", G::five, 5, "2I(A;B) <= I(A;C)+I(A;B|D)+I(A;B|E)+I(D;E)+I(B;D,E|C)", kAB, false},
    {"(10)", G::five, 5, "2I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D)+I(A;E)+I(B;D|E)+I(A;C|D,E)", kAB,
     false},
    {"(11)", G::five, 5, "I(A;B,C) <= I(A;C|B,D)+I(A;C,E)+I(A;B|D,E)+I(B;D|C,E)", kABC, false},
    {"(12)", G::five, 5,
     "I(A;B,C) <= I(A;C)+I(A;B|D)+I(A;D|E)+I(B;E|C)+I(A;C|B,E)+I(C;E|B,D)", kABC, false},
    {"(13)", G::five, 5, "I(A;B,C) <= I(A;B|D)+I(A;C,E)+I(B;D|C,E)+I(A;C|B,E)+I(C;E|B,D)", kABC,
     false},
    {"(14)", G::five, 5, "I(A;B,C) <= I(A;D)+I(B;E|D)+I(A;B|C,E)+I(A;C|B,D)+I(A;C|D,E)", kABC,
     false},
    {"(15)", G::five, 5,
     "I(A;B,C) <= I(A;D)+I(B;E|D)+I(A;C|E)+I(A;B|C,D)+I(A;C|B,D)+I(B;D|C,E)", kABC, false},
    {"(16)", G::five, 5, "I(A;B,C) <= I(A;B|C,D)+I(A;C|B,D)+I(B,C;D|E)+I(B;C|D,E)+I(A;E)", kABC,
     false},
    {"(17)", G::five, 5,
     "I(A,B;C,D) <= I(A,B;D)+I(A;D|B,C)+I(B;D|A,C)+I(A;C|B,E)+I(B;C|A,E)+I(A;B|D,E)+I(C;E|D)",
     kABCD, false},
    {"(18)", G::five, 5,
     "I(A;B)+I(A;C) <= I(B;C)+I(A;B|D)+I(A;C|D)+I(B;D|E)+I(C;D|E)+I(A;E)", kAB_AC, false},
    {"(19)", G::five, 5,
     "I(A;B)+I(A;C) <= I(B;D)+2I(A;C|D)+I(A;B|E)+I(D;E)+I(B;E|C,D)+I(C;D|B,E)", kAB_AC, false},
    {"(20)", G::five, 5,
     "I(A;B)+I(A;C) <= I(B;C)+I(B;D)+I(A;C|D)+I(A;B|E)+I(A;E|B)+I(C;D|E)+I(B;E|C,D)", kAB_AC,
     false},
    {"(21)", G::five, 5,
     "I(A;B)+I(A;C) <= I(B;D)+I(A;C|D)+I(A;D|E)+I(C;E)+I(A;B|C,E)+I(B;C|D,E)+I(B;E|C,D)",
     kAB_AC, false},
    {"(22)", G::five, 5,
     "2I(A;B)+I(A;C) <= I(A;B|C)+I(A;B|D)+I(C;D)+I(A;C|E)+I(A;D|E)+2I(B;E)+I(B;C|D,E)"
     "+I(C;E|B,D)",
     kAB_AC, false},
    {"(23)", G::five, 5,
     "I(A;B)+I(A;B,C) <= I(A;B|D)+2I(A;C|E)+I(B;E)+I(D;E)+I(A;B|C,D)+2I(B;D|C,E)+I(C;E|B,D)",
     "Z = CI(A ; B)\nY = CI(A ; B,C)", false},
    {"(24)", G::five, 5,
     "I(A;C,D)+I(B;C,D) <= I(B;D)+I(B;C|E)+I(C;E|D)+I(A;E)+I(A;C|B,D)+I(A,B;D|C)+I(A;D|B,E)"
     "+I(A;B|D,E)",
     "Z = CI(A ; C,D)\nY = CI(B ; C,D)", false},

    {"(12a)", G::moved, 5,
     "I(A;B|C) <= I(A;B|D)+I(A;D|E)+I(B;E|C)+I(A;C|B,E)+I(C;E|B,D)", kABC, false},
    {"(17a)", G::moved, 5,
     "I(A,B;C|D) <= I(A;D|B,C)+I(B;D|A,C)+I(A;C|B,E)+I(B;C|A,E)+I(A;B|D,E)+I(C;E|D)", kABCD,
     false},
    {"(24a)", G::moved, 5,
     "I(A;C,D)+I(B;C|D) <= I(B;C|E)+I(C;E|D)+I(A;E)+I(A;C|B,D)+I(A,B;D|C)+I(A;D|B,E)"
     "+I(A;B|D,E)",
     "Z = CI(A ; C,D)\nY = CI(B ; C,D)", false},

    {"(18b)", G::enlarged, 5,
     "2I(A;B,C) <= I(A;C|B)+I(A;B|C)+I(B;C)+I(A;B|D)+I(A;C|D)+I(B;D|E)+I(C;D|E)+I(A;E)",
     kAB_AC, false},
    {"(19b)", G::enlarged, 5,
     "2I(A;B,C) <= I(A;C|B)+I(A;B|C)+I(B;D)+2I(A;C|D)+I(A;B|E)+I(D;E)+I(B;E|C,D)+I(C;D|B,E)",
     kABC, false},
    {"(20b)", G::enlarged, 5,
     "2I(A;B,C) <= I(A;C|B)+I(A;B|C)+I(B;C)+I(B;D)+I(A;C|D)+I(A;B|E)+I(A;E|B)+I(C;D|E)"
     "+I(B;E|C,D)",
     kAB_AC, false},
    {"(21b)", G::enlarged, 5,
     "2I(A;B,C) <= I(A;C|B)+I(A;B|C)+I(B;D)+I(A;C|D)+I(A;D|E)+I(C;E)+I(A;B|C,E)+I(B;C|D,E)"
     "+I(B;E|C,D)",
     kABC, false},
    {"(22b)", G::enlarged, 5,
     "3I(A;B,C) <= 2I(A;C|B)+2I(A;B|C)+I(A;B|D)+I(C;D)+I(A;C|E)+I(A;D|E)+2I(B;E)+I(B;C|D,E)"
     "+I(C;E|B,D)",
     kABC, false},
    {"(23b)", G::enlarged, 5,
     "2I(A;B,C) <= I(A;C|B)+I(A;B|D)+2I(A;C|E)+I(B;E)+I(D;E)+I(A;B|C,D)+2I(B;D|C,E)"
     "+I(C;E|B,D)",
     kABC, false},
    {"(24b)", G::enlarged, 5,
     "2I(A,B;C,D) <= I(B;C,D|A)+I(A;C,D|B)+I(B;D)+I(B;C|E)+I(C;E|D)+I(A;E)+I(A;C|B,D)"
     "+I(A,B;D|C)+I(A;D|B,E)+I(A;B|D,E)",
     kABCD, false},

    {"(1c)", G::rewritten, 5, "I(A;C) <= I(A;C|B)+I(A;B|D)+I(C;D|E)+I(A;E)", "Z = CI(A ; C)", true},
    {"(11c)", G::rewritten, 5, "I(A;B|C) <= I(A;E|C)+I(A;C|B,D)+I(A;B|D,E)+I(B;D|C,E)", kABC,
     true},
    {"(13c)", G::rewritten, 5,
     "I(A;B|C) <= I(A;B|D)+I(A;E|C)+I(B;D|C,E)+I(A;C|B,E)+I(C;E|B,D)", kABC, true},
    {"(15c)", G::rewritten, 5,
     "I(B;C|D) <= I(B;C|A,D)+I(A;D|B,C)+I(B;E|D)+I(A;C|E)+I(B;D|C,E)", kABC, true},
    {"(19c)", G::rewritten, 5,
     "I(B;C) <= I(B;D)+I(A;C|D)+I(C;D|A)+I(B;E|A)+I(B;C|D,E)+I(D;E|B,C)", kABC, true},
    {"(21c)", G::rewritten, 5,
     "I(C;D|E) <= I(A;D|E)+I(C;D|A)+I(B;D|C,E)+I(B;C,E|A)+I(C;E|B,D)", kABC, true},
    {"(22c)", G::rewritten, 5,
     "2I(A;C,D) <= I(A;D|C)+I(C;D|A)+I(A;C|B)+I(A;D|B)+I(A;C|E)+I(A;D|E)+2I(B;E)"
     "+I(B;C|D,E)+I(C;E|B,D)",
     kABC, true},
    {"(23c)", G::rewritten, 5,
     "I(B;D|E) <= I(B;D|A)+I(A;C|E)+I(C;E|A)+I(B;D|A,C)+I(D;E|B,C)+I(B;E|C,D)+I(B;D|C,E)", kABC,
     true},
    {"(24c)", G::rewritten, 5,
     "I(A,E;D) <= I(B;D)+I(C;E|B)+I(D;E|C)+I(A;B|C,D)+I(A;D|B,C)+I(A;D|B,E)+I(A;E|B,D)", kABCD,
     true},

    {"(3d)", G::substituted, 5, "I(A;B) <= I(A;C)+I(A;B|D)+I(B;C,E|C)+I(A;D|C,E)", kAB, false},
    {"(4d)", G::substituted, 5, "I(A;B) <= I(A;C)+I(A;B|D,E)+I(B;C,D|C)+I(A;D,E|C,D)", kAB,
     false},
    {"(5d)", G::substituted, 5,
     "I(A;B) <= I(A;C)+I(B;D|C)+I(A;D,E|D)+I(A;B|C,E)+I(B;C,E|D,E)", kAB, false},
    {"(7d)", G::substituted, 5,
     "I(A;B) <= I(A;C|D)+I(A;C,E|C)+I(B;D)+I(B;D,E|C,E)+I(A;B|D,E)", kAB, false},
    {"(11d)", G::substituted, 5,
     "I(A;B,C) <= I(A;B,C|B,D)+I(A;C,E)+I(A;B,D|D,E)+I(B,C;D,E|C,E)", kABC, false},
    {"(12d)", G::substituted, 5,
     "I(A;B,C) <= I(A;C)+I(A;B,D|D)+I(A;D|E)+I(B,C;E|C)+I(A;B,C|B,E)+I(B,C;B,E|B,D)", kABC,
     false},
    {"(13d)", G::substituted, 5,
     "I(A;B,C) <= I(A;B,D|D)+I(A;C,E)+I(B,C;D|C,E)+I(A;B,C|B,E)+I(C;B,E|B,D)", kABC, false},
    {"(14d)", G::substituted, 5,
     "I(A;B,C) <= I(A;D)+I(B,D;D,E|D)+I(A;B,C|C,E)+I(A;B,C|B,D)+I(A;C,E|D,E)", kABC, false},
    {"(15d)", G::substituted, 5,
     "I(A;B,C) <= I(A;D)+I(B,D;E|D)+I(A;C,E|E)+I(A;B,C|C,D)+I(A;B,C|B,D)+I(B,C;C,D|C,E)",
     kABC, false},
    {"(16d)", G::substituted, 5,
     "I(A;B,C) <= I(A;B,C|C,D)+I(A;B,C|B,D)+I(B,C;D,E|E)+I(B,D;C,D|D,E)+I(A;E)", kABC, false},
    {"(17d)", G::substituted, 5,
     "I(A,B;C,D) <= I(A,B;D)+I(A,B;C,D|B,C)+I(A,B;C,D|A,C)+I(A,B;B,C|B,E)+I(A,B;A,C|A,E)"
     "+I(A,E;B,E|D,E)+I(C,D;D,E|D)",
     kABCD, false},

    {"(25)", G::six, 6, "I(A;B) <= I(A;C)+I(B;D|C)+I(A;E|D)+I(B;F|E)+I(A;B|F)", kAB, false},
    {"(26)", G::six, 6, "I(A;B) <= I(A;C)+I(B;D|C)+I(A;E|D)+I(A;F|E)+I(A;B|F)", kAB, false},
    {"(27)", G::six, 6, "I(A;B) <= I(A;C)+I(B;D|C)+I(E;F|D)+I(A;B|E)+I(A;B|F)", kAB, false},
    {"(28)", G::six, 6, "I(A;B) <= I(A;C)+I(D;E|C)+I(A;B|D)+I(B;F|E)+I(A;B|F)", kAB, false},
    {"(29)", G::six, 6, "I(A;B) <= I(C;D)+I(A;B|C)+I(E;F|D)+I(A;B|E)+I(A;B|F)", kAB, false},
    {"(30)", G::six, 6, "2I(A;B) <= I(A;C)+I(D;E,F|C)+I(A;B|D)+I(E;F)+I(A;B|E)+I(A;B|F)", kAB,
     false},
    {"(31)", G::six, 6, "2I(A;B) <= I(A;C)+I(B;D|C)+I(A;E,F|D)+I(E;F)+I(A;B|E)+I(A;B|F)", kAB,
     false},
    {"(32)", G::six, 6, "2I(A;B) <= I(C;D)+I(A;B|C)+I(B;E,F|D)+I(E;F)+I(A;B|E)+I(A;B|F)", kAB,
     false},
    {"(33)", G::six, 6, "2I(A;B) <= I(C,D;E)+I(C;D)+I(A;F|C)+I(A;B|F)+I(A;B|D)+I(A;B|E)", kAB,
     false},
    {"(34)", G::six, 6,
     "3I(A;B) <= I(C,D;E,F)+I(C;D)+I(E;F)+I(A;B|C)+I(A;B|D)+I(A;B|E)+I(A;B|F)", kAB, false},
    {"(35)", G::six, 6,
     "I(A;B,C) <= I(D;E)+I(C;F|D)+I(A;B|D,F)+I(A;B|C,D)+I(A;C|B,F)+I(A;B,C|E)", kABC, false},
    {"(36)", G::six, 6,
     "I(A,B;C,D) <= I(A;C,D)+I(B;E|A)+I(B;D|A,C,F)+I(D;F|A,E)+I(B;C|A,E,F)+I(B;C|D,E)"
     "+I(A;D|B,C,F)+I(A;C|B,E,F)+I(A;F|B,D,E)",
     kABCD, false},
    {"(37)", G::six, 6,
     "2I(A;B) <= I(D;F)+I(A;C)+I(B;D|C)+I(A;B|F)+I(A;E|D)+I(A;F|C,D)+I(A;B|E)", kAB, false},
    {"(38)", G::six, 6, "I(A;B,C) <= I(A;C)+I(B;D|C)+I(A;F|D)+I(A;B|F)+I(C;E|B,F)+I(A;C|B,E)",
     kABC, false},
    {"(39)", G::six, 6,
     "3I(A,B;C,D,E) <= I(A;C,F)+I(A,B;D)+I(A,B;E)+I(C;F|D)+I(D;F|E)+I(A;E|D,F)+I(B;C|A,D,F)"
     "+I(B;D|C,F)+I(A;D,E|B,C)+I(A;D|B,C,E)+I(A;C|E,F)+I(B;D|A,E,F)+I(B;C,D|A)"
     "+I(A,B;E|C,D)+I(B;E|A,C,D)+I(B;D|C,E,F)+I(A,B;C|D,E)",
     "Z = CI(A,B ; C,D,E)", false},
    {"(40)", G::six, 6,
     "I(A;B)+I(A;C) <= I(B;C)+I(A;D)+I(B;E|D)+I(C;F|D)+I(A;B|E)+I(A;C|F)", kAB_AC, false},
    {"(41)", G::six, 6,
     "2I(A;B,C)+I(B;C,D) <= I(A;C,E)+I(A;F)+I(A;C|D)+2I(A;B|C,F)+I(B;C)+I(E;F|C)"
     "+2I(B;D|C,E)+I(C;E|F)+I(A;D|E,F)+I(D;E|A,C,F)+2I(A;F|C,D,E)",
     "Z = CI(A ; B,C)\nY = CI(B ; C,D)", false},
    {"(2CIa)", G::six, 6,
     "I(A;B) <= I(A;C)+I(B;D|C)+I(E;F|D)+I(A;B|E)+I(A;C|F)+I(B;E|C,F)",
     "Z = CI(A ; B)\nY = CI(E ; D,F)", false},
    {"(2CIb)", G::six, 6,
     "2I(A,B;C,D,E) <= I(A,B;D,E)+I(A,D,F;C)+I(A,F;D|C)+I(B;C|D,E)+I(A;C|B)+I(A;D|B,C,E)"
     "+2I(A;C|D,E,F)+I(B;C|A,D,E)+I(A;E|B,D,F)+I(B;E|A,C,F)+I(B;E|A,D,F)+I(B;E|C,D)"
     "+I(B;D|A,E,F)+I(A;F|B,D,E)+I(A;F|B,C,D)",
     "Z = CI(A,B ; C,D,E)\nY = CI(B,F ; A,D,E)", false},
    {"(2CIc)", G::six, 6,
     "2I(A;B,C) <= I(A;B)+I(D;E)+I(A;B|C)+I(C;E|B)+I(D;F|B,E)+I(C;F|D)+I(A;B|C,D)"
     "+I(A;B,C|F)+I(A;C|E)",
     "Z = CI(A ; B,C)\nY = CI(F ; Z)", false},
};
// clang-format on

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> out;
    for (const Row& row : kRows) {
        CatalogEntry e;
        e.tag = row.tag;
        e.group = row.group;
        e.text = row.text;
        e.inequality = parse_inequality(row.text, VarUniverse::letters(row.vars));
        e.inequality.label = row.tag;
        e.recipe = parse_hypotheses(row.recipe);
        e.recipe_inferred = row.inferred;
        out.push_back(std::move(e));
    }
    return out;
}

// Node labels use rewritten terms such as I(C,D;E|C) for I(D;E|C), so that
// the conditioning of each child matches its parent's side.
struct ForestRow {
    const char* tag;
    const char* text;
};

const ForestRow kForests[] = {
    {"(Ingleton)", R"(vars A B C D
node r I(C;D)
node x I(A;B|C)
node y I(A;B|D)
left x of r
right y of r
)"},
    {"(1)", R"(vars A B C D E
node r I(A;E)
node m I(C;D|E)
node x I(A;B|C)
node y I(A;B|D)
right m of r
left x of m
right y of m
)"},
    {"(2)", R"(vars A B C D E
node r I(B;E)
node m1 I(A;D|E)
node m2 I(A;C|D)
node m3 I(A;B|C)
right m1 of r
right m2 of m1
right m3 of m2
)"},
    {"(8)", R"(vars A B C D E
node r1 I(C;D)
node x I(A;B|C)
node y I(A;B|D)
left x of r1
right y of r1
node r2 I(C,D;E)
node z I(A;B|E)
right z of r2
lptr r2 -> r1
)"},
    {"(9)", R"(vars A B C D E
node r1 I(A;C)
node c I(B;D,E|C)
right c of r1
node r2 I(D;E)
node x I(A;B|D)
node y I(A;B|E)
left x of r2
right y of r2
rptr c -> r2
)"},
    {"(6)", R"(vars A B C D E
node r I(A;C)
node m I(C,D;E|C)
node x I(A;B|C,D)
node y I(B;D,E|E)
node w I(A;C,D,E|D,E)
right m of r
left x of m
right y of m
right w of y
rptr w -> m
)"},
    {"(10)", R"(vars A B C D E
node r1 I(A;E)
node m1 I(B;D,E|E)
node m2 I(A;C,D|D,E)
right m1 of r1
right m2 of m1
node r2 I(C;D)
node x I(A;B|C)
node y I(A;B|D)
left x of r2
right y of r2
rptr m2 -> r2
)"},
    {"(19b)", R"(vars A B C D E
special A B,C
node r1 I(B;D)
node a1 I(A;B,C|B)
node b1 I(A;C,D|D)
node b2 I(B,C;D,E|C,D)
left a1 of r1
right b1 of r1
right b2 of b1
node r2 I(D;E)
node a2 I(A;C|D)
node a3 I(A;B,C|C)
node c1 I(A;B,E|E)
node c2 I(B,C;B,D|B,E)
left a2 of r2
right a3 of a2
right c1 of r2
right c2 of c1
rptr b2 -> r2
rptr c2 -> r1
)"},
    {"(21b)", R"(vars A B C D E
special A B,C
node r1 I(B;D)
node a1 I(A;B,C|B)
node b1 I(A;C,D|D)
node b2 I(B,C;C,E|C,D)
node b3 I(A;B,C|C,E)
left a1 of r1
right b1 of r1
right b2 of b1
right b3 of b2
node r2 I(C;E)
node a2 I(A;B,C|C)
node c1 I(A;D,E|E)
node c2 I(B,D;C,E|D,E)
left a2 of r2
right c1 of r2
right c2 of c1
lptr c2 -> r1
rptr c2 -> r2
)"},
    {"(22b)", R"(vars A B C D E
special A B,C
node r1 I(B;E)
node a1 I(A;B,C|B)
node b1 I(A;D,E|E)
node b2 I(B,E;C,D|D,E)
left a1 of r1
right b1 of r1
right b2 of b1
node r2 I(C;D)
node a2 I(A;B,C|C)
node c1 I(A;B,D|D)
node c2 I(B,C;B,E|B,D)
left a2 of r2
right c1 of r2
right c2 of c1
node r3 I(B;E)
node a3 I(A;B,C|B)
node d1 I(A;C|E)
node d2 I(A;B,C|C)
left a3 of r3
right d1 of r3
right d2 of d1
lptr b2 -> r3
rptr b2 -> r2
rptr c2 -> r1
)"},
    {"(23b)", R"(vars A B C D E
special A B,C
node r1 I(B;E)
node a1 I(A;B,C|B)
node b1 I(A;C,E|E)
node b2 I(B,C;C,D|C,E)
node b3 I(A;B,C|C,D)
left a1 of r1
right b1 of r1
right b2 of b1
right b3 of b2
node r2 I(D;E)
node c1 I(A;B,D|D)
node c2 I(B,C;B,E|B,D)
node d1 I(A;C,E|E)
node d2 I(B,C;D,E|C,E)
left c1 of r2
right c2 of c1
right d1 of r2
right d2 of d1
rptr c2 -> r1
rptr d2 -> r2
)"},
    {"(24b)", R"(vars A B C D E
special A,B C,D
node r1 I(A;E)
node a1 I(A,B;C,D|A)
node b1 I(B,E;C|E)
node b2 I(A,B;B,D|B,E)
node b3 I(A,B;C,D|B,D)
node b4 I(A,B;C,D|C)
left a1 of r1
right b1 of r1
left b2 of b1
right b3 of b2
right b4 of b1
node r2 I(B;D)
node c1 I(A,B;C,D|B)
node d1 I(C,D;D,E|D)
node d2 I(A,E;B,D|D,E)
left c1 of r2
right d1 of r2
right d2 of d1
lptr d2 -> r1
rptr d2 -> r2
)"},
};

} // namespace

std::string_view group_name(CatalogGroup g)
{
    switch (g) {
    case CatalogGroup::ingleton: return "ingleton";
    case CatalogGroup::five: return "five";
    case CatalogGroup::moved: return "moved";
    case CatalogGroup::enlarged: return "enlarged";
    case CatalogGroup::rewritten: return "rewritten";
    case CatalogGroup::substituted: return "substituted";
    case CatalogGroup::six: return "six";
    }
    return "?";
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_entry(std::string_view tag)
{
    std::string want(tag);
    if (want.empty() || want.front() != '(')
        want = "(" + want + ")";
    for (const auto& e : catalog())
        if (e.tag == want)
            return &e;
    return nullptr;
}

const std::vector<CatalogForest>& catalog_forests()
{
    static const std::vector<CatalogForest> forests = [] {
        std::vector<CatalogForest> out;
        for (const auto& row : kForests)
            out.push_back({row.tag, row.text, parse_forest_spec(row.text)});
        return out;
    }();
    return forests;
}

std::vector<ShannonLemma> lemma_suite()
{
    VarUniverse zrst({"Z", "R", "S", "T"});
    VarUniverse zrs({"Z", "R", "S"});
    auto ineq = [](const char* text, const VarUniverse& u, const char* name) {
        LinearInequality q = parse_inequality(text, u);
        q.label = name;
        return q;
    };
    return {
        {"lemma-1", ineq("H(Z|R)+I(R;S|T) >= I(Z;S|T)", zrst, "lemma-1"), {}},
        {"corollary-2", ineq("I(R;S|T) >= I(Z;S|T)", zrst, "corollary-2"),
         {parse_expression("H(Z|R)", zrst)}},
        {"lemma-4", ineq("H(Z|R)+I(R;S|T) >= I(Z;S|T)+H(Z|R,S,T)", zrst, "lemma-4"), {}},
        {"zrst", ineq("H(Z|R)+H(Z|S)+I(R;S|T) >= H(Z|T)+H(Z|R,S,T)", zrst, "zrst"), {}},
        {"zrs", ineq("H(Z|R)+H(Z|S)+I(R;S) >= H(Z)+H(Z|R,S)", zrs, "zrs"), {}},
    };
}

std::vector<LinearInequality> inequality_set(std::string_view name, int n)
{
    const bool ingleton = name == "shannon+ingleton" || name == "full-catalog";
    if (!ingleton && name != "shannon")
        throw std::invalid_argument("unknown inequality set '" + std::string(name) + "'");
    if (ingleton && n != 4 && n != 5)
        throw std::invalid_argument(std::string(name) + " needs 4 or 5 variables");

    const VarUniverse u = VarUniverse::letters(n);
    std::vector<LinearInequality> out;
    std::set<EntropyExpr::Terms> seen;
    auto add = [&](LinearInequality q) {
        q.universe = u;
        if (seen.insert(q.expr.terms()).second)
            out.push_back(std::move(q));
    };
    for (auto& e : elemental_inequalities(u))
        add(e.inequality);
    if (!ingleton)
        return out;
    for (const auto& e : catalog()) {
        const bool take = e.inequality.universe.size() == n &&
                          (e.group == CatalogGroup::ingleton ||
                           (name == "full-catalog" && e.group == CatalogGroup::five));
        if (take)
            for (auto& q : orbit(e.inequality))
                add(std::move(q));
    }
    return out;
}

} // namespace linrank
