#include "hauptmod/golden.hpp"

#include <cstdio>

namespace hauptmod::golden {

namespace {

// X^2 - Y + 2XY - 3X^2Y + Y^2
const std::vector<Term> kLevel2 = {{2, 0, 1}, {0, 1, -1}, {1, 1, 2}, {2, 1, -3}, {0, 2, 1}};

const std::vector<Term> kLevel3 = {
    {3, 0, 1},  {0, 1, -1}, {1, 1, 3}, {2, 1, -3}, {0, 2, 3},
    {1, 2, -9}, {2, 2, 9},  {0, 3, -3}, {1, 3, 9}, {2, 3, -9},
};

// Inner factor G for p = 5.
const std::vector<Term> kInner5 = {
    {1, 0, -1}, {2, 0, 2}, {3, 0, -3}, {4, 0, 3}, {0, 1, -1}, {1, 1, 4}, {2, 1, -6}, {3, 1, 9},
    {4, 1, -9}, {0, 2, 2}, {1, 2, -6}, {2, 2, 8}, {3, 2, -18}, {4, 2, 18}, {0, 3, -3}, {1, 3, 9},
    {2, 3, -18}, {3, 3, 36}, {4, 3, -27}, {0, 4, 3}, {1, 4, -9}, {2, 4, 18}, {3, 4, -27},
    {4, 4, 16},
};

// Inner factor G for p = 7.
const std::vector<Term> kInner7 = {
    {1, 0, -1}, {2, 0, 3}, {3, 0, -6}, {4, 0, 9}, {5, 0, -9}, {6, 0, 5}, {0, 1, -1}, {1, 1, 7},
    {2, 1, -21}, {3, 1, 42}, {4, 1, -63}, {5, 1, 59}, {6, 1, -27}, {0, 2, 3}, {1, 2, -21},
    {2, 2, 63}, {3, 2, -126}, {4, 2, 197}, {5, 2, -189}, {6, 2, 81}, {0, 3, -6}, {1, 3, 42},
    {2, 3, -126}, {3, 3, 242}, {4, 3, -378}, {5, 3, 378}, {6, 3, -162}, {0, 4, 9}, {1, 4, -63},
    {2, 4, 197}, {3, 4, -378}, {4, 4, 567}, {5, 4, -567}, {6, 4, 243}, {0, 5, -9}, {1, 5, 59},
    {2, 5, -189}, {3, 5, 378}, {4, 5, -567}, {5, 5, 567}, {6, 5, -243}, {0, 6, 5}, {1, 6, -27},
    {2, 6, 81}, {3, 6, -162}, {4, 6, 243}, {5, 6, -243}, {6, 6, 104},
};

// Inner factor G for p = 11.
const std::vector<Term> kInner11 = {
    {1, 0, -1}, {2, 0, 5}, {3, 0, -16}, {4, 0, 38}, {5, 0, -70}, {6, 0, 100}, {7, 0, -110},
    {8, 0, 91}, {9, 0, -51}, {10, 0, 15}, {0, 1, -1}, {1, 1, 12}, {2, 1, -65}, {3, 1, 221},
    {4, 1, -544}, {5, 1, 1022}, {6, 1, -1478}, {7, 1, 1613}, {8, 1, -1263}, {9, 1, 630},
    {10, 1, -153}, {0, 2, 5}, {1, 2, -65}, {2, 2, 377}, {3, 2, -1348}, {4, 2, 3422}, {5, 2, -6552},
    {6, 2, 9616}, {7, 2, -10542}, {8, 2, 8077}, {9, 2, -3789}, {10, 2, 819}, {0, 3, -16},
    {1, 3, 221}, {2, 3, -1348}, {3, 3, 5000}, {4, 3, -12982}, {5, 3, 25214}, {6, 3, -37458},
    {7, 3, 41403}, {8, 3, -31626}, {9, 3, 14517}, {10, 3, -2970}, {0, 4, 38}, {1, 4, -544},
    {2, 4, 3422}, {3, 4, -12982}, {4, 4, 34186}, {5, 4, -67074}, {6, 4, 100662}, {7, 4, -112374},
    {8, 4, 86544}, {9, 4, -39906}, {10, 4, 8100}, {0, 5, -70}, {1, 5, 1022}, {2, 5, -6552},
    {3, 5, 25214}, {4, 5, -67074}, {5, 5, 132804}, {6, 5, -201222}, {7, 5, 226926}, {8, 5, -176904},
    {9, 5, 82782}, {10, 5, -17010}, {0, 6, 100}, {1, 6, -1478}, {2, 6, 9616}, {3, 6, -37458},
    {4, 6, 100662}, {5, 6, -201222}, {6, 6, 307674}, {7, 6, -350514}, {8, 6, 277182},
    {9, 6, -132192}, {10, 6, 27702}, {0, 7, -110}, {1, 7, 1613}, {2, 7, -10542}, {3, 7, 41403},
    {4, 7, -112374}, {5, 7, 226926}, {6, 7, -350514}, {7, 7, 405000}, {8, 7, -327564},
    {9, 7, 161109}, {10, 7, -34992}, {0, 8, 91}, {1, 8, -1263}, {2, 8, 8077}, {3, 8, -31626},
    {4, 8, 86544}, {5, 8, -176904}, {6, 8, 277182}, {7, 8, -327564}, {8, 8, 274833},
    {9, 8, -142155}, {10, 8, 32805}, {0, 9, -51}, {1, 9, 630}, {2, 9, -3789}, {3, 9, 14517},
    {4, 9, -39906}, {5, 9, 82782}, {6, 9, -132192}, {7, 9, 161109}, {8, 9, -142155}, {9, 9, 78732},
    {10, 9, -19683}, {0, 10, 15}, {1, 10, -153}, {2, 10, 819}, {3, 10, -2970}, {4, 10, 8100},
    {5, 10, -17010}, {6, 10, 27702}, {7, 10, -34992}, {8, 10, 32805}, {9, 10, -19683},
    {10, 10, 5368},
};

// Inner factor G for p = 13.
const std::vector<Term> kInner13 = {
    {1, 0, -1}, {2, 0, 6}, {3, 0, -23}, {4, 0, 65}, {5, 0, -144}, {6, 0, 255}, {7, 0, -363},
    {8, 0, 414}, {9, 0, -369}, {10, 0, 243}, {11, 0, -108}, {12, 0, 26}, {0, 1, -1}, {1, 1, 13},
    {2, 1, -76}, {3, 1, 277}, {4, 1, -735}, {5, 1, 1530}, {6, 1, -2559}, {7, 1, 3459},
    {8, 1, -3816}, {9, 1, 3447}, {10, 1, -2457}, {11, 1, 1235}, {12, 1, -324}, {0, 2, 6},
    {1, 2, -76}, {2, 2, 420}, {3, 2, -1398}, {4, 2, 3307}, {5, 2, -6111}, {6, 2, 9126},
    {7, 2, -11187}, {8, 2, 12096}, {9, 2, -12609}, {10, 2, 11638}, {11, 2, -7371}, {12, 2, 2187},
    {0, 3, -23}, {1, 3, 277}, {2, 3, -1398}, {3, 3, 3973}, {4, 3, -7302}, {5, 3, 9297},
    {6, 3, -7731}, {7, 3, 3258}, {8, 3, -4860}, {9, 3, 21199}, {10, 3, -37827}, {11, 3, 31023},
    {12, 3, -9963}, {0, 4, 65}, {1, 4, -735}, {2, 4, 3307}, {3, 4, -7302}, {4, 4, 6195},
    {5, 4, 9981}, {6, 4, -44883}, {7, 4, 82404}, {8, 4, -73664}, {9, 4, -14580}, {10, 4, 108864},
    {11, 4, -103032}, {12, 4, 33534}, {0, 5, -144}, {1, 5, 1530}, {2, 5, -6111}, {3, 5, 9297},
    {4, 5, 9981}, {5, 5, -77760}, {6, 5, 193752}, {7, 5, -297231}, {8, 5, 247212}, {9, 5, 29322},
    {10, 5, -302049}, {11, 5, 280179}, {12, 5, -88209}, {0, 6, 255}, {1, 6, -2559}, {2, 6, 9126},
    {3, 6, -7731}, {4, 6, -44883}, {5, 6, 193752}, {6, 6, -419532}, {7, 6, 581256}, {8, 6, -403947},
    {9, 6, -208737}, {10, 6, 739206}, {11, 6, -621837}, {12, 6, 185895}, {0, 7, -363}, {1, 7, 3459},
    {2, 7, -11187}, {3, 7, 3258}, {4, 7, 82404}, {5, 7, -297231}, {6, 7, 581256}, {7, 7, -699840},
    {8, 7, 269487}, {9, 7, 753057}, {10, 7, -1484973}, {11, 7, 1115370}, {12, 7, -314928},
    {0, 8, 414}, {1, 8, -3816}, {2, 8, 12096}, {3, 8, -4860}, {4, 8, -73664}, {5, 8, 247212},
    {6, 8, -403947}, {7, 8, 269487}, {8, 8, 501795}, {9, 8, -1774386}, {10, 8, 2410803},
    {11, 8, -1607445}, {12, 8, 426465}, {0, 9, -369}, {1, 9, 3447}, {2, 9, -12609}, {3, 9, 21199},
    {4, 9, -14580}, {5, 9, 29322}, {6, 9, -208737}, {7, 9, 753057}, {8, 9, -1774386},
    {9, 9, 2896317}, {10, 9, -3057426}, {11, 9, 1817397}, {12, 9, -452709}, {0, 10, 243},
    {1, 10, -2457}, {2, 10, 11638}, {3, 10, -37827}, {4, 10, 108864}, {5, 10, -302049},
    {6, 10, 739206}, {7, 10, -1484973}, {8, 10, 2410803}, {9, 10, -3057426}, {10, 10, 2755620},
    {11, 10, -1495908}, {12, 10, 354294}, {0, 11, -108}, {1, 11, 1235}, {2, 11, -7371},
    {3, 11, 31023}, {4, 11, -103032}, {5, 11, 280179}, {6, 11, -621837}, {7, 11, 1115370},
    {8, 11, -1607445}, {9, 11, 1817397}, {10, 11, -1495908}, {11, 11, 767637}, {12, 11, -177147},
    {0, 12, 26}, {1, 12, -324}, {2, 12, 2187}, {3, 12, -9963}, {4, 12, 33534}, {5, 12, -88209},
    {6, 12, 185895}, {7, 12, -314928}, {8, 12, 426465}, {9, 12, -452709}, {10, 12, 354294},
    {11, 12, -177147}, {12, 12, 40880},
};

}  // namespace

const std::vector<Equation>& builtin_equations() {
    static const std::vector<Equation> equations = {
        {2, Form::Flat, kLevel2},
        {3, Form::Flat, kLevel3},
        {5, Form::KroneckerFrame, kInner5},
        {7, Form::KroneckerFrame, kInner7},
        {11, Form::KroneckerFrame, kInner11},
        {13, Form::KroneckerFrame, kInner13},
    };
    return equations;
}

std::string checksum(const std::vector<Equation>& equations) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const std::string& s) {
        for (const unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& eq : equations) {
        feed(std::to_string(eq.level) + (eq.form == Form::Flat ? "F" : "K") + ":");
        for (const auto& t : eq.terms) {
            feed(std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.coeff) + ";");
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hauptmod::golden
