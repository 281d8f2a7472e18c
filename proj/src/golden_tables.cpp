#include "golden_tables.hpp"

namespace cdp::goldens {

namespace {

// Letter grids of the two reference displays: '.' structural zero, 'a'..'d'
// the block letter.  Column index within the letter is implied by the dense
// coordinate, so only the letters are recorded.
constexpr const char* kC4Rows[16] = {
    "a....a....a....a",  //
    ".b....b....bb...",  //
    "..c....cc....c..",  //
    "...dd....d....d.",  //
    "...dd....d....d.",  //
    "a....a....a....a",  //
    ".b....b....bb...",  //
    "..c....cc....c..",  //
    "..c....cc....c..",  //
    "...dd....d....d.",  //
    "a....a....a....a",  //
    ".b....b....bb...",  //
    ".b....b....bb...",  //
    "..c....cc....c..",  //
    "...dd....d....d.",  //
    "a....a....a....a",
};

constexpr const char* kV4Rows[16] = {
    "a....a....a....a",  //
    ".b..b......b..b.",  //
    "..c....cc....c..",  //
    "...d..d..d..d...",  //
    ".b..b......b..b.",  //
    "a....a....a....a",  //
    "...d..d..d..d...",  //
    "..c....cc....c..",  //
    "..c....cc....c..",  //
    "...d..d..d..d...",  //
    "a....a....a....a",  //
    ".b..b......b..b.",  //
    "...d..d..d..d...",  //
    "..c....cc....c..",  //
    ".b..b......b..b.",  //
    "a....a....a....a",
};

std::array<std::array<int, 16>, 16> from_letters(const char* const rows[16]) {
    std::array<std::array<int, 16>, 16> out{};
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            const char ch = rows[r][c];
            out[r][c] = (ch == '.') ? -1 : ch - 'a';
        }
    return out;
}

}  // namespace

std::array<std::array<int, 16>, 16> pattern_c4() { return from_letters(kC4Rows); }

std::array<std::array<int, 16>, 16> pattern_v4() { return from_letters(kV4Rows); }

std::array<std::array<int, 16>, 16> breuer_hall_table() {
    return {{
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    }};
}

}  // namespace cdp::goldens
