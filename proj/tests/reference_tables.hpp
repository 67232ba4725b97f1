#pragma once

#include <cstdint>
#include <vector>

// Distance distributions, row n holds counts for k = 0, 1, ... (trailing
// zeros dropped). Index 0 is unused.
namespace tables {

using Row = std::vector<std::uint64_t>;

inline const std::vector<Row> kBlockTransposition{
    {},
    {1},
    {1, 1},
    {1, 4, 1},
    {1, 10, 12, 1},
    {1, 20, 68, 31},
    {1, 35, 259, 380, 45},
    {1, 56, 770, 2700, 1513},
    {1, 84, 1932, 13467, 22000, 2836},
    {1, 120, 4284, 52512, 191636, 114327},
    {1, 165, 8646, 170907, 1183457, 2010571, 255053},
    {1, 220, 16203, 484440, 5706464, 21171518, 12537954},
    {1, 286, 28600, 1231230, 22822293, 157499810, 265819779, 31599601},
};

inline const std::vector<int> kBlockTranspositionDiameter{0, 0, 1, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 8, 8, 9};

inline const std::vector<Row> kReversal{
    {},
    {1},
    {1, 1},
    {1, 3, 2},
    {1, 6, 15, 2},
    {1, 10, 52, 55, 2},
    {1, 15, 129, 389, 184, 2},
    {1, 21, 266, 1563, 2539, 648, 2},
    {1, 28, 487, 4642, 16445, 16604, 2111, 2},
    {1, 36, 820, 11407, 69863, 169034, 105365, 6352, 2},
    {1, 45, 1297, 24600, 228613, 1016341, 1686534, 654030, 17337, 2},
};

inline const std::vector<Row> kCutAndPaste{
    {},
    {1},
    {1, 1},
    {1, 5},
    {1, 15, 8},  // 15 distinct generators; a 16 here would not sum to 4! = 24
    {1, 34, 85},
    {1, 65, 511, 143},
    {1, 111, 2096, 2832},
    {1, 175, 6592, 29989, 3563},
    {1, 260, 17208, 206429, 138982},
    {1, 369, 39233, 1015876, 2487046, 86275},
};

}  // namespace tables
