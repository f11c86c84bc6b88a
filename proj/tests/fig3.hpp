#pragma once

// Multiplicities of V_{w_6}(Lambda_0) as printed in the published figures,
// transcribed cell by cell: the plain layout in (a - b, a) and the stretched
// layout in ((a - b)^2, a).

#include <array>
#include <cstdint>

namespace fig3 {

struct Cell {
  std::int64_t diff;  // a - b
  std::int64_t a;
  int mult;
};

inline constexpr std::array<Cell, 42> cells{{
    {0, 0, 1},
    {-1, 1, 1}, {0, 1, 1}, {1, 1, 1},
    {-1, 2, 1}, {0, 2, 2}, {1, 2, 1},
    {-1, 3, 2}, {0, 3, 3}, {1, 3, 2},
    {-2, 4, 1}, {-1, 4, 2}, {0, 4, 3}, {1, 4, 2}, {2, 4, 1},
    {-2, 5, 1}, {-1, 5, 3}, {0, 5, 3}, {1, 5, 3}, {2, 5, 1},
    {-2, 6, 1}, {-1, 6, 2}, {0, 6, 3}, {1, 6, 2}, {2, 6, 1},
    {-2, 7, 1}, {-1, 7, 2}, {0, 7, 2}, {1, 7, 2}, {2, 7, 1},
    {-2, 8, 1}, {-1, 8, 1}, {0, 8, 1}, {1, 8, 1}, {2, 8, 1},
    {-3, 9, 1}, {-2, 9, 1}, {-1, 9, 1}, {0, 9, 1}, {1, 9, 1}, {2, 9, 1}, {3, 9, 1},
}};

struct StretchedCell {
  std::int64_t diff_sq;  // (a - b)^2
  std::int64_t a;
  int mult;
};

inline constexpr std::array<StretchedCell, 26> stretched{{
    {0, 0, 1},
    {0, 1, 1}, {1, 1, 2},
    {0, 2, 2}, {1, 2, 2},
    {0, 3, 3}, {1, 3, 4},
    {0, 4, 3}, {1, 4, 4}, {4, 4, 2},
    {0, 5, 3}, {1, 5, 6}, {4, 5, 2},
    {0, 6, 3}, {1, 6, 4}, {4, 6, 2},
    {0, 7, 2}, {1, 7, 4}, {4, 7, 2},
    {0, 8, 1}, {1, 8, 2}, {4, 8, 2},
    {0, 9, 1}, {1, 9, 2}, {4, 9, 2}, {9, 9, 2},
}};

}  // namespace fig3
