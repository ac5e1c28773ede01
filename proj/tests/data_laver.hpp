#pragma once

#include <array>
#include <string_view>
#include <vector>

// Rows of A_0..A_4 as printed, one CSV line per row.
inline const std::array<std::vector<std::string_view>, 5> kPrintedLaver = {{
    {"1"},
    {"2,2", "1,2"},
    {"2,4,2,4", "3,4,3,4", "4,4,4,4", "1,2,3,4"},
    {"2,4,6,8,2,4,6,8", "3,4,7,8,3,4,7,8", "4,8,4,8,4,8,4,8", "5,6,7,8,5,6,7,8", "6,8,6,8,6,8,6,8", "7,8,7,8,7,8,7,8", "8,8,8,8,8,8,8,8", "1,2,3,4,5,6,7,8"},
    {"2,12,14,16,2,12,14,16,2,12,14,16,2,12,14,16", "3,12,15,16,3,12,15,16,3,12,15,16,3,12,15,16", "4,8,12,16,4,8,12,16,4,8,12,16,4,8,12,16", "5,6,7,8,13,14,15,16,5,6,7,8,13,14,15,16", "6,8,14,16,6,8,14,16,6,8,14,16,6,8,14,16", "7,8,15,16,7,8,15,16,7,8,15,16,7,8,15,16", "8,16,8,16,8,16,8,16,8,16,8,16,8,16,8,16", "9,10,11,12,13,14,15,16,9,10,11,12,13,14,15,16", "10,12,14,16,10,12,14,16,10,12,14,16,10,12,14,16", "11,12,15,16,11,12,15,16,11,12,15,16,11,12,15,16", "12,16,12,16,12,16,12,16,12,16,12,16,12,16,12,16", "13,14,15,16,13,14,15,16,13,14,15,16,13,14,15,16", "14,16,14,16,14,16,14,16,14,16,14,16,14,16,14,16", "15,16,15,16,15,16,15,16,15,16,15,16,15,16,15,16", "16,16,16,16,16,16,16,16,16,16,16,16,16,16,16,16", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16"},
}};
