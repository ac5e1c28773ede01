#pragma once

#include <array>
#include <string_view>

// psi_{q,3} for q = 1..7 as printed; row x, column y.
inline constexpr std::array<std::array<std::string_view, 8>, 7> kPrintedPsi3 = {{
    {{"10000000", "10000000", "10000000", "10000000", "10000000", "10000000", "10000000", "00000000"}},
    {{"01000000", "11001000", "11001000", "01000000", "11001000", "11001000", "11001000", "00000000"}},
    {{"10101000", "00100000", "10101000", "00100000", "10101000", "10101000", "10101000", "00000000"}},
    {{"00010000", "00010000", "01010100", "00010000", "01010100", "01010100", "11111110", "00000000"}},
    {{"10001000", "10001000", "10001000", "00000000", "10001000", "10001000", "10001000", "00000000"}},
    {{"01000100", "01000100", "11101110", "00000000", "01000100", "01000100", "11101110", "00000000"}},
    {{"10101010", "00000000", "10101010", "00000000", "10101010", "00000000", "10101010", "00000000"}},
}};
