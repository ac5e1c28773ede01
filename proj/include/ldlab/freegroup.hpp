#pragma once

#include <string>
#include <vector>

namespace ldlab {

// Word in the free group on generators 1..m: letter g > 0 is x_g, g < 0 its inverse.
using FreeWord = std::vector<int>;

FreeWord free_reduce(FreeWord w);
FreeWord free_mul(const FreeWord& u, const FreeWord& v);
FreeWord free_inverse(const FreeWord& w);
inline FreeWord free_gen(int g) { return FreeWord{g}; }
// x y x^-1
FreeWord free_conj(const FreeWord& x, const FreeWord& y);
// x^-1 y x
FreeWord free_conj_inv(const FreeWord& x, const FreeWord& y);

// Generator g as the g-th lowercase letter, inverses uppercase; "1" for the
// empty word. Generators beyond 26 render as "x27" / "X27".
std::string generator_name(int g);
std::string render_free(const FreeWord& w);

}  // namespace ldlab
