#include "ldlab/freegroup.hpp"

#include <algorithm>
#include <cctype>

namespace ldlab {

FreeWord free_reduce(FreeWord w) {
  FreeWord out;
  out.reserve(w.size());
  for (int g : w) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

FreeWord free_mul(const FreeWord& u, const FreeWord& v) {
  FreeWord w = u;
  w.insert(w.end(), v.begin(), v.end());
  return free_reduce(std::move(w));
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

FreeWord free_conj(const FreeWord& x, const FreeWord& y) {
  return free_mul(free_mul(x, y), free_inverse(x));
}

FreeWord free_conj_inv(const FreeWord& x, const FreeWord& y) {
  return free_mul(free_mul(free_inverse(x), y), x);
}

std::string generator_name(int g) {
  const int a = g < 0 ? -g : g;
  std::string s;
  if (a <= 26)
    s = std::string(1, static_cast<char>('a' + a - 1));
  else
    s = "x" + std::to_string(a);
  if (g < 0) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string render_free(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int g : w) s += generator_name(g);
  return s;
}

}  // namespace ldlab
