#include "qsphere/calculus.hpp"

#include <array>

namespace qsphere {

std::string word_string(Word w) {
  std::string out;
  auto put = [&](Word letter, const char* name) {
    if (!(w & letter)) return;
    if (!out.empty()) out += '*';
    out += name;
  };
  put(kPlus, "ep");
  put(kMinus, "em");
  put(kZero, "e0");
  return out;
}

namespace {

// s-exponent picked up when letter y (left) is swapped past letter x (right), x < y.
int swap_exponent(Word y, Word x) {
  if (y == kMinus && x == kPlus) return 4;
  if (y == kZero && x == kPlus) return 8;
  return -8;  // e0 past e-
}

}  // namespace

WordProduct wedge_words(Word x, Word y) {
  WordProduct p;
  if (x & y) return p;
  p.zero = false;
  p.w = x | y;
  std::array<Word, 3> letters{};
  std::size_t n = 0;
  for (Word part : {x, y})
    for (Word letter : {kPlus, kMinus, kZero})
      if (part & letter) letters[n++] = letter;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (letters[i] > letters[i + 1]) {
        p.sign = -p.sign;
        p.s_exp += swap_exponent(letters[i], letters[i + 1]);
        std::swap(letters[i], letters[i + 1]);
      }
    }
  }
  return p;
}

}  // namespace qsphere
