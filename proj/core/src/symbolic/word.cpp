#include "covlab/symbolic/word.hpp"

#include "covlab/errors.hpp"

namespace covlab {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string format_word(std::span<const Symbol> w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(kDigits.at(s));
  return out;
}

Word parse_word(std::string_view text, int alphabet) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    const int v = digit_value(c);
    if (v < 0 || v >= alphabet) {
      throw InputError("symbol '" + std::string(1, c) + "' out of range for alphabet of size " +
                       std::to_string(alphabet));
    }
    w.push_back(static_cast<Symbol>(v));
  }
  return w;
}

}  // namespace covlab
