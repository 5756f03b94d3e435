#include "probid/symbol.hpp"

#include "probid/error.hpp"

namespace probid {

Word word_from_letters(const std::string& letters) {
  Word w;
  w.reserve(letters.size());
  for (char c : letters) {
    if (c < 'a' || c > 'z') {
      throw Error(ErrorKind::BadSymbol, std::string("letter out of range a..z: '") + c + "'");
    }
    w.push_back(static_cast<Symbol>(c - 'a' + 1));
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace probid
