#include "permutree/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace permutree {

Word::Word(int n, std::vector<int> letters) : degree_(n), letters_(std::move(letters)) {
  if (n < 1)
    throw std::invalid_argument("degree must be at least 1");
  for (int l : letters_)
    if (l < 1 || l > n - 1)
      throw std::invalid_argument("letter s" + std::to_string(l) + " out of range for degree " +
                                  std::to_string(n));
}

Word Word::parse(int n, std::string_view text) {
  std::vector<int> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty())
      return;
    letters.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
    } else if (ch == ',' || ch == ' ' || ch == '\t') {
      flush();
    } else if (ch == 's' && token.empty()) {
      continue;
    } else {
      throw std::invalid_argument("unexpected character in word: '" + std::string(1, ch) + "'");
    }
  }
  flush();
  return Word(n, std::move(letters));
}

void Word::push_back(int letter) {
  if (letter < 1 || letter > degree_ - 1)
    throw std::invalid_argument("letter s" + std::to_string(letter) + " out of range");
  letters_.push_back(letter);
}

Word Word::appended(int letter) const {
  Word w = *this;
  w.push_back(letter);
  return w;
}

Word Word::prefix(std::size_t k) const {
  Word w(degree_);
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty())
    return "ε";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0)
      out += "·";
    out += "s" + std::to_string(letters_[i]);
  }
  return out;
}

std::string Word::to_list() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0)
      out += ",";
    out += std::to_string(letters_[i]);
  }
  return out;
}

Permutation evaluate(const Word& w) {
  Permutation pi = Permutation::identity(w.degree());
  for (int l : w)
    pi = pi.right_multiplied(l);
  return pi;
}

bool is_reduced(const Word& w) {
  return static_cast<int>(w.size()) == evaluate(w).length();
}

std::vector<Word> all_reduced_words(const Permutation& pi) {
  std::vector<Word> out;
  for_each_reduced_word(pi, [&](const Word& w) { out.push_back(w); });
  return out;
}

} // namespace permutree
