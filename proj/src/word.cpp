#include "thue/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace thue {

Alphabet::Alphabet(std::vector<std::string> symbols) : names_(std::move(symbols)) {
  if (names_.empty()) throw input_error("alphabet must contain at least one symbol");
  if (names_.size() > 255) throw input_error("alphabet holds at most 255 symbols");
  for (const auto& n : names_) {
    if (n.empty()) throw input_error("empty symbol name");
    for (char ch : n)
      if (std::isspace(static_cast<unsigned char>(ch)))
        throw input_error("symbol name contains whitespace: '" + n + "'");
  }
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw input_error("duplicate symbol name in alphabet");
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= names_.size()) throw input_error("symbol index out of range");
  return names_[s];
}

bool Alphabet::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Symbol Alphabet::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw input_error("unknown symbol '" + name + "'");
  return static_cast<Symbol>(it - names_.begin());
}

bool Alphabet::single_char() const {
  return std::all_of(names_.begin(), names_.end(),
                     [](const std::string& n) { return n.size() == 1; });
}

Word Alphabet::parse(const std::string& literal) const {
  Word out;
  std::istringstream in(literal);
  std::string tok;
  const bool compact = single_char();
  while (in >> tok) {
    if (has(tok)) {
      out.push_back(index(tok));
    } else if (compact) {
      for (char ch : tok) out.push_back(index(std::string(1, ch)));
    } else {
      throw input_error("unknown symbol '" + tok + "' in word literal");
    }
  }
  return out;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  const bool compact = single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word repeat(const Word& w, std::size_t n) {
  Word r;
  r.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

}  // namespace thue
