#ifndef THUE_WORD_HPP
#define THUE_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thue {

/// Index of a symbol in an Alphabet. Alphabets hold at most 255 symbols.
using Symbol = std::uint8_t;

/// A word is a sequence of symbol indices. Identity (Thue's ≡) is
/// element-wise equality, i.e. operator== on the vector.
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const;
  const std::vector<std::string>& names() const { return names_; }
  bool has(const std::string& name) const;
  Symbol index(const std::string& name) const;

  /// True when every symbol name is a single character, enabling the
  /// compact word-literal form ("abbcab").
  bool single_char() const;

  /// Parses a word literal: whitespace-separated symbol names, or (for
  /// single-character alphabets) runs of symbol characters.
  Word parse(const std::string& literal) const;

  /// Inverse of parse: compact form for single-character alphabets,
  /// space-separated otherwise.
  std::string format(const Word& w) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Word slice(const Word& w, std::size_t begin, std::size_t end) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(begin),
              w.begin() + static_cast<std::ptrdiff_t>(end));
}

Word repeat(const Word& w, std::size_t n);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);

/// Thrown on contract violations (rejected inputs).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace thue

#endif
