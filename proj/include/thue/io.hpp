#ifndef THUE_IO_HPP
#define THUE_IO_HPP

#include <iosfwd>
#include <string>

#include "thue/nullseq.hpp"
#include "thue/system.hpp"

namespace thue {

/// Text format:
///   # comment
///   alphabet: a b c
///   mode: thue|semi          (optional; inferred from the arrows)
///   null: abbcab             (optional)
///   abbc <-> bcab            (or LHS -> RHS in semi mode)
struct SystemFile {
  EquationSystem sys;            // carries the alphabet and the mode
  std::optional<Word> null_word;
};

SystemFile parse_system(std::istream& in);
SystemFile parse_system(const std::string& text);
SystemFile load_system(const std::string& path);

std::string serialize_system(const SystemFile& f);

/// Requires a `null:` entry.
NullSystem to_null_system(const SystemFile& f);

}  // namespace thue

#endif
