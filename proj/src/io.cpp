#include "thue/io.hpp"

#include <fstream>
#include <sstream>

namespace thue {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

SystemFile parse_system(std::istream& in) {
  SystemFile f;
  bool have_alphabet = false;
  std::optional<Mode> declared_mode;
  std::optional<std::string> pending_null;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw input_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("alphabet:", 0) == 0) {
      if (have_alphabet) fail("duplicate alphabet line");
      std::istringstream ss(line.substr(9));
      std::vector<std::string> names;
      std::string tok;
      while (ss >> tok) names.push_back(tok);
      f.sys.alphabet = Alphabet(names);
      have_alphabet = true;
      continue;
    }
    if (!have_alphabet) fail("alphabet line must come first");
    if (line.rfind("mode:", 0) == 0) {
      std::string m = trim(line.substr(5));
      if (m == "thue")
        declared_mode = Mode::bidirectional;
      else if (m == "semi")
        declared_mode = Mode::forward_only;
      else
        fail("mode must be 'thue' or 'semi'");
      continue;
    }
    if (line.rfind("null:", 0) == 0) {
      pending_null = trim(line.substr(5));
      continue;
    }
    bool bidi = true;
    auto arrow = line.find("<->");
    std::size_t arrow_len = 3;
    if (arrow == std::string::npos) {
      arrow = line.find("->");
      arrow_len = 2;
      bidi = false;
    }
    if (arrow == std::string::npos) fail("expected an equation with '<->' or '->'");
    Mode line_mode = bidi ? Mode::bidirectional : Mode::forward_only;
    if (declared_mode && *declared_mode != line_mode)
      fail("arrow disagrees with the declared mode");
    if (!declared_mode && !f.sys.equations.empty() && f.sys.mode != line_mode)
      fail("mixed arrow styles");
    f.sys.mode = line_mode;
    Word lhs = f.sys.alphabet.parse(line.substr(0, arrow));
    Word rhs = f.sys.alphabet.parse(line.substr(arrow + arrow_len));
    if (lhs.empty() || rhs.empty()) fail("equation side is empty");
    f.sys.equations.push_back({lhs, rhs});
  }
  if (!have_alphabet) throw input_error("missing alphabet line");
  if (declared_mode) f.sys.mode = *declared_mode;
  if (pending_null) {
    Word w = f.sys.alphabet.parse(*pending_null);
    if (w.empty()) throw input_error("null word is empty");
    f.null_word = w;
  }
  f.sys.validate();
  return f;
}

SystemFile parse_system(const std::string& text) {
  std::istringstream ss(text);
  return parse_system(ss);
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open system file: " + path);
  return parse_system(in);
}

std::string serialize_system(const SystemFile& f) {
  std::ostringstream os;
  os << "alphabet:";
  for (const auto& n : f.sys.alphabet.names()) os << ' ' << n;
  os << '\n';
  if (f.sys.mode == Mode::forward_only) os << "mode: semi\n";
  if (f.null_word) os << "null: " << f.sys.alphabet.format(*f.null_word) << '\n';
  const char* arrow = f.sys.mode == Mode::forward_only ? " -> " : " <-> ";
  for (const auto& eq : f.sys.equations)
    os << f.sys.alphabet.format(eq.lhs) << arrow << f.sys.alphabet.format(eq.rhs) << '\n';
  return os.str();
}

NullSystem to_null_system(const SystemFile& f) {
  if (!f.null_word) throw input_error("system file has no null word");
  NullSystem ns{f.sys.alphabet, *f.null_word, f.sys};
  ns.validate();
  return ns;
}

}  // namespace thue
