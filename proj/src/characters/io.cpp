#include "diracforge/characters/io.hpp"

#include "diracforge/errors.hpp"
#include "diracforge/lie/pair.hpp"

#include <fstream>
#include <sstream>

namespace diracforge::characters {

namespace {

std::vector<std::string> splitWords(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void bad(const std::string& source, size_t line, const std::string& what) {
  fail(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Weight parseWeight(std::string_view text) {
  Weight w;
  std::string s(text);
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) w.push_back(parseRational(tok));
  if (w.empty()) fail(ErrorKind::ParseError, "empty weight '" + std::string(text) + "'");
  return w;
}

std::string formatWeight(const Weight& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + str(w[i]);
  return out;
}

std::string formatCharacter(const FormalCharacter& chi) {
  std::string out = chi.system->label() + " " + std::string(basisName(chi.basis)) + "\n";
  for (const auto& [w, m] : chi.entries) out += formatWeight(w) + " " + std::to_string(m) + "\n";
  return out;
}

std::string formatSeries(const ConeSeries& sigma) {
  std::string out = sigma.system->label() + " " + std::string(basisName(sigma.basis));
  out += " polarizer=" + formatWeight(sigma.polarizer);
  out += " offset=" + (sigma.offset ? str(*sigma.offset) : std::string("none"));
  out += " window=" + str(sigma.window);
  if (sigma.floor) out += " floor=" + str(*sigma.floor);
  out += "\n";
  for (const auto& [w, m] : sigma.entries) out += formatWeight(w) + " " + std::to_string(m) + "\n";
  return out;
}

std::variant<FormalCharacter, ConeSeries> parseCharacterText(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineNo = 0;
  bool haveHeader = false, isSeries = false;
  FormalCharacter chi;
  ConeSeries sigma;
  bool sawWindow = false, sawPolarizer = false;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto words = splitWords(line);
    if (words.empty()) continue;
    if (!haveHeader) {
      haveHeader = true;
      if (words.size() < 2) bad(source, lineNo, "header needs a root-system label and a basis flag");
      RootSystemPtr rs;
      try {
        rs = lie::resolveSystem(words[0]);
      } catch (const Error& e) {
        bad(source, lineNo, "field label: " + std::string(e.what()));
      }
      Basis basis;
      if (words[1] == "weight-basis") basis = Basis::Weight;
      else if (words[1] == "irreducible-basis") basis = Basis::Irreducible;
      else bad(source, lineNo, "field basis: expected weight-basis or irreducible-basis, got '" + words[1] + "'");
      chi = FormalCharacter(rs, basis);
      sigma.system = rs;
      sigma.basis = basis;
      for (size_t k = 2; k < words.size(); ++k) {
        auto eq = words[k].find('=');
        if (eq == std::string::npos) bad(source, lineNo, "header field '" + words[k] + "' is not key=value");
        std::string key = words[k].substr(0, eq), value = words[k].substr(eq + 1);
        isSeries = true;
        try {
          if (key == "polarizer") {
            sigma.polarizer = parseWeight(value);
            rs->check(sigma.polarizer);
            sawPolarizer = true;
          } else if (key == "offset") {
            if (value != "none") sigma.offset = parseRational(value);
          } else if (key == "window") {
            sigma.window = parseRational(value);
            sawWindow = true;
          } else if (key == "floor") {
            sigma.floor = parseRational(value);
          } else {
            bad(source, lineNo, "unknown header field '" + key + "'");
          }
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::ParseError && std::string(e.what()).rfind(source, 0) == 0) throw;
          bad(source, lineNo, "field " + key + ": " + e.what());
        }
      }
      if (isSeries && !(sawPolarizer && sawWindow)) bad(source, lineNo, "cone series header needs polarizer and window");
      continue;
    }
    if (words.size() != 2) bad(source, lineNo, "expected '<coords> <multiplicity>'");
    Weight w;
    long m = 0;
    try {
      w = parseWeight(words[0]);
      chi.system->check(w);
    } catch (const Error& e) {
      bad(source, lineNo, "field weight: " + std::string(e.what()));
    }
    try {
      m = toLong(parseRational(words[1]));
    } catch (const Error& e) {
      bad(source, lineNo, "field multiplicity: " + std::string(e.what()));
    }
    if (isSeries) sigma.add(w, m);
    else chi.add(w, m);
  }
  if (!haveHeader) fail(ErrorKind::ParseError, source + ": missing header line");
  if (isSeries) {
    try {
      sigma.validate();
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, source + ": " + e.what());
    }
    return sigma;
  }
  return chi;
}

std::variant<FormalCharacter, ConeSeries> readCharacterFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseCharacterText(buf.str(), path);
}

FormalCharacter readFormalCharacter(const std::string& path) {
  auto v = readCharacterFile(path);
  if (auto* chi = std::get_if<FormalCharacter>(&v)) return *chi;
  fail(ErrorKind::ParseError, path + ": expected a finite character, found a cone series header");
}

ConeSeries readConeSeries(const std::string& path) {
  auto v = readCharacterFile(path);
  if (auto* s = std::get_if<ConeSeries>(&v)) return *s;
  fail(ErrorKind::ParseError, path + ": expected a cone series header with polarizer and window");
}

}  // namespace diracforge::characters
