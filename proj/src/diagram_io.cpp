#include "adm/diagram_io.hpp"

#include <fstream>
#include <sstream>

namespace adm {

std::string print_diagram(const AffineDiagram& d) {
  std::ostringstream os;
  os << "diagram s=" << d.bottom_arity() << " t=" << d.top_arity() << " loops=" << d.loops()
     << "\n";
  for (auto& b : d.blocks()) {
    if (b.wrapping())
      os << "wrap k=" << b.period;
    else
      os << "block";
    for (auto& v : b.verts) {
      os << " " << (v.side == 0 ? 'b' : 't') << v.pos;
      if (v.copy > 0) os << "+" << v.copy;
      if (v.copy < 0) os << "-" << -v.copy;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

Vertex parse_vertex(const std::string& tok, int line) {
  if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 't'))
    throw ParseError(line, "bad vertex token '" + tok + "'");
  Vertex v{tok[0] == 'b' ? (int8_t)0 : (int8_t)1, 0, 0};
  size_t i = 1;
  size_t sign = tok.find_first_of("+-", 1);
  try {
    v.pos = std::stoi(tok.substr(i, sign == std::string::npos ? std::string::npos : sign - i));
    if (sign != std::string::npos) v.copy = std::stoi(tok.substr(sign));
  } catch (const std::exception&) {
    throw ParseError(line, "bad vertex token '" + tok + "'");
  }
  return v;
}

}  // namespace

AffineDiagram parse_diagram(const std::string& text) {
  std::istringstream is(text);
  std::string rawline;
  int lineno = 0;
  bool haveHeader = false;
  int32_t s = 0, t = 0;
  int64_t loops = 0;
  std::vector<Block> blocks;
  while (std::getline(is, rawline)) {
    ++lineno;
    auto hash = rawline.find('#');
    std::string line = hash == std::string::npos ? rawline : rawline.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "diagram") {
      if (haveHeader) throw ParseError(lineno, "duplicate header");
      std::string kv;
      while (ls >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "bad header field '" + kv + "'");
        std::string k = kv.substr(0, eq);
        long v = 0;
        try {
          v = std::stol(kv.substr(eq + 1));
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad header value '" + kv + "'");
        }
        if (k == "s") s = (int32_t)v;
        else if (k == "t") t = (int32_t)v;
        else if (k == "loops") loops = v;
        else throw ParseError(lineno, "unknown header field '" + k + "'");
      }
      haveHeader = true;
    } else if (word == "block" || word == "wrap") {
      if (!haveHeader) throw ParseError(lineno, "block before header");
      Block b;
      std::string tok;
      if (word == "wrap") {
        if (!(ls >> tok) || tok.rfind("k=", 0) != 0) throw ParseError(lineno, "wrap needs k=<int>");
        try {
          b.period = std::stoi(tok.substr(2));
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad wrap period");
        }
      }
      while (ls >> tok) b.verts.push_back(parse_vertex(tok, lineno));
      if (b.verts.empty()) throw ParseError(lineno, "empty block");
      blocks.push_back(std::move(b));
    } else {
      throw ParseError(lineno, "unknown directive '" + word + "'");
    }
  }
  if (!haveHeader) throw ParseError(lineno, "missing 'diagram' header");
  try {
    return canonicalize(s, t, loops, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

AffineDiagram read_diagram_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

void write_diagram_file(const std::string& path, const AffineDiagram& d) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << print_diagram(d);
}

}  // namespace adm
