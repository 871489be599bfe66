#include "singkit/io.hpp"

#include <fstream>
#include <sstream>

#include "singkit/parser.hpp"

namespace singkit {

namespace {

struct Line {
  std::size_t number;
  std::size_t offset;  // column of the first kept character, 0-based
  std::string text;
};

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    out.push_back({n, a, trim(raw)});
  }
  return out;
}

// "key: value" for the header keys; nullopt for other lines.
std::optional<std::pair<std::string, std::string>> header(const Line& l) {
  for (const char* key : {"vars", "order", "minpoly"}) {
    std::string k(key);
    if (l.text.compare(0, k.size(), k) != 0) continue;
    std::string rest = trim(l.text.substr(k.size()));
    if (rest.empty() || rest[0] != ':') continue;
    return std::make_pair(k, trim(rest.substr(1)));
  }
  return std::nullopt;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

TermOrder parse_order(const std::string& name, const Line& l) {
  if (name == "local") return TermOrder::local();
  if (name == "global") return TermOrder::global();
  if (name == "lex") return TermOrder::lex();
  throw SyntaxError(l.number, l.offset + 1, "unknown order '" + name + "'");
}

std::string order_keyword(const TermOrder& o) {
  if (o.is_block()) throw Error(Errc::InvalidArgument, "block orders have no file syntax");
  switch (o.kind()) {
    case OrderKind::NegDegRevLex: return "local";
    case OrderKind::DegRevLex: return "global";
    case OrderKind::Lex: return "lex";
  }
  return "local";
}

struct Header {
  std::vector<std::string> vars;
  bool have_vars = false;
  TermOrder order = TermOrder::local();
  Field field;
  std::size_t body = 0;  // index of the first non-header line
};

Header read_header(const std::vector<Line>& lines, bool allow_order) {
  Header h;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    auto kv = header(lines[i]);
    if (!kv) break;
    const Line& l = lines[i];
    if (kv->first == "vars") {
      h.vars = split_list(kv->second);
      for (const auto& v : h.vars)
        if (v.empty()) throw SyntaxError(l.number, l.offset + 1, "empty variable name");
      h.have_vars = true;
    } else if (kv->first == "order") {
      if (!allow_order) throw SyntaxError(l.number, l.offset + 1, "order is not part of a map file");
      h.order = parse_order(kv->second, l);
    } else {
      try {
        h.field = parse_field(kv->second);
      } catch (const SyntaxError& e) {
        throw SyntaxError(l.number, l.offset + 1 + e.column(), e.reason());
      }
    }
  }
  if (!h.have_vars) throw SyntaxError(lines.empty() ? 1 : lines.front().number, 1, "missing 'vars:' header");
  h.body = i;
  return h;
}

Poly parse_at(const Line& l, std::size_t start, const RingPtr& ring) {
  try {
    return parse_polynomial(l.text.substr(start), ring, l.number);
  } catch (const SyntaxError& e) {
    throw SyntaxError(l.number, l.offset + start + e.column(), e.reason());
  } catch (const Error& e) {
    if (e.code() == Errc::UnknownVariable) {
      std::string msg = e.message();
      std::size_t col = 1;
      auto at = msg.find("at column ");
      if (at != std::string::npos) {
        col = std::stoul(msg.substr(at + 10));
        msg = msg.substr(0, at > 0 ? at - 1 : 0);
      }
      throw SyntaxError(l.number, l.offset + start + col, msg);
    }
    throw;
  }
}

std::string field_line(const Field& F) {
  if (F.is_rational()) return "";
  // Field::to_string is "QQ[theta]/(m)"
  std::string s = F.to_string();
  auto a = s.find("/(");
  return "minpoly: " + s.substr(a + 2, s.size() - a - 3) + "\n";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ideal parse_ideal_text(const std::string& text) {
  auto lines = content_lines(text);
  Header h = read_header(lines, true);
  RingPtr R;
  try {
    R = make_ring(h.vars, h.order, h.field);
  } catch (const Error& e) {
    throw SyntaxError(lines.front().number, 1, e.message());
  }
  std::vector<Poly> gens;
  for (std::size_t i = h.body; i < lines.size(); ++i) {
    if (header(lines[i])) throw SyntaxError(lines[i].number, lines[i].offset + 1, "header after the generators");
    gens.push_back(parse_at(lines[i], 0, R));
  }
  return Ideal(R, std::move(gens));
}

Ideal load_ideal(const std::string& path) { return parse_ideal_text(read_file(path)); }

std::string format_ideal(const Ideal& I) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < I.ring->vars.size(); ++i) out += (i ? "," : "") + I.ring->vars[i];
  out += "\norder: " + order_keyword(I.ring->order) + "\n";
  out += field_line(I.ring->field);
  for (const auto& g : I.gens) out += to_string(g) + "\n";
  return out;
}

AlgebraMap parse_map_text(const std::string& text) {
  auto lines = content_lines(text);
  Header h = read_header(lines, false);
  RingPtr target = make_ring(h.vars, TermOrder::local(), h.field);
  std::vector<std::string> names;
  std::vector<Poly> images;
  for (std::size_t i = h.body; i < lines.size(); ++i) {
    const Line& l = lines[i];
    auto arrow = l.text.find("->");
    if (arrow == std::string::npos) throw SyntaxError(l.number, l.offset + 1, "expected 'name -> polynomial'");
    std::string name = trim(l.text.substr(0, arrow));
    if (name.empty()) throw SyntaxError(l.number, l.offset + 1, "missing source variable");
    names.push_back(name);
    images.push_back(parse_at(l, arrow + 2, target));
  }
  RingPtr source;
  try {
    source = make_ring(names, TermOrder::local(), h.field);
  } catch (const Error& e) {
    throw SyntaxError(lines.back().number, 1, e.message());
  }
  return AlgebraMap{source, target, std::move(images)};
}

AlgebraMap load_map(const std::string& path) { return parse_map_text(read_file(path)); }

std::string format_map(const AlgebraMap& map) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < map.target->vars.size(); ++i) out += (i ? "," : "") + map.target->vars[i];
  out += "\n" + field_line(map.target->field);
  for (std::size_t i = 0; i < map.images.size(); ++i)
    out += map.source->vars[i] + " -> " + to_string(map.images[i]) + "\n";
  return out;
}

AlgebraMap align_map(const AlgebraMap& map, const RingPtr& source) {
  AlgebraMap out{source, map.target, {}};
  for (const auto& v : source->vars) {
    auto k = map.source->index_of(v);
    if (!k) throw Error(Errc::InvalidArgument, "map has no image for " + v);
    out.images.push_back(map.images[*k]);
  }
  if (map.images.size() != source->nvars()) throw Error(Errc::InvalidArgument, "map names variables outside the source");
  return out;
}

std::map<std::string, std::vector<std::string>> parse_shape_text(const std::string& text) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& l : content_lines(text)) {
    auto colon = l.text.find(':');
    if (colon == std::string::npos) throw SyntaxError(l.number, l.offset + 1, "expected 'name: monomial, ...'");
    std::string name = trim(l.text.substr(0, colon));
    if (name.empty()) throw SyntaxError(l.number, l.offset + 1, "missing source variable");
    auto& list = out[name];
    for (auto& m : split_list(l.text.substr(colon + 1)))
      if (!m.empty()) list.push_back(m);
  }
  return out;
}

std::map<std::string, std::vector<std::string>> load_shape(const std::string& path) {
  return parse_shape_text(read_file(path));
}

}  // namespace singkit
