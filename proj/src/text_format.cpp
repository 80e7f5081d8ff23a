#include "cosetal/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cosetal {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

struct Stanza {
  std::string source;
  Line header;
  std::vector<Line> body;
};

bool is_header(const std::string& word) {
  return word == "monoid" || word == "group" || word == "hom" || word == "extension" ||
         word == "partition" || word == "action" || word == "factorset";
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + msg, {line});
}

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string word; in >> word;) out.push_back(word);
  return out;
}

std::vector<Stanza> split_stanzas(std::string_view text, const std::string& source) {
  std::vector<Stanza> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    Line line{number, split(raw)};
    if (line.tokens.empty() || line.tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (is_header(line.tokens.front())) {
      out.push_back(Stanza{source, std::move(line), {}});
    } else if (out.empty()) {
      parse_error(source, number, "expected a stanza header, got '" + line.tokens.front() + "'");
    } else {
      out.back().body.push_back(std::move(line));
    }
    if (end == text.size()) break;
  }
  return out;
}

Index to_index(const std::string& token, const std::string& source, std::size_t line) {
  Index value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    parse_error(source, line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

std::vector<Index> integers(const Line& line, std::size_t from, const std::string& source) {
  std::vector<Index> out;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    out.push_back(to_index(line.tokens[i], source, line.number));
  }
  return out;
}

void expect_header_arity(const Stanza& s, std::size_t arity, const char* usage) {
  if (s.header.tokens.size() != arity) {
    parse_error(s.source, s.header.number, std::string("expected '") + usage + "'");
  }
}

// Rows of integers, each line one row of the given width.
std::vector<Index> read_rows(const Stanza& s, std::size_t rows, std::size_t width) {
  if (s.body.size() != rows) {
    const std::size_t at = s.body.empty() ? s.header.number : s.body.back().number;
    parse_error(s.source, at, "expected " + std::to_string(rows) + " rows, got " +
                                  std::to_string(s.body.size()));
  }
  std::vector<Index> out;
  for (const Line& line : s.body) {
    if (line.tokens.size() != width) {
      parse_error(s.source, line.number, "expected " + std::to_string(width) + " entries, got " +
                                             std::to_string(line.tokens.size()));
    }
    for (Index v : integers(line, 0, s.source)) out.push_back(v);
  }
  return out;
}

template <class Map>
void insert_unique(Map& map, const std::string& name, typename Map::mapped_type value,
                   const Stanza& s) {
  if (!map.emplace(name, std::move(value)).second) {
    throw Error(ErrorCode::DuplicateName, s.source + ":" + std::to_string(s.header.number) +
                                              ": '" + name + "' is already defined");
  }
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const char* kind) {
  auto it = map.find(name);
  if (it == map.end()) throw Error(ErrorCode::UnknownName, std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

// Prefixes validation errors with the stanza location, keeping the code.
template <class F>
auto at_stanza(const Stanza& s, F&& f) {
  try {
    return f();
  } catch (const Error& err) {
    if (err.code() == ErrorCode::ParseError) throw;
    throw Error(err.code(), s.source + ":" + std::to_string(s.header.number) + ": " + err.what(),
                std::vector<Index>(err.witness().begin(), err.witness().end()));
  }
}

std::string join(std::span<const Index> values) {
  std::string out;
  for (Index i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

const FiniteMonoid& Workspace::monoid(const std::string& name) const {
  return lookup(monoids_, name, "monoid");
}

FiniteAbelianGroup Workspace::group(const std::string& name) const {
  return validate_abelian_group(monoid(name));
}

const Workspace::HomEntry& Workspace::hom(const std::string& name) const {
  return lookup(homs_, name, "hom");
}

const Workspace::ExtensionEntry& Workspace::extension(const std::string& name) const {
  return lookup(extensions_, name, "extension");
}

const PairPartition& Workspace::partition(const std::string& name) const {
  return lookup(partitions_, name, "partition");
}

const ActionTable& Workspace::action(const std::string& name) const {
  return lookup(actions_, name, "action");
}

const FactorTable& Workspace::factor_set(const std::string& name) const {
  return lookup(factor_sets_, name, "factorset");
}

KernelDiagram Workspace::kernel_diagram(const std::string& name) const {
  const ExtensionEntry& x = extension(name);
  return validate_kernel_diagram(group(x.kernel), monoid(x.total), monoid(x.quotient), hom(x.k).hom,
                                 hom(x.e).hom);
}

ExtensionDiagram Workspace::extension_diagram(const std::string& name) const {
  const ExtensionEntry& x = extension(name);
  return validate_extension(group(x.kernel), monoid(x.total), monoid(x.quotient), hom(x.k).hom,
                            hom(x.e).hom);
}

Workspace parse_workspace(const std::vector<std::pair<std::string, std::string>>& sources) {
  std::vector<Stanza> stanzas;
  for (const auto& [source, text] : sources) {
    for (Stanza& s : split_stanzas(text, source)) stanzas.push_back(std::move(s));
  }
  Workspace ws;

  for (const Stanza& s : stanzas) {
    const std::string& kind = s.header.tokens[0];
    if (kind != "monoid" && kind != "group") continue;
    expect_header_arity(s, 4, "monoid <name> <size> <identity>");
    const Index size = to_index(s.header.tokens[2], s.source, s.header.number);
    const Index identity = to_index(s.header.tokens[3], s.source, s.header.number);
    if (size == 0) parse_error(s.source, s.header.number, "size must be positive");
    const std::vector<Index> table = read_rows(s, size, size);
    FiniteMonoid m = at_stanza(s, [&] {
      FiniteMonoid out = validate_monoid(size, table, identity);
      if (kind == "group") validate_abelian_group(out);
      return out;
    });
    insert_unique(ws.monoids_, s.header.tokens[1], std::move(m), s);
  }

  for (const Stanza& s : stanzas) {
    const std::string& kind = s.header.tokens[0];
    const std::size_t line = s.header.number;
    if (kind == "hom") {
      expect_header_arity(s, 4, "hom <name> <domain> <codomain>");
      auto entry = at_stanza(s, [&] {
        const FiniteMonoid& dom = ws.monoid(s.header.tokens[2]);
        const FiniteMonoid& cod = ws.monoid(s.header.tokens[3]);
        return Workspace::HomEntry{s.header.tokens[2], s.header.tokens[3],
                                   validate_hom(read_rows(s, 1, dom.size()), dom, cod)};
      });
      insert_unique(ws.homs_, s.header.tokens[1], std::move(entry), s);
    } else if (kind == "partition") {
      expect_header_arity(s, 4, "partition <name> <N-size> <H-size>");
      const Index n = to_index(s.header.tokens[2], s.source, line);
      const Index h = to_index(s.header.tokens[3], s.source, line);
      if (n == 0 || h == 0) parse_error(s.source, line, "sizes must be positive");
      const std::vector<Index> labels = read_rows(s, 1, n * h);
      insert_unique(ws.partitions_, s.header.tokens[1], PairPartition(n, h, labels), s);
    } else if (kind == "action" || kind == "factorset") {
      expect_header_arity(s, 2, kind == "action" ? "action <name>" : "factorset <name>");
      if (s.body.empty()) parse_error(s.source, line, "missing rows");
      const std::size_t width = s.body.front().tokens.size();
      const std::size_t rows = kind == "action" ? s.body.size() : width;
      const std::vector<Index> values = read_rows(s, rows, width);
      if (kind == "action") {
        insert_unique(ws.actions_, s.header.tokens[1],
                      at_stanza(s, [&] { return ActionTable(rows, width, values); }), s);
      } else {
        insert_unique(ws.factor_sets_, s.header.tokens[1], FactorTable(width, values), s);
      }
    } else if (kind == "extension") {
      expect_header_arity(s, 2, "extension <name>");
      Workspace::ExtensionEntry entry;
      entry.where = {s.source, line};
      std::map<std::string, std::string*> fields{{"kernel", &entry.kernel},
                                                 {"total", &entry.total},
                                                 {"quotient", &entry.quotient},
                                                 {"k", &entry.k},
                                                 {"e", &entry.e}};
      for (const Line& l : s.body) {
        auto it = fields.find(l.tokens[0]);
        if (it == fields.end() || l.tokens.size() != 2) {
          parse_error(s.source, l.number, "expected 'kernel|total|quotient|k|e <name>'");
        }
        if (!it->second->empty()) parse_error(s.source, l.number, "'" + l.tokens[0] + "' given twice");
        *it->second = l.tokens[1];
      }
      for (const auto& [field, value] : fields) {
        if (value->empty()) parse_error(s.source, line, "extension is missing '" + field + "'");
      }
      at_stanza(s, [&] {
        ws.monoid(entry.kernel);
        ws.monoid(entry.total);
        ws.monoid(entry.quotient);
        return 0;
      });
      insert_unique(ws.extensions_, s.header.tokens[1], std::move(entry), s);
    }
  }
  // Hom references are checked once every hom is known.
  for (const auto& [name, entry] : ws.extensions_) {
    for (const std::string* h : {&entry.k, &entry.e}) {
      if (!ws.homs_.count(*h)) {
        throw Error(ErrorCode::UnknownName, entry.where.source + ":" +
                                                std::to_string(entry.where.line) + ": no hom named '" +
                                                *h + "'");
      }
    }
  }
  return ws;
}

Workspace parse_workspace(std::string_view text, const std::string& source) {
  return parse_workspace({{source, std::string(text)}});
}

Workspace load_workspace(const std::vector<std::string>& paths) {
  std::vector<std::pair<std::string, std::string>> sources;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    sources.emplace_back(path, text.str());
  }
  return parse_workspace(sources);
}

std::string emit_monoid(const std::string& name, const FiniteMonoid& m) {
  std::string out = "monoid " + name + " " + std::to_string(m.size()) + " " +
                    std::to_string(m.identity()) + "\n";
  for (const auto& row : m.rows()) out += join(row) + "\n";
  return out;
}

std::string emit_group(const std::string& name, const FiniteAbelianGroup& n) {
  std::string out = emit_monoid(name, n.monoid());
  out.replace(0, 6, "group");
  return out;
}

std::string emit_hom(const std::string& name, const std::string& domain,
                     const std::string& codomain, const MonoidHom& f) {
  return "hom " + name + " " + domain + " " + codomain + "\n" + join(f.map()) + "\n";
}

std::string emit_partition(const std::string& name, const PairPartition& e) {
  return "partition " + name + " " + std::to_string(e.n_size()) + " " + std::to_string(e.h_size()) +
         "\n" + join(e.class_of()) + "\n";
}

std::string emit_action(const std::string& name, const ActionTable& phi) {
  std::string out = "action " + name + "\n";
  for (const auto& row : phi.rows()) out += join(row) + "\n";
  return out;
}

std::string emit_factor_set(const std::string& name, const FactorTable& g) {
  std::string out = "factorset " + name + "\n";
  for (const auto& row : g.rows()) out += join(row) + "\n";
  return out;
}

std::string emit_extension(const std::string& name, const std::string& kernel,
                           const std::string& quotient, const KernelDiagram& d) {
  const std::string g = name + "_G";
  std::string out = emit_monoid(g, d.total());
  out += emit_hom(name + "_k", kernel, g, d.k());
  out += emit_hom(name + "_e", g, quotient, d.e());
  out += "extension " + name + "\n";
  out += "kernel " + kernel + "\ntotal " + g + "\nquotient " + quotient + "\n";
  out += "k " + name + "_k\ne " + name + "_e\n";
  return out;
}

}  // namespace cosetal
