#include "reslat/algfile.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace reslat {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::istringstream iss{std::string(raw)};
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back({number, std::move(toks)});
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(tokenize(text)) {}

  bool done() const { return idx_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) throw ParseError(last_line_ + 1, "unexpected end of file (missing 'end'?)");
    return lines_[idx_];
  }
  Line next() {
    const Line& l = peek();
    last_line_ = l.number;
    return lines_[idx_++];
  }
  int last_line() const { return last_line_; }

 private:
  std::vector<Line> lines_;
  size_t idx_ = 0;
  int last_line_ = 0;
};

int lookup(const std::map<std::string, int>& index, const std::string& tok,
           int line) {
  auto it = index.find(tok);
  if (it == index.end()) throw ParseError(line, "unknown token '" + tok + "'");
  return it->second;
}

std::map<std::string, int> element_index(const std::vector<std::string>& elements,
                                         int line) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], static_cast<int>(i)).second)
      throw ParseError(line, "duplicate element token '" + elements[i] + "'");
  return index;
}

BinOpTable read_table(Cursor& cur, const std::map<std::string, int>& index, int n) {
  std::vector<std::vector<ElementId>> rows;
  for (int r = 0; r < n; ++r) {
    Line l = cur.next();
    if (static_cast<int>(l.tokens.size()) != n)
      throw ParseError(l.number, "expected " + std::to_string(n) +
                                     " entries in table row, got " +
                                     std::to_string(l.tokens.size()));
    std::vector<ElementId> row;
    for (const auto& t : l.tokens) row.push_back(lookup(index, t, l.number));
    rows.push_back(std::move(row));
  }
  return BinOpTable::from_rows(rows);
}

struct Header {
  std::string name;
  std::vector<std::string> elements;
  std::map<std::string, int> index;
  int bottom = -1, top = -1;
};

Header read_header(Cursor& cur, const std::string& kind) {
  Header h;
  {
    Line l = cur.next();
    if (l.tokens[0] != kind)
      throw ParseError(l.number, "expected '" + kind + "', got '" + l.tokens[0] + "'");
    if (l.tokens.size() != 2) throw ParseError(l.number, kind + " needs a name");
    h.name = l.tokens[1];
  }
  {
    Line l = cur.next();
    if (l.tokens[0] != "elements" || l.tokens.size() < 2)
      throw ParseError(l.number, "expected 'elements <tok>...'");
    h.elements.assign(l.tokens.begin() + 1, l.tokens.end());
    h.index = element_index(h.elements, l.number);
  }
  {
    Line l = cur.next();
    if (l.tokens[0] != "bottom" || l.tokens.size() != 2)
      throw ParseError(l.number, "expected 'bottom <tok>'");
    h.bottom = lookup(h.index, l.tokens[1], l.number);
  }
  {
    Line l = cur.next();
    if (l.tokens[0] != "top" || l.tokens.size() != 2)
      throw ParseError(l.number, "expected 'top <tok>'");
    h.top = lookup(h.index, l.tokens[1], l.number);
  }
  return h;
}

}  // namespace

std::string sniff_file_kind(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw ParseError(1, "empty file");
  return cur.peek().tokens[0];
}

AlgebraFile parse_algebra_file(std::string_view text) {
  Cursor cur(text);
  Header h = read_header(cur, "algebra");
  const int n = static_cast<int>(h.elements.size());

  AlgebraFile f;
  f.name = h.name;
  f.elements = h.elements;
  f.bottom = h.bottom;
  f.top = h.top;

  std::map<std::string, BinOpTable> tables;
  bool ended = false;
  while (!cur.done()) {
    Line l = cur.next();
    if (l.tokens[0] == "end") {
      ended = true;
      break;
    }
    if (l.tokens[0] != "table" || l.tokens.size() != 2)
      throw ParseError(l.number, "expected 'table <name>' or 'end'");
    const std::string& tname = l.tokens[1];
    if (tname != "join" && tname != "meet" && tname != "otimes" &&
        tname != "arrow" && tname != "oplus")
      throw ParseError(l.number, "unknown table '" + tname + "'");
    if (tables.count(tname))
      throw ParseError(l.number, "duplicate table '" + tname + "'");
    tables.emplace(tname, read_table(cur, h.index, n));
  }
  if (!ended) throw ParseError(cur.last_line() + 1, "missing 'end'");

  for (const char* req : {"join", "meet", "otimes"})
    if (!tables.count(req))
      throw ParseError(cur.last_line(), std::string("missing required table '") + req + "'");

  f.join = tables.at("join");
  f.meet = tables.at("meet");
  f.otimes = tables.at("otimes");
  if (tables.count("arrow")) f.arrow = tables.at("arrow");
  if (tables.count("oplus")) f.oplus = tables.at("oplus");
  return f;
}

namespace {

void render_table_rows(std::ostringstream& os, const BinOpTable& t,
                       const std::vector<std::string>& elements) {
  for (int r = 0; r < t.size(); ++r) {
    for (int c = 0; c < t.size(); ++c)
      os << (c ? " " : "") << elements[t(r, c)];
    os << "\n";
  }
}

}  // namespace

std::string render_algebra_file(const AlgebraFile& f) {
  std::ostringstream os;
  os << "algebra " << f.name << "\n";
  os << "elements";
  for (const auto& e : f.elements) os << " " << e;
  os << "\n";
  os << "bottom " << f.elements[f.bottom] << "\n";
  os << "top " << f.elements[f.top] << "\n";
  const std::pair<const char*, const BinOpTable*> named[] = {
      {"join", &f.join}, {"meet", &f.meet}, {"otimes", &f.otimes}};
  for (auto [name, t] : named) {
    os << "table " << name << "\n";
    render_table_rows(os, *t, f.elements);
  }
  if (f.arrow) {
    os << "table arrow\n";
    render_table_rows(os, *f.arrow, f.elements);
  }
  if (f.oplus) {
    os << "table oplus\n";
    render_table_rows(os, *f.oplus, f.elements);
  }
  os << "end\n";
  return os.str();
}

CoupledFile parse_coupled_file(std::string_view text) {
  Cursor cur(text);
  Header h = read_header(cur, "coupled");
  const int n = static_cast<int>(h.elements.size());

  CoupledFile f;
  f.name = h.name;
  f.elements = h.elements;
  f.bottom = h.bottom;
  f.top = h.top;

  std::map<std::string, BinOpTable> tables;
  bool have_alpha = false, ended = false;
  while (!cur.done()) {
    Line l = cur.next();
    if (l.tokens[0] == "end") {
      ended = true;
      break;
    }
    if (l.tokens[0] == "subset") {
      if (l.tokens.size() < 3 || l.tokens[1] != "B")
        throw ParseError(l.number, "expected 'subset B <tok>...'");
      std::vector<ElementId> b;
      for (size_t i = 2; i < l.tokens.size(); ++i)
        b.push_back(lookup(h.index, l.tokens[i], l.number));
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      f.subset_b = std::move(b);
      continue;
    }
    if (l.tokens[0] == "map") {
      if (l.tokens.size() != 2 || l.tokens[1] != "alpha")
        throw ParseError(l.number, "expected 'map alpha'");
      if (have_alpha) throw ParseError(l.number, "duplicate map 'alpha'");
      Line row = cur.next();
      if (static_cast<int>(row.tokens.size()) != n)
        throw ParseError(row.number, "alpha row needs " + std::to_string(n) + " entries");
      for (const auto& t : row.tokens)
        f.alpha.push_back(lookup(h.index, t, row.number));
      have_alpha = true;
      continue;
    }
    if (l.tokens[0] != "table" || l.tokens.size() != 2)
      throw ParseError(l.number, "expected 'table <name>', 'subset B', 'map alpha' or 'end'");
    const std::string& tname = l.tokens[1];
    if (tname != "add1" && tname != "mul1" && tname != "add2" && tname != "mul2")
      throw ParseError(l.number, "unknown table '" + tname + "'");
    if (tables.count(tname))
      throw ParseError(l.number, "duplicate table '" + tname + "'");
    tables.emplace(tname, read_table(cur, h.index, n));
  }
  if (!ended) throw ParseError(cur.last_line() + 1, "missing 'end'");
  for (const char* req : {"add1", "mul1", "add2", "mul2"})
    if (!tables.count(req))
      throw ParseError(cur.last_line(), std::string("missing required table '") + req + "'");
  if (!have_alpha) throw ParseError(cur.last_line(), "missing 'map alpha'");

  f.add1 = tables.at("add1");
  f.mul1 = tables.at("mul1");
  f.add2 = tables.at("add2");
  f.mul2 = tables.at("mul2");
  return f;
}

std::string render_coupled_file(const CoupledFile& f) {
  std::ostringstream os;
  os << "coupled " << f.name << "\n";
  os << "elements";
  for (const auto& e : f.elements) os << " " << e;
  os << "\n";
  os << "bottom " << f.elements[f.bottom] << "\n";
  os << "top " << f.elements[f.top] << "\n";
  if (f.subset_b) {
    os << "subset B";
    for (int x : *f.subset_b) os << " " << f.elements[x];
    os << "\n";
  }
  const std::pair<const char*, const BinOpTable*> named[] = {
      {"add1", &f.add1}, {"mul1", &f.mul1}, {"add2", &f.add2}, {"mul2", &f.mul2}};
  for (auto [name, t] : named) {
    os << "table " << name << "\n";
    render_table_rows(os, *t, f.elements);
  }
  os << "map alpha\n";
  for (size_t i = 0; i < f.alpha.size(); ++i)
    os << (i ? " " : "") << f.elements[f.alpha[i]];
  os << "\nend\n";
  return os.str();
}

CoupledStructure to_coupled_structure(const CoupledFile& f) {
  const int n = static_cast<int>(f.elements.size());
  std::vector<ElementId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  CoupledStructure c;
  c.elements = f.elements;
  c.first = {all, f.add1, f.mul1, f.bottom, f.top};
  c.second = {f.subset_b ? *f.subset_b : all, f.add2, f.mul2, f.top, f.bottom};
  c.alpha = f.alpha;
  c.kind = f.subset_b ? CoupledKind::Tied : CoupledKind::General;
  return c;
}

CoupledFile to_coupled_file(const CoupledStructure& c, const std::string& name) {
  CoupledFile f;
  f.name = name;
  f.elements = c.elements;
  f.bottom = c.first.zero;
  f.top = c.second.zero;
  if (c.kind == CoupledKind::Tied) f.subset_b = c.second.carrier;
  f.add1 = c.first.add;
  f.mul1 = c.first.mul;
  f.add2 = c.second.add;
  f.mul2 = c.second.mul;
  f.alpha = c.alpha;
  return f;
}

AlgebraFile to_algebra_file(const ResiduatedLattice& rl, const std::string& name) {
  AlgebraFile f;
  f.name = name;
  f.elements = rl.elements();
  f.bottom = rl.bottom();
  f.top = rl.top();
  f.join = rl.lattice.join;
  f.meet = rl.lattice.meet;
  f.otimes = rl.otimes;
  f.arrow = rl.arrow;
  return f;
}

}  // namespace reslat
