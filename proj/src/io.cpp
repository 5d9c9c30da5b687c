#include "girard/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace girard {

namespace {

std::string strip(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Line {
  int number;
  std::string key;   // lowered text before ':' (or section name in brackets)
  std::string body;  // text after ':'
  bool section = false;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++number;
    std::string line = strip(raw);
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line = strip(line.substr(0, hash));
    if (!line.empty()) {
      Line l;
      l.number = number;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw std::invalid_argument("line " + std::to_string(number) +
                                      ": unterminated section header");
        l.section = true;
        l.key = strip(line.substr(1, line.size() - 2));
      } else {
        size_t colon = line.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("line " + std::to_string(number) +
                                      ": expected 'key: ...'");
        l.key = strip(line.substr(0, colon));
        l.body = strip(line.substr(colon + 1));
      }
      out.push_back(std::move(l));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    std::string piece =
        strip(next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos));
    if (!piece.empty()) out.push_back(piece);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  int first_line = 0;
};

void consume_lattice_line(LatticeSpec& spec, const Line& l) {
  if (l.key == "elements") {
    if (!spec.elements.empty()) fail(l.number, "duplicate elements line");
    spec.elements = split_words(l.body);
    if (spec.elements.empty()) fail(l.number, "empty elements line");
  } else if (l.key == "covers") {
    for (const std::string& pair : split_on(l.body, ',')) {
      size_t lt = pair.find('<');
      if (lt == std::string::npos) fail(l.number, "expected 'a<b' in covers");
      std::string lo = strip(pair.substr(0, lt));
      std::string hi = strip(pair.substr(lt + 1));
      if (lo.empty() || hi.empty()) fail(l.number, "expected 'a<b' in covers");
      spec.covers.push_back({lo, hi});
    }
  } else {
    fail(l.number, "unknown statement '" + l.key + "'");
  }
}

struct MulEntry {
  std::string a, b, c;
  int line;
};

MulEntry parse_mul_piece(const std::string& piece, int line) {
  size_t star = piece.find('*');
  size_t eq = piece.find('=');
  if (star == std::string::npos || eq == std::string::npos || eq < star)
    fail(line, "expected 'a*b=c' in mul");
  MulEntry e;
  e.a = strip(piece.substr(0, star));
  e.b = strip(piece.substr(star + 1, eq - star - 1));
  e.c = strip(piece.substr(eq + 1));
  e.line = line;
  if (e.a.empty() || e.b.empty() || e.c.empty())
    fail(line, "expected 'a*b=c' in mul");
  return e;
}

Quantale assemble_quantale(const LatticeSpec& spec,
                           const std::vector<MulEntry>& muls, int report_line) {
  if (spec.elements.empty())
    fail(report_line, "missing elements line");
  FiniteLattice l = FiniteLattice::from_covers(spec.elements, spec.covers);
  auto lp = std::make_shared<FiniteLattice>(std::move(l));
  int n = lp->size();
  std::vector<std::int32_t> mul(static_cast<size_t>(n) * n, -1);
  for (const MulEntry& e : muls) {
    int a = lp->index_of(e.a), b = lp->index_of(e.b), c = lp->index_of(e.c);
    if (a < 0) fail(e.line, "unknown element '" + e.a + "'");
    if (b < 0) fail(e.line, "unknown element '" + e.b + "'");
    if (c < 0) fail(e.line, "unknown element '" + e.c + "'");
    mul[static_cast<size_t>(a) * n + b] = c;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[static_cast<size_t>(a) * n + b] < 0)
        fail(report_line, "product '" + lp->label(a) + "*" + lp->label(b) +
                              "' is not defined (multiplication must be total)");
  return Quantale(std::move(lp), std::move(mul));
}

// The cover relation of a lattice: a < b with nothing strictly between.
std::vector<std::pair<int, int>> cover_pairs(const FiniteLattice& l) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < l.size() && direct; ++c)
        if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) direct = false;
      if (direct) out.push_back({a, b});
    }
  return out;
}

}  // namespace

FiniteLattice parse_lattice_text(std::string_view text) {
  LatticeSpec spec;
  for (const Line& l : split_lines(text)) {
    if (l.section) fail(l.number, "unexpected section in a lattice file");
    if (l.key == "mul" || l.key == "dualizer")
      fail(l.number, "multiplication lines in a lattice file");
    consume_lattice_line(spec, l);
  }
  if (spec.elements.empty())
    throw std::invalid_argument("missing elements line");
  return FiniteLattice::from_covers(spec.elements, spec.covers);
}

std::string lattice_to_text(const FiniteLattice& l) {
  std::ostringstream out;
  out << "elements:";
  for (int i = 0; i < l.size(); ++i) out << ' ' << l.label(i);
  out << '\n';
  auto covers = cover_pairs(l);
  if (!covers.empty()) {
    out << "covers: ";
    for (size_t i = 0; i < covers.size(); ++i) {
      if (i) out << ", ";
      out << l.label(covers[i].first) << '<' << l.label(covers[i].second);
    }
    out << '\n';
  }
  return out.str();
}

ParsedQuantale parse_quantale_text(std::string_view text) {
  LatticeSpec spec;
  std::vector<MulEntry> muls;
  std::string dualizer_name;
  int last_line = 1;
  for (const Line& l : split_lines(text)) {
    last_line = l.number;
    if (l.section) fail(l.number, "unexpected section in a quantale file");
    if (l.key == "mul") {
      for (const std::string& piece : split_on(l.body, ','))
        muls.push_back(parse_mul_piece(piece, l.number));
    } else if (l.key == "dualizer") {
      dualizer_name = l.body;
    } else {
      consume_lattice_line(spec, l);
    }
  }
  ParsedQuantale out{assemble_quantale(spec, muls, last_line), std::nullopt};
  if (!dualizer_name.empty()) {
    int d = out.q.lat().index_of(dualizer_name);
    if (d < 0)
      throw std::invalid_argument("unknown dualizer element '" +
                                  dualizer_name + "'");
    out.dualizer = d;
  }
  return out;
}

std::string quantale_to_text(const Quantale& q, std::optional<int> dualizer) {
  std::ostringstream out;
  out << lattice_to_text(q.lat());
  const FiniteLattice& l = q.lat();
  for (int a = 0; a < q.size(); ++a) {
    out << "mul: ";
    for (int b = 0; b < q.size(); ++b) {
      if (b) out << ", ";
      out << l.label(a) << '*' << l.label(b) << '=' << l.label(q.mul(a, b));
    }
    out << '\n';
  }
  if (dualizer) out << "dualizer: " << l.label(*dualizer) << '\n';
  return out.str();
}

Couple parse_couple_text(std::string_view text) {
  enum class Section { None, C, Q, CoupleBlock };
  Section section = Section::None;
  LatticeSpec spec_c, spec_q;
  std::vector<MulEntry> mul_c, mul_q;
  struct PhiEntry {
    std::string c, a;
    int line;
  };
  struct ActEntry {
    std::string x, y, r;
    int line;
  };
  std::vector<PhiEntry> phis;
  std::vector<ActEntry> actls, actrs;
  std::string dualizer_name;
  int dualizer_line = 0;
  int last_line = 1;

  for (const Line& l : split_lines(text)) {
    last_line = l.number;
    if (l.section) {
      if (l.key == "C")
        section = Section::C;
      else if (l.key == "Q")
        section = Section::Q;
      else if (l.key == "couple")
        section = Section::CoupleBlock;
      else
        fail(l.number, "unknown section '" + l.key + "'");
      continue;
    }
    switch (section) {
      case Section::None:
        fail(l.number, "statements must appear inside [C], [Q] or [couple]");
      case Section::C:
        if (l.key == "mul")
          for (const std::string& piece : split_on(l.body, ','))
            mul_c.push_back(parse_mul_piece(piece, l.number));
        else
          consume_lattice_line(spec_c, l);
        break;
      case Section::Q:
        if (l.key == "mul")
          for (const std::string& piece : split_on(l.body, ','))
            mul_q.push_back(parse_mul_piece(piece, l.number));
        else
          consume_lattice_line(spec_q, l);
        break;
      case Section::CoupleBlock:
        if (l.key == "phi") {
          size_t arrow = l.body.find("->");
          if (arrow == std::string::npos)
            fail(l.number, "expected 'phi: c -> a'");
          phis.push_back({strip(l.body.substr(0, arrow)),
                          strip(l.body.substr(arrow + 2)), l.number});
        } else if (l.key == "actl" || l.key == "actr") {
          for (const std::string& piece : split_on(l.body, ',')) {
            MulEntry e = parse_mul_piece(piece, l.number);
            if (l.key == "actl")
              actls.push_back({e.a, e.b, e.c, e.line});
            else
              actrs.push_back({e.a, e.b, e.c, e.line});
          }
        } else if (l.key == "dualizer") {
          dualizer_name = l.body;
          dualizer_line = l.number;
        } else {
          fail(l.number, "unknown statement '" + l.key + "' in [couple]");
        }
        break;
    }
  }

  Quantale c = assemble_quantale(spec_c, mul_c, last_line);
  Quantale q = assemble_quantale(spec_q, mul_q, last_line);
  int nc = c.size(), nq = q.size();
  LatticePtr cl = c.lattice(), ql = q.lattice();

  std::vector<std::int32_t> phi(nc, -1);
  for (const auto& p : phis) {
    int ci = cl->index_of(p.c), ai = ql->index_of(p.a);
    if (ci < 0) fail(p.line, "unknown C element '" + p.c + "'");
    if (ai < 0) fail(p.line, "unknown Q element '" + p.a + "'");
    phi[ci] = ai;
  }
  for (int i = 0; i < nc; ++i)
    if (phi[i] < 0)
      fail(last_line, "phi is not total: missing image of '" + cl->label(i) +
                          "'");

  std::vector<std::int32_t> actl(static_cast<size_t>(nq) * nc, -1);
  for (const auto& e : actls) {
    int a = ql->index_of(e.x), m = cl->index_of(e.y), r = cl->index_of(e.r);
    if (a < 0) fail(e.line, "unknown Q element '" + e.x + "'");
    if (m < 0) fail(e.line, "unknown C element '" + e.y + "'");
    if (r < 0) fail(e.line, "unknown C element '" + e.r + "'");
    actl[static_cast<size_t>(a) * nc + m] = r;
  }
  std::vector<std::int32_t> actr(static_cast<size_t>(nc) * nq, -1);
  for (const auto& e : actrs) {
    int m = cl->index_of(e.x), a = ql->index_of(e.y), r = cl->index_of(e.r);
    if (m < 0) fail(e.line, "unknown C element '" + e.x + "'");
    if (a < 0) fail(e.line, "unknown Q element '" + e.y + "'");
    if (r < 0) fail(e.line, "unknown C element '" + e.r + "'");
    actr[static_cast<size_t>(m) * nq + a] = r;
  }
  for (int a = 0; a < nq; ++a)
    for (int m = 0; m < nc; ++m)
      if (actl[static_cast<size_t>(a) * nc + m] < 0)
        fail(last_line, "actl is not total: missing '" + ql->label(a) + "*" +
                            cl->label(m) + "'");
  for (int m = 0; m < nc; ++m)
    for (int a = 0; a < nq; ++a)
      if (actr[static_cast<size_t>(m) * nq + a] < 0)
        fail(last_line, "actr is not total: missing '" + cl->label(m) + "*" +
                            ql->label(a) + "'");

  Couple k{std::move(c), std::move(q), SupMap(cl, ql, std::move(phi)),
           std::move(actl), std::move(actr), std::nullopt};
  if (!dualizer_name.empty()) {
    int d = cl->index_of(dualizer_name);
    if (d < 0) fail(dualizer_line, "unknown C element '" + dualizer_name + "'");
    k.dualizer = d;
  }
  return k;
}

std::string couple_to_text(const Couple& k) {
  std::ostringstream out;
  out << "[C]\n" << quantale_to_text(k.c);
  out << "[Q]\n" << quantale_to_text(k.q);
  out << "[couple]\n";
  const FiniteLattice& cl = k.c.lat();
  const FiniteLattice& ql = k.q.lat();
  for (int c = 0; c < k.nc(); ++c)
    out << "phi: " << cl.label(c) << " -> " << ql.label(k.phi(c)) << '\n';
  for (int a = 0; a < k.nq(); ++a) {
    out << "actl: ";
    for (int m = 0; m < k.nc(); ++m) {
      if (m) out << ", ";
      out << ql.label(a) << '*' << cl.label(m) << '='
          << cl.label(k.actl(a, m));
    }
    out << '\n';
  }
  for (int m = 0; m < k.nc(); ++m) {
    out << "actr: ";
    for (int a = 0; a < k.nq(); ++a) {
      if (a) out << ", ";
      out << cl.label(m) << '*' << ql.label(a) << '='
          << cl.label(k.actr(m, a));
    }
    out << '\n';
  }
  if (k.dualizer) out << "dualizer: " << cl.label(*k.dualizer) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

}  // namespace girard
