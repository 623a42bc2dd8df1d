#include "almax/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace almax {

namespace {

// Character cursor with line/column bookkeeping and '#' comments.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_blank();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect_word(std::string_view w) {
    skip_blank();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }

  long long integer() {
    skip_blank();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a positive integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) fail("integer too large");
      advance();
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Occurrence {
  int crossing;
  int position;
  bool operator==(const Occurrence&) const = default;
};

// other[x][p] = the other occurrence of the arc at (x, p).
std::vector<std::array<Occurrence, 4>> arc_partners(const PDCode& pd) {
  std::map<int, std::vector<Occurrence>> seen;
  for (int x = 0; x < pd.size(); ++x)
    for (int p = 0; p < 4; ++p) seen[pd.crossings[x][p]].push_back({x, p});
  std::vector<std::array<Occurrence, 4>> other(pd.size());
  for (const auto& [label, occ] : seen) {
    if (occ.size() != 2)
      throw ParseError("arc " + std::to_string(label) + " appears " +
                       std::to_string(occ.size()) + " times (expected 2)");
    other[occ[0].crossing][occ[0].position] = occ[1];
    other[occ[1].crossing][occ[1].position] = occ[0];
  }
  return other;
}

// Walks every link component along the strands (p <-> p+2) and returns the
// arrivals (x, p) in traversal order, one list per component.  Each
// component is oriented so that under-strands run a -> c.
std::vector<std::vector<Occurrence>> oriented_components(const PDCode& pd) {
  auto other = arc_partners(pd);
  std::vector<std::array<char, 4>> used(pd.size(), {0, 0, 0, 0});
  std::vector<std::vector<Occurrence>> comps;
  for (int x0 = 0; x0 < pd.size(); ++x0)
    for (int p0 = 0; p0 < 4; ++p0) {
      if (used[x0][p0]) continue;
      std::vector<Occurrence> walk;
      Occurrence cur{x0, p0};
      while (true) {
        if (used[cur.crossing][cur.position])
          throw ParseError("inconsistent strand structure in PD code");
        int out = (cur.position + 2) % 4;
        used[cur.crossing][cur.position] = 1;
        used[cur.crossing][out] = 1;
        walk.push_back(cur);
        cur = other[cur.crossing][out];
        if (cur.crossing == x0 && cur.position == p0) break;
      }
      bool forward = false, backward = false;
      for (const auto& o : walk) {
        if (o.position == 0) forward = true;
        if (o.position == 2) backward = true;
      }
      if (forward && backward)
        throw ParseError("component passes under against its own orientation");
      if (backward) {
        // Reverse: arrive at the opposite slot of every crossing, reverse order.
        std::reverse(walk.begin(), walk.end());
        for (auto& o : walk) o.position = (o.position + 2) % 4;
      }
      comps.push_back(std::move(walk));
    }
  return comps;
}

std::vector<int> crossing_signs(const PDCode& pd) {
  std::vector<int> sign(pd.size(), 0);
  for (const auto& comp : oriented_components(pd))
    for (const auto& o : comp) {
      if (o.position == 1) sign[o.crossing] = +1;
      if (o.position == 3) sign[o.crossing] = -1;
    }
  for (int x = 0; x < pd.size(); ++x)
    if (sign[x] == 0) throw ParseError("could not orient crossing " + std::to_string(x + 1));
  return sign;
}

// Traces the resolution where crossing x joins positions p and partner(x,p).
// Crossing x contributes endpoints 2x (turn through position 0) and 2x+1.
ChordDiagram trace_resolution(const PDCode& pd, bool ones) {
  ChordDiagram d;
  const int n = pd.size();
  if (n == 0) {
    d.circles.push_back({"Z1", {}});
    return d;
  }
  auto other = arc_partners(pd);
  d.endpoints.resize(2 * n);
  for (int x = 0; x < n; ++x) {
    d.endpoints[2 * x].name = "x" + std::to_string(x + 1) + "a";
    d.endpoints[2 * x + 1].name = "x" + std::to_string(x + 1) + "b";
    d.chords.push_back({x, {2 * x, 2 * x + 1}, 1});
  }
  // 1-smoothing: a-b and c-d.  0-smoothing: a-d and b-c.
  auto partner = [ones](int p) { return ones ? (p ^ 1) : (3 - p); };
  auto turn_id = [ones](int x, int p) {
    if (ones) return 2 * x + (p < 2 ? 0 : 1);
    return 2 * x + ((p == 0 || p == 3) ? 0 : 1);
  };
  std::vector<std::array<char, 4>> used(n, {0, 0, 0, 0});
  for (int x0 = 0; x0 < n; ++x0)
    for (int p0 = 0; p0 < 4; ++p0) {
      if (used[x0][p0]) continue;
      Circle circle;
      circle.name = "Z" + std::to_string(d.circles.size() + 1);
      Occurrence cur{x0, p0};
      while (!used[cur.crossing][cur.position]) {
        int q = partner(cur.position);
        used[cur.crossing][cur.position] = 1;
        used[cur.crossing][q] = 1;
        EndpointId e = turn_id(cur.crossing, cur.position);
        // Positions are listed clockwise, so turning to the next position
        // keeps the crossing on the right.
        d.endpoints[e].side = (q == (cur.position + 1) % 4) ? Side::right : Side::left;
        circle.endpoints.push_back(e);
        cur = other[cur.crossing][q];
      }
      d.circles.push_back(std::move(circle));
    }
  return d;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' ||
          c == '-'))
      return false;
  return true;
}

struct RawChord {
  int index;
  std::string a, b;
  std::optional<Side> side_a, side_b;
  int line;
};

ChordDiagram assemble(const std::vector<std::pair<std::string, std::vector<std::string>>>& circles,
                      const std::vector<RawChord>& chords) {
  // Identifiers follow name order so the distinguished endpoint (smaller
  // identifier) is the lexicographically smaller name.
  std::set<std::string> names;
  std::map<std::string, int> circle_of_name;
  for (std::size_t c = 0; c < circles.size(); ++c)
    for (const auto& e : circles[c].second) {
      if (!names.insert(e).second) throw ParseError("endpoint multiplicity: " + e);
      circle_of_name[e] = static_cast<int>(c);
    }
  ChordDiagram d;
  std::map<std::string, EndpointId> id;
  for (const auto& nm : names) {
    id[nm] = static_cast<int>(d.endpoints.size());
    d.endpoints.push_back({nm, Side::left});
  }
  std::set<std::string> circle_names;
  for (const auto& [nm, eps] : circles) {
    if (!circle_names.insert(nm).second) throw ParseError("duplicate circle name: " + nm);
    Circle c{nm, {}};
    for (const auto& e : eps) c.endpoints.push_back(id[e]);
    d.circles.push_back(std::move(c));
  }
  std::set<int> indices;
  std::set<std::string> used;
  for (const auto& rc : chords) {
    if (rc.index < 1) throw ParseError("chord index must be positive", rc.line, 1);
    if (!indices.insert(rc.index).second)
      throw ParseError("duplicate chord index " + std::to_string(rc.index), rc.line, 1);
    for (const auto* e : {&rc.a, &rc.b}) {
      if (!names.count(*e)) throw ParseError("dangling endpoint " + *e, rc.line, 1);
      if (!used.insert(*e).second)
        throw ParseError("endpoint " + *e + " used by two chords", rc.line, 1);
    }
    if (rc.a == rc.b) throw ParseError("degenerate chord", rc.line, 1);
    bool mono = circle_of_name[rc.a] == circle_of_name[rc.b];
    Side def = mono ? Side::left : Side::right;
    d.endpoints[id[rc.a]].side = rc.side_a.value_or(def);
    d.endpoints[id[rc.b]].side = rc.side_b.value_or(def);
    EndpointId x = id[rc.a], y = id[rc.b];
    d.chords.push_back({rc.index - 1, {std::min(x, y), std::max(x, y)}, 1});
  }
  std::sort(d.chords.begin(), d.chords.end(),
            [](const Chord& a, const Chord& b) { return a.index < b.index; });
  auto problems = validate(d);
  if (!problems.empty()) throw ParseError("invalid chord diagram: " + problems.front());
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// PD codes
// ---------------------------------------------------------------------------

PDCode parse_pd(std::string_view text) {
  Scanner s(text);
  PDCode pd;
  s.expect_word("PD");
  s.expect('[');
  if (!s.accept(']')) {
    while (true) {
      s.expect_word("X");
      s.expect('[');
      std::array<int, 4> x{};
      for (int i = 0; i < 4; ++i) {
        if (i) s.expect(',');
        long long v = s.integer();
        if (v < 1) s.fail("arc labels must be positive");
        x[i] = static_cast<int>(v);
      }
      s.expect(']');
      pd.crossings.push_back(x);
      if (s.accept(',')) continue;
      if (s.accept(']')) break;
      if (s.peek() == 'X') continue;
      s.fail("expected ',' or ']'");
    }
  }
  if (!s.at_end()) s.fail("trailing text after PD code");
  if (pd.crossings.size() > 31) throw ParseError("more than 31 crossings are not supported");
  pd.signs = crossing_signs(pd);
  for (int sgn : pd.signs) (sgn > 0 ? pd.n_plus : pd.n_minus)++;
  return pd;
}

std::string write_pd(const PDCode& pd) {
  std::ostringstream os;
  os << "PD[";
  for (int x = 0; x < pd.size(); ++x) {
    if (x) os << ",";
    const auto& c = pd.crossings[x];
    os << "X[" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << "]";
  }
  os << "]\n";
  return os.str();
}

int component_count(const PDCode& pd) {
  if (pd.size() == 0) return 1;
  return static_cast<int>(oriented_components(pd).size());
}

PDCode mirror(const PDCode& pd) {
  // Reversing the listing direction mirrors the picture: X[a,d,c,b].
  PDCode m;
  for (const auto& c : pd.crossings) m.crossings.push_back({c[0], c[3], c[2], c[1]});
  m.signs = crossing_signs(m);
  for (int sgn : m.signs) (sgn > 0 ? m.n_plus : m.n_minus)++;
  return m;
}

ChordDiagram resolve_all_ones(const PDCode& pd) { return trace_resolution(pd, true); }
ChordDiagram resolve_all_zeros(const PDCode& pd) { return trace_resolution(pd, false); }

// ---------------------------------------------------------------------------
// Chord-diagram text
// ---------------------------------------------------------------------------

CDInput parse_chord_diagram(std::string_view text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> circles;
  std::vector<RawChord> chords;
  std::optional<std::array<int, 2>> writhe;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected ':'", lineno, 1);
    auto head = split_words(line.substr(0, colon));
    auto body = split_words(line.substr(colon + 1));
    int body_col = static_cast<int>(colon) + 2;
    if (head.size() == 1 && head[0] == "writhe") {
      if (writhe) throw ParseError("duplicate writhe line", lineno, 1);
      if (body.size() != 2) throw ParseError("writhe needs n_plus n_minus", lineno, body_col);
      try {
        int p = std::stoi(body[0]), m = std::stoi(body[1]);
        if (p < 0 || m < 0) throw std::invalid_argument("negative");
        writhe = std::array<int, 2>{p, m};
      } catch (const std::exception&) {
        throw ParseError("writhe values must be non-negative integers", lineno, body_col);
      }
    } else if (head.size() == 2 && head[0] == "circle") {
      if (!valid_name(head[1])) throw ParseError("bad circle name", lineno, 8);
      for (const auto& e : body)
        if (!valid_name(e)) throw ParseError("bad endpoint name '" + e + "'", lineno, body_col);
      circles.push_back({head[1], body});
    } else if (head.size() == 2 && head[0] == "chord") {
      RawChord rc;
      rc.line = lineno;
      try {
        std::size_t used = 0;
        rc.index = std::stoi(head[1], &used);
        if (used != head[1].size()) throw std::invalid_argument("junk");
      } catch (const std::exception&) {
        throw ParseError("chord index must be an integer", lineno, 7);
      }
      if (body.size() != 2 && body.size() != 4)
        throw ParseError("chord needs two endpoints (optionally two sides)", lineno, body_col);
      rc.a = body[0];
      rc.b = body[1];
      if (body.size() == 4) {
        auto side = [&](const std::string& w) {
          if (w == "in") return Side::left;
          if (w == "out") return Side::right;
          throw ParseError("side must be 'in' or 'out'", lineno, body_col);
        };
        rc.side_a = side(body[2]);
        rc.side_b = side(body[3]);
      }
      chords.push_back(std::move(rc));
    } else {
      throw ParseError("unrecognized line", lineno, 1);
    }
  }
  if (circles.empty()) throw ParseError("chord diagram has no circles");
  return {assemble(circles, chords), writhe};
}

std::string write_chord_diagram(const ChordDiagram& d, std::optional<std::array<int, 2>> writhe) {
  std::ostringstream os;
  if (writhe) os << "writhe: " << (*writhe)[0] << " " << (*writhe)[1] << "\n";
  auto where = d.circle_of();
  for (const auto& c : d.circles) {
    os << "circle " << c.name << ":";
    for (EndpointId e : c.endpoints) os << " " << d.endpoints[e].name;
    os << "\n";
  }
  for (const auto& ch : d.chords) {
    const auto& a = d.endpoints[ch.ends[0]];
    const auto& b = d.endpoints[ch.ends[1]];
    os << "chord " << ch.index + 1 << ": " << a.name << " " << b.name;
    Side def = d.is_monochord(ch, where) ? Side::left : Side::right;
    if (a.side != def || b.side != def)
      os << " " << (a.side == Side::left ? "in" : "out") << " "
         << (b.side == Side::left ? "in" : "out");
    os << "\n";
  }
  return os.str();
}

ChordDiagram make_chord_diagram(
    const std::vector<std::vector<std::string>>& circles,
    const std::vector<std::tuple<int, std::string, std::string>>& chords) {
  std::vector<std::pair<std::string, std::vector<std::string>>> cs;
  for (std::size_t i = 0; i < circles.size(); ++i)
    cs.push_back({"Z" + std::to_string(i + 1), circles[i]});
  std::vector<RawChord> rs;
  for (const auto& [idx, a, b] : chords) rs.push_back({idx, a, b, std::nullopt, std::nullopt, 0});
  return assemble(cs, rs);
}

LinkInput parse_input(std::string_view text, std::string source) {
  LinkInput in;
  in.source = std::move(source);
  // Skip leading blanks and comments to find the grammar.
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      break;
    }
  }
  if (text.substr(i, 2) == "PD") {
    in.pd = parse_pd(text);
    in.top = resolve_all_ones(*in.pd);
    in.has_signs = true;
    in.n_plus = in.pd->n_plus;
    in.n_minus = in.pd->n_minus;
  } else {
    auto cd = parse_chord_diagram(text);
    in.top = std::move(cd.diagram);
    if (cd.writhe) {
      in.has_signs = true;
      in.n_plus = (*cd.writhe)[0];
      in.n_minus = (*cd.writhe)[1];
      if (in.n_plus + in.n_minus != in.top.chord_count())
        throw ParseError("writhe counts do not add up to the number of chords");
    }
  }
  return in;
}

LinkInput load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str(), path);
}

}  // namespace almax
