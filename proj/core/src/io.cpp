#include "bimatch/io.hpp"

#include <fstream>
#include <sstream>

namespace bimatch {

namespace {

struct TextLine {
  int number;
  std::vector<std::string> tokens;
  std::string raw;
};

std::string strip_comment(const std::string& s) {
  const auto hash = s.find('#');
  return hash == std::string::npos ? s : s.substr(0, hash);
}

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

// Non-blank, comment-stripped lines.
std::vector<TextLine> content_lines(std::istream& in) {
  std::vector<TextLine> out;
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = tokenize(strip_comment(raw));
    if (!tokens.empty()) out.push_back({number, std::move(tokens), raw});
  }
  return out;
}

int parse_index(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 0 || v > 1000000000L) {
    throw ParseError(std::string("line ") + std::to_string(line) + ": bad " + what + " '" + tok + "'", line);
  }
  return static_cast<int>(v);
}

MatchPair parse_pair(const TextLine& l) {
  if (l.tokens.size() != 2) {
    throw ParseError("line " + std::to_string(l.number) + ": expected 'red blue', got '" + l.raw + "'", l.number);
  }
  return {parse_index(l.tokens[0], l.number, "red index"), parse_index(l.tokens[1], l.number, "blue index")};
}

}  // namespace

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::vector<ColoredPoint> parse_point_records(std::istream& in) {
  std::vector<ColoredPoint> out;
  for (const TextLine& l : content_lines(in)) {
    if (l.tokens.size() != 3) {
      throw ParseError("line " + std::to_string(l.number) + ": expected 'x y color', got '" + l.raw + "'", l.number);
    }
    Scalar x, y;
    try {
      x = parse_scalar(l.tokens[0]);
      y = parse_scalar(l.tokens[1]);
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(l.number) + ": " + e.what(), l.number);
    }
    const std::string& c = l.tokens[2];
    Color color;
    if (c == "R" || c == "r") {
      color = Color::Red;
    } else if (c == "B" || c == "b") {
      color = Color::Blue;
    } else {
      throw ParseError("line " + std::to_string(l.number) + ": color must be R or B, got '" + c + "'", l.number);
    }
    out.emplace_back(Point{x, y}, color);
  }
  return out;
}

BichromaticPointSet parse_points(std::istream& in) { return BichromaticPointSet::from_colored(parse_point_records(in)); }

BichromaticPointSet load_points(const std::string& path) {
  auto in = open_input(path);
  return parse_points(in);
}

void write_points(std::ostream& out, const BichromaticPointSet& P) {
  for (const Point& p : P.reds()) out << to_string(p.x) << ' ' << to_string(p.y) << " R\n";
  for (const Point& p : P.blues()) out << to_string(p.x) << ' ' << to_string(p.y) << " B\n";
}

MatchingFile parse_matching(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("line 1: empty matching file", 1);
  if (lines[0].tokens.size() != 1) {
    throw ParseError("line " + std::to_string(lines[0].number) + ": expected the pair count", lines[0].number);
  }
  const int n = parse_index(lines[0].tokens[0], lines[0].number, "pair count");
  std::vector<MatchPair> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) pairs.push_back(parse_pair(lines[i]));
  if (static_cast<int>(pairs.size()) != n) {
    const int at = lines.back().number;
    throw ParseError("line " + std::to_string(at) + ": header says " + std::to_string(n) + " pairs, found " +
                         std::to_string(pairs.size()),
                     at);
  }
  return {n, BRMatching(std::move(pairs))};
}

MatchingFile load_matching(const std::string& path) {
  auto in = open_input(path);
  return parse_matching(in);
}

void write_matching(std::ostream& out, int n, const BRMatching& m) {
  out << n << '\n';
  for (const MatchPair& p : m.pairs()) out << p.red << ' ' << p.blue << '\n';
}

SequenceFile parse_sequence(std::istream& in) {
  SequenceFile seq{0, std::nullopt, {}};
  std::string raw;
  int number = 0;
  int steps = -1;
  std::vector<MatchPair> block;
  bool in_block = false;
  auto close_block = [&] {
    seq.steps.emplace_back(std::move(block));
    block.clear();
  };
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (steps < 0) {
      const auto tok = tokenize(strip_comment(raw));
      if (tok.empty()) continue;
      if (tok.size() != 4 || tok[0] != "SEQ" || tok[1] != "v1" || tok[2].rfind("n=", 0) != 0 ||
          tok[3].rfind("steps=", 0) != 0) {
        throw ParseError("line " + std::to_string(number) + ": expected 'SEQ v1 n=<n> steps=<k>'", number);
      }
      seq.n = parse_index(tok[2].substr(2), number, "n");
      steps = parse_index(tok[3].substr(6), number, "step count");
      continue;
    }
    const std::string prefix = "# points:";
    if (raw.rfind(prefix, 0) == 0) {
      const auto tok = tokenize(raw.substr(prefix.size()));
      if (!tok.empty()) seq.points = tok.front();
      continue;
    }
    const auto tok = tokenize(strip_comment(raw));
    if (tok.empty()) continue;
    if (tok.size() == 1 && tok[0] == "--") {
      close_block();
      in_block = false;
      continue;
    }
    block.push_back(parse_pair(TextLine{number, tok, raw}));
    in_block = true;
  }
  if (steps < 0) throw ParseError("line " + std::to_string(number + 1) + ": missing SEQ header", number + 1);
  if (in_block || (steps > 0 && static_cast<int>(seq.steps.size()) == steps - 1)) close_block();
  if (static_cast<int>(seq.steps.size()) != steps) {
    throw ParseError("line " + std::to_string(number) + ": header says " + std::to_string(steps) + " steps, found " +
                         std::to_string(seq.steps.size()),
                     number);
  }
  return seq;
}

SequenceFile load_sequence(const std::string& path) {
  auto in = open_input(path);
  return parse_sequence(in);
}

void write_sequence(std::ostream& out, const SequenceFile& seq) {
  out << "SEQ v1 n=" << seq.n << " steps=" << seq.steps.size() << '\n';
  if (seq.points) out << "# points: " << *seq.points << '\n';
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    if (i) out << "--\n";
    for (const MatchPair& p : seq.steps[i].pairs()) out << p.red << ' ' << p.blue << '\n';
  }
}

}  // namespace bimatch
