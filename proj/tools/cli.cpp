#include "cli.hpp"

#include <CLI11.hpp>

#include <bimatch/explorer.hpp>
#include <bimatch/hamsandwich.hpp>
#include <bimatch/io.hpp>
#include <bimatch/reconfig.hpp>
#include <bimatch/svg.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace bimatch::cli {

namespace {

std::string join_ids(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// Writes to path, or to out when path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  body(f);
  if (!f.flush()) throw std::runtime_error("cannot write " + path);
}

BRMatching load_valid_matching(const BichromaticPointSet& P, const std::string& path) {
  const MatchingFile mf = load_matching(path);
  if (mf.n != static_cast<int>(P.n())) {
    throw InvalidMatchingError(path + ": matching is for n = " + std::to_string(mf.n) + ", points have n = " +
                               std::to_string(P.n()));
  }
  if (auto v = validate_matching(P, mf.matching)) throw InvalidMatchingError(path + ": " + v->message);
  return mf.matching;
}

Line parse_line(const std::string& text) {
  std::istringstream ss(text);
  std::string a, b, c, extra;
  if (!(ss >> a >> b >> c) || (ss >> extra)) throw ParseError("cut must be three numbers 'A B C', got '" + text + "'", 0);
  try {
    return Line::from_coefficients(parse_scalar(a), parse_scalar(b), parse_scalar(c));
  } catch (const GeometryError& e) {
    throw ParseError(std::string("bad cut '") + text + "': " + e.what(), 0);
  }
}

void write_cut_tree(std::ostream& os, const CutTree& tree) {
  os << "# cut tree\n";
  for (std::size_t id = 0; id < tree.nodes().size(); ++id) {
    const CutNode& nd = tree.nodes()[id];
    os << "# node " << id << ": reds {" << join_ids(nd.reds) << "} blues {" << join_ids(nd.blues) << "}";
    if (nd.is_leaf()) {
      os << " leaf\n";
    } else {
      const Line& l = nd.cut->line;
      os << " cut " << to_string(l.a()) << ' ' << to_string(l.b()) << ' ' << to_string(l.c()) << " positive "
         << nd.positive << " negative " << nd.negative << '\n';
    }
  }
}

struct Options {
  std::string points;
  std::string matching;
  std::string sequence;
  std::string output;
  int lower_bound = 0;
  bool diameter = false;
  std::vector<std::string> distance;
  std::vector<std::string> matchings;
  std::vector<std::string> cuts;
  bool hs_cuts = false;
};

int cmd_hs_match(const Options& o, std::ostream& out) {
  const BichromaticPointSet P = load_points(o.points);
  const HamSandwichMatching H = ham_sandwich_matching(P);
  emit(o.output, out, [&](std::ostream& os) {
    write_matching(os, static_cast<int>(P.n()), H.matching);
    write_cut_tree(os, H.tree);
  });
  return kOk;
}

int cmd_connect(const Options& o, std::ostream& out, std::ostream& err) {
  const BichromaticPointSet P = load_points(o.points);
  const BRMatching M = load_valid_matching(P, o.matching);
  const Connection c = connect(P, M);
  if (auto v = verify_sequence(P, c.sequence)) {
    throw InternalError("produced sequence fails verification at step " + std::to_string(v->index) + ": " + v->message);
  }
  emit(o.output, out, [&](std::ostream& os) {
    write_sequence(os, SequenceFile{static_cast<int>(P.n()), o.points, c.sequence});
  });
  (o.output.empty() ? err : out) << "steps: " << c.sequence.size() << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BichromaticPointSet P = load_points(o.points);
  const SequenceFile seq = load_sequence(o.sequence);
  if (seq.n != static_cast<int>(P.n())) {
    throw InvalidMatchingError("sequence is for n = " + std::to_string(seq.n) + ", points have n = " +
                               std::to_string(P.n()));
  }
  if (auto v = verify_sequence(P, seq.steps)) {
    throw InvalidMatchingError("step " + std::to_string(v->index) + ": " + v->message);
  }
  out << "ok: " << seq.steps.size() << " matchings, consecutive pairs compatible\n";
  return kOk;
}

int cmd_explore(const Options& o, std::ostream& out) {
  std::optional<LowerBoundInstance> lb;
  std::optional<BichromaticPointSet> P;
  if (o.lower_bound > 0) {
    lb = lower_bound_instance(o.lower_bound);
    P = lb->P;
  } else if (!o.points.empty()) {
    P = load_points(o.points);
  } else {
    throw ParseError("explore needs a point file or --lower-bound", 0);
  }
  const CompatibleGraph g = build_graph(*P);
  const GraphAnalysis a = analyze(g);
  out << "n: " << P->n() << '\n';
  out << "matchings: " << g.nodes.size() << '\n';
  out << "edges: " << g.num_edges() << '\n';
  out << "connected: " << (a.connected ? "yes" : "no") << '\n';
  auto node_of = [&](const std::string& key) -> int {
    if (lb && (key == "M" || key == "M'" || key == "M2")) return *g.index_of(key == "M" ? lb->M : lb->M2);
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
      const long id = std::stol(key);
      if (id >= static_cast<long>(g.nodes.size())) {
        throw PreconditionError("node " + key + " out of range (" + std::to_string(g.nodes.size()) + " nodes)");
      }
      return static_cast<int>(id);
    }
    const BRMatching m = load_valid_matching(*P, key);
    return *g.index_of(m);
  };
  if (lb) {
    out << "M: node " << *g.index_of(lb->M) << '\n';
    out << "M': node " << *g.index_of(lb->M2) << '\n';
  }
  if (o.diameter) {
    if (a.diameter) {
      out << "diameter: " << *a.diameter << '\n';
    } else {
      out << "diameter: infinite\n";
    }
  }
  if (o.distance.size() == 2) {
    const int u = node_of(o.distance[0]);
    const int v = node_of(o.distance[1]);
    const auto d = distance(g, u, v);
    out << "distance(" << o.distance[0] << ", " << o.distance[1] << "): " << (d ? std::to_string(*d) : "infinite")
        << '\n';
  }
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const BichromaticPointSet P = load_points(o.points);
  std::vector<Line> cuts;
  for (const std::string& c : o.cuts) cuts.push_back(parse_line(c));
  if (o.hs_cuts) {
    const HamSandwichMatching H = ham_sandwich_matching(P);
    // Tree cuts were computed on sub-instances with the same coordinates.
    for (const CutNode& nd : H.tree.nodes()) {
      if (!nd.is_leaf()) cuts.push_back(nd.cut->line);
    }
  }
  if (!o.sequence.empty()) {
    const SequenceFile seq = load_sequence(o.sequence);
    std::string stem = o.output;
    if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".svg") stem.resize(stem.size() - 4);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
      std::vector<BRMatching> shown{seq.steps[i]};
      if (i + 1 < seq.steps.size()) shown.push_back(seq.steps[i + 1]);
      const std::string path = frame_path(stem, i, seq.steps.size());
      write_svg(path, render_svg(P, shown, cuts));
      out << path << '\n';
    }
    return kOk;
  }
  std::vector<BRMatching> shown;
  for (const std::string& m : o.matchings) shown.push_back(load_valid_matching(P, m));
  write_svg(o.output, render_svg(P, shown, cuts));
  out << o.output << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Red-blue non-crossing matchings: ham-sandwich matchings, reconfiguration, exploration"};
  app.name(args.empty() ? "bimatch" : args[0]);
  app.require_subcommand(1);
  Options o;

  auto* hs = app.add_subcommand("hs-match", "Ham-sandwich matching of a point file, with its cut tree");
  hs->add_option("points", o.points, "Point file")->required();
  hs->add_option("-o,--output", o.output, "Output matching file (default: stdout)");

  auto* con = app.add_subcommand("connect", "Compatible sequence from a matching to the ham-sandwich matching");
  con->add_option("points", o.points, "Point file")->required();
  con->add_option("matching", o.matching, "Matching file")->required();
  con->add_option("-o,--output", o.output, "Output sequence file (default: stdout)");

  auto* ver = app.add_subcommand("verify", "Check a sequence file against a point file");
  ver->add_option("points", o.points, "Point file")->required();
  ver->add_option("sequence", o.sequence, "Sequence file")->required();

  auto* exp = app.add_subcommand("explore", "Enumerate all matchings and analyze the compatibility graph");
  exp->add_option("points", o.points, "Point file");
  exp->add_option("--lower-bound", o.lower_bound, "Use the convex 4n-point instance with this n")
      ->check(CLI::PositiveNumber);
  exp->add_flag("--diameter", o.diameter, "Report the diameter");
  exp->add_option("--distance", o.distance, "Distance between two matchings (node id, M, M', or matching file)")
      ->expected(2);

  auto* ren = app.add_subcommand("render", "Render points, matchings and cuts to SVG");
  ren->add_option("points", o.points, "Point file")->required();
  ren->add_option("-m,--matching", o.matchings, "Matching file (first solid, others dashed)");
  ren->add_option("-s,--sequence", o.sequence, "Sequence file; writes one SVG per step");
  ren->add_option("-c,--cut", o.cuts, "Cut line as 'A B C' for Ax + By + C = 0");
  ren->add_flag("--hs-cuts", o.hs_cuts, "Draw the ham-sandwich cut tree");
  ren->add_option("-o,--output", o.output, "Output SVG (or file stem for sequences)")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  try {
    if (hs->parsed()) return cmd_hs_match(o, out);
    if (con->parsed()) return cmd_connect(o, out, err);
    if (ver->parsed()) return cmd_verify(o, out);
    if (exp->parsed()) return cmd_explore(o, out);
    if (ren->parsed()) return cmd_render(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvalidMatchingError& e) {
    err << "invalid matching: " << e.what() << '\n';
    return kInvalidMatching;
  } catch (const CapExceededError& e) {
    err << "enumeration cap exceeded: " << e.what() << " (set BIMATCH_ENUM_CAP to raise it)\n";
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace bimatch::cli
