// Command-line front end: every oscillation, walk, coloring, and search in
// the library behind one binary, plus the deterministic verification suites.
// All combinatorial logic lives in the library; this file only parses
// arguments, delegates, and renders reports.

#include <CLI11.hpp>
#include <json.hpp>

#include "osc/baire_osc.hpp"
#include "osc/errors.hpp"
#include "osc/finite_osc.hpp"
#include "osc/lspace.hpp"
#include "osc/ordinal.hpp"
#include "osc/seq_osc.hpp"
#include "osc/verify.hpp"
#include "osc/walks.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using Nat = std::uint64_t;
using ojson = nlohmann::ordered_json;
using osc::ord::Ordinal;

struct GlobalOptions {
  std::string format;  // empty = command default
  std::string outputPath;
  Nat seed = 0;
  bool timing = false;
  osc::verify::Budgets budgets;
};

struct Report {
  std::string command;
  ojson result = ojson::object();
  ojson counterexamples = ojson::array();
  std::string text;                // text-format body
  std::optional<std::string> csv;  // csv-format body, where supported
  std::string defaultFormat = "json";
  int exitCode = 0;
};

// ---------------------------------------------------------------- parsing

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits on any of the given separator characters; trims tokens; an empty
// or all-space input yields no tokens.
std::vector<std::string> splitAny(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      out.push_back(trimmed(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  std::string last = trimmed(current);
  if (!out.empty() || !last.empty()) out.push_back(last);
  return out;
}

std::vector<Ordinal> parseOrdinalList(const std::string& text) {
  std::vector<Ordinal> out;
  for (const std::string& tok : splitAny(text, ",")) out.push_back(Ordinal::parse(tok));
  return out;
}

std::vector<std::vector<Ordinal>> parseTupleList(const std::string& text) {
  std::vector<std::vector<Ordinal>> out;
  for (const std::string& tok : splitAny(text, ";")) out.push_back(parseOrdinalList(tok));
  return out;
}

std::vector<osc::lspace::CircleAngle> parseAngleList(const std::string& text) {
  std::vector<osc::lspace::CircleAngle> out;
  for (const std::string& tok : splitAny(text, ";,")) out.push_back(osc::lspace::parseAngle(tok));
  return out;
}

std::vector<std::size_t> parseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  for (const std::string& tok : splitAny(text, ",")) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      osc::fail("ParseError", "index list needs comma-separated naturals, got '" + tok + "'");
    out.push_back(static_cast<std::size_t>(std::stoull(tok)));
  }
  return out;
}

// Tree descriptors: `full`, `even`, or `list:<path>` with one node per line
// (comma-separated ascending naturals; an empty line is the root).
osc::baire::TreeOracle<Nat> parseTreeDescriptor(const std::string& descriptor) {
  if (descriptor == "full") return osc::baire::fullTree();
  if (descriptor == "even") return osc::baire::evenTree();
  if (descriptor.rfind("list:", 0) == 0) {
    std::string path = descriptor.substr(5);
    std::ifstream in(path);
    if (!in) osc::fail("ParseError", "cannot open tree file '" + path + "'");
    std::vector<std::vector<Nat>> nodes;
    std::string line;
    while (std::getline(in, line)) nodes.push_back(osc::seq::parseSeq(trimmed(line)));
    return osc::baire::listTree(std::move(nodes));
  }
  osc::fail("ParseError",
            "unknown tree descriptor '" + descriptor + "'; expected full, even, or list:<path>");
}

// ---------------------------------------------------------------- rendering

ojson ordinalStrings(const std::vector<Ordinal>& v) {
  ojson out = ojson::array();
  for (const Ordinal& o : v) out.push_back(o.str());
  return out;
}

std::string braced(const std::vector<Ordinal>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "}";
}

std::string formatOf(const GlobalOptions& g, const Report& rep) {
  return g.format.empty() ? rep.defaultFormat : g.format;
}

void emit(const GlobalOptions& g, const Report& rep, std::int64_t elapsedMs) {
  std::string format = formatOf(g, rep);
  std::string body;
  if (format == "json") {
    ojson envelope;
    envelope["command"] = rep.command;
    envelope["seed"] = g.seed;
    envelope["budgets"] = {{"search", g.budgets.search},
                           {"cap", g.budgets.cap},
                           {"truncation", g.budgets.truncation}};
    envelope["result"] = rep.result;
    envelope["counterexamples"] = rep.counterexamples;
    envelope["elapsed_ms"] = g.timing ? elapsedMs : 0;
    body = envelope.dump(2) + "\n";
  } else if (format == "csv") {
    if (!rep.csv)
      osc::fail("ParseError", "csv format is not available for '" + rep.command + "'");
    body = *rep.csv;
    if (!body.empty() && body.back() != '\n') body += '\n';
  } else {
    body = rep.text;
    if (!body.empty() && body.back() != '\n') body += '\n';
  }
  if (!g.outputPath.empty()) {
    std::ofstream out(g.outputPath, std::ios::binary);
    if (!out) osc::fail("IoError", "cannot open output file '" + g.outputPath + "'");
    out << body;
    if (!out) osc::fail("IoError", "cannot write output file '" + g.outputPath + "'");
  } else {
    std::cout << body;
  }
  if (g.timing) std::cerr << "elapsed: " << elapsedMs << " ms\n";
}

// ---------------------------------------------------------------- commands

struct Args {
  std::string s, t, u;          // finite sets / seq nodes
  std::string f, g;             // sequences
  std::string alpha, beta;      // ordinals
  std::string family;           // family descriptor
  Nat steps = 1;
  std::string member;
  bool list = false;
  bool memberSet = false;
  std::string target;           // bit string
  std::string xTree = "full", yTree = "full", zTree = "full";
  std::string sTree = "full", tTree = "full";
  Nat n = 0;
  std::string session;          // ordinal list
  std::string z, uAngles, vAngles, targets;
  double eps = 0.0;
  std::string a, b, phi;
  std::string suite;
};

Report runOscFinite(const Args& a) {
  Report rep;
  rep.command = "osc finite";
  rep.defaultFormat = "text";
  auto s = osc::finite::FiniteNatSet::parse(a.s);
  auto t = osc::finite::FiniteNatSet::parse(a.t);
  Nat v = osc::finite::oscFinite(s, t);
  rep.result = {{"s", s.str()}, {"t", t.str()}, {"osc", v}};
  rep.text = std::to_string(v);
  rep.csv = "osc\n" + std::to_string(v);
  return rep;
}

Report runOscSeq(const Args& a) {
  Report rep;
  rep.command = "osc seq";
  rep.defaultFormat = "text";
  auto f = osc::seq::parseSeq(a.f);
  auto g = osc::seq::parseSeq(a.g);
  Nat v = osc::seq::oscSeq(f, g);
  rep.result = {{"f", osc::seq::strSeq(f)}, {"g", osc::seq::strSeq(g)}, {"osc", v}};
  rep.text = std::to_string(v);
  rep.csv = "osc\n" + std::to_string(v);
  return rep;
}

Report runOscTriple(const Args& a) {
  Report rep;
  rep.command = "osc triple";
  rep.defaultFormat = "text";
  auto s = osc::finite::FiniteNatSet::parse(a.s);
  auto t = osc::finite::FiniteNatSet::parse(a.t);
  auto u = osc::finite::FiniteNatSet::parse(a.u);
  Nat v = osc::finite::oscTriple(s, t, u);
  rep.result = {{"s", s.str()}, {"t", t.str()}, {"u", u.str()}, {"osc", v}};
  rep.text = std::to_string(v);
  rep.csv = "osc\n" + std::to_string(v);
  return rep;
}

Report runOscOrdinal(const Args& a) {
  Report rep;
  rep.command = "osc ordinal";
  rep.defaultFormat = "text";
  Ordinal alpha = Ordinal::parse(a.alpha);
  Ordinal beta = Ordinal::parse(a.beta);
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  auto r = osc::walks::oscOrdinal(sys, alpha, beta, C);
  rep.result = {{"alpha", alpha.str()},
                {"beta", beta.str()},
                {"value", r.value},
                {"oscSet", ordinalStrings(r.oscSet)}};
  rep.text = std::to_string(r.value);
  rep.csv = "value\n" + std::to_string(r.value);
  return rep;
}

Report runWalk(const Args& a) {
  Report rep;
  rep.command = "walk";
  Ordinal alpha = Ordinal::parse(a.alpha);
  Ordinal beta = Ordinal::parse(a.beta);
  auto C = osc::walks::CSequence::canonical();
  auto w = osc::walks::walk(alpha, beta, C);
  rep.result = {{"alpha", alpha.str()},
                {"beta", beta.str()},
                {"upperTrace", ordinalStrings(w.upperTrace)},
                {"lowerTrace", ordinalStrings(w.lowerTrace)}};
  rep.text = "Tr = " + braced(w.upperTrace) + "\nL = " + braced(w.lowerTrace);
  return rep;
}

Report runDerivative(const Args& a) {
  Report rep;
  rep.command = "derivative";
  auto X = osc::finite::parseFamilyDescriptor(a.family);
  auto D = osc::finite::truncatedDerivative(X, a.steps);
  rep.result = {{"family", X.description()},
                {"steps", a.steps},
                {"derived", D.description()},
                {"elementBound", D.elementBound()}};
  std::ostringstream text;
  text << D.description();
  if (a.memberSet) {
    auto m = osc::finite::FiniteNatSet::parse(a.member);
    bool value = D.member(m);
    rep.result["member"] = {{"set", m.str()}, {"value", value}};
    text << "\nmember {" << m.str() << "}: " << (value ? "true" : "false");
  }
  if (a.list) {
    const auto* members = D.list();
    if (!members)
      osc::fail("PreconditionViolated",
                "the derived family keeps no explicit member list; query --member instead");
    ojson arr = ojson::array();
    for (const auto& m : *members) arr.push_back(m.str());
    rep.result["members"] = arr;
    rep.result["memberCount"] = members->size();
    for (const auto& m : *members) text << "\n{" << m.str() << "}";
  }
  rep.text = text.str();
  return rep;
}

Report runRealizeBits(const Args& a) {
  Report rep;
  rep.command = "realize-bits";
  auto bits = osc::baire::bitsFromString(a.target);
  auto TX = parseTreeDescriptor(a.xTree);
  auto TY = parseTreeDescriptor(a.yTree);
  auto TZ = parseTreeDescriptor(a.zTree);
  auto triple = osc::baire::realizeBits(TX, TY, TZ, bits);
  auto achieved = osc::baire::oscInfinite(triple);
  rep.result = {{"target", a.target},
                {"x", triple.x},
                {"y", triple.y},
                {"z", triple.z},
                {"window", triple.window ? ojson(*triple.window) : ojson(nullptr)},
                {"bits", osc::baire::bitsToString(achieved)}};
  std::ostringstream text;
  auto seqLine = [&](const char* name, const std::vector<Nat>& v) {
    text << name << " = " << osc::seq::strSeq(v) << "\n";
  };
  seqLine("x", triple.x);
  seqLine("y", triple.y);
  seqLine("z", triple.z);
  text << "bits = " << osc::baire::bitsToString(achieved);
  rep.text = text.str();
  return rep;
}

Report runExtendSplitting(const Args& a) {
  Report rep;
  rep.command = "extend-splitting";
  auto S = parseTreeDescriptor(a.sTree);
  auto T = parseTreeDescriptor(a.tTree);
  auto s = osc::seq::parseSeq(a.s);
  auto t = osc::seq::parseSeq(a.t);
  auto e = osc::seq::extendSplitting(S, T, s, t, a.n);
  rep.result = {{"sExtension", osc::seq::strSeq(e.sExtension)},
                {"tExtension", osc::seq::strSeq(e.tExtension)},
                {"baselineOsc", e.baselineOsc},
                {"finalOsc", e.finalOsc},
                {"swapped", e.swapped}};
  std::ostringstream text;
  text << "s' = " << osc::seq::strSeq(e.sExtension) << "\n"
       << "t' = " << osc::seq::strSeq(e.tExtension) << "\n"
       << "osc: " << e.baselineOsc << " -> " << e.finalOsc;
  rep.text = text.str();
  return rep;
}

Report runColorRefined(const Args& a) {
  Report rep;
  rep.command = "color refined";
  rep.defaultFormat = "text";
  auto f = osc::seq::parseSeq(a.f);
  auto g = osc::seq::parseSeq(a.g);
  Nat v = osc::seq::refinedColor(f, g, osc::seq::cantorPairing());
  rep.result = {{"f", osc::seq::strSeq(f)}, {"g", osc::seq::strSeq(g)}, {"color", v}};
  rep.text = std::to_string(v);
  rep.csv = "color\n" + std::to_string(v);
  return rep;
}

Report runColorFinal(const Args& a) {
  Report rep;
  rep.command = "color final";
  rep.defaultFormat = "text";
  auto f = osc::seq::parseSeq(a.f);
  auto g = osc::seq::parseSeq(a.g);
  auto e = osc::seq::RectangleEnumeration::canonical();
  Nat v = osc::seq::finalColor(f, g, e, osc::seq::cantorPairing());
  rep.result = {{"f", osc::seq::strSeq(f)}, {"g", osc::seq::strSeq(g)}, {"color", v}};
  rep.text = std::to_string(v);
  rep.csv = "color\n" + std::to_string(v);
  return rep;
}

Report runColorMoore(const Args& a) {
  Report rep;
  rep.command = "color moore";
  rep.defaultFormat = "text";
  Ordinal alpha = Ordinal::parse(a.alpha);
  Ordinal beta = Ordinal::parse(a.beta);
  osc::lspace::ZAssignment Z(parseOrdinalList(a.session));
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  auto color = osc::lspace::mooreColor(alpha, beta, Z, sys, C);
  auto [x, y] = osc::lspace::angleCoordinates(color);
  rep.result = {{"alpha", alpha.str()},
                {"beta", beta.str()},
                {"angle", osc::lspace::angleText(color)},
                {"x", x},
                {"y", y}};
  rep.text = osc::lspace::angleText(color);
  return rep;
}

Report runKronecker(const GlobalOptions& g, const Args& a) {
  Report rep;
  rep.command = "kronecker";
  rep.defaultFormat = "text";
  auto z = parseAngleList(a.z);
  auto u = parseAngleList(a.uAngles);
  auto v = parseAngleList(a.vAngles);
  Nat m = osc::lspace::kroneckerSearch(z, u, v, a.eps, g.budgets.cap);
  rep.result = {{"index", m}};
  rep.text = std::to_string(m);
  rep.csv = "index\n" + std::to_string(m);
  return rep;
}

Report runLspaceSample(const Args& a) {
  Report rep;
  rep.command = "lspace sample";
  rep.defaultFormat = "csv";
  auto xis = parseOrdinalList(a.s);
  auto betas = parseOrdinalList(a.t);
  osc::lspace::ZAssignment Z(parseOrdinalList(a.session));
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  auto rows = osc::lspace::sampleLSpace(xis, betas, Z, sys, C);
  std::string csv = osc::lspace::sampleCsv(rows);
  rep.csv = csv;
  rep.text = csv;
  ojson arr = ojson::array();
  for (const auto& row : rows) {
    arr.push_back({{"beta", row.beta.str()},
                   {"xi", row.xi.str()},
                   {"angle", osc::lspace::angleText(row.angle)},
                   {"x", row.x},
                   {"y", row.y}});
  }
  rep.result = {{"rows", arr}};
  return rep;
}

Report runLspaceHit(const GlobalOptions& g, const Args& a) {
  Report rep;
  rep.command = "lspace hit";
  auto A = parseTupleList(a.a);
  auto B = parseTupleList(a.b);
  auto targets = parseAngleList(a.targets);
  auto phi = parseIndexList(a.phi);
  osc::lspace::ZAssignment Z(parseOrdinalList(a.session));
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  auto r = osc::lspace::neighborhoodHit(A, B, targets, a.eps, phi, Z, sys, C, g.budgets.cap);
  ojson colors = ojson::array();
  for (const auto& c : r.colors) colors.push_back(osc::lspace::angleText(c));
  rep.result = {{"hit", r.hit},
                {"pairsExamined", r.pairsExamined},
                {"a", r.a ? ordinalStrings(*r.a) : ojson(nullptr)},
                {"b", r.b ? ordinalStrings(*r.b) : ojson(nullptr)},
                {"colors", colors},
                {"nearestMiss", r.hasNearestMiss ? ojson(r.nearestMiss) : ojson(nullptr)},
                {"nearestA", r.nearestA ? ordinalStrings(*r.nearestA) : ojson(nullptr)},
                {"nearestB", r.nearestB ? ordinalStrings(*r.nearestB) : ojson(nullptr)}};
  std::ostringstream text;
  if (r.hit) {
    text << "hit after " << r.pairsExamined << " pair(s)\n"
         << "a = " << braced(*r.a) << "\n"
         << "b = " << braced(*r.b);
  } else {
    text << "no hit in " << r.pairsExamined << " pair(s)";
    if (r.hasNearestMiss) text << "\nnearest miss: " << r.nearestMiss;
  }
  rep.text = text.str();
  return rep;
}

Report runVerify(const GlobalOptions& g, const Args& a) {
  Report rep;
  rep.command = "verify " + a.suite;
  auto sr = osc::verify::runSuite(a.suite, g.seed, g.budgets);
  ojson props = ojson::array();
  for (const auto& p : sr.properties) {
    props.push_back({{"property", p.property},
                     {"checks", p.checks},
                     {"failures", p.counterexamples.size()}});
  }
  rep.result = {{"suite", sr.suite},
                {"passed", sr.passed()},
                {"totalChecks", sr.totalChecks()},
                {"properties", props}};
  for (const auto& c : sr.allCounterexamples()) {
    rep.counterexamples.push_back(
        {{"property", c.property}, {"input", c.input}, {"detail", c.detail}});
  }
  std::ostringstream text;
  text << "suite " << sr.suite << ": " << (sr.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& p : sr.properties) {
    text << "  " << p.property << " ";
    if (p.passed()) {
      text << "ok (" << p.checks << " checks)\n";
    } else {
      text << "FAIL (" << p.checks << " checks, " << p.counterexamples.size()
           << " counterexamples)\n";
      for (const auto& c : p.counterexamples) {
        text << "    input:  " << c.input << "\n    detail: " << c.detail << "\n";
      }
    }
  }
  text << "total checks: " << sr.totalChecks();
  rep.text = text.str();
  std::ostringstream csv;
  csv << "suite,property,checks,counterexamples\n";
  for (const auto& p : sr.properties) {
    csv << sr.suite << ',' << p.property << ',' << p.checks << ',' << p.counterexamples.size()
        << '\n';
  }
  rep.csv = csv.str();
  rep.exitCode = sr.passed() ? 0 : 1;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions g;
  Args a;
  std::function<Report()> handler;

  CLI::App app{"oscillation colorings and ordinal walks"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", g.format, "report format: json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", g.outputPath, "write the report to this file instead of stdout");
  app.add_option("--seed", g.seed, "seed for the verification suites (default 0)");
  app.add_flag("--timing", g.timing,
               "include measured elapsed_ms in reports (reports are otherwise byte-stable)");
  app.add_option("--search-budget", g.budgets.search,
                 "witness/index search and enumeration window budget");
  app.add_option("--cap", g.budgets.cap, "cap for power and pair searches");
  app.add_option("--truncation", g.budgets.truncation, "family truncation bound");

  auto addSub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // osc finite|seq|triple|ordinal
  CLI::App* oscCmd = addSub(&app, "osc", "oscillation of two or three objects");
  oscCmd->require_subcommand(1);
  {
    CLI::App* c = addSub(oscCmd, "finite", "oscillation of two finite sets of naturals");
    c->add_option("--s", a.s, "first set, comma-separated ascending")->required();
    c->add_option("--t", a.t, "second set")->required();
    c->callback([&] { handler = [&] { return runOscFinite(a); }; });
  }
  {
    CLI::App* c = addSub(oscCmd, "seq", "oscillation of two increasing sequences");
    c->add_option("--f", a.f, "first sequence, comma-separated ascending")->required();
    c->add_option("--g", a.g, "second sequence (same length)")->required();
    c->callback([&] { handler = [&] { return runOscSeq(a); }; });
  }
  {
    CLI::App* c = addSub(oscCmd, "triple", "oscillation of three finite sets");
    c->add_option("--s", a.s, "first set")->required();
    c->add_option("--t", a.t, "second set")->required();
    c->add_option("--u", a.u, "third set")->required();
    c->callback([&] { handler = [&] { return runOscTriple(a); }; });
  }
  {
    CLI::App* c = addSub(oscCmd, "ordinal", "oscillation of two weight functions along a walk");
    c->add_option("--alpha", a.alpha, "ordinal 1 <= alpha < beta")->required();
    c->add_option("--beta", a.beta, "ordinal above alpha")->required();
    c->callback([&] { handler = [&] { return runOscOrdinal(a); }; });
  }

  {
    CLI::App* c = addSub(&app, "walk", "walk between two ordinals along canonical ladders");
    c->add_option("--alpha", a.alpha, "ordinal 1 <= alpha <= beta")->required();
    c->add_option("--beta", a.beta, "starting ordinal")->required();
    c->callback([&] { handler = [&] { return runWalk(a); }; });
  }

  {
    CLI::App* c = addSub(&app, "derivative", "k-fold truncated derivative of a set family");
    c->add_option("--family", a.family,
                  "family descriptor: canonical:k=<n>,M=<n> or explicit:<path>")
        ->required();
    c->add_option("--steps", a.steps, "how many derivative steps (default 1)");
    c->add_option("--member", a.member, "set to test for membership in the derived family");
    c->add_flag("--list", a.list, "list the derived family's members (explicit families)");
    c->callback([&, c] {
      a.memberSet = c->count("--member") > 0;
      handler = [&] { return runDerivative(a); };
    });
  }

  {
    CLI::App* c = addSub(&app, "realize-bits",
                         "build branch prefixes whose oscillation bits match a target");
    c->add_option("--target", a.target, "target bit string, e.g. 0110")->required();
    c->add_option("--x-tree", a.xTree, "tree for x: full, even, or list:<path>");
    c->add_option("--y-tree", a.yTree, "tree for y");
    c->add_option("--z-tree", a.zTree, "tree for z");
    c->callback([&] { handler = [&] { return runRealizeBits(a); }; });
  }

  {
    CLI::App* c = addSub(&app, "extend-splitting",
                         "grow two tree nodes to raise their oscillation by n");
    c->add_option("--s", a.s, "first node, comma-separated ascending")->required();
    c->add_option("--t", a.t, "second node")->required();
    c->add_option("--n", a.n, "how many extra descents")->required();
    c->add_option("--s-tree", a.sTree, "tree for s: full, even, or list:<path>");
    c->add_option("--t-tree", a.tTree, "tree for t");
    c->callback([&] { handler = [&] { return runExtendSplitting(a); }; });
  }

  // color refined|final|moore
  CLI::App* colorCmd = addSub(&app, "color", "pair colorings");
  colorCmd->require_subcommand(1);
  {
    CLI::App* c = addSub(colorCmd, "refined",
                         "binary-expansion color of the pair oscillation");
    c->add_option("--f", a.f, "first sequence")->required();
    c->add_option("--g", a.g, "second sequence")->required();
    c->callback([&] { handler = [&] { return runColorRefined(a); }; });
  }
  {
    CLI::App* c = addSub(colorCmd, "final", "rectangle-enumeration color of a pair");
    c->add_option("--f", a.f, "first sequence")->required();
    c->add_option("--g", a.g, "second sequence")->required();
    c->callback([&] { handler = [&] { return runColorFinal(a); }; });
  }
  {
    CLI::App* c = addSub(colorCmd, "moore", "circle-valued color of an ordinal pair");
    c->add_option("--alpha", a.alpha, "ordinal 1 <= alpha < beta, inside the session")
        ->required();
    c->add_option("--beta", a.beta, "ordinal above alpha")->required();
    c->add_option("--session", a.session, "comma-separated session ordinals")->required();
    c->callback([&] { handler = [&] { return runColorMoore(a); }; });
  }

  {
    CLI::App* c = addSub(&app, "kronecker",
                         "least power pushing every base point into its target");
    c->add_option("--z", a.z, "base angles, separated by ; or ,")->required();
    c->add_option("--u", a.uAngles, "start angles")->required();
    c->add_option("--v", a.vAngles, "target angles")->required();
    c->add_option("--eps", a.eps, "chordal tolerance (> 0)")->required();
    c->callback([&] { handler = [&] { return runKronecker(g, a); }; });
  }

  // lspace sample|hit
  CLI::App* lspaceCmd = addSub(&app, "lspace", "circle-point family tools");
  lspaceCmd->require_subcommand(1);
  {
    CLI::App* c = addSub(lspaceCmd, "sample", "evaluate point families over a grid");
    c->add_option("--xis", a.s, "comma-separated evaluation ordinals")->required();
    c->add_option("--betas", a.t, "comma-separated family indices")->required();
    c->add_option("--session", a.session, "comma-separated session ordinals")->required();
    c->callback([&] { handler = [&] { return runLspaceSample(a); }; });
  }
  {
    CLI::App* c = addSub(lspaceCmd, "hit", "search tuple pairs for colors near targets");
    c->add_option("--a", a.a, "candidate a-tuples, ; between tuples, , inside")->required();
    c->add_option("--b", a.b, "candidate b-tuples")->required();
    c->add_option("--targets", a.targets, "target angles, separated by ;")->required();
    c->add_option("--eps", a.eps, "chordal tolerance (> 0)")->required();
    c->add_option("--phi", a.phi, "comma-separated b-indices, one per a-coordinate")
        ->required();
    c->add_option("--session", a.session, "comma-separated session ordinals")->required();
    c->callback([&] { handler = [&] { return runLspaceHit(g, a); }; });
  }

  {
    CLI::App* c = addSub(&app, "verify", "run a deterministic verification suite");
    c->add_option("suite", a.suite, "finite, baire, seq, walks, lspace, or all")->required();
    c->callback([&] { handler = [&] { return runVerify(g, a); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = handler();
    auto elapsed = std::chrono::steady_clock::now() - t0;
    emit(g, rep,
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    return rep.exitCode;
  } catch (const osc::Error& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
