// Acceptance gate: one check per release criterion, each timed against its
// stated wall-clock limit, one PASS/FAIL line per criterion. The first
// argument names the command-line tool (used by the determinism criterion).
// Exits 0 only when every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "osc/lspace.hpp"
#include "osc/seq_osc.hpp"
#include "osc/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using osc::verify::Nat;

constexpr Nat kSeed = 7;

struct Outcome {
  bool ok = true;
  std::string note;
};

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs one sub-check under its own time limit. The body either returns a
// PropertyResult (pass = no counterexamples and at least one check) or a
// bool. Failures and overruns land in the outcome's note.
template <class F>
void runPart(Outcome& out, const char* label, double limitSeconds, F&& body) {
  if (!out.ok) return;
  auto t0 = Clock::now();
  bool ok = false;
  std::string why;
  using R = std::invoke_result_t<F&>;
  if constexpr (std::is_same_v<R, bool>) {
    ok = body();
    if (!ok) why = "check failed";
  } else {
    R r = body();
    if (!r.passed()) {
      const auto& cx = r.counterexamples.front();
      why = std::to_string(r.counterexamples.size()) + " counterexample(s), first: " + cx.input +
            " — " + cx.detail;
    } else if (r.checks == 0) {
      why = "ran no checks";
    } else {
      ok = true;
    }
  }
  double secs = secondsSince(t0);
  if (ok && secs >= limitSeconds) {
    ok = false;
    why = "exceeded the " + std::to_string(static_cast<int>(limitSeconds)) + "s limit (" +
          std::to_string(secs) + "s)";
  }
  if (!ok) {
    out.ok = false;
    out.note = std::string(label) + ": " + why;
  }
}

bool allTwoByTwoTables(std::string& note) {
  for (Nat code = 0; code < 256; ++code) {
    std::vector<std::vector<Nat>> target{{code & 3, (code >> 2) & 3},
                                         {(code >> 4) & 3, (code >> 6) & 3}};
    auto demo = osc::seq::tableDemo(target);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Nat got = osc::seq::finalColor(demo.A[i], demo.B[j], demo.enumeration, demo.pairing);
        if (got != target[i][j]) {
          note = "target " + std::to_string(code) + " cell (" + std::to_string(i) + "," +
                 std::to_string(j) + ") coloured " + std::to_string(got) + " instead of " +
                 std::to_string(target[i][j]);
          return false;
        }
      }
  }
  return true;
}

struct ToolRun {
  int exitCode = -1;
  std::string out;
  bool ran = false;
};

ToolRun runTool(const std::string& tool, const std::string& args) {
  ToolRun r;
  std::string cmd = "\"" + tool + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) {
    r.exitCode = WEXITSTATUS(status);
    r.ran = true;
  }
  return r;
}

bool runCriterion(int number, double limitSeconds, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("escaped error: ") + e.what();
  }
  double secs = secondsSince(t0);
  if (out.ok && secs >= limitSeconds) {
    out.ok = false;
    out.note = "exceeded the overall " + std::to_string(static_cast<int>(limitSeconds)) +
               "s limit";
  }
  std::printf("criterion %d: %s (%.2fs)\n", number, out.ok ? "PASS" : "FAIL", secs);
  if (!out.ok) std::printf("  %s\n", out.note.c_str());
  std::fflush(stdout);
  return out.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-osctool>\n", argv[0]);
    return 2;
  }
  const std::string tool = argv[1];
  bool all = true;
  auto criterion = [&](int number, double limit, const std::function<Outcome()>& body) {
    all = runCriterion(number, limit, body) && all;
  };

  // Pair oscillation matches the independent block oracle, and the depth-k
  // chains realize every value up to 2k-1 for k = 1..4.
  criterion(1, 10.0, [] {
    Outcome out;
    runPart(out, "brute-force agreement", 5.0,
            [] { return osc::verify::oscBruteForceAgreement(kSeed, 10'000); });
    runPart(out, "chain realization", 5.0, [] { return osc::verify::derivativeChainRealization(4); });
    return out;
  });

  // Padding all three sets with common large elements never moves the
  // triple oscillation.
  criterion(2, 5.0, [] {
    Outcome out;
    runPart(out, "triple locality", 5.0,
            [] { return osc::verify::oscTripleLocality(kSeed, 1'000, 100); });
    return out;
  });

  // Realized bit patterns read back verbatim for 200 random 16-bit targets.
  criterion(3, 10.0, [] {
    Outcome out;
    runPart(out, "bit realization round trip", 10.0,
            [] { return osc::verify::realizeBitsRoundTrip(kSeed, 200, 16); });
    return out;
  });

  // Image sequences grow strictly on 100 streams and every shallow image
  // node has splitting witnesses within the index budget.
  criterion(4, 30.0, [] {
    Outcome out;
    runPart(out, "image monotonicity", 30.0,
            [] { return osc::verify::superperfectMonotone(kSeed, 100, 5); });
    runPart(out, "image splitting witnesses", 30.0,
            [] { return osc::verify::imageSplittingWitness(10'000); });
    return out;
  });

  // Splitting extensions add exactly n crossings, and the colouring demo
  // reproduces every 2x2 table over {0..3}.
  criterion(5, 35.0, [] {
    Outcome out;
    runPart(out, "splitting exactness", 5.0,
            [] { return osc::verify::extendSplittingExactness(kSeed, 100); });
    runPart(out, "all 2x2 tables", 30.0, [] {
      std::string note;
      if (allTwoByTwoTables(note)) return true;
      std::fprintf(stderr, "%s\n", note.c_str());
      return false;
    });
    return out;
  });

  // Trace concatenation has no counterexamples on the 200-ordinal sample,
  // and lower-trace minima pass their per-gamma thresholds.
  criterion(6, 90.0, [] {
    Outcome out;
    runPart(out, "trace concatenation", 60.0,
            [] { return osc::verify::traceConcatenationSampled(kSeed, 200); });
    runPart(out, "trace minimum thresholds", 30.0,
            [] { return osc::verify::traceMinThresholds(); });
    return out;
  });

  // Weight-system windows stabilize between enumeration budgets.
  criterion(7, 120.0, [] {
    Outcome out;
    runPart(out, "finite-to-one stabilization", 120.0,
            [] { return osc::verify::eStabilization(10'000, 100'000); });
    runPart(out, "coherence stabilization", 120.0,
            [] { return osc::verify::coherenceStabilization(10'000, 100'000); });
    return out;
  });

  // The frozen power search lands on 6, sessions stay rationally
  // independent, and sampled points sit on the unit circle.
  criterion(8, 16.0, [] {
    Outcome out;
    runPart(out, "power search", 1.0, [] {
      auto z = osc::lspace::angleSqrt(2);
      auto unit = osc::lspace::angleZero();
      auto minusOne = osc::lspace::angleFromRational(osc::lspace::Rat(1, 2));
      return osc::lspace::kroneckerSearch({z}, {unit}, {minusOne}, 0.3, 10'000'000) == 6;
    });
    runPart(out, "rational independence", 10.0,
            [] { return osc::verify::independenceExhaustive(); });
    runPart(out, "unit circle residence", 5.0,
            [] { return osc::verify::unitCircleResidence(kSeed); });
    return out;
  });

  // Two full verification runs through the real tool emit identical bytes.
  criterion(9, 300.0, [&tool] {
    Outcome out;
    auto first = runTool(tool, "verify all --seed 7");
    auto second = runTool(tool, "verify all --seed 7");
    if (!first.ran || !second.ran) {
      out.ok = false;
      out.note = "could not run " + tool;
    } else if (first.exitCode != 0 || second.exitCode != 0) {
      out.ok = false;
      out.note = "verification runs exited with " + std::to_string(first.exitCode) + " and " +
                 std::to_string(second.exitCode);
    } else if (first.out != second.out) {
      out.ok = false;
      out.note = "the two reports differ";
    } else if (first.out.empty()) {
      out.ok = false;
      out.note = "the reports are empty";
    }
    return out;
  });

  return all ? 0 : 1;
}
