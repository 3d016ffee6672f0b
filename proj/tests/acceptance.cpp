// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kcore/cli.hpp"
#include "test_support.hpp"

using namespace kcore;
namespace fs = std::filesystem;

namespace {

  // Collects failed checks for one criterion.
  struct Check {
    std::vector<std::string> failures;

    void operator()(bool ok, std::string const& what) {
      if (!ok && failures.size() < 20) {
        failures.push_back(what);
      }
    }
  };

  struct Criterion {
    int                          number;
    std::string                  title;
    double                       limit_seconds;
    std::function<void(Check&)>  body;
  };

  ////////////////////////////////////////////////////////////////////////

  void dinf_exact(Check& check) {
    auto const f     = test::fixture_dinf();
    auto const c     = f.core();
    auto const k     = kurosh_rank(c);
    auto const slice = full_cover_bfs(*f.fp, test::words(f.fp, f.gens), 100);
    check(c.vertex_count() == 2, "vertex count 2");
    check(is_complete(c), "complete");
    check(index(c) == 2, "index 2");
    check(k.krank == 1, "krank 1");
    check(slice.complete && slice.index == 2, "coset enumeration index 2");
    check(slice.table == test::transition_table(c),
          "coset table equals core transitions");
  }

  void m_witness(Check& check) {
    auto const f = test::fixture_m();
    auto const c = f.core();
    check(!index(c).has_value(), "index infinite");
    check(kurosh_rank(c).krank == 1, "krank 1");
    auto const w = separating_witness(c);
    check(is_cyclically_reduced(w.g), "g cyclically reduced");
    check(w.g.size() >= 2, "length of g at least 2");
    check(rank(c, w.g) == 0, "rank(g) = 0");
    check(w.trace.size() - 1 <= c.vertex_count(),
          "at most vertex-count descent steps");
    check(w.exponent == 6, "exponent 6");

    // exhaustive over reduced words of length <= 4
    std::size_t shortest = 0;
    for (auto const& x : test::all_reduced_words(*f.fp, 4)) {
      if (x.size() >= 2 && is_cyclically_reduced(x) && rank(c, x) == 0) {
        shortest = shortest == 0 ? x.size() : std::min(shortest, x.size());
      }
    }
    check(shortest == 4, "no cyclically reduced rank-0 word of length 2");
    check(rank(c, test::word(f.fp, "a1 b1 a1 b2")) == 0,
          "a1 b1 a1 b2 has rank 0");
    check(w.g.size() == shortest, "witness has minimal length");
  }

  void v_exact(Check& check) {
    auto const c = test::fixture_v().core();
    auto const k = kurosh_rank(c);
    check(c.vertex_count() == 2, "folds to 2 vertices");
    check(k.krank == 2, "krank 2");
    check(k.graph_rank == 0, "graph rank 0");
    check(k.vertex_groups.size() == 2, "two vertex groups");
    for (auto const& s : k.vertex_groups) {
      check(s.parent == FactorTag::A && s.size() == 2, "vertex group Z2 in A");
    }
  }

  struct SoakResult {
    std::size_t              nontrivial = 0, violations = 0, spelled = 0;
    std::vector<std::string> spelling_failures;
  };

  SoakResult& soak_result() {
    static SoakResult r;
    return r;
  }

  void separation_soak(Check& check) {
    auto const fixtures = test::infinite_index_fixtures();
    check(fixtures.size() >= 5, "at least 5 fixtures");
    SampleParams const params{10000, 4, 6, 20241016};
    unsigned const     threads
        = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    SoakResult& total = soak_result();
    for (auto const& f : fixtures) {
      check(f.fp->a.order() <= 6 && f.fp->b.order() <= 6,
            f.name + ": factor orders at most 6");
      auto const c = f.core();
      check(!is_complete(c), f.name + ": infinite index");
      auto const r = verify_separation(c, params, true, threads).report;
      std::size_t const v = r["violations"];
      total.nontrivial += r["nontrivial"].get<std::size_t>();
      total.violations += v;
      total.spelled += r["spelling_passed"].get<std::size_t>();
      for (auto const& wrn : r["spelling_warnings"]) {
        total.spelling_failures.push_back(f.name + " g=" + r["g"].get<std::string>()
                                          + " " + wrn.dump());
      }
      check(v == 0, f.name + ": " + std::to_string(v) + " violations");
      std::cout << "    " << f.name << ": g=" << r["g"].get<std::string>()
                << " nontrivial=" << r["nontrivial"] << " violations=" << v
                << "\n";
    }
  }

  void intersection_soak(Check& check) {
    auto const fixtures = test::finite_index_fixtures();
    check(fixtures.size() >= 3, "at least 3 fixtures");
    std::mt19937_64 rng(77);
    for (auto const& f : fixtures) {
      auto const c = f.core();
      for (int i = 0; i < 100; ++i) {
        Word const x = test::random_word(*f.fp, rng, 10);
        auto const w = intersection_witness(c, x);
        std::string const tag = f.name + " x=" + to_string(x);
        check(member(c, w.h), tag + ": h in H");
        check(!w.h.empty(), tag + ": h nontrivial");
        check(evaluate_conjugate_product(*f.fp, x, w.expression) == w.h,
              tag + ": expression re-evaluates to h");
      }
    }
  }

  void property_suites(Check& check) {
    auto const      pairs = test::group_pairs();
    std::mt19937_64 rng(1016);
    for (int i = 0; i < 1000; ++i) {
      auto const&        fpp  = pairs[i % pairs.size()];
      FreeProduct const& fp   = *fpp;
      auto const         gens = test::random_gens(fp, rng);
      auto const         c    = build_core(fpp, gens);
      std::string const  tag  = "case " + std::to_string(i);

      // factorrank (a) (b) (c)
      Word const a = test::random_word(fp, rng, 5);
      Word       b = test::random_word(fp, rng, 5);
      Word       g = test::random_word(fp, rng, 5);
      if (b.front().tag == a.back().tag) {
        b.insert(b.begin(), {other(a.back().tag), 1});
      }
      if (g.front().tag == b.back().tag) {
        g.insert(g.begin(), {other(b.back().tag), 1});
      }
      Word ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      Word abg = ab;
      abg.insert(abg.end(), g.begin(), g.end());
      auto const ma = monodromy(c, a), mb = monodromy(c, b),
                 mab = monodromy(c, ab);
      auto const da = ma.dom(), dab = mab.dom(), rb = mb.ran(),
                 rab = mab.ran();
      check(std::includes(da.begin(), da.end(), dab.begin(), dab.end()),
            tag + ": factorrank (a)");
      check(std::includes(rb.begin(), rb.end(), rab.begin(), rab.end()),
            tag + ": factorrank (b)");
      check(rank(c, abg) <= mb.rank(), tag + ": factorrank (c)");

      // rank(w) = rank(w^-1)
      Word const w = test::random_word(fp, rng, 10);
      check(rank(c, w) == rank(c, invert(fp, w)), tag + ": inverse rank");

      // Span(S) = Span(<S>)
      Word prod;
      for (std::size_t k = 1 + uniform_below(rng, 4); k > 0; --k) {
        Word x = gens[uniform_below(rng, gens.size())];
        if (uniform_below(rng, 2) == 1) {
          x = invert(fp, x);
        }
        prod = concat_reduce(fp, prod, x);
      }
      auto more = gens;
      more.push_back(prod);
      check(build_core(fpp, more) == c, tag + ": span stability");

      // reduce confluence
      Word const raw = test::random_raw_word(fp, rng, 14);
      check(test::reduce_by_random_rules(fp, raw, rng) == reduce(fp, raw),
            tag + ": confluence");

      // prune idempotence, also after rebasing
      auto const r = rebase(c, uniform_below(rng, c.vertex_count()));
      check(prune_to_span(c) == c && prune_to_span(r) == r,
            tag + ": prune idempotence");

      // membership closure
      Word const u  = gens[uniform_below(rng, gens.size())];
      Word const v  = gens[uniform_below(rng, gens.size())];
      Word const uv = concat_reduce(fp, u, invert(fp, v));
      check(member(c, uv) && member(c, invert(fp, uv)),
            tag + ": membership closure");

      // ball positives
      bool all = true;
      for (auto const& x : enumerate_ball(fp, gens, 2)) {
        all = all && member(c, x);
      }
      check(all, tag + ": ball positives");
    }
  }

  void spelling(Check& check) {
    SoakResult const& r = soak_result();
    check(r.nontrivial > 0, "soak ran");
    for (auto const& s : r.spelling_failures) {
      std::cout << "    spelling failure (advisory): " << s << "\n";
    }
    double const rate = r.nontrivial == 0
                            ? 0.0
                            : static_cast<double>(r.spelled)
                                  / static_cast<double>(r.nontrivial);
    std::cout << "    spelling passed " << r.spelled << "/" << r.nontrivial
              << "\n";
    check(rate >= 0.99, "pass rate at least 99%");
  }

  std::string run_cli(std::vector<std::string> args, int& code) {
    std::ostringstream out, err;
    code = run(std::move(args), out, err);
    return std::to_string(code) + "\n" + out.str() + "\x1f" + err.str();
  }

  void determinism(Check& check) {
    fs::path const dir = fs::temp_directory_path()
                         / ("kcore-accept-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto const groups = (dir / "groups.json").string();
    write_file(groups, R"({"A": {"kind": "cyclic", "order": 2},
                           "B": {"kind": "symmetric", "degree": 3}})");
    auto const core = (dir / "core.json").string();
    auto const fin  = (dir / "fin.json").string();
    auto const out1 = (dir / "out1").string();

    std::vector<std::vector<std::string>> const commands = {
        {"build", "--groups", groups, "--gens", "a1 b2 a1 b3; b1 a1 b4 a1 b1"},
        {"build", "--groups", groups, "--gens", "a1 b2 a1 b3; b1 a1 b4 a1 b1",
         "--out", core},
        {"build", "--groups", groups, "--gens", "a1; b1", "--out", fin},
        {"info", core},
        {"member", core, "a1 b2 a1 b3"},
        {"member", core, "b1"},
        {"rank", core, "a1 b1"},
        {"witness", core},
        {"intersect", fin, "a1 b1 a1 b2"},
        {"intersect", core, "a1"},
        {"verify", core, "--samples", "500", "--max-conj", "4", "--max-len",
         "6", "--seed", "3", "--spelling"},
        {"verify", core, "--samples", "500", "--max-conj", "4", "--max-len",
         "6", "--seed", "3", "--threads", "3"},
        {"dot", core},
        {"dot", core, "--out", out1},
        {"member", core, "a9"},
    };
    for (auto const& cmd : commands) {
      std::string label;
      for (auto const& a : cmd) {
        label += a + " ";
      }
      int        c1 = 0, c2 = 0;
      auto const first = run_cli(cmd, c1);
      std::string const file1 = cmd.back() == core || cmd.back() == fin
                                        || cmd.back() == out1
                                    ? read_file(cmd.back())
                                    : "";
      auto const second = run_cli(cmd, c2);
      std::string const file2 = cmd.back() == core || cmd.back() == fin
                                        || cmd.back() == out1
                                    ? read_file(cmd.back())
                                    : "";
      check(first == second && file1 == file2, "repeat differs: " + label);
    }
    // the dot file matches stdout of the same command
    int code = 0;
    auto const printed = run_cli({"dot", core}, code);
    check(printed == "0\n" + read_file(out1) + "\x1f", "dot --out matches");
    std::error_code ec;
    fs::remove_all(dir, ec);
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "index-two subgroup <ab> of Z2*Z2: exact values and coset table", 1,
       dinf_exact},
      {2, "<ab> in Z2*Z3: rank-0 witness and exhaustive length-4 check", 1,
       m_witness},
      {3, "<a, b a b^2> in Z2*Z3: folding and Kurosh data", 1, v_exact},
      {4, "separation soak, 10000 samples per fixture, no violations", 60,
       separation_soak},
      {5, "intersection soak, 100 words per finite-index fixture", 10,
       intersection_soak},
      {6, "property suites, 1000 randomized cases", 120, property_suites},
      {7, "spelling diagnostic pass rate on the separation soak", 1,
       spelling},
      {8, "CLI determinism", 30, determinism},
  };

  bool all_ok = true;
  for (auto const& c : criteria) {
    Check      check;
    auto const start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (std::exception const& e) {
      check(false, std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    check(secs < c.limit_seconds,
          "took " + std::to_string(secs) + " s, limit "
              + std::to_string(c.limit_seconds) + " s");
    bool const ok = check.failures.empty();
    all_ok        = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
              << c.title << " (" << secs << " s)\n";
    for (auto const& f : check.failures) {
      std::cout << "    " << f << "\n";
    }
  }
  return all_ok ? 0 : 1;
}
