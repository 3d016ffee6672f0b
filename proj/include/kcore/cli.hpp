// The kcore command-line front end.  run() is the whole program; main() in
// tools/kcore.cpp only forwards argv.  Exit codes: 0 success, 1 a sampled
// membership violation, 2 bad input.

#ifndef KCORE_CLI_HPP_
#define KCORE_CLI_HPP_

#include <algorithm>  // for reverse, min
#include <cstdint>    // for uint64_t
#include <exception>  // for exception
#include <ostream>    // for ostream
#include <string>     // for string
#include <thread>     // for thread
#include <vector>     // for vector

#include "CLI11.hpp"

#include "core_complex.hpp"
#include "io.hpp"
#include "kurosh.hpp"
#include "monodromy.hpp"
#include "oracle.hpp"
#include "separation.hpp"
#include "word.hpp"

namespace kcore {

  inline constexpr char const* version = "1.0.0";

  struct VerifyReport {
    json report;
    bool ok = true;
  };

  // Samples <<g^6>> for the separating witness of `core` and checks that no
  // nontrivial sample lies in H (or in the well-situated conjugate).
  inline VerifyReport verify_separation(CoreComplex const&  core,
                                        SampleParams const& params,
                                        bool spelling, unsigned threads) {
    auto const         ws  = well_situate(core);
    auto const         wit = find_rank_zero(ws.core);
    FreeProduct const& fp  = core.free_product();

    struct Outcome {
      bool nontrivial = false;
      bool violation  = false;
      bool spelled    = true;
    };
    std::vector<Outcome> outcomes(params.samples);
    auto                 work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        auto const s = closure_sample(fp, wit.g, params, i);
        if (s.z.empty()) {
          continue;
        }
        outcomes[i].nontrivial = true;
        outcomes[i].violation  = member(core, s.z) || member(ws.core, s.z);
        if (spelling) {
          outcomes[i].spelled = spelling_check(
              fp, cyclically_reduce(fp, s.z).core, wit.g);
        }
      }
    };
    threads = std::max(1u, std::min<unsigned>(threads, 64));
    if (threads == 1 || params.samples < 2) {
      work(0, params.samples);
    } else {
      std::vector<std::thread> pool;
      std::size_t const        chunk = (params.samples + threads - 1) / threads;
      for (std::size_t lo = 0; lo < params.samples; lo += chunk) {
        pool.emplace_back(work, lo, std::min(params.samples, lo + chunk));
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    auto recipe_json = [&](std::size_t i) {
      auto const s = closure_sample(fp, wit.g, params, i);
      json       r = json::array();
      for (auto const& f : s.recipe) {
        r.push_back({{"conjugator", to_string(f.conjugator)},
                     {"sign", f.sign}});
      }
      return json{{"index", i}, {"z", to_string(s.z)}, {"recipe", r}};
    };

    VerifyReport out;
    std::size_t  nontrivial = 0, spelled = 0;
    json         violations = json::array(), warnings = json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].nontrivial) {
        continue;
      }
      ++nontrivial;
      if (outcomes[i].violation) {
        violations.push_back(recipe_json(i));
      }
      if (spelling) {
        if (outcomes[i].spelled) {
          ++spelled;
        } else {
          warnings.push_back(recipe_json(i));
        }
      }
    }
    out.ok     = violations.empty();
    out.report = {{"tool", "kcore"},
                  {"version", version},
                  {"seed", params.seed},
                  {"rng", rng_name},
                  {"samples", params.samples},
                  {"max_conjugates", params.max_conjugates},
                  {"max_conjugator_len", params.max_conjugator_len},
                  {"g", to_string(wit.g)},
                  {"exponent", wit.exponent},
                  {"rebase_conjugator", to_string(ws.conjugator)},
                  {"nontrivial", nontrivial},
                  {"violations", violations.size()}};
    if (!violations.empty()) {
      out.report["violating_samples"] = violations;
    }
    if (spelling) {
      out.report["spelling_checked"]  = nontrivial;
      out.report["spelling_passed"]   = spelled;
      out.report["spelling_warnings"] = warnings;
    }
    return out;
  }

  inline std::string info_line(CoreComplex const& c) {
    auto const idx = index(c);
    return "vertices=" + std::to_string(c.vertex_count()) + " index="
           + (idx ? std::to_string(*idx) : std::string("infinite"))
           + " krank=" + std::to_string(kurosh_rank(c).krank);
  }

  inline json witness_json(SeparationWitness const& w) {
    json trace = json::array();
    for (auto const& s : w.trace) {
      trace.push_back({{"word", to_string(s.word)}, {"rank", s.rank}});
    }
    return {{"tool", "kcore"},
            {"version", version},
            {"g", to_string(w.g)},
            {"exponent", w.exponent},
            {"rebase_conjugator", to_string(w.rebase_conjugator)},
            {"missing_at_base", to_string(w.missing_at_base)},
            {"length_one_extended", w.length_one_extended},
            {"trace", trace}};
  }

  inline json intersection_json(Word const& x, IntersectionWitness const& w) {
    json expr = json::array();
    for (auto const& f : w.expression) {
      expr.push_back(
          {{"conjugator", to_string(f.conjugator)}, {"sign", f.sign}});
    }
    return {{"tool", "kcore"},
            {"version", version},
            {"x", to_string(x)},
            {"z", to_string(w.z)},
            {"power", w.power},
            {"h", to_string(w.h)},
            {"expression", expr}};
  }

  inline int run(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Core complexes of subgroups of free products A*B", "kcore"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    std::string groups_file, gens_text, out_file, core_file, word_text;
    auto*       build = app.add_subcommand("build", "Fold generators to a core");
    build->add_option("--groups", groups_file, "Group file (JSON)")
        ->required();
    build->add_option("--gens", gens_text, "Generators, ';'-separated")
        ->required();
    build->add_option("--out", out_file, "Write core.json here");

    auto* info = app.add_subcommand("info", "Vertices, index, Kurosh rank");
    info->add_option("core", core_file)->required();

    auto* mem = app.add_subcommand("member", "Membership of a word in H");
    mem->add_option("core", core_file)->required();
    mem->add_option("word", word_text)->required();

    auto* rnk = app.add_subcommand("rank", "Monodromy rank of a word");
    rnk->add_option("core", core_file)->required();
    rnk->add_option("word", word_text)->required();

    auto* wit = app.add_subcommand("witness", "Separating normal subgroup");
    wit->add_option("core", core_file)->required();

    auto* inter
        = app.add_subcommand("intersect", "Element of H in <<word>>");
    inter->add_option("core", core_file)->required();
    inter->add_option("word", word_text)->required();

    SampleParams params;
    bool         spelling = false;
    unsigned     threads  = 1;
    auto*        ver      = app.add_subcommand(
        "verify", "Sample <<g^6>> and check it misses H");
    ver->add_option("core", core_file)->required();
    ver->add_option("--samples", params.samples)->required();
    ver->add_option("--max-conj", params.max_conjugates)->required();
    ver->add_option("--max-len", params.max_conjugator_len)->required();
    ver->add_option("--seed", params.seed)->required();
    ver->add_flag("--spelling", spelling, "Run the spelling diagnostic");
    ver->add_option("--threads", threads, "Worker threads")
        ->check(CLI::Range(1u, 64u));

    auto* dot = app.add_subcommand("dot", "Graphviz rendering of a core");
    dot->add_option("core", core_file)->required();
    dot->add_option("--out", out_file, "Write DOT here");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForVersion const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      err << "kcore: " << e.what() << "\n";
      return 2;
    }

    try {
      auto load_core = [&] {
        return core_from_json(
            parse_json_text(read_file(core_file), core_file));
      };
      if (*build) {
        auto fp = free_product_from_json(
            parse_json_text(read_file(groups_file), groups_file));
        auto const c = build_core(fp, parse_word_list(*fp, gens_text));
        if (out_file.empty()) {
          out << dump(core_to_json(c));
        } else {
          write_file(out_file, dump(core_to_json(c)));
          out << info_line(c) << "\n";
        }
      } else if (*info) {
        auto const c = load_core();
        out << info_line(c) << "\n" << to_string(kurosh_rank(c)) << "\n";
      } else if (*mem) {
        auto const c = load_core();
        out << (member(c, parse_word(c.free_product(), word_text)) ? "true"
                                                                   : "false")
            << "\n";
      } else if (*rnk) {
        auto const c = load_core();
        out << to_string(monodromy(c, parse_word(c.free_product(), word_text)))
            << "\n";
      } else if (*wit) {
        out << dump(witness_json(separating_witness(load_core())));
      } else if (*inter) {
        auto const c = load_core();
        Word const x = parse_word(c.free_product(), word_text);
        out << dump(intersection_json(x, intersection_witness(c, x)));
      } else if (*ver) {
        if (params.samples == 0 || params.max_conjugates == 0) {
          throw input_error("--samples and --max-conj must be positive");
        }
        auto const r = verify_separation(load_core(), params, spelling,
                                         threads);
        out << dump(r.report);
        if (!r.ok) {
          err << "kcore: membership violation, see violating_samples\n";
          return 1;
        }
      } else if (*dot) {
        auto const text = export_dot(load_core());
        if (out_file.empty()) {
          out << text;
        } else {
          write_file(out_file, text);
        }
      }
    } catch (input_error const& e) {
      err << "kcore: " << e.what() << "\n";
      return 2;
    } catch (precondition_error const& e) {
      err << "kcore: " << e.what() << "\n";
      return 2;
    }
    return 0;
  }

}  // namespace kcore

#endif  // KCORE_CLI_HPP_
