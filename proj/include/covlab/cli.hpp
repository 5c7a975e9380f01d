#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covlab/constructions.hpp"
#include "covlab/fw.hpp"
#include "covlab/recipe.hpp"
#include "covlab/report_json.hpp"
#include "covlab/search.hpp"

namespace covlab::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2 };

enum class Status { verified, verified_catalog_assumed, failed };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::verified_catalog_assumed: return "verified-catalog-assumed";
    case Status::failed: return "failed";
  }
  return "?";
}

struct ScoreRow {
  std::string claim;
  std::string locus;  // what is being reproduced, in words
  Status status = Status::failed;
  std::string detail;
  double seconds = 0;
};

struct Scorecard {
  std::vector<ScoreRow> rows;
  bool any_failed() const {
    return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == Status::failed; });
  }
};

namespace detail {

inline void add_row(Scorecard& card, std::string claim, std::string locus,
                    const std::function<std::pair<Status, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  ScoreRow row{std::move(claim), std::move(locus)};
  try {
    std::tie(row.status, row.detail) = body();
  } catch (const std::exception& e) {
    row.status = Status::failed;
    row.detail = std::string("error: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  card.rows.push_back(std::move(row));
}

inline Status negative_status(const SearchVerdict& v) {
  if (v.coverable) return Status::failed;
  return v.completeness == Completeness::assumed_catalog ? Status::verified_catalog_assumed : Status::verified;
}

inline std::string describe(const SearchVerdict& v) {
  std::ostringstream s;
  s << to_string(v.source) << ", " << v.maximal_labels.size() << " maximal classes, " << v.pairs_tested << " pairs";
  if (v.witness) s << ", witness " << v.witness->h_label << " | " << v.witness->k_label;
  return s.str();
}

}  // namespace detail

struct VerifyOptions {
  std::size_t jobs = 0;
  bool with_a10 = false;
};

/// Every reproduced claim, in a fixed order.
inline Scorecard verify_paper(const VerifyOptions& opt = {}) {
  using detail::add_row;
  Scorecard card;
  for (const auto& [label, build] : gallery_builders()) {
    add_row(card, "gallery " + label, "explicit covering", [&, build = build] {
      const auto c = build();
      const auto r = c.verify();
      const bool ok = r.verdict && r.inclusion.evaluated && r.inclusion.no_inclusions;
      return std::pair{ok ? Status::verified : Status::failed, c.claim};
    });
  }

  SearchOptions lattice{ListSource::lattice, opt.jobs};
  SearchOptions automatic{ListSource::automatic, opt.jobs};
  SearchOptions catalog{ListSource::catalog, opt.jobs};

  for (std::size_t n = 3; n <= 6; ++n)
    add_row(card, "S" + std::to_string(n) + " is (**)-coverable", "symmetric groups, positive range", [&, n] {
      const auto v = decide_star_star(Ambient::symmetric(n), lattice);
      return std::pair{v.coverable ? Status::verified : Status::failed, detail::describe(v)};
    });
  add_row(card, "S7 is not (**)-coverable", "symmetric groups, first negative degree", [&] {
    const auto by_lattice = decide_star_star(Ambient::symmetric(7), lattice);
    const auto by_catalog = decide_star_star(Ambient::symmetric(7), catalog);
    if (by_lattice.coverable != by_catalog.coverable)
      return std::pair{Status::failed, std::string("lattice and catalog verdicts disagree")};
    return std::pair{detail::negative_status(by_lattice),
                     detail::describe(by_lattice) + "; catalog agrees"};
  });
  add_row(card, "S8 is not (**)-coverable", "symmetric groups, second negative degree", [&] {
    const auto v = decide_star_star(Ambient::symmetric(8), catalog);
    return std::pair{detail::negative_status(v), detail::describe(v)};
  });
  for (std::size_t n = 4; n <= 8; ++n)
    add_row(card, "A" + std::to_string(n) + " is (**)-coverable", "alternating groups, positive range", [&, n] {
      const auto v = decide_star_star(Ambient::alternating(n), automatic);
      return std::pair{v.coverable ? Status::verified : Status::failed, detail::describe(v)};
    });
  add_row(card, "A9 is not (**)-coverable", "alternating groups, first negative degree", [&] {
    const auto v = decide_star_star(Ambient::alternating(9), catalog);
    return std::pair{detail::negative_status(v), detail::describe(v)};
  });
  if (opt.with_a10)
    add_row(card, "A10 is not (**)-coverable", "alternating groups, second negative degree", [&] {
      const auto v = decide_star_star(Ambient::alternating(10), catalog);
      return std::pair{detail::negative_status(v), detail::describe(v)};
    });

  for (std::size_t n = 7; n <= 8; ++n)
    add_row(card, "A" + std::to_string(n) + " witness: exactly one transitive component",
            "transitivity of components for n >= 7", [&, n] {
              const auto v = decide_star_star(Ambient::alternating(n), automatic);
              if (!v.witness) return std::pair{Status::failed, std::string("no witness")};
              const auto t = transitivity_report(v.witness->h, v.witness->k);
              return std::pair{t == Transitivity::exactly_one ? Status::verified : Status::failed,
                               std::string(to_string(t))};
            });

  for (const char* name : {"S3", "A4", "S4"})
    add_row(card, std::string(name) + " is (*)-coverable", "(*)-coverable groups are Frobenius-Wielandt", [name] {
      const auto g = resolve_recipe(name).group;
      const auto s = is_star_coverable(g);
      const auto w = fw_search(g);
      const bool ok = s.coverable && w.has_value() && w->checks.all();
      return std::pair{ok ? Status::verified : Status::failed,
                       ok ? "FW witness |H| = " + std::to_string(w->h.order()) + ", |N| = " +
                                std::to_string(w->n.order()) + ", |K| = " + std::to_string(w->kernel.order())
                          : std::string("search disagrees")};
    });
  add_row(card, "A5 is not (*)-coverable", "simple groups are not (*)-coverable", [] {
    const auto g = alternating_group(5);
    const bool ok = !is_star_coverable(g).coverable && !fw_search(g).has_value();
    return std::pair{ok ? Status::verified : Status::failed, std::string("exhaustive pair search")};
  });

  struct SplitClaim {
    const char* type;
    std::size_t n;
    bool splits;
  };
  for (const auto& c : {SplitClaim{"[3;5]", 8, true}, SplitClaim{"[1;3;3]", 7, false}, SplitClaim{"[9]", 9, true},
                        SplitClaim{"[1;7]", 8, true}})
    add_row(card, std::string(c.type) + (c.splits ? " splits in A" : " does not split in A") + std::to_string(c.n),
            "class splitting criterion", [c] {
              const auto t = CycleType::parse(c.type, c.n);
              const bool s = splits_in_alternating(t);
              // The table agrees: split types contribute two classes.
              const auto& table = class_table(Ambient::alternating(c.n));
              std::size_t count = 0;
              for (const auto& e : table.entries())
                if (e.id.ctype == t) ++count;
              const bool ok = s == c.splits && count == (c.splits ? 2U : 1U);
              return std::pair{ok ? Status::verified : Status::failed,
                               std::to_string(count) + " A" + std::to_string(c.n) + "-class(es)"};
            });
  return card;
}

namespace detail {

inline void print_report(std::ostream& out, const CoveringReport& r) {
  out << "group " << (r.ambient ? r.ambient->label() : r.group_label) << ", kind " << to_string(r.kind)
      << ", verdict " << (r.verdict ? "covering" : "not a covering") << "\n";
  for (const auto& c : r.components)
    out << "  " << c.label << ": order " << c.group.order() << "\n";
  out << std::left << "  " << std::setw(22) << "class" << std::setw(12) << "size" << std::setw(12) << "covered by"
      << "witness\n";
  for (const auto& c : r.classes) {
    const auto label = c.id ? c.id->to_string() : c.type;
    out << "  " << std::setw(22) << label << std::setw(12) << c.size << std::setw(12) << to_string(c.covered_by)
        << (c.witness ? c.witness->to_string() : "-") << "\n";
  }
  out << "  inclusions: " << (r.inclusion.evaluated ? r.inclusion.detail : "not evaluated") << "\n";
  if (r.normalized_k)
    out << "  with K replaced by its normal core (order " << r.normalized_k->order()
        << "): " << (*r.normalized_verdict ? "covering" : "not a covering") << "\n";
}

inline void print_verdict(std::ostream& out, const SearchVerdict& v) {
  out << v.ambient.label() << ": " << (v.coverable ? "(**)-coverable" : "not (**)-coverable") << " ["
      << to_string(v.source) << ", " << to_string(v.completeness) << "]\n";
  out << "maximal classes:";
  for (std::size_t i = 0; i < v.maximal_labels.size(); ++i)
    out << (i ? "; " : " ") << v.maximal_labels[i] << " (" << v.maximal_orders[i] << ")";
  out << "\n";
  if (v.witness)
    out << "witness: H = " << v.witness->h_label << ", K = " << v.witness->k_label << " ("
        << to_string(transitivity_report(v.witness->h, v.witness->k)) << ")\n";
  out << "non-covering pairs: " << v.certificate.size() << " of " << v.pairs_tested << "\n";
  for (const auto& c : v.certificate) {
    out << "  " << c.h_label << " | " << c.k_label << " misses";
    for (const auto& id : c.uncovered) out << " " << id.to_string();
    out << "\n";
  }
}

inline void print_witness(std::ostream& out, const FwWitness& w) {
  auto gens = [](const PermGroup& g) {
    std::string s;
    for (const auto& x : g.generators()) s += (s.empty() ? "" : ", ") + x.to_string();
    return s.empty() ? std::string("()") : s;
  };
  out << "Frobenius-Wielandt triple, |G| = " << w.g.order() << "\n";
  out << "  H: order " << w.h.order() << ", generators " << gens(w.h) << "\n";
  out << "  N: order " << w.n.order() << ", generators " << gens(w.n) << "\n";
  out << "  kernel K: order " << w.kernel.order() << ", generators " << gens(w.kernel) << "\n";
  out << "  checks: " << (w.checks.all() ? "all pass" : "FAILED") << "\n";
}

}  // namespace detail

/// Runs one command line (without the program name). Output is deterministic.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugate coverings of permutation groups", "covlab"};
  app.require_subcommand(1);
  bool json = false;
  std::size_t jobs = 0;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--jobs", jobs, "worker threads (default: COVERING_LAB_JOBS or hardware)");

  auto* verify = app.add_subcommand("verify-paper", "verify every reproduced claim and print a scorecard");
  bool with_a10 = false, timings = false;
  verify->add_flag("--with-a10", with_a10, "also decide A10");
  verify->add_flag("--timings", timings, "include runtimes (output is then not reproducible)");
  verify->add_flag("--json", json);
  verify->add_option("--jobs", jobs);

  auto* cover = app.add_subcommand("cover", "covering checks");
  cover->require_subcommand(1);
  auto* cover_check = cover->add_subcommand("check", "check {H^g, K} or {H^g, K^g}");
  std::string group_r, h_r, k_r, n_r, kind = "star2";
  cover_check->add_option("--group", group_r, "ambient group recipe")->required();
  cover_check->add_option("--H", h_r, "H recipe")->required();
  cover_check->add_option("--K", k_r, "K recipe")->required();
  cover_check->add_option("--kind", kind, "star or star2")->check(CLI::IsMember({"star", "star2"}));
  cover_check->add_flag("--json", json);

  auto* search = app.add_subcommand("search", "decide (**)-coverability of S_n or A_n");
  std::string ambient_kind, source = "auto";
  std::size_t degree = 0;
  search->add_option("--ambient", ambient_kind, "S or A (or S7 / A9 directly)")->required();
  search->add_option("--n", degree, "degree");
  search->add_option("--source", source, "lattice, catalog or auto")
      ->check(CLI::IsMember({"lattice", "catalog", "auto"}));
  search->add_option("--jobs", jobs);
  search->add_flag("--json", json);

  auto* split = app.add_subcommand("split-classes", "even cycle types of A_n and whether they split");
  std::size_t split_n = 0;
  split->add_option("n", split_n, "degree")->required()->check(CLI::Range(1, 16));
  split->add_flag("--json", json);

  auto* fw = app.add_subcommand("fw", "Frobenius-Wielandt triples");
  fw->require_subcommand(1);
  auto* fw_check = fw->add_subcommand("check", "test a triple (G, H, N) and compute its kernel");
  fw_check->add_option("--group", group_r)->required();
  fw_check->add_option("--H", h_r)->required();
  fw_check->add_option("--N", n_r)->required();
  fw_check->add_flag("--json", json);
  auto* fw_search_cmd = fw->add_subcommand("search", "search for a triple in G");
  fw_search_cmd->add_option("--group", group_r)->required();
  fw_search_cmd->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      const auto card = verify_paper({jobs, with_a10});
      if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : card.rows) {
          nlohmann::json row{{"claim", r.claim}, {"locus", r.locus}, {"status", to_string(r.status)},
                             {"detail", r.detail}};
          if (timings) row["seconds"] = r.seconds;
          rows.push_back(std::move(row));
        }
        out << nlohmann::json{{"schemaVersion", kSchemaVersion}, {"rows", rows}, {"failed", card.any_failed()}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& r : card.rows) {
          out << std::left << std::setw(26) << to_string(r.status) << std::setw(52) << r.claim << r.detail;
          if (timings) out << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
          out << "\n";
        }
        out << (card.any_failed() ? "some claims FAILED" : "all claims verified") << "\n";
      }
      return card.any_failed() ? kNegative : kOk;
    }

    if (cover_check->parsed()) {
      const auto g = resolve_recipe(group_r);
      const auto h = resolve_recipe(h_r);
      const auto k = resolve_recipe(k_r);
      CoveringReport report;
      if (kind == "star") {
        report = check_star(g.group, h.group, k.group, g.label, h.label, k.label);
      } else {
        const auto ambient = as_ambient(g.group);
        if (!ambient) {
          err << "usage error: (**) checks need a symmetric or alternating ambient group\n";
          return kUsage;
        }
        report = check_star_star(*ambient, h.group, k.group, h.label, k.label);
      }
      if (json)
        out << to_json(report).dump(2) << "\n";
      else
        detail::print_report(out, report);
      return report.verdict ? kOk : kNegative;
    }

    if (search->parsed()) {
      Ambient ambient;
      if (ambient_kind.size() > 1) {
        ambient = Ambient::parse(ambient_kind);
      } else {
        if (degree == 0) {
          err << "usage error: --n is required with --ambient S or A\n";
          return kUsage;
        }
        ambient = Ambient::parse(ambient_kind + std::to_string(degree));
      }
      SearchOptions opt;
      opt.source = parse_list_source(source);
      opt.jobs = jobs;
      const auto v = decide_star_star(ambient, opt);
      if (json)
        out << to_json(v).dump(2) << "\n";
      else
        detail::print_verdict(out, v);
      return kOk;
    }

    if (split->parsed()) {
      const auto j = split_classes_json(split_n);
      if (json) {
        out << j.dump(2) << "\n";
      } else {
        out << "A" << split_n << ": even cycle types\n";
        for (const auto& row : j["types"]) {
          out << "  " << std::left << std::setw(24) << row["type"].get<std::string>();
          if (row["split"].get<bool>())
            out << "split      " << row["plusSize"].get<std::uint64_t>() << " + " << row["minusSize"].get<std::uint64_t>();
          else
            out << "not split  " << row["classSize"].get<std::uint64_t>();
          out << "\n";
        }
      }
      return kOk;
    }

    if (fw_check->parsed()) {
      const auto g = resolve_recipe(group_r).group;
      const auto h = resolve_recipe(h_r).group;
      const auto n = resolve_recipe(n_r).group;
      if (const auto p = fw_precondition(g, h, n); p != FwPrecondition::ok) {
        err << "precondition failed: " << to_string(p) << "\n";
        return kUsage;
      }
      if (!is_fw(g, h, n)) {
        if (json)
          out << nlohmann::json{{"schemaVersion", kSchemaVersion}, {"isFw", false}}.dump(2) << "\n";
        else
          out << "not a Frobenius-Wielandt triple: some H ∩ H^g with g outside H is not inside N\n";
        return kNegative;
      }
      const auto w = fw_kernel(g, h, n);
      if (json) {
        auto j = to_json(w);
        j["isFw"] = true;
        out << j.dump(2) << "\n";
      } else {
        detail::print_witness(out, w);
      }
      return kOk;
    }

    if (fw_search_cmd->parsed()) {
      const auto g = resolve_recipe(group_r).group;
      const auto w = fw_search(g);
      const auto star = is_star_coverable(g);
      if (json) {
        nlohmann::json j = w ? to_json(*w) : nlohmann::json{{"schemaVersion", kSchemaVersion}};
        j["found"] = w.has_value();
        j["starCoverable"] = star.coverable;
        out << j.dump(2) << "\n";
      } else if (w) {
        detail::print_witness(out, *w);
        out << "(*)-covering search: " << (star.coverable ? "coverable" : "not coverable") << "\n";
      } else {
        out << "no Frobenius-Wielandt triple; (*)-covering search: "
            << (star.coverable ? "coverable" : "not coverable") << "\n";
      }
      return w ? kOk : kNegative;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace covlab::cli
