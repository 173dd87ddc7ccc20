#pragma once

#include "kleinian/json_io.hpp"
#include "kleinian/kleinian.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace kleinian::cli {

inline constexpr std::uint64_t kDefaultSeed = 20200417;

enum ExitCode : int { kOk = 0, kDomainError = 1, kVerificationFailed = 2 };

struct CommandConfig {
  std::string type = "A1";
  int r = 1;
  long n = 1;
  int colength = 0;
  int nmax = 0;
  std::string J;
  std::string in;
  std::string out;
  std::string format = "json";
  unsigned workers = 1;
  std::uint64_t seed = kDefaultSeed;
  int conjugations = 0;
  bool flip_epsilon = false;
};

namespace detail {

inline io::Json read_json(const std::string& path, std::istream& stdin_stream) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
  } else {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return io::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON input: ") + e.what());
  }
}

inline void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << text;
}

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

inline io::Json points_json(const std::vector<Point3>& pts) {
  io::Json out = io::Json::array();
  for (const auto& p : pts) out.push_back(io::Json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])}));
  return out;
}

inline Face parse_face(const std::string& s, const DynkinType& t) {
  const Face J = Face::parse(s);
  require_face_in_range(t, J);
  return J;
}

} // namespace detail

/// Runs one command line. Data goes to `out`, diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  CLI::App app{"Exact toolkit for framed McKay quivers, preprojective representations and Kleinian Hilbert schemes", "kleinian"};
  app.require_subcommand(1);
  CommandConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for randomised checks")->capture_default_str();

  auto add_type = [&](CLI::App* c) { c->add_option("--type", cfg.type, "Dynkin type, e.g. A2, D4, E8")->required(); };
  auto add_in = [&](CLI::App* c) { c->add_option("--in", cfg.in, "Input JSON file ('-' for stdin)"); };

  auto* quiver = app.add_subcommand("quiver", "Framed McKay quivers");
  quiver->require_subcommand(1);
  auto* quiver_show = quiver->add_subcommand("show", "Print the framed quiver as JSON");
  add_type(quiver_show);
  quiver_show->add_flag("--flip-epsilon", cfg.flip_epsilon, "Use the negated sign convention");

  auto* poset = app.add_subcommand("poset", "Face poset of the closure of C+");
  add_type(poset);
  poset->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json"}));

  auto* hilb = app.add_subcommand("hilb", "Type A staircase combinatorics");
  hilb->require_subcommand(1);
  auto* hilb_stairs = hilb->add_subcommand("staircases", "All staircases of a colength");
  hilb_stairs->add_option("--colength", cfg.colength)->required()->check(CLI::Range(0, 40));
  auto* hilb_fixed = hilb->add_subcommand("fixed-points", "Regular-type staircases of colength n(r+1)");
  hilb_fixed->add_option("--r", cfg.r)->required()->check(CLI::Range(1, 20));
  hilb_fixed->add_option("--n", cfg.n)->required()->check(CLI::Range(0, 10));
  auto* hilb_chi = hilb->add_subcommand("chi", "Euler characteristics of Hilb^[n](C^2/Gamma) as CSV");
  hilb_chi->add_option("--r", cfg.r)->required()->check(CLI::Range(1, 20));
  hilb_chi->add_option("--nmax", cfg.nmax)->required()->check(CLI::Range(0, 12));
  auto* hilb_intersect = hilb->add_subcommand("intersect", "Invariant cells of a staircase");
  hilb_intersect->add_option("--r", cfg.r)->required()->check(CLI::Range(1, 20));
  add_in(hilb_intersect);

  auto* corner = app.add_subcommand("corner", "Corner modules for J={0}");
  corner->require_subcommand(1);
  auto* corner_check = corner->add_subcommand("check", "Residuals of the relations in K");
  auto* corner_stable = corner->add_subcommand("stable", "eta-stability (cyclicity from w)");
  auto* corner_chow = corner->add_subcommand("chow", "Joint spectrum of (A1, A2, A3)");
  for (auto* c : {corner_check, corner_stable, corner_chow}) {
    add_type(c);
    add_in(c);
  }
  for (auto* c : {corner_stable, corner_chow})
    c->add_option("--conjugations", cfg.conjugations, "Also recheck under this many random conjugations")->check(CLI::Range(0, 1000));
  auto* corner_build = corner->add_subcommand("build", "Corner module j*(M) of a regular-type staircase");
  corner_build->add_option("--r", cfg.r)->required()->check(CLI::Range(1, 20));
  corner_build->add_option("--n", cfg.n)->required()->check(CLI::Range(0, 10));
  add_in(corner_build);

  auto* rep = app.add_subcommand("rep", "Quiver representations");
  rep->require_subcommand(1);
  auto* rep_residual = rep->add_subcommand("residual", "Moment-map residual at every vertex");
  auto* rep_cyclic = rep->add_subcommand("cyclic", "Cyclicity from the framing vertex");
  add_in(rep_residual);
  add_in(rep_cyclic);
  auto* rep_build = rep->add_subcommand("build", "Representation of a regular-type staircase");
  rep_build->add_option("--r", cfg.r)->required()->check(CLI::Range(1, 20));
  rep_build->add_option("--n", cfg.n)->required()->check(CLI::Range(0, 10));
  add_in(rep_build);

  auto* verify = app.add_subcommand("verify", "Verify the dimension bound for one J");
  add_type(verify);
  verify->add_option("--n", cfg.n)->required()->check(CLI::Range(1, 100));
  verify->add_option("--J", cfg.J, "Comma list of vertices")->required();
  verify->add_option("--out", cfg.out);

  auto* verify_all_cmd = app.add_subcommand("verify-all", "Verify the dimension bound for every nonempty J");
  add_type(verify_all_cmd);
  verify_all_cmd->add_option("--n", cfg.n)->required()->check(CLI::Range(1, 100));
  verify_all_cmd->add_option("--out", cfg.out);
  verify_all_cmd->add_option("--workers", cfg.workers)->check(CLI::Range(1, 256));

  std::vector<std::string> argv_storage{"kleinian"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  try {
    using detail::dump;
    if (quiver_show->parsed()) {
      auto q = build_framed_quiver(DynkinType::parse(cfg.type));
      if (cfg.flip_epsilon) q = q.with_flipped_epsilon();
      out << dump(io::to_json(q));
    } else if (poset->parsed()) {
      const FacePoset p = face_poset(DynkinType::parse(cfg.type));
      out << (cfg.format == "dot" ? p.to_dot() : dump(io::to_json(p)));
    } else if (hilb_stairs->parsed()) {
      io::Json list = io::Json::array();
      for (const auto& s : enumerate_staircases(cfg.colength)) list.push_back(io::to_json(s));
      out << dump(list);
    } else if (hilb_fixed->parsed()) {
      io::Json list = io::Json::array();
      for (const auto& s : enumerate_regular_fixed_points(cfg.r, cfg.n)) list.push_back(io::to_json(s));
      out << dump(list);
    } else if (hilb_chi->parsed()) {
      out << euler_series_csv(euler_characteristic_series(cfg.r, cfg.nmax));
    } else if (hilb_intersect->parsed()) {
      const Staircase s = io::staircase_from_json(detail::read_json(cfg.in, in));
      out << dump(io::to_json(intersect_with_invariants(s, cfg.r)));
    } else if (rep_build->parsed()) {
      const Staircase s = io::staircase_from_json(detail::read_json(cfg.in, in));
      out << dump(io::to_json(rep_from_ideal(s, cfg.r, cfg.n)));
    } else if (rep_residual->parsed()) {
      const QuiverRepresentation rp = io::representation_from_json(detail::read_json(cfg.in, in));
      const auto res = moment_residual(rp);
      io::Json by_vertex = io::Json::object();
      bool zero = true;
      for (Vertex v : rp.quiver().vertices()) {
        by_vertex[vertex_name(v)] = io::matrix_json(res[slot(v)]);
        zero = zero && res[slot(v)].is_zero();
      }
      out << dump({{"zero", zero}, {"residuals", by_vertex}});
    } else if (rep_cyclic->parsed()) {
      const QuiverRepresentation rp = io::representation_from_json(detail::read_json(cfg.in, in));
      out << dump({{"cyclic", is_cyclic_at_infinity(rp)}});
    } else if (corner_build->parsed()) {
      const Staircase s = io::staircase_from_json(detail::read_json(cfg.in, in));
      out << dump(io::to_json(j_star_corner(rep_from_ideal(s, cfg.r, cfg.n), cfg.n)));
    } else if (corner_check->parsed()) {
      const DynkinType t = DynkinType::parse(cfg.type);
      const CornerModuleQ0 m = io::corner_from_json(detail::read_json(cfg.in, in));
      const RelationResidual res = check_relations(m, t);
      io::Json comms = io::Json::array();
      for (const auto& c : res.commutators) comms.push_back(io::matrix_json(c));
      const WstarReport ws = wstar_vanishes(m);
      out << dump({{"valid", res.ok()}, {"commutators", comms}, {"f", io::matrix_json(res.f)},
                   {"wstar_zero", ws.vanishes}, {"wstar", ws.diagnostic}});
    } else if (corner_stable->parsed() || corner_chow->parsed()) {
      const DynkinType t = DynkinType::parse(cfg.type);
      const CornerModuleQ0 m = io::corner_from_json(detail::read_json(cfg.in, in));
      std::mt19937_64 rng(cfg.seed);
      io::Json result;
      if (corner_stable->parsed()) {
        const bool stable = is_eta_stable(m, t);
        result = {{"eta_stable", stable}};
        if (cfg.conjugations > 0) {
          bool invariant = true;
          for (int k = 0; k < cfg.conjugations; ++k)
            invariant = invariant && is_eta_stable(conjugate(m, random_invertible(m.n(), rng)), t) == stable;
          result["invariant_under_conjugation"] = invariant;
        }
      } else {
        try {
          const auto pts = hilbert_chow(m, t);
          result = {{"split", true}, {"points", detail::points_json(pts)}};
          if (cfg.conjugations > 0) {
            bool invariant = true;
            for (int k = 0; k < cfg.conjugations; ++k)
              invariant = invariant && hilbert_chow(conjugate(m, random_invertible(m.n(), rng)), t) == pts;
            result["invariant_under_conjugation"] = invariant;
          }
        } catch (const NonSplitSpectrum& e) {
          io::Json polys = io::Json::array();
          for (const auto& p : e.char_polys) polys.push_back(io::vector_json(p));
          result = {{"split", false}, {"char_polys", polys}};
        }
      }
      out << dump(result);
    } else if (verify->parsed()) {
      const DynkinType t = DynkinType::parse(cfg.type);
      const auto report = verify_bound(t, cfg.n, detail::parse_face(cfg.J, t));
      detail::write_text(dump(io::to_json(report)), cfg.out, out);
      return report.verified() ? kOk : kVerificationFailed;
    } else if (verify_all_cmd->parsed()) {
      const DynkinType t = DynkinType::parse(cfg.type);
      const auto reports = verify_all(t, cfg.n, cfg.workers);
      detail::write_text(dump(io::to_json(reports)), cfg.out, out);
      (cfg.out.empty() ? err : out) << t.name() << " n=" << cfg.n << ": " << summary_line(reports) << "\n";
      for (const auto& r : reports)
        if (!r.verified()) return kVerificationFailed;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

} // namespace kleinian::cli
