#include "pcgroups/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pcgroups/consistency.hpp"
#include "pcgroups/corpus.hpp"
#include "pcgroups/errors.hpp"
#include "pcgroups/properties.hpp"
#include "pcgroups/theorems.hpp"

namespace pcgroups::cli {

  namespace {

    struct Options {
      std::string   file;
      std::string   word;
      std::string   gens;
      std::string   op;
      std::optional<int>      i;
      std::optional<unsigned> j;
      std::string   suite  = "all";
      unsigned      i_max  = 4;
      unsigned      j_max  = 4;
      unsigned      k_max  = 3;
      std::string   mode   = "auto";
      std::uint64_t seed   = 1;
      std::string   format = "text";
      bool          timing = false;
      std::uint64_t max_elements = Limits{}.max_elements;
      std::uint64_t max_steps    = Limits{}.max_steps;
      std::string   name;
      std::uint64_t p = 0;
      std::string   params;
    };

    // Inconsistent input where a consistent presentation is required.
    struct Inconsistent {};

    std::string read_source(std::string const& file) {
      std::ostringstream buf;
      if (file == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
      }
      std::ifstream in(file);
      if (!in) {
        throw Error("cannot read " + file);
      }
      buf << in.rdbuf();
      return buf.str();
    }

    std::string group_label(std::string const& file) {
      if (file == "-") {
        return "stdin";
      }
      return std::filesystem::path(file).stem().string();
    }

    GroupPtr load(Options const& o) {
      Presentation P = parse(read_source(o.file));
      return Group::make(P, Limits{o.max_steps, o.max_elements});
    }

    GroupPtr load_consistent(Options const& o) {
      GroupPtr g = load(o);
      if (check_consistency(g, 1).status != Status::pass) {
        throw Inconsistent{};
      }
      return g;
    }

    std::string power_string(std::uint64_t p, unsigned k) {
      std::uint64_t v = 1;
      for (unsigned t = 0; t < k; ++t) {
        v *= p;
      }
      return std::to_string(v) + " = " + std::to_string(p) + "^"
             + std::to_string(k);
    }

    // Splits at commas outside brackets and parentheses.
    std::vector<std::string> split_words(std::string const& text) {
      std::vector<std::string> out;
      std::string              cur;
      int                      depth = 0;
      for (char ch : text) {
        if (ch == '(' || ch == '[') {
          ++depth;
        } else if (ch == ')' || ch == ']') {
          --depth;
        }
        if (ch == ',' && depth == 0) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      out.push_back(cur);
      return out;
    }

    std::vector<unsigned> parse_params(std::string const& text) {
      std::vector<unsigned> out;
      if (text.empty()) {
        return out;
      }
      for (auto const& part : split_words(text)) {
        std::size_t used = 0;
        long        v    = -1;
        try {
          v = std::stol(part, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != part.size() || v < 0) {
          throw Error("bad parameter '" + part + "'");
        }
        out.push_back(static_cast<unsigned>(v));
      }
      return out;
    }

    Subgroup selected_subgroup(GroupPtr const& g, Options const& o) {
      Subgroup H = whole_group(g);
      if (!o.gens.empty()) {
        std::vector<ExpVec> gens;
        for (auto const& w : split_words(o.gens)) {
          gens.push_back(g->normal_form(parse_word(g->presentation(), w)));
        }
        H = close(g, gens);
      }
      if (o.op.empty() || o.op == "order" || o.op == "exponent") {
        return H;
      }
      if (o.op == "omega") {
        if (!o.i) {
          throw Error("--op omega needs --i");
        }
        return omega(H, *o.i);
      }
      if (o.op == "agemo") {
        if (!o.j) {
          throw Error("--op agemo needs --j");
        }
        return agemo(H, *o.j);
      }
      if (o.op == "derived") {
        return commutator_subgroup(H, H);
      }
      throw Error("unknown --op '" + o.op + "'");
    }

    void print_subgroup(std::ostream& out, Subgroup const& H) {
      Group const& g = *H.group();
      out << "order " << power_string(g.prime(), H.order_log()) << "\n";
      out << "generators";
      if (H.is_trivial()) {
        out << " 1";
      }
      for (std::size_t k = 0; k < H.entries().size(); ++k) {
        out << (k ? ", " : " ") << g.render(H.entries()[k].elem);
      }
      out << "\n";
    }

    int emit_reports(std::ostream&                   out,
                     Options const&                  o,
                     GroupPtr const&                 g,
                     std::vector<CheckReport> const& reports) {
      std::string label = group_label(o.file);
      if (o.format == "json") {
        out << reports_to_json(label, g->prime(),
                               g->presentation().candidate_order_log(),
                               reports);
      } else {
        out << reports_to_text(label, reports);
      }
      return exit_code(reports);
    }

    RunConfig run_config(Options const& o) {
      RunConfig cfg;
      cfg.i_max  = o.i_max;
      cfg.j_max  = o.j_max;
      cfg.k_max  = o.k_max;
      cfg.seed   = o.seed;
      cfg.timing = o.timing;
      if (o.mode == "auto") {
        cfg.mode = ScanMode::automatic;
      } else if (o.mode == "exhaustive") {
        cfg.mode = ScanMode::exhaustive;
      } else if (o.mode == "sample") {
        cfg.mode = ScanMode::sample;
      } else if (o.mode.rfind("sample:", 0) == 0) {
        cfg.mode          = ScanMode::sample;
        std::string count = o.mode.substr(7);
        std::size_t used  = 0;
        long long   n     = 0;
        try {
          n = std::stoll(count, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != count.size() || used == 0 || n <= 0) {
          throw Error("bad sample count in --mode " + o.mode);
        }
        cfg.samples = static_cast<std::uint64_t>(n);
      } else {
        throw Error("--mode must be auto, exhaustive or sample:N");
      }
      return cfg;
    }

    int cmd_parse(Options const& o, std::ostream& out) {
      GroupPtr            g = load(o);
      Presentation const& P = g->presentation();
      out << "p = " << P.prime() << "\n";
      out << "generators " << P.num_gens() << ":";
      for (auto const& n : P.names()) {
        out << " " << n;
      }
      out << "\n";
      out << "power relations " << P.power_relations().size()
          << ", commutator relations " << P.commutator_relations().size()
          << " (nontrivial, collected)\n";
      out << "candidate order "
          << power_string(P.prime(), P.candidate_order_log()) << "\n";
      return ok;
    }

    int cmd_consistency(Options const& o, std::ostream& out) {
      GroupPtr g = load(o);
      return emit_reports(out, o, g, {check_consistency(g)});
    }

    int cmd_order(Options const& o, std::ostream& out) {
      GroupPtr g = load_consistent(o);
      out << power_string(g->prime(), g->presentation().candidate_order_log())
          << "\n";
      return ok;
    }

    int cmd_nf(Options const& o, std::ostream& out) {
      GroupPtr g = load_consistent(o);
      out << g->render(g->normal_form(parse_word(g->presentation(), o.word)))
          << "\n";
      return ok;
    }

    int cmd_ord(Options const& o, std::ostream& out) {
      GroupPtr g = load_consistent(o);
      ExpVec   x = g->normal_form(parse_word(g->presentation(), o.word));
      out << power_string(g->prime(), g->order_log(x)) << "\n";
      return ok;
    }

    int cmd_sub(Options const& o, std::ostream& out) {
      GroupPtr g = load_consistent(o);
      Subgroup H = selected_subgroup(g, o);
      if (o.op == "order") {
        out << power_string(g->prime(), H.order_log()) << "\n";
      } else if (o.op == "exponent") {
        out << power_string(g->prime(), exponent_log(H)) << "\n";
      } else {
        print_subgroup(out, H);
      }
      return ok;
    }

    int cmd_pnclass(Options const& o, std::ostream& out) {
      if (o.op == "order" || o.op == "exponent") {
        throw Error("pnclass accepts --op omega, agemo or derived");
      }
      GroupPtr g = load_consistent(o);
      auto     c = pn_class(selected_subgroup(g, o));
      if (c) {
        out << *c << "\n";
      } else {
        out << "undefined\n";
      }
      return ok;
    }

    int cmd_chain(Options const& o, std::ostream& out) {
      if (!o.i || *o.i < 1) {
        throw Error("chain needs --i >= 1");
      }
      GroupPtr g = load_consistent(o);
      Analysis a(g);
      auto     i = static_cast<unsigned>(*o.i);
      if (o.format == "text" && g->prime() != 2) {
        Chain chain = build_theorem3_chain(a, i);
        out << "chain i=" << i << " length " << chain.size() - 1 << "\n";
        for (auto const& S : chain) {
          print_subgroup(out, S);
        }
      }
      return emit_reports(out, o, g, {check_theorem3_chain(a, i, o.timing)});
    }

    int cmd_verify(Options const& o, std::ostream& out) {
      auto suite = parse_suite(o.suite);
      if (!suite) {
        throw Error("unknown suite '" + o.suite + "'");
      }
      RunConfig cfg = run_config(o);
      GroupPtr  g   = load(o);
      Analysis  a(g);
      return emit_reports(out, o, g, run_suite(a, cfg, *suite));
    }

    int cmd_corpus_list(std::ostream& out) {
      out << "constructors:\n";
      for (auto const& c : corpus::constructors()) {
        out << "  " << c << "\n";
      }
      out << "standard corpus:\n";
      for (auto const& e : corpus::standard()) {
        out << "  " << e.name << "\n";
      }
      return ok;
    }

    int cmd_corpus_emit(Options const& o, std::ostream& out) {
      for (auto const& e : corpus::standard()) {
        if (e.name == o.name) {
          out << render(e.presentation);
          return ok;
        }
      }
      out << render(corpus::build(o.name, o.p, parse_params(o.params)));
      return ok;
    }

  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computation and theorem verification in finite p-groups "
                 "given by power-commutator presentations",
                 "pcgroups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--max-elements", o.max_elements,
                   "Element budget per subgroup operation");
    app.add_option("--max-steps", o.max_steps,
                   "Collection step budget per product");

    auto file_arg = [&](CLI::App* sub) {
      sub->add_option("file", o.file, "Presentation file, - for stdin")
          ->required();
    };
    auto subgroup_args = [&](CLI::App* sub) {
      sub->add_option("--gens", o.gens,
                      "Comma-separated generating words (default: whole group)");
      sub->add_option("--op", o.op, "omega, agemo, derived, exponent or order");
      sub->add_option("--i", o.i, "Omega index");
      sub->add_option("--j", o.j, "Agemo index");
    };
    auto format_arg = [&](CLI::App* sub) {
      sub->add_option("--format", o.format, "Output format")
          ->check(CLI::IsMember({"text", "json"}));
    };

    auto* parse_cmd = app.add_subcommand("parse", "Validate and summarize");
    file_arg(parse_cmd);
    auto* cons_cmd = app.add_subcommand("consistency", "Run the overlap check");
    file_arg(cons_cmd);
    format_arg(cons_cmd);
    auto* order_cmd = app.add_subcommand("order", "Print the group order");
    file_arg(order_cmd);
    auto* nf_cmd = app.add_subcommand("nf", "Collected normal form of a word");
    file_arg(nf_cmd);
    nf_cmd->add_option("--word", o.word, "Word")->required();
    auto* ord_cmd = app.add_subcommand("ord", "Order of an element");
    file_arg(ord_cmd);
    ord_cmd->add_option("--word", o.word, "Word")->required();
    auto* sub_cmd = app.add_subcommand("sub", "Subgroup operations");
    file_arg(sub_cmd);
    subgroup_args(sub_cmd);
    auto* pn_cmd = app.add_subcommand("pnclass", "Powerful nilpotency class");
    file_arg(pn_cmd);
    subgroup_args(pn_cmd);
    auto* chain_cmd = app.add_subcommand(
        "chain", "Build and verify the Omega_i(G^p) powerfully central chain");
    file_arg(chain_cmd);
    chain_cmd->add_option("--i", o.i, "Omega index")->required();
    format_arg(chain_cmd);
    chain_cmd->add_flag("--timing", o.timing, "Record wall time per check");
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    file_arg(verify_cmd);
    verify_cmd->add_option("--suite", o.suite,
                           "all, thm1, lemma-p, prop, shorten, chain or main");
    verify_cmd->add_option("--i-max", o.i_max, "Largest omega index");
    verify_cmd->add_option("--j-max", o.j_max, "Largest agemo index");
    verify_cmd->add_option("--k-max", o.k_max,
                           "Largest k in the power inclusion check");
    verify_cmd->add_option("--mode", o.mode, "auto, exhaustive or sample:N");
    verify_cmd->add_option("--seed", o.seed, "Sampling seed");
    format_arg(verify_cmd);
    verify_cmd->add_flag("--timing", o.timing, "Record wall time per check");
    auto* corpus_cmd = app.add_subcommand("corpus", "Built-in presentations");
    corpus_cmd->require_subcommand(1);
    auto* list_cmd = corpus_cmd->add_subcommand("list", "List constructors");
    auto* emit_cmd = corpus_cmd->add_subcommand("emit", "Print a presentation");
    emit_cmd->add_option("name", o.name, "Constructor or standard corpus name")
        ->required();
    emit_cmd->add_option("--p", o.p, "Prime");
    emit_cmd->add_option("--params", o.params,
                         "Comma-separated integer parameters");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(std::move(args));
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : usage_error;
    }

    try {
      if (parse_cmd->parsed()) {
        return cmd_parse(o, out);
      }
      if (cons_cmd->parsed()) {
        return cmd_consistency(o, out);
      }
      if (order_cmd->parsed()) {
        return cmd_order(o, out);
      }
      if (nf_cmd->parsed()) {
        return cmd_nf(o, out);
      }
      if (ord_cmd->parsed()) {
        return cmd_ord(o, out);
      }
      if (sub_cmd->parsed()) {
        return cmd_sub(o, out);
      }
      if (pn_cmd->parsed()) {
        return cmd_pnclass(o, out);
      }
      if (chain_cmd->parsed()) {
        return cmd_chain(o, out);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(o, out);
      }
      if (list_cmd->parsed()) {
        return cmd_corpus_list(out);
      }
      if (emit_cmd->parsed()) {
        return cmd_corpus_emit(o, out);
      }
    } catch (Inconsistent const&) {
      err << "error: the presentation is inconsistent (see `pcgroups "
             "consistency`)\n";
      return usage_error;
    } catch (ResourceLimit const& e) {
      err << "resource limit: " << e.what() << "\n";
      return resource_limit;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    }
    return usage_error;
  }

}  // namespace pcgroups::cli
