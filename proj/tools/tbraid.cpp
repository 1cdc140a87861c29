// tbraid: batch front end over the tiedbraid C interface.
//
// Exit codes: 0 success, 1 negative verdict, 2 undecided, 3 usage or input
// error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tiedbraid/tiedbraid.h"

namespace {

  constexpr int kOk = 0, kNegative = 1, kUndecided = 2, kUsage = 3;

  struct Free {
    void operator()(tb_context* p) const { tb_context_free(p); }
    void operator()(tb_word* p) const { tb_word_free(p); }
    void operator()(tb_document* p) const { tb_document_free(p); }
    void operator()(char* p) const { tb_string_free(p); }
  };
  using ContextPtr  = std::unique_ptr<tb_context, Free>;
  using WordPtr     = std::unique_ptr<tb_word, Free>;
  using DocumentPtr = std::unique_ptr<tb_document, Free>;
  using StringPtr   = std::unique_ptr<char, Free>;

  // A failed library call, carrying the exit code it maps to.
  struct Failure {
    int         code;
    std::string message;
  };

  void check(tb_status s, int code = kUsage) {
    if (s != TB_OK) {
      std::string message = tb_last_error();
      throw Failure{code, message.empty() ? tb_status_string(s) : message};
    }
  }

  std::string take(char* s) {
    StringPtr owner(s);
    return s ? std::string(s) : std::string();
  }

  int exit_for(tb_verdict v) {
    return v == TB_EQUAL ? kOk : v == TB_DIFFER ? kNegative : kUndecided;
  }

  struct Options {
    std::string              ctx;
    std::uint64_t            seed   = 1;
    std::uint64_t            budget = 1'000'000;
    std::string              file;
    std::vector<std::string> words;
  };

  ContextPtr context_flag(Options const& o) {
    if (o.ctx.empty()) {
      return nullptr;
    }
    tb_context* c = nullptr;
    check(tb_context_parse(o.ctx.c_str(), &c));
    return ContextPtr(c);
  }

  std::string read_input(std::string const& file) {
    if (file == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw Failure{kUsage, "cannot open " + file};
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  // Words from the file argument and/or -w flags; the --ctx flag overrides
  // any header.
  struct Input {
    ContextPtr           ctx;
    std::vector<WordPtr> words;
  };

  Input load(Options const& o, int error_code = kUsage) {
    auto        flag = context_flag(o);
    std::string text;
    if (!o.file.empty()) {
      text = read_input(o.file);
    }
    if (!o.words.empty()) {
      if (!flag && o.file.empty()) {
        throw Failure{kUsage, "-w needs --ctx or a file with a %ctx header"};
      }
      text += "\n";
      for (auto const& w : o.words) {
        text += (w.empty() ? std::string("e") : w) + "\n";
      }
    }
    if (o.file.empty() && o.words.empty()) {
      if (!flag) {
        throw Failure{kUsage, "no input: give a file, -w words or --ctx"};
      }
    }
    tb_document* d = nullptr;
    check(tb_document_load(text.c_str(), flag.get(), &d), error_code);
    DocumentPtr doc(d);

    Input       in;
    tb_context* c = nullptr;
    check(tb_document_context(doc.get(), &c));
    in.ctx.reset(c);
    for (std::size_t k = 0; k < tb_document_size(doc.get()); ++k) {
      tb_word* w = nullptr;
      check(tb_document_word(doc.get(), k, &w));
      in.words.emplace_back(w);
    }
    return in;
  }

  std::string render(tb_word const* w) {
    char* s = nullptr;
    check(tb_word_render(w, &s), kNegative);
    return take(s);
  }

  std::string header(tb_context const* c) {
    char* s = nullptr;
    check(tb_context_header(c, &s));
    return take(s);
  }

  void require_words(Input const& in, std::size_t count, char const* command) {
    if (count != 0 && in.words.size() != count) {
      throw Failure{kUsage, std::string(command) + " needs exactly " + std::to_string(count)
                                + " word(s), got " + std::to_string(in.words.size())};
    }
    if (in.words.empty()) {
      throw Failure{kUsage, std::string(command) + " needs at least one word"};
    }
  }

  int cmd_parse(Options const& o) {
    auto in = load(o, kNegative);
    std::cout << "ctx=" << header(in.ctx.get()) << '\n';
    for (std::size_t k = 0; k < in.words.size(); ++k) {
      tb_word* e = nullptr;
      check(tb_word_expand(in.words[k].get(), &e), kNegative);
      WordPtr expanded(e);
      std::cout << "word." << k + 1 << '=' << render(in.words[k].get()) << '\n'
                << "expanded." << k + 1 << '=' << render(expanded.get()) << '\n';
    }
    std::cout << "words=" << in.words.size() << '\n';
    return kOk;
  }

  int cmd_normalize(Options const& o, bool semantics) {
    auto in = load(o);
    require_words(in, 0, "normalize");
    for (std::size_t k = 0; k < in.words.size(); ++k) {
      char* s = nullptr;
      check(tb_normal_form(in.words[k].get(), &s), kNegative);
      std::string nf = take(s);
      std::cout << "word." << k + 1 << '=' << render(in.words[k].get()) << '\n';
      std::istringstream lines(nf);
      for (std::string line; std::getline(lines, line);) {
        auto eq = line.find('=');
        std::cout << line.substr(0, eq) << '.' << k + 1 << line.substr(eq) << '\n';
      }
      if (semantics) {
        check(tb_semantics(in.words[k].get(), &s), kNegative);
        std::istringstream sem(take(s));
        for (std::string line; std::getline(sem, line);) {
          auto eq = line.find('=');
          std::cout << line.substr(0, eq) << '.' << k + 1 << line.substr(eq) << '\n';
        }
      }
    }
    return kOk;
  }

  int cmd_eq(Options const& o, bool braid_only) {
    auto in = load(o);
    require_words(in, 2, "eq");
    tb_verdict v       = TB_UNDECIDED;
    char*      witness = nullptr;
    auto const fn      = braid_only ? tb_braid_equal : tb_monoid_equal;
    check(fn(in.words[0].get(), in.words[1].get(), o.budget, &v, &witness));
    std::string const w = take(witness);
    switch (v) {
      case TB_EQUAL: std::cout << "EQUAL\n"; break;
      case TB_DIFFER: std::cout << "DIFFER(" << w << ")\n"; break;
      case TB_UNDECIDED: std::cout << "UNDECIDED(budget)\n"; break;
    }
    return exit_for(v);
  }

  int cmd_closure(Options const& o, bool record, std::vector<std::size_t> const& essential) {
    auto in = load(o);
    require_words(in, 0, "closure");
    for (std::size_t k = 0; k < in.words.size(); ++k) {
      if (in.words.size() > 1) {
        std::cout << (k ? "\n" : "") << "word=" << render(in.words[k].get()) << '\n';
      }
      char* s = nullptr;
      check(record ? tb_closure_record(in.words[k].get(), &s)
                   : tb_closure_report(in.words[k].get(), &s),
            kNegative);
      std::string text = take(s);
      std::cout << text << (text.ends_with('\n') ? "" : "\n");
      for (auto idx : essential) {
        int flag = 0;
        check(tb_essential(in.words[k].get(), idx, &flag), kNegative);
        std::cout << "essential." << idx << '=' << (flag ? "true" : "false") << '\n';
      }
    }
    return kOk;
  }

  int cmd_move(Options const& o, std::string const& name, std::vector<std::string> const& raw) {
    std::vector<int> args;
    for (auto const& a : raw) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoi(a, &used));
        if (used != a.size()) {
          throw std::invalid_argument(a);
        }
      } catch (std::exception const&) {
        throw Failure{kUsage, "move argument is not an integer: " + a};
      }
    }
    auto                        in = load(o);
    std::vector<tb_word const*> words;
    for (auto const& w : in.words) {
      words.push_back(w.get());
    }
    tb_word*    out    = nullptr;
    char*       report = nullptr;
    std::size_t diffs  = 0;
    auto const  s = tb_move_apply(name.c_str(), words.data(), words.size(), args.data(),
                                  args.size(), &out, &report, &diffs);
    // A move whose precondition fails is a negative answer; a malformed
    // request is a usage error.
    check(s, s == TB_BAD_INSTANTIATION || s == TB_INVALID_ARGUMENT ? kUsage : kNegative);
    WordPtr result(out);
    std::cout << "word=" << render(result.get()) << '\n' << take(report);
    return diffs == 0 ? kOk : kNegative;
  }

  int cmd_relations(Options const& o, bool identities) {
    auto  in = load(o);
    char* s  = nullptr;
    check(tb_relations(in.ctx.get(), identities ? 1 : 0, &s));
    std::cout << header(in.ctx.get()) << '\n' << take(s);
    return kOk;
  }

  int cmd_check(Options const& o, std::vector<std::string> const& suites) {
    auto in = load(o);
    if (suites.empty()) {
      throw Failure{kUsage, "check needs --relations, --identities or --tbbm"};
    }
    int worst = kOk;
    for (auto const& which : suites) {
      char*      report = nullptr;
      tb_verdict v      = TB_UNDECIDED;
      check(tb_check(in.ctx.get(), which.c_str(), o.budget, &report, &v), kUsage);
      std::cout << "suite=" << which << '\n' << take(report);
      std::cout << "result=" << (v == TB_EQUAL ? "PASS" : v == TB_DIFFER ? "FAIL" : "UNDECIDED")
                << '\n';
      int const code = exit_for(v);
      if (code == kNegative || (code == kUndecided && worst == kOk)) {
        worst = code;
      }
    }
    return worst;
  }

  int cmd_fuzz(Options const& o, int cases, int max_length) {
    auto       ctx    = context_flag(o);
    char*      report = nullptr;
    tb_verdict v      = TB_UNDECIDED;
    check(tb_fuzz(o.seed, cases, max_length, o.budget, ctx.get(), &report, &v));
    std::cout << take(report);
    return exit_for(v);
  }

  int cmd_draw(Options const& o, std::string const& format) {
    auto in = load(o);
    require_words(in, 0, "draw");
    for (std::size_t k = 0; k < in.words.size(); ++k) {
      char* s = nullptr;
      check(tb_draw(in.words[k].get(), format == "svg" ? TB_SVG : TB_ASCII, &s), kNegative);
      std::cout << (k && format != "svg" ? "\n" : "") << take(s);
    }
    return kOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tied braid monoids: words, normal forms, equality, closures and Markov moves"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--ctx", o.ctx, "context header, overrides the file's %ctx line");
  app.add_option("--seed", o.seed, "random seed for fuzz");
  app.add_option("--budget", o.budget, "handle reduction step budget");

  auto words = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "word file (- for stdin)");
    sub->add_option("-w,--word", o.words, "a word in the notation; repeatable")->allow_extra_args(false);
  };

  auto* parse = app.add_subcommand("parse", "parse words and print their canonical spelling");
  words(parse);

  bool  semantics = false;
  auto* normalize = app.add_subcommand("normalize", "braid part and tie partition of each word");
  words(normalize);
  normalize->add_flag("--semantics", semantics, "also print permutation, partition and winding");

  bool  braid_only = false;
  auto* eq         = app.add_subcommand("eq", "decide equality of two words");
  words(eq);
  eq->add_flag("--braid", braid_only, "compare as tie-free braids");

  bool                     record = false;
  std::vector<std::size_t> essential;
  auto* closure = app.add_subcommand("closure", "closure components, tie classes and winding");
  words(closure);
  closure->add_flag("--record", record, "one-line record instead of the report");
  closure->add_option("--essential", essential, "1-based positions of ties to classify");

  std::string              move_name;
  std::vector<std::string> move_args;
  auto* move = app.add_subcommand("move", "apply one move and diff the closures");
  move->add_option("name", move_name, "conjugate, loop-conjugate, stabilize, destabilize, lmove, "
                                      "add-tie, add-fixed-tie, tbbm")
      ->required();
  move->add_option("args", move_args, "integer arguments of the move");
  move->add_option("-f,--file", o.file, "word file (- for stdin)");
  move->add_option("-w,--word", o.words, "a word in the notation; repeatable")->allow_extra_args(false);

  bool  identities = false;
  auto* relations  = app.add_subcommand("relations", "print the relation catalog for the context");
  words(relations);
  relations->add_flag("--identities", identities, "print the derived identities instead");

  std::vector<std::string> suites;
  auto* chk = app.add_subcommand("check", "verify relation suites under monoid equality");
  words(chk);
  chk->add_flag_callback("--relations", [&] { suites.push_back("relations"); }, "defining relations");
  chk->add_flag_callback("--identities", [&] { suites.push_back("identities"); }, "derived identities");
  chk->add_flag_callback("--tbbm", [&] { suites.push_back("tbbm"); }, "band move certificates");

  int   cases = 1000, max_length = 20;
  auto* fz    = app.add_subcommand("fuzz", "seeded random property checks");
  fz->add_option("--cases", cases, "number of cases")->check(CLI::NonNegativeNumber);
  fz->add_option("--max-length", max_length, "maximum word length")->check(CLI::NonNegativeNumber);

  std::string format = "ascii";
  auto*       dr     = app.add_subcommand("draw", "ASCII or SVG picture of each word");
  words(dr);
  dr->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(o);
    if (*normalize) return cmd_normalize(o, semantics);
    if (*eq) return cmd_eq(o, braid_only);
    if (*closure) return cmd_closure(o, record, essential);
    if (*move) return cmd_move(o, move_name, move_args);
    if (*relations) return cmd_relations(o, identities);
    if (*chk) return cmd_check(o, suites);
    if (*fz) return cmd_fuzz(o, cases, max_length);
    if (*dr) return cmd_draw(o, format);
  } catch (Failure const& f) {
    std::cerr << "tbraid: " << f.message << '\n';
    return f.code;
  }
  return kUsage;
}
