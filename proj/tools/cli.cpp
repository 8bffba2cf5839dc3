#include "cli.hpp"

#include <iterator>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "braidcert/errors.hpp"
#include "braidcert/frames.hpp"
#include "braidcert/garside.hpp"
#include "braidcert/hurwitz.hpp"
#include "braidcert/json_io.hpp"

namespace braidcert::cli {

namespace {

// Reads file payloads; "-" means the input stream, which may be consumed
// only once per invocation.
class Payloads {
 public:
  explicit Payloads(std::istream& in) : in_(in) {}

  json_io::Json load(const std::string& path) {
    std::string text;
    if (path == "-") {
      if (stdin_used_) throw ParseError("standard input can supply only one payload");
      stdin_used_ = true;
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream file(path);
      if (!file) throw ParseError("cannot read " + path);
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return json_io::parse(text);
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

void check_strands(int n) {
  if (n < 2) throw ParseError("--n must be at least 2");
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << json_io::to_json(c).dump() << '\n';
}

struct Options {
  int n = 0;
  std::string word;
  std::string word2;

  std::string mode;
  int j = 0;
  std::string conjugator;
  std::vector<std::string> files;
  std::size_t max_states = rewrite::SearchLimits{}.max_states;

  int max_depth = OrbitSearchLimits{}.max_depth;
};

int cmd_nf(const Options& o, std::ostream& out) {
  check_strands(o.n);
  const BraidWord w = word_from_text(o.word, o.n);
  const garside::NormalForm nf = garside::normal_form(w);
  out << "delta_power: " << nf.delta_power << '\n';
  out << "factors: " << nf.factors.size() << '\n';
  for (const Permutation& f : nf.factors) {
    out << "  " << word_to_text(garside::permutation_braid_word(f)) << '\n';
  }
  out << "word: " << word_to_text(garside::compact_word(nf)) << '\n';
  return kOk;
}

int cmd_eq(const Options& o, std::ostream& out) {
  check_strands(o.n);
  const bool same = garside::equal(word_from_text(o.word, o.n), word_from_text(o.word2, o.n));
  out << (same ? "equal" : "not-equal") << '\n';
  return same ? kOk : kVerifyFailed;
}

int cmd_certify(const Options& o, Payloads& payloads, std::ostream& out) {
  rewrite::SearchLimits limits;
  limits.max_states = o.max_states;
  auto need_files = [&](std::size_t count) {
    if (o.files.size() != count) {
      throw ParseError("mode " + o.mode + " takes " + std::to_string(count) + " input file(s)");
    }
  };
  if (o.mode == "same-frame" || o.mode == "main") {
    need_files(2);
    const auto from = json_io::frame_factorization_from_json(payloads.load(o.files[0]));
    const auto to = json_io::frame_factorization_from_json(payloads.load(o.files[1]));
    if (from.frame.strands != to.frame.strands) throw MismatchError("strand counts differ");
    print_certificate(out, o.mode == "main"
                               ? frames::main_theorem_certificate(from, to, limits)
                               : frames::same_frame_certificate(from, to, limits));
    return kOk;
  }
  need_files(0);
  check_strands(o.n);
  if (o.mode == "one-conj") {
    if (o.j < 1 || o.j >= o.n) throw ParseError("--j must lie in [1, n-1]");
    print_certificate(out, frames::one_conj_certificate(o.j, o.n));
  } else {
    print_certificate(out, frames::conj_certificate(word_from_text(o.conjugator, o.n), o.n));
  }
  return kOk;
}

// Both tuples plus certificate must agree on n and length; disagreement is
// an input error rather than a failed verification.
int cmd_verify(const Options& o, Payloads& payloads, std::ostream& out) {
  const Factorization from = json_io::factorization_from_json(payloads.load(o.files[0]));
  const Factorization to = json_io::factorization_from_json(payloads.load(o.files[1]));
  const Certificate c = json_io::certificate_from_json(payloads.load(o.files[2]));
  if (from.strands() != to.strands()) throw MismatchError("strand counts differ");
  if (from.length() != to.length() || c.source_length != from.length()) {
    throw MismatchError("lengths differ: " + std::to_string(from.length()) + ", " +
                        std::to_string(to.length()) + " and certificate " +
                        std::to_string(c.source_length));
  }
  const Verdict v = verify_certificate(from, to, c);
  if (v.ok) {
    out << "ok\n";
    return kOk;
  }
  out << "fail";
  if (v.first_mismatch) out << " at entry " << *v.first_mismatch;
  out << ": " << v.diagnostic << '\n';
  return kVerifyFailed;
}

int cmd_orbit(const Options& o, Payloads& payloads, std::ostream& out) {
  const Factorization from = json_io::factorization_from_json(payloads.load(o.files[0]));
  const Factorization to = json_io::factorization_from_json(payloads.load(o.files[1]));
  OrbitSearchLimits limits;
  limits.max_depth = o.max_depth;
  limits.max_states = o.max_states;
  const std::optional<Certificate> c = orbit_search(from, to, limits);
  if (!c) {
    out << "not-found\n";
    return kVerifyFailed;
  }
  print_certificate(out, *c);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Braid group normal forms and Hurwitz equivalence certificates", "braidcert"};
  app.require_subcommand(1);

  CLI::App* nf = app.add_subcommand("nf", "Left normal form of a word");
  nf->add_option("--n", o.n, "Number of strands")->required();
  nf->add_option("word", o.word, "Signed generator indices, e.g. \"1 -2 3\"");

  CLI::App* eq = app.add_subcommand("eq", "Decide whether two words are equal braids");
  eq->add_option("--n", o.n, "Number of strands")->required();
  eq->add_option("w1", o.word, "First word")->required();
  eq->add_option("w2", o.word2, "Second word")->required();

  CLI::App* certify = app.add_subcommand("certify", "Emit a Hurwitz move certificate");
  certify->add_option("mode", o.mode, "same-frame | one-conj | conj | main")
      ->required()
      ->check(CLI::IsMember({"same-frame", "one-conj", "conj", "main"}));
  certify->add_option("inputs", o.files, "Frame factorization JSON files (- for stdin)");
  certify->add_option("--n", o.n, "Number of strands (one-conj, conj)");
  certify->add_option("--j", o.j, "Conjugating generator (one-conj)");
  certify->add_option("--b", o.conjugator, "Conjugating word (conj)");
  certify->add_option("--max-states", o.max_states, "Rewrite search budget");

  CLI::App* verify = app.add_subcommand("verify", "Replay a certificate between two tuples");
  verify->add_option("inputs", o.files, "FROM.json TO.json CERT.json (- for stdin)")
      ->required()
      ->expected(3);

  CLI::App* orbit = app.add_subcommand("orbit", "Search the Hurwitz orbit for a certificate");
  orbit->add_option("inputs", o.files, "FROM.json TO.json (- for stdin)")
      ->required()
      ->expected(2);
  orbit->add_option("--max-depth", o.max_depth, "Total search depth");
  orbit->add_option("--max-states", o.max_states, "Stored tuple budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Payloads payloads(in);
  try {
    if (nf->parsed()) return cmd_nf(o, out);
    if (eq->parsed()) return cmd_eq(o, out);
    if (certify->parsed()) return cmd_certify(o, payloads, out);
    if (verify->parsed()) return cmd_verify(o, payloads, out);
    return cmd_orbit(o, payloads, out);
  } catch (const NotEquivalent& e) {
    err << "not equivalent: " << e.what() << '\n';
    return kNotEquivalent;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const ConstructionError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace braidcert::cli
