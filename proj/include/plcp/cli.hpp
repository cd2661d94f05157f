#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plcp/automata.hpp"
#include "plcp/bitsource.hpp"
#include "plcp/cfrac.hpp"
#include "plcp/hankel.hpp"
#include "plcp/lincomplex.hpp"
#include "plcp/seqgen.hpp"
#include "plcp/seqio.hpp"
#include "plcp/verify.hpp"

namespace plcp {

inline constexpr int kReportFormatVersion = 1;
inline constexpr const char* kPrngName = "mt19937_64";

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_non_unanimous = 2 };

namespace cli {

inline std::string join_invocation(const std::vector<std::string>& parts) {
  std::string s = "plcp";
  for (const auto& p : parts) s += " " + p;
  return s;
}

/// Writes to `path`, or to `out` when the path is empty or "-".
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

/// Origin-1 view of a file sequence: origin-0 input c_0, c_1, ... is read as s_1, s_2, ...
inline CoeffSeq as_origin_one(const CoeffSeq& s) { return s.origin() == 1 ? s : shift_index(s, 1); }
inline CoeffSeq as_origin_zero(const CoeffSeq& s) { return s.origin() == 0 ? s : shift_index(s, 0); }

struct GenArgs {
  std::string family;
  std::string b;
  std::size_t length = 0;
  std::string out;
  std::string image0, image1;
};

inline CoeffSeq generate(const GenArgs& a) {
  const bool wants_b = a.family == "phi1" || a.family == "phi2" || a.family == "phi3";
  if (wants_b && a.b.empty()) throw std::invalid_argument("family " + a.family + " needs --b");
  if (!wants_b && !a.b.empty()) throw std::invalid_argument("--b is only used by phi1, phi2, phi3");
  if ((a.family == "morphism") != (!a.image0.empty() || !a.image1.empty())) {
    throw std::invalid_argument("--image0/--image1 belong to the morphism family");
  }
  if (a.family == "rueppel1") return rueppel(RueppelKind::first, a.length);
  if (a.family == "rueppel2") return rueppel(RueppelKind::second, a.length);
  if (a.family == "phi1") return phi1_jacobi(BitSource::parse(a.b), a.length);
  if (a.family == "phi2") return phi2_selector(BitSource::parse(a.b), a.length);
  if (a.family == "phi3") return phi3_generalized_rueppel(BitSource::parse(a.b), a.length);
  if (a.family == "period-doubling") return named_sequence(NamedSequence::period_doubling, a.length);
  if (a.family == "thue-morse") return named_sequence(NamedSequence::thue_morse, a.length);
  if (a.family == "w-seq") return named_sequence(NamedSequence::w_seq, a.length);
  if (a.family == "z-seq") return named_sequence(NamedSequence::z_seq, a.length);
  if (a.family == "morphism") return morphism_fixed_point(UniformMorphism(a.image0, a.image1), a.length);
  throw std::invalid_argument("unknown family '" + a.family + "'");
}

inline std::string canonical_gen(const GenArgs& a) {
  std::vector<std::string> p{"gen", "--family", a.family};
  if (!a.b.empty()) {
    p.push_back("--b");
    p.push_back(BitSource::parse(a.b).spec());
  }
  if (a.family == "morphism") {
    p.insert(p.end(), {"--image0", a.image0, "--image1", a.image1});
  }
  p.insert(p.end(), {"--length", std::to_string(a.length)});
  if (!a.out.empty()) p.insert(p.end(), {"--out", a.out});
  return join_invocation(p);
}

inline std::string lcp_csv(const CoeffSeq& s, const std::string& invocation) {
  const LCProfile prof = lcp_profile(s);
  std::ostringstream os;
  os << "# format=plcp-lcp-csv version=" << kReportFormatVersion << '\n';
  os << "# invocation: " << invocation << '\n';
  os << "n,L(n),ceil(n/2),perfect\n";
  for (std::size_t n = 1; n <= prof.size(); ++n) {
    os << n << ',' << prof(n) << ',' << perfect_profile_value(n) << ','
       << yes_no(prof(n) == perfect_profile_value(n)) << '\n';
  }
  return os.str();
}

inline std::vector<std::int64_t> degrees_of(const ContinuedFraction& cf) {
  std::vector<std::int64_t> d;
  for (const auto& q : cf.quotients) d.push_back(q.degree());
  return d;
}

inline std::string cf_text(const ContinuedFraction& cf, const std::string& invocation) {
  std::ostringstream os;
  os << "format: plcp-cf\nversion: " << kReportFormatVersion << "\ninvocation: " << invocation << '\n';
  os << "field: " << cf.field().p() << '\n';
  os << "source_length: " << *cf.source_length << '\n';
  os << "guaranteed_count: " << cf.guaranteed_count << '\n';
  os << "degrees: [";
  const auto d = degrees_of(cf);
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  os << "]\n";
  if (cf.guaranteed_count > 0) os << "max_degree: " << max_pq_degree(cf) << '\n';
  else os << "max_degree: none\n";
  os << "next_quotient: " << (cf.tail == CfTail::known_degree ? "degree " : "degree >= ") << cf.next_degree << '\n';
  os << "all_degree_one: " << yes_no(all_partial_quotients_degree_one(cf)) << '\n';
  os << "quotients:\n";
  for (std::size_t i = 0; i < cf.quotients.size(); ++i) os << "  - " << cf.quotients[i] << '\n';
  return os.str();
}

inline std::string cf_json(const ContinuedFraction& cf, const std::string& invocation) {
  nlohmann::ordered_json j;
  j["format"] = "plcp-cf";
  j["version"] = kReportFormatVersion;
  j["invocation"] = invocation;
  j["field"] = cf.field().p();
  j["source_length"] = *cf.source_length;
  j["guaranteed_count"] = cf.guaranteed_count;
  j["degrees"] = degrees_of(cf);
  if (cf.guaranteed_count > 0) j["max_degree"] = max_pq_degree(cf);
  else j["max_degree"] = nullptr;
  j["next_quotient"] = {{"degree", cf.next_degree}, {"exact", cf.tail == CfTail::known_degree}};
  j["all_degree_one"] = all_partial_quotients_degree_one(cf);
  auto& qs = j["quotients"] = nlohmann::ordered_json::array();
  for (const auto& q : cf.quotients) qs.push_back(q.coeffs());
  return j.dump(2) + "\n";
}

inline std::string hankel_csv(const HankelReport& rep, const std::string& invocation) {
  std::ostringstream os;
  os << "# format=plcp-hankel-csv version=" << kReportFormatVersion << '\n';
  os << "# invocation: " << invocation << '\n';
  os << "n," << (rep.exact_integer() ? "H_n(exact)" : "H_n(mod " + std::to_string(*rep.modulus) + ")") << ",odd\n";
  for (std::size_t n = 1; n <= rep.max_order; ++n) {
    os << n << ',';
    if (rep.exact_integer()) os << rep.exact[n - 1];
    else os << rep.residues[n - 1];
    os << ',';
    if (rep.exact_integer() || *rep.modulus == 2) os << yes_no(rep.is_odd(n));
    else os << "n/a";
    os << '\n';
  }
  return os.str();
}

inline std::string kernel_text(const KernelReport& rep, const std::string& invocation) {
  std::ostringstream os;
  os << "format: plcp-kernel\nversion: " << kReportFormatVersion << "\ninvocation: " << invocation << '\n';
  os << "heuristic: classes are identified by their first " << rep.tau
     << " terms; a closed result is evidence, not proof, of automaticity\n";
  os << "tau: " << rep.tau << "\nmax_classes: " << rep.max_classes << "\nsource_length: " << rep.source_length << '\n';
  os << "status: " << to_string(rep.status) << "\nclass_count: " << rep.classes.size() << '\n';
  os << "classes:\n";
  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    const auto& c = rep.classes[i];
    os << "  - id: " << i << "\n    witness: c(2^" << c.k << " n + " << c.j << ")\n    prefix: ";
    for (std::size_t t = 0; t < rep.tau; ++t) os << c.terms[t];
    os << '\n';
  }
  os << "edges:\n";
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    for (int op = 0; op < 2; ++op) {
      os << "  - " << i << " T" << op << ' ';
      if (rep.edges[i][op]) os << *rep.edges[i][op];
      else os << "unresolved";
      os << '\n';
    }
  }
  return os.str();
}

inline std::string kernel_dot(const KernelReport& rep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    for (int op = 0; op < 2; ++op) {
      if (rep.edges[i][op]) os << "class_" << i << " --T" << op << "--> class_" << *rep.edges[i][op] << '\n';
    }
  }
  return os.str();
}

struct VerifyArgs {
  std::string source = "phi2-random";
  std::size_t trials = 100;
  std::size_t length = 512;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
};

inline std::vector<VerifyRecord> verify_records(const VerifyArgs& a) {
  std::vector<VerifyRecord> recs;
  if (a.source == "file") {
    if (a.in.empty()) throw std::invalid_argument("--source file needs --in");
    const CoeffSeq s = as_origin_one(read_sequence_file(a.in));
    recs.push_back(verify_sequence(s, "file " + a.in));
    return recs;
  }
  if (a.source != "phi2-random" && a.source != "random-unconstrained") {
    throw std::invalid_argument("unknown source '" + a.source + "'");
  }
  if (a.length < 8) throw std::invalid_argument("--length must be at least 8");
  if (a.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  std::mt19937_64 master(a.seed);
  for (std::size_t t = 0; t < a.trials; ++t) {
    const BitSource b = BitSource::random(master());
    if (a.source == "phi2-random") {
      recs.push_back(verify_sequence(shift_index(phi2_selector(b, a.length), 1), "phi2 --b " + b.spec()));
    } else {
      std::vector<Residue> bits;
      for (Bit x : b.take(a.length)) bits.push_back(x);
      bits[0] = 1;
      recs.push_back(verify_sequence(CoeffSeq::binary(std::move(bits), 1), "unconstrained " + b.spec() + " s_1=1"));
    }
  }
  return recs;
}

inline std::string verify_text(const VerifyArgs& a, const std::vector<VerifyRecord>& recs,
                               const std::string& invocation) {
  std::ostringstream os;
  os << "format: plcp-verify\nversion: " << kReportFormatVersion << "\ninvocation: " << invocation << '\n';
  os << "source: " << a.source << '\n';
  if (a.source != "file") os << "seed: " << a.seed << "\nprng: " << kPrngName << '\n';
  os << "records:\n";
  std::size_t agree = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    os << "  - trial: " << i << "\n    generator: " << r.generator << "\n    length: " << r.length << '\n';
    const auto vals = r.results.as_array();
    for (std::size_t k = 0; k < vals.size(); ++k) os << "    " << kPropertyNames[k] << ": " << yes_no(vals[k]) << '\n';
    const auto v = r.verdict();
    os << "    verdict: " << (v ? (*v ? "unanimous-true" : "unanimous-false") : "NON-UNANIMOUS") << '\n';
    if (v) ++agree;
  }
  os << "summary:\n  records: " << recs.size() << "\n  unanimous: " << agree << "\n  non_unanimous: "
     << recs.size() - agree << '\n';
  return os.str();
}

inline DensePoly parse_poly_spec(const std::string& spec, const PrimeField& f) {
  std::vector<Residue> c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
      throw std::invalid_argument("bad coefficient '" + item + "' in polynomial spec");
    }
    c.push_back(f.reduce(std::stoll(item)));
  }
  if (c.empty()) throw std::invalid_argument("empty polynomial spec");
  return DensePoly(f, std::move(c));
}

}  // namespace cli

/// Runs the command line (arguments exclude the program name). Returns the exit status.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect linear complexity profiles, Laurent continued fractions and apwenian sequences", "plcp"};
  app.require_subcommand(1);

  cli::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a sequence file");
  gen_cmd->add_option("--family", gen.family,
                      "rueppel1 rueppel2 phi1 phi2 phi3 period-doubling thue-morse w-seq z-seq morphism")
      ->required();
  gen_cmd->add_option("--b", gen.b, "bit source: <bits> | literal:<bits> | periodic:<P>:<word> | random:<seed>");
  gen_cmd->add_option("--length", gen.length, "number of terms")->required();
  gen_cmd->add_option("--out", gen.out, "output file (default: standard output)");
  gen_cmd->add_option("--image0", gen.image0, "image of 0 (morphism family)");
  gen_cmd->add_option("--image1", gen.image1, "image of 1 (morphism family)");

  auto* analyze = app.add_subcommand("analyze", "analyse a sequence file");
  analyze->require_subcommand(1);
  std::string in, csv, json, dot, gspec;
  std::size_t max_order = 0, tau = 64, max_classes = 256;
  std::uint32_t om_field = 2;
  bool exact_pm1 = false;
  auto* lcp = analyze->add_subcommand("lcp", "linear complexity profile (CSV)");
  lcp->add_option("--in", in)->required();
  lcp->add_option("--csv", csv, "CSV output file (default: standard output)");
  auto* cf = analyze->add_subcommand("cf", "Laurent continued fraction");
  cf->add_option("--in", in)->required();
  cf->add_option("--json", json, "write a JSON report to this file ('-' for standard output)");
  auto* hk = analyze->add_subcommand("hankel", "Hankel determinants (CSV)");
  hk->add_option("--in", in)->required();
  hk->add_option("--max", max_order, "largest order M")->required();
  hk->add_flag("--exact-pm1", exact_pm1, "exact integer determinants of the +-1 image (-1)^c_n");
  hk->add_option("--csv", csv);
  auto* kern = analyze->add_subcommand("kernel", "2-kernel exploration");
  kern->add_option("--in", in)->required();
  kern->add_option("--tau", tau, "prefix length identifying classes")->capture_default_str();
  kern->add_option("--max-classes", max_classes)->capture_default_str();
  kern->add_option("--dot", dot, "edge list output file");
  auto* om = analyze->add_subcommand("om", "orthogonal multiplicity of a monic polynomial");
  om->add_option("--g", gspec, "coefficients, ascending degree, comma separated")->required();
  om->add_option("--field", om_field)->capture_default_str();

  cli::VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "check the five equivalent properties on many sequences");
  verify->add_option("--source", ver.source, "phi2-random | random-unconstrained | file")->capture_default_str();
  verify->add_option("--trials", ver.trials)->capture_default_str();
  verify->add_option("--length", ver.length)->capture_default_str();
  verify->add_option("--seed", ver.seed)->capture_default_str();
  verify->add_option("--in", ver.in);
  verify->add_option("--out", ver.out, "report file (default: standard output)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (gen_cmd->parsed()) {
      const CoeffSeq s = cli::generate(gen);
      const std::string inv = cli::canonical_gen(gen);
      if (gen.out.empty()) {
        write_sequence(out, s);
        err << inv << '\n';
      } else {
        write_sequence_file(gen.out, s);
        out << inv << '\n';
      }
      return exit_ok;
    }
    if (analyze->parsed()) {
      std::vector<std::string> inv{"analyze"};
      if (lcp->parsed()) {
        inv.insert(inv.end(), {"lcp", "--in", in});
        if (!csv.empty()) inv.insert(inv.end(), {"--csv", csv});
        const CoeffSeq s = cli::as_origin_one(read_sequence_file(in));
        cli::emit(cli::lcp_csv(s, cli::join_invocation(inv)), csv, out);
      } else if (cf->parsed()) {
        inv.insert(inv.end(), {"cf", "--in", in});
        if (!json.empty()) inv.insert(inv.end(), {"--json", json});
        const auto res = laurent_cf(cli::as_origin_one(read_sequence_file(in)));
        const std::string invs = cli::join_invocation(inv);
        if (json.empty()) out << cli::cf_text(res, invs);
        else cli::emit(cli::cf_json(res, invs), json, out);
      } else if (hk->parsed()) {
        inv.insert(inv.end(), {"hankel", "--in", in, "--max", std::to_string(max_order)});
        if (exact_pm1) inv.push_back("--exact-pm1");
        if (!csv.empty()) inv.insert(inv.end(), {"--csv", csv});
        const CoeffSeq c = cli::as_origin_zero(read_sequence_file(in));
        HankelReport rep;
        if (exact_pm1) {
          require_binary(c);
          std::vector<int> e;
          for (Residue r : c.terms()) e.push_back(r ? -1 : 1);
          rep = hankel_integer_pm1(e, max_order);
        } else {
          rep = hankel_mod_p(c, max_order);
        }
        cli::emit(cli::hankel_csv(rep, cli::join_invocation(inv)), csv, out);
      } else if (kern->parsed()) {
        inv.insert(inv.end(), {"kernel", "--in", in, "--tau", std::to_string(tau), "--max-classes",
                               std::to_string(max_classes)});
        if (!dot.empty()) inv.insert(inv.end(), {"--dot", dot});
        const CoeffSeq s = read_sequence_file(in);
        // origin-1 input s_1, s_2, ... is scanned as 0, s_1, s_2, ...
        const CoeffSeq c = s.origin() == 0 ? s : extend_with_zero_term(s);
        const KernelReport rep = kernel_explore(c, tau, max_classes);
        out << cli::kernel_text(rep, cli::join_invocation(inv));
        if (!dot.empty()) cli::emit(cli::kernel_dot(rep), dot, out);
      } else if (om->parsed()) {
        const PrimeField f(om_field);
        const DensePoly g = cli::parse_poly_spec(gspec, f);
        out << "g: " << g << "\nfield: " << f.p() << "\northogonal_multiplicity: " << orthogonal_multiplicity(g)
            << '\n';
      }
      return exit_ok;
    }
    if (verify->parsed()) {
      std::vector<std::string> inv{"verify", "--source", ver.source};
      if (ver.source == "file") {
        inv.insert(inv.end(), {"--in", ver.in});
      } else {
        inv.insert(inv.end(), {"--trials", std::to_string(ver.trials), "--length", std::to_string(ver.length),
                               "--seed", std::to_string(ver.seed)});
      }
      if (!ver.out.empty()) inv.insert(inv.end(), {"--out", ver.out});
      const auto recs = cli::verify_records(ver);
      cli::emit(cli::verify_text(ver, recs, cli::join_invocation(inv)), ver.out, out);
      for (const auto& r : recs) {
        if (!r.unanimous()) return exit_non_unanimous;
      }
      return exit_ok;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace plcp
