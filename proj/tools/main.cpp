// Command-line front end: every library operation behind one binary, with
// deterministic text or JSON output.
//
// Exit codes: 0 success, 1 a verification failed, 2 input error,
// 3 cap or timeout.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "powsgp/acceptance.hpp"
#include "powsgp/autosearch.hpp"
#include "powsgp/errors.hpp"
#include "powsgp/io.hpp"
#include "powsgp/lemmas.hpp"
#include "powsgp/quotient.hpp"
#include "powsgp/sumset.hpp"

namespace {

using namespace powsgp;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct GroundArgs {
  std::vector<std::int64_t> gens;
  bool no_zero = false;

  PSet::Ground build() const { return NumericalSemigroup::build(gens, !no_zero); }
};

void add_ground_options(CLI::App* cmd, GroundArgs& args) {
  cmd->add_option("--gens", args.gens, "ground semigroup generators")
      ->required()
      ->delimiter(',');
  cmd->add_flag("--no-zero", args.no_zero, "use the semigroup variant without 0");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::int64_t env_int(const char* name, std::int64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  return std::atoll(raw);
}

struct Output {
  std::string format = "text";

  bool json() const { return format == "json"; }
  void emit(const nlohmann::json& payload) const {
    nlohmann::json out = payload;
    out["schema"] = "1";
    std::cout << out.dump() << "\n";
  }
};

void add_format_option(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Variant parse_variant(const std::string& text) {
  if (text == "p0") return Variant::P0;
  if (text == "p") return Variant::P;
  throw input_error("unknown variant: " + text);
}

int run(int argc, char** argv) {
  CLI::App app{"power semigroup toolkit for numerical semigroups"};
  app.require_subcommand(1);
  int rc = kOk;

  const std::size_t element_cap =
      static_cast<std::size_t>(env_int("POWSGP_ELEMENT_CAP", std::int64_t{1} << 14));
  const std::size_t enum_cap = static_cast<std::size_t>(env_int("POWSGP_ENUM_CAP", 24));
  const double timeout_seconds =
      static_cast<double>(env_int("POWSGP_TIMEOUT_SECONDS", 60));

  // ---- nsgp ------------------------------------------------------------
  auto* nsgp = app.add_subcommand("nsgp", "numerical semigroup queries");
  nsgp->require_subcommand(1);
  {
    static GroundArgs ga;
    static Output out;
    auto* info = nsgp->add_subcommand("info", "generators, Frobenius number and gaps");
    add_ground_options(info, ga);
    add_format_option(info, out);
    info->callback([&] {
      auto s = ga.build();
      if (out.json()) {
        nlohmann::json j = to_json(*s);
        j["gaps"] = s->gaps();
        out.emit(j);
      } else {
        std::cout << "H=" << s->to_text() << " frobenius=" << s->frobenius() << " gaps={";
        bool first = true;
        for (std::int64_t g : s->gaps()) {
          if (!first) std::cout << ',';
          std::cout << g;
          first = false;
        }
        std::cout << "}\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    auto* frob = nsgp->add_subcommand("frobenius", "print the Frobenius number");
    add_ground_options(frob, ga);
    add_format_option(frob, out);
    frob->callback([&] {
      auto s = ga.build();
      if (out.json()) {
        out.emit({{"frobenius", s->frobenius()}});
      } else {
        std::cout << s->frobenius() << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static bool in_n = false;
    auto* gaps = nsgp->add_subcommand("gaps", "print the gap set");
    add_ground_options(gaps, ga);
    add_format_option(gaps, out);
    gaps->add_flag("--complement-in-n", in_n, "include the conventional 0 of the no-zero variant");
    gaps->callback([&] {
      auto s = ga.build();
      auto g = s->gaps(in_n);
      if (out.json()) {
        out.emit({{"gaps", g}});
      } else {
        std::cout << "{";
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (i > 0) std::cout << ',';
          std::cout << g[i];
        }
        std::cout << "}\n";
      }
    });
  }

  // ---- set -------------------------------------------------------------
  auto* set = app.add_subcommand("set", "canonical set representation");
  set->require_subcommand(1);
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    auto* canon = set->add_subcommand("canon", "canonicalize a set literal");
    add_ground_options(canon, ga);
    add_format_option(canon, out);
    canon->add_option("--set", literal, "set literal, e.g. \"{0,2,~7}\"")->required();
    canon->callback([&] {
      PSet x = PSet::parse_literal(ga.build(), literal);
      if (out.json()) {
        out.emit(to_json(x));
      } else {
        std::cout << x.to_literal() << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    static std::int64_t probe = 0;
    auto* member = set->add_subcommand("member", "membership query");
    add_ground_options(member, ga);
    add_format_option(member, out);
    member->add_option("--set", literal)->required();
    member->add_option("--n", probe, "element to test")->required();
    member->callback([&] {
      PSet x = PSet::parse_literal(ga.build(), literal);
      bool m = x.member(probe);
      if (out.json()) {
        out.emit({{"member", m}});
      } else {
        std::cout << bool_text(m) << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    auto* mn = set->add_subcommand("min", "least element");
    add_ground_options(mn, ga);
    add_format_option(mn, out);
    mn->add_option("--set", literal)->required();
    mn->callback([&] {
      PSet x = PSet::parse_literal(ga.build(), literal);
      if (out.json()) {
        out.emit({{"min", x.min()}});
      } else {
        std::cout << x.min() << "\n";
      }
    });
  }

  // ---- sum -------------------------------------------------------------
  auto* sum = app.add_subcommand("sum", "sumset arithmetic");
  sum->require_subcommand(1);
  {
    static GroundArgs ga;
    static Output out;
    static std::string lhs, rhs;
    auto* addc = sum->add_subcommand("add", "sumset of two sets");
    add_ground_options(addc, ga);
    add_format_option(addc, out);
    addc->add_option("--set", lhs)->required();
    addc->add_option("--with", rhs)->required();
    addc->callback([&] {
      auto g = ga.build();
      PSet r = add(PSet::parse_literal(g, lhs), PSet::parse_literal(g, rhs));
      if (out.json()) {
        out.emit(to_json(r));
      } else {
        std::cout << r.to_literal() << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    static std::int64_t n = 1;
    auto* pow = sum->add_subcommand("pow", "n-fold sumset");
    add_ground_options(pow, ga);
    add_format_option(pow, out);
    pow->add_option("--set", literal)->required();
    pow->add_option("--n", n, "exponent")->required();
    pow->callback([&] {
      PSet r = power(PSet::parse_literal(ga.build(), literal), n);
      if (out.json()) {
        out.emit(to_json(r));
      } else {
        std::cout << r.to_literal() << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    static std::int64_t offset = 0;
    static std::vector<std::int64_t> target_gens;
    static bool target_no_zero = false;
    auto* tr = sum->add_subcommand("translate", "shift a set into a target ground");
    add_ground_options(tr, ga);
    add_format_option(tr, out);
    tr->add_option("--set", literal)->required();
    tr->add_option("--t", offset, "shift amount, may be negative")->required();
    tr->add_option("--target-gens", target_gens, "target ground generators (default: same)")
        ->delimiter(',');
    tr->add_flag("--target-no-zero", target_no_zero);
    tr->callback([&] {
      auto g = ga.build();
      auto target = target_gens.empty()
                        ? g
                        : NumericalSemigroup::build(target_gens, !target_no_zero);
      PSet r = translate(PSet::parse_literal(g, literal), offset, target);
      if (out.json()) {
        out.emit(to_json(r));
      } else {
        std::cout << r.to_literal() << "\n";
      }
    });
  }

  // ---- lemma -----------------------------------------------------------
  auto* lemma = app.add_subcommand("lemma", "constructive witnesses and oracles");
  lemma->require_subcommand(1);
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    static std::int64_t n = 3;
    auto* qw = lemma->add_subcommand("q-witness", "the 2^(|A|-1) solutions of X+A = A^n");
    add_ground_options(qw, ga);
    add_format_option(qw, out);
    qw->add_option("--set", literal, "finite A containing 0")->required();
    qw->add_option("--n", n, "exponent, at least 3");
    qw->callback([&] {
      WitnessReport rep = lemma_q_witnesses(PSet::parse_literal(ga.build(), literal), n);
      bool ok = rep.all_verified() && rep.distinct_count == rep.bound_claimed;
      if (out.json()) {
        out.emit(to_json(rep));
      } else {
        std::cout << "witnesses=" << rep.witnesses.size() << " bound=" << rep.bound_claimed
                  << " distinct=" << rep.distinct_count << " verified=" << bool_text(ok)
                  << "\n";
        for (const PSet& w : rep.witnesses) std::cout << w.to_literal() << "\n";
      }
      if (!ok) rc = kVerificationFailed;
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    static std::int64_t n = 2;
    static std::vector<std::int64_t> tuple;
    auto* cw = lemma->add_subcommand("conjugate", "the |A| solutions of A^n + X = A^2n");
    add_ground_options(cw, ga);
    add_format_option(cw, out);
    cw->add_option("--set", literal, "finite A")->required();
    cw->add_option("--n", n, "exponent, at least 2");
    cw->add_option("--tuple", tuple, "n-1 elements of A, summing to x")
        ->required()
        ->delimiter(',');
    cw->callback([&] {
      WitnessReport rep =
          conjugate_witnesses(PSet::parse_literal(ga.build(), literal), n, tuple);
      bool ok = rep.all_verified() && rep.distinct_count >= rep.bound_claimed;
      if (out.json()) {
        out.emit(to_json(rep));
      } else {
        std::cout << "witnesses=" << rep.witnesses.size() << " bound=" << rep.bound_claimed
                  << " distinct=" << rep.distinct_count << " verified=" << bool_text(ok)
                  << "\n";
        for (const PSet& w : rep.witnesses) std::cout << w.to_literal() << "\n";
      }
      if (!ok) rc = kVerificationFailed;
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string lhs, rhs;
    auto* en = lemma->add_subcommand("enumerate", "all finite X with X+A = B");
    add_ground_options(en, ga);
    add_format_option(en, out);
    en->add_option("--set", lhs, "finite A")->required();
    en->add_option("--b", rhs, "finite B")->required();
    en->callback([&] {
      auto g = ga.build();
      EnumOptions opts;
      opts.max_domain = enum_cap;
      std::vector<PSet> sols = enumerate_translate_solutions(
          PSet::parse_literal(g, lhs), PSet::parse_literal(g, rhs), opts);
      if (out.json()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const PSet& s : sols) arr.push_back(to_json(s));
        out.emit({{"solutions", arr}});
      } else {
        std::cout << "solutions=" << sols.size() << "\n";
        for (const PSet& s : sols) std::cout << s.to_literal() << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    static std::int64_t y = 0;
    auto* halo = lemma->add_subcommand("halo", "membership through the halo identity");
    add_ground_options(halo, ga);
    add_format_option(halo, out);
    halo->add_option("--set", literal, "X containing 0")->required();
    halo->add_option("--y", y, "non-zero member of H")->required();
    halo->callback([&] {
      PSet x = PSet::parse_literal(ga.build(), literal);
      bool equality = member_by_halo(x, y);
      bool member = x.member(y);
      bool consistent = equality == member;
      if (out.json()) {
        out.emit({{"member", member}, {"equality", equality}, {"consistent", consistent}});
      } else {
        std::cout << "member=" << bool_text(member) << " equality=" << bool_text(equality)
                  << " consistent=" << bool_text(consistent) << "\n";
      }
      if (!consistent) rc = kVerificationFailed;
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    auto* idem = lemma->add_subcommand("idem", "idempotency test E+E = E");
    add_ground_options(idem, ga);
    add_format_option(idem, out);
    idem->add_option("--set", literal)->required();
    idem->callback([&] {
      bool r = is_idempotent(PSet::parse_literal(ga.build(), literal));
      if (out.json()) {
        out.emit({{"idempotent", r}});
      } else {
        std::cout << bool_text(r) << "\n";
      }
    });
  }

  // ---- quotient ----------------------------------------------------------
  auto* quot = app.add_subcommand("quotient", "conjugacy classes and the normal form");
  quot->require_subcommand(1);
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    auto* norm = quot->add_subcommand("normalize", "X - min X over N");
    add_ground_options(norm, ga);
    add_format_option(norm, out);
    norm->add_option("--set", literal)->required();
    norm->callback([&] {
      PSet r = normalize(PSet::parse_literal(ga.build(), literal));
      if (out.json()) {
        out.emit(to_json(r));
      } else {
        std::cout << r.to_literal() << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string lhs, rhs;
    auto* rel = quot->add_subcommand("related", "conjugacy test");
    add_ground_options(rel, ga);
    add_format_option(rel, out);
    rel->add_option("--set", lhs)->required();
    rel->add_option("--with", rhs)->required();
    rel->callback([&] {
      auto g = ga.build();
      bool r = conjugate_related(PSet::parse_literal(g, lhs), PSet::parse_literal(g, rhs));
      if (out.json()) {
        out.emit({{"related", r}});
      } else {
        std::cout << bool_text(r) << "\n";
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::string literal;
    static std::int64_t k = 0;
    auto* lf = quot->add_subcommand("lift", "A + k into the ground, k above the Frobenius number");
    add_ground_options(lf, ga);
    add_format_option(lf, out);
    lf->add_option("--set", literal, "A over N containing 0")->required();
    lf->add_option("--k", k)->required();
    lf->callback([&] {
      PSet a = PSet::parse_literal(NumericalSemigroup::naturals(), literal);
      PSet r = lift(a, ga.build(), k);
      if (out.json()) {
        out.emit(to_json(r));
      } else {
        std::cout << r.to_literal() << "\n";
      }
    });
  }

  // ---- aut ---------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "truncated power monoids and their automorphisms");
  aut->require_subcommand(1);
  {
    static GroundArgs ga;
    static Output out;
    static std::int64_t window = 2;
    static std::string variant = "p0";
    auto* build = aut->add_subcommand("build", "materialize a truncated power monoid");
    add_ground_options(build, ga);
    add_format_option(build, out);
    build->add_option("--window", window)->required();
    build->add_option("--variant", variant)->check(CLI::IsMember({"p0", "p"}));
    build->callback([&] {
      TruncatedPowerMonoid m = TruncatedPowerMonoid::build(
          ga.build(), window, parse_variant(variant), {element_cap});
      if (out.json()) {
        out.emit(to_json(m));
      } else {
        std::cout << "elements=" << m.size() << "\n";
        for (std::uint32_t i = 0; i < m.size(); ++i) {
          std::cout << i << ": " << m.element_to_string(i) << "\n";
        }
      }
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::int64_t window = 2;
    static std::string variant = "p0";
    auto* search = aut->add_subcommand("search", "exhaustive automorphism search");
    add_ground_options(search, ga);
    add_format_option(search, out);
    search->add_option("--window", window)->required();
    search->add_option("--variant", variant)->check(CLI::IsMember({"p0", "p"}));
    search->callback([&] {
      TruncatedPowerMonoid m = TruncatedPowerMonoid::build(
          ga.build(), window, parse_variant(variant), {element_cap});
      AutomorphismSearchResult res = find_automorphisms(m, {timeout_seconds});
      std::vector<std::uint32_t> identity(m.size());
      for (std::uint32_t i = 0; i < m.size(); ++i) identity[i] = i;
      bool identity_only =
          res.automorphisms.size() == 1 && res.automorphisms.front() == identity;
      if (out.json()) {
        out.emit(to_json(res));
      } else {
        std::cout << "automorphisms=" << res.automorphisms.size()
                  << (identity_only ? " (identity)" : "");
        if (!res.complete) std::cout << " partial=true";
        std::cout << "\n";
        if (!identity_only) {
          for (const auto& perm : res.automorphisms) {
            for (std::size_t i = 0; i < perm.size(); ++i) {
              std::cout << (i > 0 ? "," : "") << perm[i];
            }
            std::cout << "\n";
          }
        }
      }
      if (!res.complete) rc = kCapExceeded;
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::int64_t window = 2;
    static std::string variant = "p0";
    static std::vector<std::uint32_t> perm;
    auto* pipe = aut->add_subcommand("pipeline", "run the rigidity argument against a map");
    add_ground_options(pipe, ga);
    add_format_option(pipe, out);
    pipe->add_option("--window", window)->required();
    pipe->add_option("--variant", variant)->check(CLI::IsMember({"p0", "p"}));
    pipe->add_option("--perm", perm, "candidate map as an element-index array (default identity)")
        ->delimiter(',');
    pipe->callback([&] {
      TruncatedPowerMonoid m = TruncatedPowerMonoid::build(
          ga.build(), window, parse_variant(variant), {element_cap});
      std::vector<std::uint32_t> f = perm;
      if (f.empty()) {
        f.resize(m.size());
        for (std::uint32_t i = 0; i < m.size(); ++i) f[i] = i;
      }
      ProofPipelineReport rep = proof_pipeline(m, f);
      if (out.json()) {
        out.emit(to_json(rep));
      } else {
        for (const PipelineStep& s : rep.steps) {
          std::cout << "step " << s.name << ": " << (s.passed ? "pass" : "FAIL")
                    << " checked=" << s.checked;
          if (!s.witness.empty()) std::cout << " witness=" << s.witness;
          std::cout << "\n";
        }
      }
      if (!rep.all_passed()) rc = kVerificationFailed;
    });
  }
  {
    static GroundArgs ga;
    static Output out;
    static std::int64_t window = 2;
    static std::string variant = "p0";
    auto* canc = aut->add_subcommand("cancellative", "elements with injective translations");
    add_ground_options(canc, ga);
    add_format_option(canc, out);
    canc->add_option("--window", window)->required();
    canc->add_option("--variant", variant)->check(CLI::IsMember({"p0", "p"}));
    canc->callback([&] {
      TruncatedPowerMonoid m = TruncatedPowerMonoid::build(
          ga.build(), window, parse_variant(variant), {element_cap});
      std::vector<std::uint32_t> cancellative = find_cancellative(m);
      if (out.json()) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::uint32_t e : cancellative) arr.push_back(m.element_values(e));
        out.emit({{"cancellative", arr}});
      } else {
        std::cout << "cancellative=" << cancellative.size() << "\n";
        for (std::uint32_t e : cancellative) {
          std::cout << m.element_to_string(e) << "\n";
        }
      }
    });
  }

  // ---- verify ------------------------------------------------------------
  {
    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->callback([&] {
      std::vector<acceptance::CriterionResult> results = acceptance::run_all();
      acceptance::print_report(std::cout, results);
      if (!acceptance::all_passed(results)) rc = kVerificationFailed;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
