#include "nilcent/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "nilcent/report_json.hpp"

namespace nilcent::cli {

namespace {

struct Options {
  std::string subcommand;
  std::optional<std::string> field;
  std::string x_path;
  std::string y_path;
  std::uint64_t seed = 0;
  std::string window;
  bool json = false;
  // generate / stress
  std::string kind = "commutant";
  std::size_t dim = 4;
  std::size_t d = 2;
  std::size_t r = 2;
  std::size_t count = 100;
  std::string dims = "2..6";
  bool keep_failing = false;
  std::string out_x;
  std::string out_y;
};

std::pair<long long, long long> parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError(std::string(flag) + " expects A..B, got '" + text + "'");
  try {
    const long long lo = std::stoll(text.substr(0, dots));
    const long long hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw ParseError(std::string(flag) + " range is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError(std::string(flag) + " expects integers, got '" + text + "'");
  }
}

PairGeneratorSpec::Kind parse_kind(const std::string& kind) {
  if (kind == "commutant") return PairGeneratorSpec::Kind::CommutantSample;
  if (kind == "group-algebra") return PairGeneratorSpec::Kind::GroupAlgebra;
  if (kind == "example") return PairGeneratorSpec::Kind::BlockShift;
  throw ParseError("unknown --kind '" + kind + "' (commutant | group-algebra | example)");
}

void print_matrix(std::ostream& out, const std::string& label, const auto& m) {
  out << label << " (" << m.shape() << ", " << m.field().descriptor() << "):\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).to_string();
    out << "]\n";
  }
}

void print_verdict(std::ostream& out, const std::string& label, const MembershipVerdict& v) {
  out << label << ": commutes=" << yes_no(v.commutes) << " parabolic=" << yes_no(v.in_parabolic)
      << " weight0=" << yes_no(v.in_levi_part) << " radical=" << yes_no(v.in_radical_lie) << "\n";
}

class Driver {
 public:
  Driver(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int dispatch() {
    const std::string& s = o_.subcommand;
    if (s == "generate") return with_field(field_from_flag(), [&](const auto& k) { return generate(k); });
    if (s == "stress") return with_field(field_from_flag(), [&](const auto& k) { return stress(k); });

    const MatrixFile xf = read_required(o_.x_path, "--x");
    check_declared_field(xf.field);
    if (s == "partition" || s == "chains") {
      if (xf.field.function_field) {
        return with_field(xf.field, [&](const auto& k) { return one_matrix(to_matrix(xf, FunctionField(k))); });
      }
      return with_field(xf.field, [&](const auto& k) { return one_matrix(to_matrix(xf, k)); });
    }
    if (xf.field.function_field) {
      throw PreconditionError(PreconditionError::Kind::BadField, "'" + s + "' expects matrices over a base field");
    }
    if (s == "check-L") return with_field(xf.field, [&](const auto& k) { return check_l(to_matrix(xf, k)); });

    std::optional<MatrixFile> yf;
    if (!o_.y_path.empty()) {
      yf = read_required(o_.y_path, "--y");
      if (!(yf->field == xf.field)) {
        throw PreconditionError(PreconditionError::Kind::BadField, "field mismatch: --x is " + xf.field.to_string() +
                                                                       ", --y is " + yf->field.to_string());
      }
    }
    if (s == "grade") {
      return with_field(xf.field, [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        std::optional<Matrix<K>> b;
        if (yf) b = to_matrix(*yf, k);
        return grade(to_matrix(xf, k), b);
      });
    }
    if (!yf) throw ParseError("'" + s + "' needs --y");
    return with_field(xf.field, [&](const auto& k) {
      CommutingPair<std::decay_t<decltype(k)>> pair{to_matrix(xf, k), to_matrix(*yf, k)};
      if (s == "verify") return verify(pair);
      if (s == "scan") return scan(pair);
      return locus(pair);
    });
  }

 private:
  template <class F>
  static int with_field(const FieldDescriptor& d, F&& f) {
    if (d.prime == 0) return f(RationalField{});
    return f(PrimeField(d.prime));
  }

  FieldDescriptor field_from_flag() const {
    const FieldDescriptor d = FieldDescriptor::parse(o_.field.value_or("q"));
    if (d.function_field) throw PreconditionError(PreconditionError::Kind::BadField, "--field must be a base field");
    return d;
  }

  void check_declared_field(const FieldDescriptor& file) const {
    if (!o_.field) return;
    const FieldDescriptor flag = FieldDescriptor::parse(*o_.field);
    if (!(flag.base() == file.base())) {
      throw PreconditionError(PreconditionError::Kind::BadField,
                              "field mismatch: --field " + flag.to_string() + " but file declares " + file.to_string());
    }
  }

  static MatrixFile read_required(const std::string& path, const char* flag) {
    if (path.empty()) throw ParseError(std::string("missing ") + flag);
    return read_matrix_file(path);
  }

  template <class K>
  int one_matrix(const Matrix<K>& a) {
    require_square(a);
    if (o_.subcommand == "partition") {
      const Partition p = partition_of(a);
      if (o_.json) {
        out_ << nlohmann::json{{"field", a.field().descriptor()}, {"partition", to_json(p)}}.dump(2) << "\n";
      } else {
        out_ << "partition: " << p.to_string() << "\n";
      }
      return kOk;
    }
    const ChainBasis<K> basis = chain_basis(a);
    if (o_.json) {
      out_ << to_json(basis).dump(2) << "\n";
      return kOk;
    }
    out_ << "partition: " << basis.exponents().to_string() << "\n";
    for (std::size_t i = 0; i < basis.chain_count(); ++i) {
      out_ << "v" << i + 1 << " (length " << basis.exponents()[i] << "): [";
      const auto& v = basis.tops()[i];
      for (std::size_t k = 0; k < v.size(); ++k) out_ << (k ? ", " : "") << v[k].to_string();
      out_ << "]\n";
    }
    print_matrix(out_, "chain matrix", basis.chain_matrix());
    return kOk;
  }

  template <class K>
  int grade(const Matrix<K>& a, const std::optional<Matrix<K>>& b) {
    const Grading<K> g = cocharacter_from(chain_basis(a));
    nlohmann::json j{{"partition", to_json(g.basis().exponents())},
                     {"weights", g.weights()},
                     {"weight_space_dims", weight_dims_to_json(g.weight_space_dims())}};
    std::optional<GradedDecomposition<K>> dec;
    std::optional<MembershipVerdict> verdict;
    if (b) {
      dec = decompose(g, *b);
      verdict = membership(g, *b);
      nlohmann::json comps = nlohmann::json::object();
      for (const auto& [m, c] : dec->components) comps[std::to_string(m)] = matrix_to_json(c);
      j["components"] = comps;
      j["membership"] = to_json(*verdict);
    }
    if (o_.json) {
      out_ << j.dump(2) << "\n";
      return kOk;
    }
    out_ << "partition: " << g.basis().exponents().to_string() << "\n";
    out_ << "weights:";
    for (int w : g.weights()) out_ << " " << w;
    out_ << "\nweight space dims:";
    for (const auto& [m, d] : g.weight_space_dims()) out_ << " " << m << ":" << d;
    out_ << "\n";
    if (b) {
      for (const auto& [m, c] : dec->components) print_matrix(out_, "B_" + std::to_string(m), c);
      print_verdict(out_, "B", *verdict);
    }
    return kOk;
  }

  template <class K>
  int verify(const CommutingPair<K>& pair) {
    const TheoremReport r = verify_theorem(pair);
    if (o_.json) {
      nlohmann::json j = to_json(r);
      j["x"] = matrix_to_json(pair.x);
      j["y"] = matrix_to_json(pair.y);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "field: " << pair.field().descriptor() << "\n";
      out_ << "partition of X+tY over K(t): " << r.partition_generic.to_string() << "\n";
      out_ << "hypothesis: " << (r.hypothesis_ok ? "ok" : "failed") << " (" << r.hypothesis_reason << ")\n";
      print_verdict(out_, "X", r.x_verdict);
      print_verdict(out_, "Y", r.y_verdict);
      out_ << "conclusion (X, Y in Lie R_uC): " << (r.conclusion_holds ? "true" : "false") << "\n";
    }
    return r.violates_theorem() ? kTheoremViolation : kOk;
  }

  template <class K>
  std::vector<typename K::value_type> sample_points(const K& field) const {
    if (o_.window.empty()) return default_sample_points(field);
    const auto [lo, hi] = parse_range(o_.window, "--window");
    std::vector<typename K::value_type> pts;
    std::set<std::string> seen;
    for (long long s = lo; s <= hi; ++s) {
      auto v = field.from_int(s);
      if (seen.insert(v.to_string()).second) pts.push_back(v);
    }
    return pts;
  }

  template <class K>
  int scan(const CommutingPair<K>& pair) {
    const ScanReport<K> r = scan_p1(pair, sample_points(pair.field()));
    if (o_.json) {
      out_ << to_json(r).dump(2) << "\n";
    } else {
      out_ << "generic partition: " << r.generic_partition.to_string() << "\n";
      for (const auto& pt : r.samples) {
        out_ << (pt.at_infinity ? std::string("(0:1)") : "(1:" + pt.s->to_string() + ")") << " "
             << pt.partition.to_string() << (pt.is_generic ? "" : "  exceptional") << "\n";
      }
      out_ << "locus: " << r.locus.polynomial.to_string() << " (multiplicity at (0:1): " << r.infinity_multiplicity
           << ", degree on P^1: " << r.projective_degree() << ")\n";
      out_ << "dominance violations: " << r.dominance_violations << ", locus violations: " << r.locus_violations
           << "\n";
    }
    return kOk;
  }

  template <class K>
  int locus(const CommutingPair<K>& pair) {
    const LocusReport<K> l = exceptional_locus(pair);
    if (o_.json) {
      out_ << to_json(l).dump(2) << "\n";
      return kOk;
    }
    out_ << "locus: " << l.polynomial.to_string() << "\nroots:";
    for (const auto& r : l.roots) out_ << " " << r.to_string();
    out_ << "\n";
    for (const auto& f : l.unresolved) out_ << "unresolved factor: " << f.to_string() << "\n";
    return kOk;
  }

  template <class K>
  int check_l(const Matrix<K>& x) {
    const LVerdict v = check_L_condition(x, chain_basis(x));
    if (o_.json) {
      out_ << to_json(v).dump(2) << "\n";
    } else {
      out_ << "associated: " << (v.associated ? "true" : "false") << "\n";
      if (v.ad_power_vanishes) out_ << "ad(X)^(p-1) = 0: " << (*v.ad_power_vanishes ? "true" : "false") << "\n";
      out_ << "ad(X) nilpotency index: " << v.ad_nilpotency_index << "\n";
    }
    return v.consistent ? kOk : kTheoremViolation;
  }

  template <class K>
  int generate(const K& field) {
    PairGeneratorSpec spec;
    spec.kind = parse_kind(o_.kind);
    spec.dimension = o_.dim;
    spec.seed = o_.seed;
    spec.d = o_.d;
    spec.r = o_.r;
    const CommutingPair<K> pair = generate_pair(field, spec);
    const nlohmann::json x = matrix_to_json(pair.x);
    const nlohmann::json y = matrix_to_json(pair.y);
    auto write = [](const std::string& path, const nlohmann::json& j) {
      std::ofstream f(path);
      if (!f) throw ParseError("cannot write '" + path + "'");
      f << j.dump(2) << "\n";
    };
    if (!o_.out_x.empty()) write(o_.out_x, x);
    if (!o_.out_y.empty()) write(o_.out_y, y);
    if (o_.json) {
      const nlohmann::json j{{"spec", {{"kind", o_.kind}, {"dimension", o_.dim}, {"seed", o_.seed}, {"d", o_.d}, {"r", o_.r}}},
                             {"x", x},
                             {"y", y}};
      out_ << j.dump(2) << "\n";
    } else {
      print_matrix(out_, "X", pair.x);
      print_matrix(out_, "Y", pair.y);
    }
    return kOk;
  }

  template <class K>
  int stress(const K& field) {
    StressOptions opt;
    opt.count = o_.count;
    const auto [lo, hi] = parse_range(o_.dims, "--dims");
    if (lo < 1) throw ParseError("--dims must be positive");
    opt.min_dim = static_cast<std::size_t>(lo);
    opt.max_dim = static_cast<std::size_t>(hi);
    opt.seed = o_.seed;
    opt.kind = parse_kind(o_.kind);
    opt.d = o_.d;
    opt.r = o_.r;
    opt.require_hypothesis = !o_.keep_failing && opt.kind != PairGeneratorSpec::Kind::BlockShift;
    const StressSummary s = stress_suite(field, opt);
    if (o_.json) {
      nlohmann::json j = to_json(s);
      j["field"] = field.descriptor();
      j["seed"] = o_.seed;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "pairs: " << s.pairs << "\nhypothesis ok: " << s.hypothesis_ok << " (concluded true: " << s.concluded_true
           << ")\nhypothesis failed: " << s.hypothesis_failed << " (conclusion still true: " << s.failed_but_concluded
           << ")\nrejected draws: " << s.rejected << "\ndominance failures: " << s.dominance_failures
           << "\ntheorem violations: " << s.theorem_violations << "\n";
      for (const auto& n : s.notes) out_ << "  " << n << "\n";
    }
    return s.theorem_violations > 0 ? kTheoremViolation : kOk;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact nilpotent-pencil toolkit: partitions, Jordan chains, gradings and the Lie R_uC check"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_x, bool takes_y) {
    sub->add_option("--field", o.field, "q | fp:<p>; must match the matrix files");
    if (needs_x) sub->add_option("--x", o.x_path, "matrix file for X (or A)")->required();
    if (takes_y) sub->add_option("--y", o.y_path, "matrix file for Y (or B)");
    sub->add_option("--seed", o.seed, "random seed")->default_val(0);
    sub->add_flag("--json", o.json, "JSON output");
  };
  add_common(app.add_subcommand("partition", "partition of a nilpotent matrix"), true, false);
  add_common(app.add_subcommand("chains", "canonical Jordan chain basis"), true, false);
  add_common(app.add_subcommand("grade", "grading of A's chain basis; decomposes --y if given"), true, true);
  add_common(app.add_subcommand("verify", "check X, Y in Lie R_uC for the centralizer of X + tY"), true, true);
  auto* scan = app.add_subcommand("scan", "partitions of aX + bY over points of P^1");
  add_common(scan, true, true);
  scan->add_option("--window", o.window, "sample s in A..B instead of the default set");
  add_common(app.add_subcommand("locus", "exceptional locus polynomial of X + tY"), true, true);
  add_common(app.add_subcommand("check-L", "adjoint (L) condition for a nilpotent X"), true, false);

  auto* gen = app.add_subcommand("generate", "generate a commuting nilpotent pair");
  add_common(gen, false, false);
  gen->add_option("--kind", o.kind, "commutant | group-algebra | example")->default_val("commutant");
  gen->add_option("--dim", o.dim, "dimension (upper bound for group-algebra)")->default_val(4);
  gen->add_option("--d", o.d, "block size for --kind example")->default_val(2);
  gen->add_option("--r", o.r, "rank of (Z/p)^r for --kind group-algebra")->default_val(2);
  gen->add_option("--out-x", o.out_x, "write X to this file");
  gen->add_option("--out-y", o.out_y, "write Y to this file");

  auto* st = app.add_subcommand("stress", "run the theorem check over many generated pairs");
  add_common(st, false, false);
  st->add_option("--count", o.count, "number of pairs")->default_val(100);
  st->add_option("--dims", o.dims, "dimension range A..B")->default_val("2..6");
  st->add_option("--kind", o.kind, "commutant | group-algebra | example")->default_val("commutant");
  st->add_option("--d", o.d, "block size for --kind example")->default_val(2);
  st->add_option("--r", o.r, "rank for --kind group-algebra")->default_val(2);
  st->add_flag("--keep-failing", o.keep_failing, "keep pairs that fail the hypothesis instead of resampling");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  o.subcommand = app.get_subcommands().front()->get_name();

  try {
    return Driver(o, out).dispatch();
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kBadInput;
}

}  // namespace nilcent::cli
