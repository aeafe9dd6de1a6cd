#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "splitcount/classtype.hpp"
#include "splitcount/errors.hpp"
#include "splitcount/field.hpp"
#include "splitcount/flagrec.hpp"
#include "splitcount/lattice.hpp"
#include "splitcount/qpoly.hpp"
#include "splitcount/splitting.hpp"
#include "splitcount/verify.hpp"

namespace splitcount {

namespace {

using njson = nlohmann::ordered_json;

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  int exit_code = 0;
};

void emit_int(Ctx& ctx, njson query, const Int& value) {
  if (ctx.json) {
    njson j;
    j["query"] = std::move(query);
    j["result"]["int"] = value.get_str();
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << value.get_str() << "\n";
  }
}

void emit_poly(Ctx& ctx, njson query, const QPoly& poly) {
  if (ctx.json) {
    njson coeffs = njson::array();
    for (const Int& c : poly.coefficients()) coeffs.push_back(c.get_str());
    njson j;
    j["query"] = std::move(query);
    j["result"]["poly"] = std::move(coeffs);
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << poly.str() << "\n";
  }
}

void emit_rational(Ctx& ctx, njson query, const Rat& value) {
  if (ctx.json) {
    njson j;
    j["query"] = std::move(query);
    j["result"]["rational"] = {value.get_num().get_str(), value.get_den().get_str()};
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << value.get_str() << "\n";
  }
}

void require_prime_power_q(std::uint64_t q) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!is_prime_power(q, &p, &k))
    throw NotPrimePowerError("q = " + std::to_string(q) + " is not a prime power");
}

void require_realizable(const ClassType& tau, std::uint64_t q) {
  const std::uint64_t least = q0(tau);
  if (q < least)
    throw FieldTooSmallError("the type needs q >= " + std::to_string(least) +
                             ", got q = " + std::to_string(q));
}

std::vector<unsigned> parse_dims(const std::string& text) {
  std::vector<unsigned> dims;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("dimension \"" + token + "\" is not an unsigned integer");
    else
      dims.push_back(static_cast<unsigned>(std::stoul(token)));
  if (dims.empty()) throw ParseError("empty dimension list");
  return dims;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::string digits = token;
    if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("parameter \"" + token + "\" is not an integer");
    values.push_back(std::stol(token));
  }
  if (values.empty()) throw ParseError("empty parameter list");
  return values;
}

struct IdentitySweepResult {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
};

void sweep_identity(QIdentity which, const char* name, long max,
                    IdentitySweepResult& result) {
  auto record = [&](const std::vector<long>& params) {
    ++result.checked;
    if (check_q_identity(which, params)) return;
    std::string line = std::string(name) + " fails at";
    for (long v : params) line += " " + std::to_string(v);
    result.failures.push_back(std::move(line));
  };
  switch (which) {
    case QIdentity::Product:
    case QIdentity::Vandermonde:
      // No ordering hypotheses: all triples with entries in [0, max].
      for (long a = 0; a <= max; ++a)
        for (long b = 0; b <= max; ++b)
          for (long c = 0; c <= max; ++c) record({a, b, c});
      break;
    case QIdentity::First:
      for (long a = 0; a <= max; ++a)
        for (long d = 0; d <= a; ++d)
          for (long b = 0; b <= d; ++b)
            for (long c = 0; c <= b; ++c) record({a, d, b, c});
      break;
    case QIdentity::Second:
      for (long a = 0; a <= max; ++a)
        for (long b = 0; b <= a; ++b)
          for (long d = 0; d <= b; ++d)
            for (long c = 0; c <= d; ++c) record({a, b, d, c});
      break;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx{out, err};

  CLI::App app{"Exact counts of splitting subspaces and invariant-subspace flags "
               "of linear operators over finite fields"};
  app.name("splitcount");
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "emit machine-readable JSON");
  std::uint64_t scale_limit = default_scale_limit();
  CLI::Option* scale_opt =
      app.add_option("--scale-limit", scale_limit,
                     "cap on brute-force enumeration size "
                     "(default from SPLITCOUNT_SCALE_LIMIT or 10^7)");

  // sigma: σ_q(m,d;τ) at one prime power.
  struct {
    std::uint64_t q = 0;
    unsigned m = 0, d = 0;
    std::string type;
  } sig;
  CLI::App* sigma_cmd =
      app.add_subcommand("sigma", "count m-dimensional splitting subspaces at a given q");
  sigma_cmd->fallthrough();
  sigma_cmd->add_option("--q", sig.q, "prime power field size")->required();
  sigma_cmd->add_option("--m", sig.m, "subspace dimension")->required();
  sigma_cmd->add_option("--d", sig.d, "number of summands")->required();
  sigma_cmd->add_option("--type", sig.type, "class type, e.g. \"2:1;1:2\"")->required();
  sigma_cmd->callback([&] {
    const ClassType tau = parse_type(sig.type);
    const Int value = sigma_at(sig.m, sig.d, tau, sig.q);
    emit_int(ctx,
             njson{{"op", "sigma"}, {"m", sig.m}, {"d", sig.d}, {"q", sig.q}, {"type", sig.type}},
             value);
  });

  // sigma-poly: the universal polynomial in q.
  struct {
    unsigned m = 0, d = 0;
    std::string type;
  } sp;
  CLI::App* sigma_poly_cmd =
      app.add_subcommand("sigma-poly", "splitting-subspace count as a polynomial in q");
  sigma_poly_cmd->fallthrough();
  sigma_poly_cmd->add_option("--m", sp.m, "subspace dimension")->required();
  sigma_poly_cmd->add_option("--d", sp.d, "number of summands")->required();
  sigma_poly_cmd->add_option("--type", sp.type, "class type")->required();
  sigma_poly_cmd->callback([&] {
    const ClassType tau = parse_type(sp.type);
    emit_poly(ctx, njson{{"op", "sigma-poly"}, {"m", sp.m}, {"d", sp.d}, {"type", sp.type}},
              sigma_poly(sp.m, sp.d, tau));
  });

  // flags: arbitrary labeled flag-set counts.
  struct {
    std::string type, tuple, method = "symbolic";
    std::uint64_t q = 0;
  } fl;
  CLI::App* flags_cmd = app.add_subcommand("flags", "count invariant flag sets for a tuple");
  flags_cmd->fallthrough();
  flags_cmd->add_option("--type", fl.type, "class type")->required();
  flags_cmd->add_option("--tuple", fl.tuple, "tuple \"a11,a12;a21,a22;...\"")->required();
  CLI::Option* flags_q = flags_cmd->add_option("--q", fl.q, "prime power field size");
  flags_cmd->add_option("--method", fl.method, "symbolic | concrete | brute")
      ->check(CLI::IsMember({"symbolic", "concrete", "brute"}));
  flags_cmd->callback([&] {
    const ClassType tau = parse_type(fl.type);
    const FlagTuple tuple = parse_tuple(fl.tuple, tau.size());
    njson query{{"op", "flags"}, {"type", fl.type}, {"tuple", fl.tuple}, {"method", fl.method}};
    if (flags_q->count()) query["q"] = fl.q;
    if (fl.method == "symbolic") {
      SymbolicBackend backend(tau);
      const QPoly poly = backend.count(tuple);
      if (!flags_q->count()) {
        emit_poly(ctx, std::move(query), poly);
        return;
      }
      require_prime_power_q(fl.q);
      require_realizable(tau, fl.q);
      emit_int(ctx, std::move(query), poly.eval(Int(static_cast<unsigned long>(fl.q))));
      return;
    }
    if (!flags_q->count())
      throw InvalidParamsError("--method " + fl.method + " needs --q");
    require_prime_power_q(fl.q);
    const Matrix op = canonical_operator(tau, make_field_of_order(fl.q));
    if (fl.method == "concrete") {
      ConcreteBackend backend(op, scale_limit);
      emit_int(ctx, std::move(query), backend.count(tuple));
    } else {
      emit_int(ctx, std::move(query), brute_flag_count(op, tuple, scale_limit));
    }
  });

  // invariants: flags of invariant subspaces with prescribed dimensions.
  struct {
    std::string type, dims, method = "symbolic";
    std::uint64_t q = 0;
  } inv;
  CLI::App* inv_cmd =
      app.add_subcommand("invariants", "count chains of invariant subspaces by dimensions");
  inv_cmd->fallthrough();
  inv_cmd->add_option("--type", inv.type, "class type")->required();
  inv_cmd->add_option("--dims", inv.dims, "weakly decreasing dimensions \"a1,a2,...\"")
      ->required();
  CLI::Option* inv_q = inv_cmd->add_option("--q", inv.q, "prime power field size");
  inv_cmd->add_option("--method", inv.method, "symbolic | concrete")
      ->check(CLI::IsMember({"symbolic", "concrete"}));
  inv_cmd->callback([&] {
    const ClassType tau = parse_type(inv.type);
    const std::vector<unsigned> dims = parse_dims(inv.dims);
    njson query{{"op", "invariants"}, {"type", inv.type}, {"dims", inv.dims},
                {"method", inv.method}};
    if (inv_q->count()) query["q"] = inv.q;
    if (inv.method == "symbolic") {
      const QPoly poly = phi_poly(tau, dims);
      if (!inv_q->count()) {
        emit_poly(ctx, std::move(query), poly);
        return;
      }
      require_prime_power_q(inv.q);
      require_realizable(tau, inv.q);
      emit_int(ctx, std::move(query), poly.eval(Int(static_cast<unsigned long>(inv.q))));
      return;
    }
    if (!inv_q->count()) throw InvalidParamsError("--method concrete needs --q");
    require_prime_power_q(inv.q);
    const Matrix op = canonical_operator(tau, make_field_of_order(inv.q));
    emit_int(ctx, std::move(query), brute_invariant_flags(op, dims, scale_limit));
  });

  // identities: exact q-identity checks.
  struct {
    std::string which = "all", params;
    long max = 6;
  } ident;
  CLI::App* ident_cmd = app.add_subcommand("identities", "verify Gaussian-binomial identities");
  ident_cmd->fallthrough();
  ident_cmd->add_option("--which", ident.which, "product | vandermonde | first | second | all")
      ->check(CLI::IsMember({"product", "vandermonde", "first", "second", "all"}));
  ident_cmd->add_option("--max", ident.max, "largest parameter entry in the sweep")
      ->check(CLI::NonNegativeNumber);
  CLI::Option* ident_params =
      ident_cmd->add_option("--params", ident.params, "single instance \"a,b,c\"");
  ident_cmd->callback([&] {
    static const std::vector<std::pair<std::string, QIdentity>> kAll = {
        {"product", QIdentity::Product},
        {"vandermonde", QIdentity::Vandermonde},
        {"first", QIdentity::First},
        {"second", QIdentity::Second},
    };
    njson query{{"op", "identities"}, {"which", ident.which}};
    if (ident_params->count()) {
      if (ident.which == "all")
        throw InvalidParamsError("--params needs a specific --which identity");
      query["params"] = ident.params;
      QIdentity formula = QIdentity::Product;
      for (const auto& [name, id] : kAll)
        if (name == ident.which) formula = id;
      const bool holds = check_q_identity(formula, parse_longs(ident.params));
      if (ctx.json) {
        emit_int(ctx, std::move(query), Int(holds ? 1 : 0));
      } else {
        ctx.out << (holds ? "holds" : "fails") << "\n";
      }
      if (!holds) ctx.exit_code = 1;
      return;
    }
    query["max"] = ident.max;
    IdentitySweepResult sweep;
    for (const auto& [name, id] : kAll) {
      if (ident.which != "all" && ident.which != name) continue;
      const std::uint64_t before = sweep.checked;
      sweep_identity(id, name.c_str(), ident.max, sweep);
      if (!ctx.json)
        ctx.out << name << ": " << (sweep.checked - before) << " instances\n";
    }
    for (const std::string& line : sweep.failures) ctx.err << line << "\n";
    if (ctx.json)
      emit_int(ctx, std::move(query), Int(static_cast<unsigned long>(sweep.checked)));
    else
      ctx.out << "total: " << sweep.checked << " instances, "
              << sweep.failures.size() << " failures\n";
    if (!sweep.failures.empty()) ctx.exit_code = 1;
  });

  // kappa: Krylov probability.
  struct {
    std::uint64_t q = 0;
    unsigned m = 0, d = 0;
    std::string type;
  } kap;
  CLI::App* kappa_cmd =
      app.add_subcommand("kappa", "probability that a random order-d Krylov space fills up");
  kappa_cmd->fallthrough();
  kappa_cmd->add_option("--q", kap.q, "prime power field size")->required();
  kappa_cmd->add_option("--m", kap.m, "generating set size")->required();
  kappa_cmd->add_option("--d", kap.d, "Krylov order")->required();
  kappa_cmd->add_option("--type", kap.type, "class type")->required();
  kappa_cmd->callback([&] {
    const ClassType tau = parse_type(kap.type);
    emit_rational(
        ctx,
        njson{{"op", "kappa"}, {"m", kap.m}, {"d", kap.d}, {"q", kap.q}, {"type", kap.type}},
        kappa(kap.m, kap.d, tau, kap.q));
  });

  // toeplitz: shifted-block invertible matrix count.
  struct {
    std::uint64_t q = 0;
    unsigned m = 0, d = 0;
    bool brute = false;
  } top;
  CLI::App* toeplitz_cmd =
      app.add_subcommand("toeplitz", "count invertible shifted-block matrices");
  toeplitz_cmd->fallthrough();
  toeplitz_cmd->add_option("--q", top.q, "prime power field size")->required();
  toeplitz_cmd->add_option("--m", top.m, "block width")->required();
  toeplitz_cmd->add_option("--d", top.d, "number of blocks")->required();
  toeplitz_cmd->add_flag("--brute", top.brute, "enumerate instead of using the formula");
  toeplitz_cmd->callback([&] {
    emit_int(ctx,
             njson{{"op", "toeplitz"}, {"q", top.q}, {"m", top.m}, {"d", top.d},
                   {"brute", top.brute}},
             toeplitz_count(top.q, top.m, top.d, top.brute, scale_limit));
  });

  // verify: the grand oracle sweep.
  struct {
    unsigned max_size = 6;
    std::uint64_t max_q = 3;
  } ver;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "cross-check symbolic counts against brute force");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--max-size", ver.max_size, "largest ambient dimension");
  verify_cmd->add_option("--max-q", ver.max_q, "largest prime power");
  verify_cmd->callback([&] {
    VerifyOptions options;
    options.max_size = ver.max_size;
    options.max_q = ver.max_q;
    if (scale_opt->count()) options.scale_limit = scale_limit;
    const VerifyReport report = run_verify(options, ctx.json ? nullptr : &ctx.out);
    for (const VerifyFailure& f : report.failures)
      ctx.err << "mismatch: type=" << f.type_text << " m=" << f.m << " d=" << f.d
              << " q=" << f.q << " check=" << f.check << " expected=" << f.expected
              << " actual=" << f.actual << "\n";
    njson query{{"op", "verify"}, {"max_size", ver.max_size}, {"max_q", ver.max_q}};
    if (ctx.json)
      emit_int(ctx, std::move(query), Int(static_cast<unsigned long>(report.checks)));
    else
      ctx.out << "verify: " << report.checks << " checks, " << report.failures.size()
              << " failures\n";
    if (!report.ok()) ctx.exit_code = 1;
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("splitcount");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return ctx.exit_code;
}

}  // namespace splitcount
