#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prodmat/json_io.hpp"
#include "prodmat/prodmat.hpp"

namespace {

using namespace prodmat;
using nlohmann::json;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument of the form @path is replaced by the file's contents.
std::string load_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1), std::ios::binary);
  if (!in) throw usage_error("cannot read file: " + s.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& s) { return json::parse(load_arg(s)); }

template <Ring R>
R scalar_from_token(const std::string& token) {
  return json_codec<R>::decode(json(token));
}

template <Ring R>
std::vector<R> params_from_csv(const std::string& csv) {
  std::vector<R> out;
  std::string tok;
  std::istringstream in(load_arg(csv));
  while (std::getline(in, tok, ',')) out.push_back(scalar_from_token<R>(tok));
  return out;
}

void emit(const json& j) { std::cout << canonical(j); }

// Run fn with the selected coefficient ring.
template <class Fn>
void with_ring(bool symbolic, Fn&& fn) {
  if (symbolic)
    fn.template operator()<MultiPoly>();
  else
    fn.template operator()<Rational>();
}

void require_plain(bool symbolic, const char* cmd) {
  if (symbolic) throw usage_error(std::string(cmd) + " does not support --symbolic");
}

struct Args {
  std::string pi, a, moments, jfraction, sfraction, alpha, wall, matrix, system, path, index;
  std::string beta, gamma, params, kind, what, model;
  int n = 0, k = 0, l = 0, m = 0, r = 0, shift = 0, count = 0, j = 0;
  bool symbolic = false;
  bool n_given = false;
};

void run_output(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    emit(lowtri_to_json(output_matrix(hess_from_json<R>(parse_json(a.pi)), a.n)));
  });
}

void run_production(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    emit(hess_to_json(production_from_output(lowtri_from_json<R>(parse_json(a.a)))));
  });
}

void run_moments(const Args& a) {
  const int given = (a.pi.empty() ? 0 : 1) + (a.jfraction.empty() ? 0 : 1) +
                    (a.sfraction.empty() ? 0 : 1);
  if (given != 1) throw usage_error("need exactly one of --pi, --jfraction, --sfraction");
  with_ring(a.symbolic, [&]<Ring R>() {
    HessWindow<R> pi(1);
    if (!a.pi.empty())
      pi = hess_from_json<R>(parse_json(a.pi));
    else if (!a.jfraction.empty())
      pi = jfrac_production(jfraction_from_json<R>(parse_json(a.jfraction)), std::max(1, a.n - 1));
    else
      pi = mbranched_production(sfraction_from_json<R>(parse_json(a.sfraction)),
                                std::max(1, a.n - 1));
    emit(sequence_to_json(moments_from_production(pi, a.n)));
  });
}

void run_jfraction(const Args& a) {
  require_plain(a.symbolic, "jfraction");
  const std::vector<Rational> l = sequence_from_json<Rational>(parse_json(a.moments));
  const int n = a.n_given ? a.n : static_cast<int>((l.size() + 1) / 2);
  emit(jfraction_to_json(moments_to_jfrac(l, n)));
}

void run_sfraction(const Args& a) {
  require_plain(a.symbolic, "sfraction");
  if (a.alpha.empty() == a.wall.empty())
    throw usage_error("need exactly one of --alpha, --wall");
  if (!a.alpha.empty()) {
    SFraction<Rational> sf(1, sequence_from_json<Rational>(parse_json(a.alpha)));
    emit(sequence_to_json(wall_translation(sf)));
  } else {
    emit(sfraction_to_json(alpha_from_wall(sequence_from_json<Rational>(parse_json(a.wall)))));
  }
}

void run_contract(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    SFraction<R> sf(1, sequence_from_json<R>(parse_json(a.alpha)));
    emit(jfraction_to_json(contract_s_to_j(sf)));
  });
}

void run_mbranched(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    SFraction<R> sf(a.m, sequence_from_json<R>(parse_json(a.alpha)));
    emit(hess_to_json(mbranched_production(sf, a.n)));
  });
}

void run_charpoly(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    emit(polyseq_to_json(charpoly_seq(hess_from_json<R>(parse_json(a.pi)), a.n)));
  });
}

void run_viennot(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    const HessWindow<R> pi = hess_from_json<R>(parse_json(a.pi));
    LowTriWindow<R> b(a.n);
    for (int row = 0; row < a.n; ++row)
      for (int col = 0; col < row; ++col) b.set(row, col, viennot_coeff(pi, row, col));
    emit(lowtri_to_json(b));
  });
}

void run_expectation(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    const HessWindow<R> pi = hess_from_json<R>(parse_json(a.pi));
    emit(json_codec<R>::encode(expectation(pi, a.k, a.l, a.m, a.n)));
  });
}

void run_hankel(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    emit(dense_to_json(
        hankel_window(sequence_from_json<R>(parse_json(a.moments)), a.n, a.shift)));
  });
}

void run_lu(const Args& a) {
  require_plain(a.symbolic, "lu");
  LUFactors<Rational> f = lu_factorize(dense_from_json<Rational>(parse_json(a.matrix)));
  emit(json{{"L", lowtri_to_json(f.lower)}, {"U", dense_to_json(f.upper)}});
}

void run_mop(const Args& a) {
  require_plain(a.symbolic, "mop");
  const MOPSystem<Rational> sys = mop_system_from_json<Rational>(parse_json(a.system));
  if (a.index.empty() == a.path.empty())
    throw usage_error("need exactly one of --index, --path");
  if (!a.index.empty()) {
    std::vector<long> e;
    for (const auto& v : parse_json(a.index)) e.push_back(v.get<long>());
    const UniPoly<Rational> p = mop_type2(sys, MultiIndex(std::move(e)));
    std::vector<Rational> coeffs;
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i));
    emit(sequence_to_json(coeffs));
  } else {
    emit(hess_to_json(path_production(sys, nnpath_from_json(parse_json(a.path)), a.n)));
  }
}

void run_stepline(const Args& a) {
  require_plain(a.symbolic, "stepline");
  json out = json::array();
  for (long v : stepline_index(a.r, a.n).entries) out.push_back(v);
  emit(out);
}

void run_oracle(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    if (a.kind == "lukasiewicz") {
      emit(json_codec<R>::encode(
          lukasiewicz_weight_sum(hess_from_json<R>(parse_json(a.pi)), a.n, a.k)));
    } else if (a.kind == "motzkin") {
      emit(json_codec<R>::encode(motzkin_Jnk(sequence_from_json<R>(parse_json(a.beta)),
                                             sequence_from_json<R>(parse_json(a.gamma)), a.n,
                                             a.k)));
    } else if (a.kind == "mdyck") {
      emit(json_codec<R>::encode(
          mdyck_Snk(sequence_from_json<R>(parse_json(a.alpha)), a.m, a.n, a.k)));
    } else {
      emit(json_codec<R>::encode(
          viennot_coeff(hess_from_json<R>(parse_json(a.pi)), a.n, a.k)));
    }
  });
}

void run_examples(const Args& a) {
  with_ring(a.symbolic, [&]<Ring R>() {
    const std::vector<R> params = params_from_csv<R>(a.params);
    if (a.model == "besselK" || a.model == "besselI") {
      if (params.size() != 2) throw usage_error("model takes two parameters");
      if (a.what == "production") {
        emit(hess_to_json(a.model == "besselK"
                              ? besselK_production(BesselKParams<R>{params[0], params[1]}, a.n)
                              : besselI_production(BesselIParams<R>{params[0], params[1]}, a.n)));
      } else if (a.what == "moments") {
        emit(sequence_to_json(
            a.model == "besselK"
                ? besselK_moments(BesselKParams<R>{params[0], params[1]}, a.n)
                : besselI_moments(BesselIParams<R>{params[0], params[1]}, a.n)));
      } else if (a.what == "triangle") {
        LowTriWindow<R> t(a.n);
        if (a.model == "besselK") {
          const BesselKParams<R> p{params[0], params[1]};
          for (int row = 0; row < a.n; ++row)
            for (int col = 0; col < row; ++col) t.set(row, col, besselK_Snk(p, row, col));
        } else {
          t = output_matrix(besselI_production(BesselIParams<R>{params[0], params[1]},
                                               std::max(1, a.n - 1)),
                            a.n);
        }
        emit(lowtri_to_json(t));
      } else {
        throw usage_error("unknown --what for this model");
      }
    } else {  // hyper
      if (a.m < 1) throw usage_error("hyper needs --m >= 1");
      if (static_cast<int>(params.size()) != a.m + 1)
        throw usage_error("hyper takes m+1 parameters");
      if (a.what == "alphas") {
        emit(sfraction_to_json(hyper_alphas(a.m, params, a.count)));
      } else {
        const int window = std::max(1, a.what == "production" ? a.n : a.n - 1);
        const int count = (window - 1) * (a.m + 1) + 1;
        const SFraction<R> sf = hyper_alphas(a.m, params, count);
        if (a.what == "production")
          emit(hess_to_json(mbranched_production(sf, window)));
        else if (a.what == "moments")
          emit(sequence_to_json(moments_from_production(mbranched_production(sf, window), a.n)));
        else if (a.what == "triangle")
          emit(lowtri_to_json(output_matrix(mbranched_production(sf, window), a.n)));
        else
          throw usage_error("unknown --what for this model");
      }
    }
  });
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact production-matrix calculus for orthogonal polynomial sequences"};
  app.require_subcommand(1);
  Args a;

  auto add_symbolic = [&a](CLI::App* sub) {
    sub->add_flag("--symbolic", a.symbolic, "compute over the multivariate polynomial ring");
  };

  auto* output = app.add_subcommand("output", "output matrix of a production window");
  output->add_option("--pi", a.pi, "production window JSON or @file")->required();
  output->add_option("--n", a.n, "number of rows")->required();
  add_symbolic(output);
  output->callback([&a] { run_output(a); });

  auto* production = app.add_subcommand("production", "production window of an output matrix");
  production->add_option("--a", a.a, "unit-lower-triangular JSON or @file")->required();
  add_symbolic(production);
  production->callback([&a] { run_production(a); });

  auto* moments = app.add_subcommand("moments", "moment sequence of a window or expansion");
  moments->add_option("--pi", a.pi, "production window JSON");
  moments->add_option("--jfraction", a.jfraction, "tridiagonal coefficients JSON");
  moments->add_option("--sfraction", a.sfraction, "branched coefficients JSON");
  moments->add_option("--n", a.n, "number of moments")->required();
  add_symbolic(moments);
  moments->callback([&a] { run_moments(a); });

  auto* jfraction = app.add_subcommand("jfraction", "expand moments into tridiagonal coefficients");
  jfraction->add_option("--moments", a.moments, "moment sequence JSON")->required();
  jfraction->add_option("--n", a.n, "expansion window size");
  add_symbolic(jfraction);
  jfraction->callback([&a, jfraction] {
    a.n_given = jfraction->count("--n") > 0;
    run_jfraction(a);
  });

  auto* sfraction = app.add_subcommand("sfraction", "translate between alpha and wall coefficients");
  sfraction->add_option("--alpha", a.alpha, "alpha_1.. sequence JSON");
  sfraction->add_option("--wall", a.wall, "l_1.. sequence JSON");
  add_symbolic(sfraction);
  sfraction->callback([&a] { run_sfraction(a); });

  auto* contract = app.add_subcommand("contract", "contract alpha coefficients to tridiagonal form");
  contract->add_option("--alpha", a.alpha, "alpha_1.. sequence JSON")->required();
  add_symbolic(contract);
  contract->callback([&a] { run_contract(a); });

  auto* mbranched = app.add_subcommand("mbranched", "production window of a branched expansion");
  mbranched->add_option("--alpha", a.alpha, "alpha_m.. sequence JSON")->required();
  mbranched->add_option("--m", a.m, "branch order")->required();
  mbranched->add_option("--n", a.n, "window size")->required();
  add_symbolic(mbranched);
  mbranched->callback([&a] { run_mbranched(a); });

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomials of leading blocks");
  charpoly->add_option("--pi", a.pi, "production window JSON")->required();
  charpoly->add_option("--n", a.n, "highest degree")->required();
  add_symbolic(charpoly);
  charpoly->callback([&a] { run_charpoly(a); });

  auto* viennot = app.add_subcommand("viennot", "inverse-output coefficients by interval partitions");
  viennot->add_option("--pi", a.pi, "production window JSON")->required();
  viennot->add_option("--n", a.n, "triangle size")->required();
  add_symbolic(viennot);
  viennot->callback([&a] { run_viennot(a); });

  auto* expectation = app.add_subcommand("expectation", "dual-functional expectation value");
  expectation->add_option("--pi", a.pi, "production window JSON")->required();
  expectation->add_option("--k", a.k, "functional index")->required();
  expectation->add_option("--l", a.l, "monomial power")->required();
  expectation->add_option("--m", a.m, "first polynomial index")->required();
  expectation->add_option("--n", a.n, "second polynomial index")->required();
  add_symbolic(expectation);
  expectation->callback([&a] { run_expectation(a); });

  auto* hankel = app.add_subcommand("hankel", "shifted moment matrix");
  hankel->add_option("--moments", a.moments, "moment sequence JSON")->required();
  hankel->add_option("--n", a.n, "window size")->required();
  hankel->add_option("--shift", a.shift, "index shift");
  add_symbolic(hankel);
  hankel->callback([&a] { run_hankel(a); });

  auto* lu = app.add_subcommand("lu", "factor a window without pivoting");
  lu->add_option("--matrix", a.matrix, "dense window JSON")->required();
  add_symbolic(lu);
  lu->callback([&a] { run_lu(a); });

  auto* mop = app.add_subcommand("mop", "multiple-orthogonality solves");
  mop->add_option("--system", a.system, "moment system JSON")->required();
  mop->add_option("--index", a.index, "multi-index JSON array");
  mop->add_option("--path", a.path, "path JSON");
  mop->add_option("--n", a.n, "window size");
  add_symbolic(mop);
  mop->callback([&a] { run_mop(a); });

  auto* stepline = app.add_subcommand("stepline", "near-diagonal multi-index of given weight");
  stepline->add_option("--r", a.r, "number of functionals")->required();
  stepline->add_option("--n", a.n, "weight")->required();
  add_symbolic(stepline);
  stepline->callback([&a] { run_stepline(a); });

  auto* oracle = app.add_subcommand("oracle", "brute-force path enumerations");
  oracle->add_option("--kind", a.kind, "lukasiewicz | motzkin | mdyck | viennot")
      ->required()
      ->check(CLI::IsMember({"lukasiewicz", "motzkin", "mdyck", "viennot"}));
  oracle->add_option("--pi", a.pi, "production window JSON");
  oracle->add_option("--beta", a.beta, "fall weights JSON");
  oracle->add_option("--gamma", a.gamma, "level weights JSON");
  oracle->add_option("--alpha", a.alpha, "fall weights JSON, indexed from m");
  oracle->add_option("--m", a.m, "branch order");
  oracle->add_option("--n", a.n, "path length / row")->required();
  oracle->add_option("--k", a.k, "ending height / column")->required();
  add_symbolic(oracle);
  oracle->callback([&a] { run_oracle(a); });

  auto* examples = app.add_subcommand("examples", "worked model families");
  examples->add_option("model", a.model, "besselK | besselI | hyper")
      ->required()
      ->check(CLI::IsMember({"besselK", "besselI", "hyper"}));
  examples->add_option("--params", a.params, "comma-separated parameters")->required();
  examples->add_option("--what", a.what, "production | moments | triangle | alphas")->required();
  examples->add_option("--n", a.n, "window size / moment count");
  examples->add_option("--m", a.m, "branch order for hyper");
  examples->add_option("--count", a.count, "alpha count for hyper alphas");
  add_symbolic(examples);
  examples->callback([&a] { run_examples(a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const prodmat::calc_error& e) {
    std::cout << prodmat::canonical(prodmat::error_to_json(e));
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
