#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "prodmat/cfrac.hpp"
#include "prodmat/hessenberg.hpp"
#include "prodmat/mop.hpp"
#include "prodmat/multipoly.hpp"
#include "prodmat/rational.hpp"
#include "prodmat/windows.hpp"

namespace prodmat {

using nlohmann::json;

// Scalars travel as strings ("p" or "p/q") so no reader ever sees a rounded
// value; plain JSON integers are accepted on input for convenience.
template <Ring R>
struct json_codec;

template <>
struct json_codec<Rational> {
  static json encode(const Rational& v) { return v.str(); }
  static Rational decode(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational(j.get<std::string>());
    throw calc_error(errname::domain_error, "expected a rational as string or integer");
  }
};

inline bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// Symbolic scalars: rational literal, bare indeterminate name, or the full
// term-array form emitted by encode.
template <>
struct json_codec<MultiPoly> {
  static json encode(const MultiPoly& v) {
    json terms = json::array();
    for (const auto& [exps, coeff] : v.terms()) {
      json names = json::object();
      for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) names[IndetRegistry::instance().name(static_cast<int>(i))] = exps[i];
      terms.push_back(json{{"coeff", coeff.str()}, {"exponents", names}});
    }
    return terms;
  }
  static MultiPoly decode(const json& j) {
    if (j.is_number_integer()) return MultiPoly(j.get<long>());
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      if (valid_identifier(s)) return MultiPoly::var(s);
      return MultiPoly(Rational(s));
    }
    if (j.is_array()) {
      MultiPoly acc;
      for (const auto& term : j) {
        MultiPoly t(Rational(term.at("coeff").get<std::string>()));
        for (const auto& [name, exp] : term.at("exponents").items())
          t = t * MultiPoly::var(name, exp.get<uint32_t>());
        acc = acc + t;
      }
      return acc;
    }
    throw calc_error(errname::domain_error, "expected a symbolic scalar");
  }
};

template <Ring R>
json sequence_to_json(const std::vector<R>& v) {
  json a = json::array();
  for (const R& x : v) a.push_back(json_codec<R>::encode(x));
  return a;
}

template <Ring R>
std::vector<R> sequence_from_json(const json& j) {
  if (!j.is_array()) throw calc_error(errname::domain_error, "expected a JSON array");
  std::vector<R> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(json_codec<R>::decode(x));
  return v;
}

// {"band": d or null, "rows": [...], "size": N}; row n covers columns
// row_lo(n)..min(n+1, N-1), so the structural superdiagonal 1 is visible
// everywhere except the last row.
template <Ring R>
json hess_to_json(const HessWindow<R>& pi) {
  json rows = json::array();
  for (int n = 0; n < pi.size(); ++n) {
    json row = json::array();
    for (int k = pi.row_lo(n); k <= n + 1 && k < pi.size(); ++k)
      row.push_back(json_codec<R>::encode(pi.entry(n, k)));
    rows.push_back(std::move(row));
  }
  json out{{"rows", std::move(rows)}, {"size", pi.size()}};
  if (pi.band())
    out["band"] = *pi.band();
  else
    out["band"] = nullptr;
  return out;
}

template <Ring R>
HessWindow<R> hess_from_json(const json& j) {
  if (j.is_array()) {
    // bare triangle: row n lists columns 0..min(n+1, N-1)
    const int N = static_cast<int>(j.size());
    HessWindow<R> pi(N);
    for (int n = 0; n < N; ++n) {
      const auto& row = j.at(static_cast<size_t>(n));
      const int want = std::min(n + 1, N - 1) + 1;
      if (static_cast<int>(row.size()) != want)
        throw calc_error(errname::domain_error, "window row has the wrong length", n);
      for (int k = 0; k < want; ++k) {
        R v = json_codec<R>::decode(row.at(static_cast<size_t>(k)));
        if (k == n + 1) {
          if (v != R(1))
            throw calc_error(errname::domain_error, "superdiagonal entries must be 1", n);
        } else {
          pi.set(n, k, std::move(v));
        }
      }
    }
    return pi;
  }
  const int N = j.at("size").get<int>();
  std::optional<int> band;
  if (j.contains("band") && !j.at("band").is_null()) band = j.at("band").get<int>();
  HessWindow<R> pi(N, band);
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != N)
    throw calc_error(errname::domain_error, "window row count must equal size");
  for (int n = 0; n < N; ++n) {
    const auto& row = rows.at(static_cast<size_t>(n));
    const int lo = pi.row_lo(n);
    const int hi = std::min(n + 1, N - 1);
    if (static_cast<int>(row.size()) != hi - lo + 1)
      throw calc_error(errname::domain_error, "window row has the wrong length", n);
    for (int k = lo; k <= hi; ++k) {
      R v = json_codec<R>::decode(row.at(static_cast<size_t>(k - lo)));
      if (k == n + 1) {
        if (v != R(1))
          throw calc_error(errname::domain_error, "superdiagonal entries must be 1", n);
      } else {
        pi.set(n, k, std::move(v));
      }
    }
  }
  return pi;
}

// {"rows": [[columns 0..n including the unit diagonal]], "size": N}
template <Ring R>
json lowtri_to_json(const LowTriWindow<R>& a) {
  json rows = json::array();
  for (int n = 0; n < a.size(); ++n) {
    json row = json::array();
    for (int k = 0; k <= n; ++k) row.push_back(json_codec<R>::encode(a.entry(n, k)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}, {"size", a.size()}};
}

template <Ring R>
LowTriWindow<R> lowtri_from_json(const json& j) {
  const auto& rows = j.is_array() ? j : j.at("rows");
  const int N = j.is_array() ? static_cast<int>(j.size()) : j.at("size").get<int>();
  if (static_cast<int>(rows.size()) != N)
    throw calc_error(errname::domain_error, "window row count must equal size");
  LowTriWindow<R> a(N);
  for (int n = 0; n < N; ++n) {
    const auto& row = rows.at(static_cast<size_t>(n));
    if (static_cast<int>(row.size()) != n + 1)
      throw calc_error(errname::domain_error, "triangle row has the wrong length", n);
    for (int k = 0; k <= n; ++k) {
      R v = json_codec<R>::decode(row.at(static_cast<size_t>(k)));
      if (k == n) {
        if (v != R(1))
          throw calc_error(errname::domain_error, "diagonal entries must be 1", n);
      } else {
        a.set(n, k, std::move(v));
      }
    }
  }
  return a;
}

template <Ring R>
json dense_to_json(const DenseWindow<R>& g) {
  json rows = json::array();
  for (int i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < g.size(); ++k) row.push_back(json_codec<R>::encode(g.at(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"entries", std::move(rows)}, {"size", g.size()}};
}

template <Ring R>
DenseWindow<R> dense_from_json(const json& j) {
  const auto& rows = j.is_array() ? j : j.at("entries");
  const int N = j.is_array() ? static_cast<int>(j.size()) : j.at("size").get<int>();
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  if (static_cast<int>(rows.size()) != N)
    throw calc_error(errname::domain_error, "window row count must equal size");
  DenseWindow<R> g(N);
  for (int i = 0; i < N; ++i) {
    const auto& row = rows.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != N)
      throw calc_error(errname::domain_error, "window row has the wrong length", i);
    for (int k = 0; k < N; ++k) g.at(i, k) = json_codec<R>::decode(row.at(static_cast<size_t>(k)));
  }
  return g;
}

template <Ring R>
json jfraction_to_json(const JFraction<R>& jf) {
  json out{{"gamma", sequence_to_json(jf.gamma)}, {"beta", sequence_to_json(jf.beta)}};
  if (jf.degenerate) out["degenerate"] = true;
  return out;
}

template <Ring R>
JFraction<R> jfraction_from_json(const json& j) {
  JFraction<R> jf;
  jf.gamma = sequence_from_json<R>(j.at("gamma"));
  jf.beta = sequence_from_json<R>(j.at("beta"));
  if (j.contains("degenerate")) jf.degenerate = j.at("degenerate").get<bool>();
  return jf;
}

template <Ring R>
json sfraction_to_json(const SFraction<R>& sf) {
  return json{{"m", sf.m},
              {"alpha", sequence_to_json(sf.alpha)},
              {"alpha_start_index", sf.m}};
}

template <Ring R>
SFraction<R> sfraction_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  if (j.contains("alpha_start_index") && j.at("alpha_start_index").get<int>() != m)
    throw calc_error(errname::domain_error, "alpha indexing must start at the branch order");
  return SFraction<R>(m, sequence_from_json<R>(j.at("alpha")));
}

template <Ring R>
json polyseq_to_json(const MonicPolySeq<R>& p) {
  json polys = json::array();
  for (int n = 0; n < p.size(); ++n) {
    json row = json::array();
    const LowTriWindow<R>& b = p.coeff_matrix();
    for (int k = 0; k <= n; ++k) row.push_back(json_codec<R>::encode(b.entry(n, k)));
    polys.push_back(std::move(row));
  }
  return json{{"polys", std::move(polys)}};
}

template <Ring R>
json mop_system_to_json(const MOPSystem<R>& sys) {
  json rows = json::array();
  for (const auto& seq : sys.moments) rows.push_back(sequence_to_json(seq));
  return json{{"r", sys.r}, {"moments", std::move(rows)}};
}

template <Ring R>
MOPSystem<R> mop_system_from_json(const json& j) {
  std::vector<std::vector<R>> rows;
  for (const auto& seq : j.at("moments")) rows.push_back(sequence_from_json<R>(seq));
  return MOPSystem<R>(j.at("r").get<int>(), std::move(rows));
}

inline NNPath nnpath_from_json(const json& j) {
  NNPath p;
  const auto& dirs = j.is_array() ? j : j.at("directions");
  for (const auto& d : dirs) p.directions.push_back(d.get<int>());
  return p;
}

inline json error_to_json(const calc_error& e) {
  json out{{"error", e.name()}};
  if (e.index()) out["index"] = *e.index();
  return out;
}

// Canonical text: compact dump of a key-sorted tree plus one newline.
inline std::string canonical(const json& j) { return j.dump() + "\n"; }

}  // namespace prodmat
