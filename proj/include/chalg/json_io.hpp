#pragma once

// JSON forms of the public value types.  Arbitrary-precision numbers are
// emitted as strings ("p/q" for non-integral rationals); all aggregate
// orders are the canonical internal orders, so equal values serialize to
// identical bytes.

#include <string>

#include <json.hpp>

#include "chalg/free_sigma.hpp"
#include "chalg/matrix_eval.hpp"
#include "chalg/norms.hpp"
#include "chalg/sigma_ring.hpp"
#include "chalg/symfun.hpp"
#include "chalg/word.hpp"

namespace chalg {

using Json = nlohmann::ordered_json;

inline Json to_json(const Word& w) { return to_string(w); }

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const EPoly& p) {
  Json out = Json::array();
  for (auto& [m, c] : p.terms()) {
    uint32_t max_index = 0;
    for (auto& [k, e] : m) max_index = std::max(max_index, k);
    std::vector<uint32_t> dense(max_index, 0);
    for (auto& [k, e] : m) dense[k - 1] = e;
    out.push_back(Json{{"coeff", c.str()}, {"exponents", dense}});
  }
  return out;
}

inline Json to_json(const SigmaPoly& p) {
  Json out = Json::array();
  for (auto& [key, c] : p.terms()) {
    Json tvars = Json::array();
    for (auto& [q, e] : key.params) tvars.push_back(Json{{"name", q.name()}, {"exp", e}});
    Json gens = Json::array();
    for (auto& [g, e] : key.gens)
      gens.push_back(Json{{"i", g.index}, {"word", to_string(g.word)}, {"exp", e}});
    out.push_back(Json{{"coeff", to_string(c)}, {"tvars", tvars}, {"generators", gens}});
  }
  return out;
}

inline Json to_json(const NCPoly& f) {
  Json out = Json::array();
  for (auto& [w, c] : f.terms()) out.push_back(Json{{"word", to_string(w)}, {"coeff", to_json(c)}});
  return out;
}

inline Json to_json(const KernelRelation& rel) {
  return Json{{"h", rel.f_exponents}, {"k", rel.g_exponents}, {"phi", to_json(rel.phi)}};
}

inline Json to_json(const std::vector<KernelRelation>& rels) {
  Json out = Json::array();
  for (auto& r : rels) out.push_back(to_json(r));
  return out;
}

template <class S>
Json to_json(const ExactMatrix<S>& m) {
  Json rows = Json::array();
  for (uint32_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (uint32_t j = 0; j < m.size(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json to_json(const Verdict& v) {
  Json out{{"status", to_string(v.status)}, {"trials", v.trials}, {"seed", v.seed}};
  if (v.witness) {
    Json vars = Json::object();
    for (auto& [var, m] : v.witness->vars) vars[letter_name(var)] = to_json(m);
    Json params = Json::object();
    for (auto& [q, val] : v.witness->params) params[q.name()] = to_string(val);
    out["witness"] = Json{{"trial", v.witness->trial}, {"vars", vars}, {"params", params}};
  }
  return out;
}

inline Json to_json(const BlockShape& shape) {
  Json blocks = Json::array();
  for (auto& [m, a] : shape.blocks) blocks.push_back(Json::array({m, a}));
  return Json{{"blocks", blocks}};
}

inline Json to_json(const BlockElement& r) {
  Json out = Json::array();
  for (auto& blk : r.blocks) out.push_back(to_json(blk));
  return out;
}

inline Json to_json(const UPoly& p) {
  Json out = Json::array();
  for (auto& c : p) out.push_back(to_string(c));
  return out;
}

}  // namespace chalg
