#include "drivers.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "bounds.hpp"
#include "code.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "ideal.hpp"
#include "specio.hpp"
#include "weights.hpp"

namespace bk {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

bool wants(const CodeSpecDoc& doc, const char* name) {
  if (doc.analyses.empty()) return true;
  return std::find(doc.analyses.begin(), doc.analyses.end(), name) !=
         doc.analyses.end();
}

bool enumerable(const Code& C, std::uint64_t cap) {
  const std::uint64_t lq = C.log_p_size() / C.ring().field().r();
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < lq; ++i) {
    if (count > cap / C.ring().field().q()) return false;
    count *= C.ring().field().q();
  }
  return count <= cap;
}

ordered_json distance_json(std::uint32_t d) {
  if (d == kInfiniteDistance) return nullptr;
  return d;
}

ordered_json bounds_json(const BoundReport& rep) {
  ordered_json b;
  b["n"] = rep.n;
  b["log_p_cardinality"] = rep.log_p_size;
  b["d_hamming"] = distance_json(rep.d_hamming);
  b["d_lee"] = distance_json(rep.d_lee);
  b["rank"] = rep.rank;
  b["free_rank"] = rep.free_rank;
  b["is_free"] = rep.is_free;
  b["singleton_h"] = {rep.singleton_h_num, rep.singleton_h_den};
  b["mdr_bound"] = rep.mdr_bound;
  b["mlds_lhs"] = rep.mlds_lhs;
  b["mlds_rhs"] = rep.mlds_rhs;
  b["mldr_lhs"] = rep.mldr_lhs;
  b["mldr_rhs"] = rep.mldr_rhs;
  b["is_mds"] = rep.is_mds;
  b["is_mdr"] = rep.is_mdr;
  b["is_mlds"] = rep.is_mlds;
  b["is_mldr"] = rep.is_mldr;
  b["free_mldr_exact_division"] = rep.free_mldr_exact_division;
  b["free_mldr_implies_mlds"] = rep.free_mldr_implies_mlds;
  return b;
}

std::vector<std::vector<RingElem>> conjugate_vectors(
    const Ring& R, const std::vector<std::vector<RingElem>>& vecs) {
  std::vector<std::vector<RingElem>> out;
  for (const auto& v : vecs) {
    std::vector<RingElem> w;
    w.reserve(v.size());
    for (const auto& x : v) w.push_back(R.conjugate(x));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::string analyze_json(const std::string& spec_text) {
  ParsedSpec ps = load_spec(spec_text);
  const Ring& R = ps.ring;
  const Code& C = ps.code;
  const CodeSpecDoc& doc = ps.doc;

  ordered_json rep;
  rep["tool"] = tool_stamp();

  ordered_json params;
  params["p"] = doc.p;
  params["r"] = doc.r;
  params["irr"] = R.field().irr();
  params["k"] = doc.k;
  params["n"] = doc.n;
  params["generators"] = generators_json(R, C.generators());
  rep["parameters"] = std::move(params);

  ordered_json opts;
  opts["cap"] = doc.cap;
  opts["shift_index"] = doc.shift_index;
  opts["analyses"] = doc.analyses.empty()
                         ? ordered_json::array({"structure", "duality",
                                                "weights", "bounds", "cyclic"})
                         : ordered_json(doc.analyses);
  rep["options"] = std::move(opts);

  const RankProfile rp = C.rank_profile();
  ordered_json st;
  st["log_p_cardinality"] = C.log_p_size();
  st["cardinality"] = decimal_power(doc.p, C.log_p_size());
  st["component_ranks"] = rp.component_ranks;
  st["rank"] = rp.rank;
  st["free_rank"] = rp.free_rank;
  st["is_free"] = rp.is_free;
  st["is_zero_code"] = C.is_zero_code();
  st["minimal_generating_set"] =
      generators_json(R, C.minimal_generating_set());
  rep["structure"] = std::move(st);

  if (wants(doc, "duality")) {
    const std::uint64_t full = R.log_p_order() * doc.n;
    Code de = C.dual(DualMode::euclidean);
    Code dh = C.dual(DualMode::hermitian);
    ordered_json d;
    d["euclidean"] = {
        {"log_p_cardinality", de.log_p_size()},
        {"component_ranks", de.rank_profile().component_ranks},
        {"size_product_ok", C.log_p_size() + de.log_p_size() == full}};
    d["hermitian"] = {
        {"log_p_cardinality", dh.log_p_size()},
        {"component_ranks", dh.rank_profile().component_ranks},
        {"size_product_ok", C.log_p_size() + dh.log_p_size() == full}};
    d["double_dual_is_identity"] =
        de.dual(DualMode::euclidean).same_code(C) &&
        dh.dual(DualMode::hermitian).same_code(C);
    const SelfDualStatus sd = C.self_dual_status(doc.cap);
    d["euclid_orthogonal"] = sd.euclid_orthogonal;
    d["euclid_dual"] = sd.euclid_dual;
    d["hermitian_orthogonal"] = sd.hermitian_orthogonal;
    d["hermitian_dual"] = sd.hermitian_dual;
    d["type_II"] = sd.type_II;
    rep["duality"] = std::move(d);
  }

  if (wants(doc, "weights")) {
    if (!enumerable(C, doc.cap))
      fail(errc::cap_exceeded,
           "weights need enumeration of p^" +
               std::to_string(C.log_p_size()) + " codewords, cap is " +
               std::to_string(doc.cap));
    ordered_json w;
    const WeightEnumerator cwe = complete_we(C, doc.cap);
    const UnitClasses cls = unit_classes(R);
    const WeightEnumerator swe = symmetrize(cwe, cls);
    w["complete_digest"] = enumerator_digest(cwe);
    w["symmetrized_digest"] = enumerator_digest(swe);
    w["unit_class_count"] = cls.reps.size();
    ordered_json hj = ordered_json::array();
    for (const auto& [e, c] : hamming_we(C, doc.cap).terms)
      hj.push_back({e[0], c.rational()});
    w["hamming_distribution"] = std::move(hj);
    ordered_json lj = ordered_json::array();
    for (const auto& [e, c] : lee_we(C, doc.cap).terms)
      lj.push_back({e[0], c.rational()});
    w["lee_distribution"] = std::move(lj);
    rep["weights"] = std::move(w);
  }

  if (wants(doc, "bounds")) {
    if (!enumerable(C, doc.cap))
      fail(errc::cap_exceeded,
           "bounds need enumeration of p^" + std::to_string(C.log_p_size()) +
               " codewords, cap is " + std::to_string(doc.cap));
    rep["bounds"] = bounds_json(singleton_report(C, doc.cap));
    const RankIdentity ri = rank_identity_check(C);
    rep["rank_identity"] = {{"self_form_holds", ri.self_form_holds},
                            {"dual_form_holds", ri.dual_form_holds}};
  }

  if (wants(doc, "cyclic")) {
    ordered_json cy;
    cy["shift_index"] = doc.shift_index;
    const ComponentCyclicReport cr =
        component_cyclic_check(C, doc.shift_index);
    cy["quasi_cyclic"] = cr.code_qc;
    cy["components_qc"] = cr.components_qc;
    cy["equivalence_holds"] = cr.equivalence_holds;
    const bool cyc = is_quasi_cyclic(C, 1);
    cy["cyclic"] = cyc;
    if (cyc) {
      const std::vector<PolyCode> polys = cyclic_component_generators(C);
      ordered_json pj = ordered_json::array();
      for (const auto& pc : polys)
        pj.push_back(fpoly_json(R.field(), pc.generators[0]));
      cy["generator_polys"] = std::move(pj);
      Code lifted =
          Code::from_generators(R, doc.n, lift_generators(R, doc.n, polys));
      cy["lift_round_trip_ok"] = lifted.same_code(C);
    }
    rep["cyclic"] = std::move(cy);
  }

  return rep.dump(2) + "\n";
}

namespace {

struct DriverParams {
  std::string name;
  std::uint32_t p = 2, r = 1, k = 1, n = 2;
  std::uint64_t seed = 0, cap = kDefaultEnumCap, budget = 1u << 16;
  bool inject_fault = false;
};

DriverParams parse_driver_params(const std::string& text, const char* key) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(errc::parse_error, "parameters must be a JSON object");
  DriverParams dp;
  if (!j.contains(key) || !j.at(key).is_string())
    fail(errc::parse_error, std::string("missing \"") + key + "\"");
  dp.name = j.at(key).get<std::string>();
  auto take = [&](const char* f, auto& slot) {
    if (j.contains(f)) {
      if (!j.at(f).is_number_unsigned())
        fail(errc::parse_error,
             std::string("key \"") + f + "\" must be an unsigned integer");
      slot = j.at(f).get<std::decay_t<decltype(slot)>>();
    }
  };
  take("p", dp.p);
  take("r", dp.r);
  take("k", dp.k);
  take("n", dp.n);
  take("seed", dp.seed);
  take("cap", dp.cap);
  take("budget", dp.budget);
  if (j.contains("inject_fault")) {
    if (!j.at("inject_fault").is_boolean())
      fail(errc::parse_error, "inject_fault must be a boolean");
    dp.inject_fault = j.at("inject_fault").get<bool>();
  }
  if (dp.n < 1) fail(errc::invalid_argument, "n must be at least 1");
  return dp;
}

std::vector<std::vector<RingElem>> random_generators(const Ring& R,
                                                     std::uint32_t n,
                                                     std::uint32_t count,
                                                     std::mt19937_64& rng) {
  const std::uint64_t N = *R.order();
  std::vector<std::vector<RingElem>> gens;
  for (std::uint32_t t = 0; t < count; ++t) {
    std::vector<RingElem> g;
    g.reserve(n);
    for (std::uint32_t j = 0; j < n; ++j)
      g.push_back(R.from_wire_rank(rng() % N));
    gens.push_back(std::move(g));
  }
  return gens;
}

// random code with at most max_gens generators and |C| within the word cap
Code random_code(const Ring& R, std::uint32_t n_max, std::uint32_t max_gens,
                 std::uint64_t word_cap, std::mt19937_64& rng) {
  for (int tries = 0; tries < 100; ++tries) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % n_max);
    const std::uint32_t s = 1 + static_cast<std::uint32_t>(rng() % max_gens);
    Code C = Code::from_generators(R, n, random_generators(R, n, s, rng));
    std::uint64_t count = 1;
    bool ok = true;
    const std::uint64_t lq = C.log_p_size() / R.field().r();
    for (std::uint64_t i = 0; i < lq && ok; ++i) {
      if (count > word_cap / R.field().q())
        ok = false;
      else
        count *= R.field().q();
    }
    if (ok) return C;
  }
  fail(errc::cap_exceeded, "could not sample a code within the word cap");
}

struct SuiteState {
  ordered_json failures = ordered_json::array();
  std::uint32_t checks = 0;

  void check(bool ok, const char* what, const Ring& R, const Code& C) {
    ++checks;
    if (ok) return;
    ordered_json f;
    f["check"] = what;
    f["spec"] = spec_json(R, C.length(), C.generators());
    failures.push_back(std::move(f));
  }
};

constexpr std::uint32_t kVerifyTrials = 40;

void run_macwilliams_suite(const Ring& R, const DriverParams& dp,
                           std::mt19937_64& rng, SuiteState& st) {
  auto ord = R.order();
  if (!ord || *ord > 512)
    fail(errc::cap_exceeded, "macwilliams suite needs |B_k| <= 512");
  const CharMatrix T = char_matrix(R, CharMatrix::Kind::T);
  const CharMatrix TH = char_matrix(R, CharMatrix::Kind::T_H);
  const CharMatrix S = char_matrix(R, CharMatrix::Kind::S);
  const UnitClasses cls = unit_classes(R);

  for (std::uint32_t t = 0; t < kVerifyTrials; ++t) {
    Code C = random_code(R, dp.n, 2, 4096, rng);
    std::uint64_t card = 1;
    for (std::uint64_t i = 0; i < C.log_p_size(); ++i) card *= R.field().p();

    const WeightEnumerator cwe = complete_we(C, dp.cap);
    Code de = C.dual(DualMode::euclidean);
    Code dh = C.dual(DualMode::hermitian);
    const WeightEnumerator cwe_de = complete_we(de, dp.cap);
    const WeightEnumerator cwe_dh = complete_we(dh, dp.cap);

    const WeightEnumerator tde = macwilliams(cwe, T, card);
    st.check(tde.terms == cwe_de.terms, "cwe/T transform equals dual cwe", R,
             C);
    const WeightEnumerator tdh = macwilliams(cwe, TH, card);
    st.check(tdh.terms == cwe_dh.terms,
             "cwe/T_H transform equals hermitian dual cwe", R, C);

    const WeightEnumerator swe = symmetrize(cwe, cls);
    const WeightEnumerator sde = macwilliams(swe, S, card);
    st.check(sde.terms == symmetrize(cwe_de, cls).terms,
             "swe/S transform equals dual swe", R, C);
    st.check(symmetrize(tde, cls).terms == sde.terms,
             "folding commutes with the transform", R, C);
  }
}

void run_crt_suite(const Ring& R, const DriverParams& dp,
                   std::mt19937_64& rng, SuiteState& st) {
  auto ord = R.order();
  if (!ord || *ord > 4096)
    fail(errc::cap_exceeded, "crt suite needs |B_k| <= 4096");
  const std::uint64_t N = *ord;
  const Code probe = Code::from_generators(
      R, 1, {{R.one()}});  // spec carrier for element-level failures

  for (std::uint64_t t = 0; t < N; ++t) {
    RingElem a = R.from_wire_rank(t);
    st.check(R.wire_rank(a) == t, "wire rank round trip", R, probe);
    st.check(R.from_gray(a.gray) == a, "gray map round trip", R, probe);
    st.check(R.conjugate(R.conjugate(a)) == a, "conjugation involutive", R,
             probe);
  }

  const std::vector<std::uint32_t> perm = R.tower_permutation();
  for (std::uint64_t t = 0; t < N; ++t) {
    RingElem a = R.from_wire_rank(t);
    const std::vector<felem> tw = R.tower_gray(a);
    bool ok = true;
    for (std::uint32_t i = 0; i < R.coords(); ++i)
      if (tw[i] != a.gray[perm[i]]) ok = false;
    st.check(ok, "tower factors through the gray permutation", R, probe);
  }
  if (R.k() <= 3) {
    bool identity = true;
    for (std::uint32_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) identity = false;
    st.check(identity, "tower permutation is the identity", R, probe);
  }

  const bool all_pairs = N <= 256;
  const std::uint64_t pair_trials = all_pairs ? N * N : 4096;
  for (std::uint64_t t = 0; t < pair_trials; ++t) {
    RingElem a = R.from_wire_rank(all_pairs ? t / N : rng() % N);
    RingElem b = R.from_wire_rank(all_pairs ? t % N : rng() % N);
    RingElem sum = R.add(a, b);
    RingElem prod = R.mul(a, b);
    bool ok = true;
    for (std::uint32_t i = 0; i < R.coords(); ++i) {
      if (sum.gray[i] != R.field().add(a.gray[i], b.gray[i])) ok = false;
      if (prod.gray[i] != R.field().mul(a.gray[i], b.gray[i])) ok = false;
    }
    st.check(ok, "gray map is a ring isomorphism", R, probe);
    RingElem cab = R.conjugate(prod);
    st.check(cab == R.mul(R.conjugate(a), R.conjugate(b)),
             "conjugation is multiplicative", R, probe);
  }

  for (std::uint32_t t = 0; t < 10; ++t) {
    Code C = random_code(R, dp.n, 2, 1u << 16, rng);
    Code back = Code::from_components(R, C.length(), C.components());
    st.check(back.same_code(C), "component decomposition round trip", R, C);
    std::uint64_t expected = 1;
    for (std::uint64_t i = 0; i < C.log_p_size(); ++i)
      expected *= R.field().p();
    st.check(C.codewords(dp.cap).size() == expected,
             "cardinality formula matches enumeration", R, C);

    const auto mgs = C.minimal_generating_set();
    st.check(Code::from_generators(R, C.length(), mgs).same_code(C),
             "minimal generating set spans", R, C);
    st.check(mgs.size() == C.rank_profile().rank,
             "minimal generating set has rank-many vectors", R, C);
    st.check(mgs.empty() || modular_independent(R, mgs),
             "minimal generating set modular independent", R, C);
    std::uint64_t ideal_log = 0;
    for (const auto& u : mgs) ideal_log += coordinate_ideal_log_p(R, u);
    st.check(ideal_log == C.log_p_size(),
             "coordinate ideal sizes multiply to |C|", R, C);
  }
}

void run_duality_suite(const Ring& R, const DriverParams& dp,
                       std::mt19937_64& rng, SuiteState& st) {
  const std::uint64_t full_per_coord = R.log_p_order();
  for (std::uint32_t t = 0; t < kVerifyTrials; ++t) {
    Code C = random_code(R, dp.n, 2, 1u << 20, rng);
    Code de = C.dual(DualMode::euclidean);
    Code dh = C.dual(DualMode::hermitian);
    if (dp.inject_fault && t == 0) {
      // test hook: corrupt the dual's first component
      std::vector<Matrix> comps = de.components();
      if (comps[0].size() < C.length()) {
        Matrix full;
        for (std::uint32_t i = 0; i < C.length(); ++i) {
          Row row(C.length(), 0);
          row[i] = R.field().one();
          full.push_back(std::move(row));
        }
        comps[0] = std::move(full);
      } else {
        comps[0].clear();
      }
      de = Code::from_components(R, C.length(), comps);
    }
    const std::uint64_t full = full_per_coord * C.length();
    st.check(C.log_p_size() + de.log_p_size() == full,
             "euclidean size product", R, C);
    st.check(C.log_p_size() + dh.log_p_size() == full,
             "hermitian size product", R, C);
    st.check(de.dual(DualMode::euclidean).same_code(C),
             "euclidean double dual", R, C);
    st.check(dh.dual(DualMode::hermitian).same_code(C),
             "hermitian double dual", R, C);
    Code conj_de = Code::from_generators(
        R, C.length(), conjugate_vectors(R, de.generators()));
    st.check(dh.same_code(conj_de),
             "hermitian dual is the conjugated euclidean dual", R, C);
  }
}

void run_bounds_suite(const Ring& R, const DriverParams& dp,
                      std::mt19937_64& rng, SuiteState& st) {
  for (std::uint32_t t = 0; t < kVerifyTrials; ++t) {
    Code C = random_code(R, dp.n, 2, 1u << 16, rng);
    const BoundReport rep = singleton_report(C, dp.cap);
    const RankIdentity ri = rank_identity_check(C);
    st.check(ri.dual_form_holds, "rank plus dual free rank equals n", R, C);
    if (C.is_zero_code()) {
      st.check(!rep.is_mds && !rep.is_mdr && !rep.is_mlds && !rep.is_mldr,
               "zero code has no bound verdicts", R, C);
      continue;
    }
    st.check(static_cast<std::int64_t>(rep.d_hamming) * rep.singleton_h_den <=
                 rep.singleton_h_num,
             "hamming singleton bound", R, C);
    st.check(rep.d_hamming <= rep.mdr_bound, "rank singleton bound", R, C);
    st.check(rep.mlds_lhs <= rep.mlds_rhs, "lee size bound", R, C);
    st.check(rep.mldr_lhs <= rep.mldr_rhs, "lee rank bound", R, C);
    st.check(rep.d_lee >= rep.d_hamming,
             "lee distance dominates hamming distance", R, C);
    st.check(rep.free_mldr_implies_mlds,
             "free exact MLDR codes are MLDS", R, C);
  }
}

void run_cyclic_suite(const Ring& R, const DriverParams& dp,
                      std::mt19937_64& rng, SuiteState& st) {
  const std::uint32_t n_max = std::max<std::uint32_t>(dp.n, 2);
  for (std::uint32_t t = 0; t < kVerifyTrials; ++t) {
    // cyclic by construction: close random generators under the shift
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % (n_max - 1));
    auto seeds = random_generators(R, n, 1 + rng() % 2, rng);
    std::vector<std::vector<RingElem>> closed;
    for (const auto& g : seeds) {
      std::vector<RingElem> cur = g;
      for (std::uint32_t s = 0; s < n; ++s) {
        closed.push_back(cur);
        cur = shift(cur, 1);
      }
    }
    Code C = Code::from_generators(R, n, closed);
    st.check(is_quasi_cyclic(C, 1), "shift closure is cyclic", R, C);
    for (std::uint32_t l = 1; l <= std::min<std::uint32_t>(2, n); ++l)
      st.check(component_cyclic_check(C, l).equivalence_holds,
               "componentwise QC equivalence on cyclic codes", R, C);
    const auto polys = cyclic_component_generators(C);
    Code lifted = Code::from_generators(R, n, lift_generators(R, n, polys));
    st.check(lifted.same_code(C), "extraction and lift round trip", R, C);

    // arbitrary codes: the equivalence and shift/component commutation
    Code D = random_code(R, dp.n, 2, 1u << 20, rng);
    for (std::uint32_t l = 1; l <= std::min<std::uint32_t>(2, D.length());
         ++l) {
      st.check(component_cyclic_check(D, l).equivalence_holds,
               "componentwise QC equivalence", R, D);
      std::vector<std::vector<RingElem>> shifted;
      for (const auto& g : D.generators()) shifted.push_back(shift(g, l));
      Code Ds = Code::from_generators(R, D.length(), shifted);
      bool commute = true;
      for (std::uint32_t i = 0; i < R.coords(); ++i) {
        Matrix rows;
        for (const auto& row : D.components()[i])
          rows.push_back(shift_row(row, l));
        if (rref(R.field(), std::move(rows)) != Ds.components()[i])
          commute = false;
      }
      st.check(commute, "shift commutes with component extraction", R, D);
    }
  }
}

}  // namespace

VerifyOutcome verify_json(const std::string& params_json) {
  const DriverParams dp = parse_driver_params(params_json, "suite");
  Field F = Field::make(dp.p, dp.r);
  Ring R(F, dp.k);
  std::mt19937_64 rng(dp.seed);
  SuiteState st;

  if (dp.name == "macwilliams")
    run_macwilliams_suite(R, dp, rng, st);
  else if (dp.name == "crt")
    run_crt_suite(R, dp, rng, st);
  else if (dp.name == "duality")
    run_duality_suite(R, dp, rng, st);
  else if (dp.name == "bounds")
    run_bounds_suite(R, dp, rng, st);
  else if (dp.name == "cyclic")
    run_cyclic_suite(R, dp, rng, st);
  else
    fail(errc::invalid_argument, "unknown suite \"" + dp.name + "\"");

  ordered_json doc;
  doc["tool"] = tool_stamp();
  doc["suite"] = dp.name;
  doc["parameters"] = {{"p", dp.p},       {"r", dp.r},
                       {"k", dp.k},       {"n", dp.n},
                       {"seed", dp.seed}, {"cap", dp.cap},
                       {"inject_fault", dp.inject_fault}};
  doc["checks"] = st.checks;
  doc["failures"] = st.failures;
  const bool pass = st.failures.empty();
  doc["pass"] = pass;
  return VerifyOutcome{pass, doc.dump(2) + "\n"};
}

namespace {

bool search_predicate(const std::string& name, const Code& C,
                      std::uint64_t cap) {
  if (name == "self_dual_euclid")
    return C.dual(DualMode::euclidean).same_code(C);
  if (name == "self_dual_herm")
    return C.dual(DualMode::hermitian).same_code(C);
  if (C.is_zero_code()) return false;
  const BoundReport rep = singleton_report(C, cap);
  if (name == "mds") return rep.is_mds;
  if (name == "mdr") return rep.is_mdr;
  if (name == "mlds") return rep.is_mlds;
  if (name == "mldr") return rep.is_mldr;
  fail(errc::invalid_argument, "unknown predicate \"" + name + "\"");
}

}  // namespace

std::string search_json(const std::string& params_json) {
  const DriverParams dp = parse_driver_params(params_json, "predicate");
  static const std::vector<std::string> known{
      "self_dual_euclid", "self_dual_herm", "mds", "mdr", "mlds", "mldr"};
  if (std::find(known.begin(), known.end(), dp.name) == known.end())
    fail(errc::invalid_argument, "unknown predicate \"" + dp.name + "\"");
  Field F = Field::make(dp.p, dp.r);
  Ring R(F, dp.k);
  auto ord = R.order();
  if (!ord) fail(errc::cap_exceeded, "ring too large to search");
  const std::uint64_t N = *ord;

  // exhaustive when every tuple of n generators fits the budget
  const std::uint32_t s = dp.n;
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::uint32_t i = 0; i < s * dp.n && exhaustive; ++i) {
    if (total > dp.budget / N)
      exhaustive = false;
    else
      total *= N;
  }
  if (total > dp.budget) exhaustive = false;

  std::mt19937_64 rng(dp.seed);
  std::set<std::string> seen;
  ordered_json witnesses = ordered_json::array();
  std::uint64_t examined = 0;
  std::uint64_t found = 0;
  bool truncated = false;
  constexpr std::uint64_t kMaxWitnesses = 200;

  auto consider = [&](const Code& C) {
    ++examined;
    std::string sig;
    for (std::uint32_t i = 0; i < R.coords(); ++i)
      sig += matrix_json(R.field(), C.components()[i]).dump();
    if (!seen.insert(sig).second) return;
    if (!search_predicate(dp.name, C, dp.cap)) return;
    ++found;
    if (witnesses.size() < kMaxWitnesses)
      witnesses.push_back(
          spec_json(R, C.length(), C.minimal_generating_set()));
    else
      truncated = true;
  };

  if (exhaustive) {
    std::vector<std::uint64_t> odo(static_cast<std::size_t>(s) * dp.n, 0);
    while (true) {
      std::vector<std::vector<RingElem>> gens;
      for (std::uint32_t t = 0; t < s; ++t) {
        std::vector<RingElem> g;
        for (std::uint32_t j = 0; j < dp.n; ++j)
          g.push_back(R.from_wire_rank(odo[t * dp.n + j]));
        gens.push_back(std::move(g));
      }
      consider(Code::from_generators(R, dp.n, std::move(gens)));
      int idx = static_cast<int>(odo.size()) - 1;
      while (idx >= 0 && odo[idx] + 1 == N) odo[idx--] = 0;
      if (idx < 0) break;
      ++odo[idx];
    }
  } else {
    for (std::uint64_t t = 0; t < dp.budget; ++t) {
      const std::uint32_t count = 1 + static_cast<std::uint32_t>(rng() % s);
      consider(Code::from_generators(
          R, dp.n, random_generators(R, dp.n, count, rng)));
    }
  }

  ordered_json doc;
  doc["tool"] = tool_stamp();
  doc["predicate"] = dp.name;
  doc["parameters"] = {{"p", dp.p},       {"r", dp.r},     {"k", dp.k},
                       {"n", dp.n},       {"seed", dp.seed},
                       {"budget", dp.budget}};
  doc["exhaustive"] = exhaustive;
  doc["candidates_examined"] = examined;
  doc["distinct_codes"] = seen.size();
  doc["witness_count"] = found;
  doc["witnesses_truncated"] = truncated;
  doc["witnesses"] = std::move(witnesses);
  return doc.dump(2) + "\n";
}

std::string ring_table_json(std::uint32_t p, std::uint32_t r,
                            std::uint32_t k) {
  Field F = Field::make(p, r);
  Ring R(F, k);
  auto ord = R.order();
  if (!ord || *ord > kDefaultMatrixCap)
    fail(errc::matrix_too_large, "ring table capped at 4096 elements");
  const std::uint64_t N = *ord;

  ordered_json doc;
  doc["tool"] = tool_stamp();
  doc["parameters"] = {{"p", p}, {"r", r}, {"irr", F.irr()}, {"k", k}};
  doc["order"] = decimal_power(p, R.log_p_order());

  ordered_json elems = ordered_json::array();
  for (std::uint64_t t = 0; t < N; ++t) {
    RingElem a = R.from_wire_rank(t);
    ordered_json e;
    e["rank"] = t;
    e["coeffs"] = ring_elem_json(R, a);
    ordered_json gray = ordered_json::array();
    for (felem g : a.gray) gray.push_back(field_elem_json(F, g));
    e["gray"] = std::move(gray);
    ordered_json tower = ordered_json::array();
    for (felem g : R.tower_gray(a)) tower.push_back(field_elem_json(F, g));
    e["tower"] = std::move(tower);
    e["conjugate_rank"] = R.wire_rank(R.conjugate(a));
    e["unit"] = R.is_unit(a);
    e["gray_weight"] = gray_weight(R, a);
    elems.push_back(std::move(e));
  }
  doc["elements"] = std::move(elems);
  doc["tower_permutation"] = R.tower_permutation();

  ordered_json idem = ordered_json::array();
  for (std::uint32_t i = 0; i < R.coords(); ++i)
    idem.push_back(R.wire_rank(R.idempotent(i)));
  doc["primitive_idempotent_ranks"] = std::move(idem);

  const UnitClasses cls = unit_classes(R);
  doc["unit_classes"] = {{"representatives", cls.reps},
                         {"orbit_sizes", cls.orbit_sizes}};

  ordered_json mi = ordered_json::array();
  for (const auto& gens : maximal_ideal_generators(R)) {
    ordered_json gj = ordered_json::array();
    for (const auto& g : gens) gj.push_back(ring_elem_json(R, g));
    mi.push_back(std::move(gj));
  }
  doc["maximal_ideal_generators"] = std::move(mi);
  return doc.dump(2) + "\n";
}

}  // namespace bk
