#include "emc/json_io.hpp"

#include <stdexcept>

namespace emc {

using nlohmann::json;

namespace {

json sets_as_lists(std::span<const Mask> masks) {
  json arr = json::array();
  for (Mask m : masks) arr.push_back(elements_of(m));
  return arr;
}

}  // namespace

json json_of(const Params& p) { return json{{"n", p.n}, {"k", p.k}, {"s", p.s}}; }

Params params_from_json(const json& j) {
  return Params(j.at("n").get<unsigned>(), j.at("k").get<unsigned>(),
                j.at("s").get<unsigned>());
}

json json_of(const SetFamily& f) {
  json j = json_of(f.params());
  j["sets"] = sets_as_lists(f.masks());
  return j;
}

SetFamily family_from_json(const json& j) {
  const Params p = params_from_json(j);
  std::vector<Mask> masks;
  for (const auto& lst : j.at("sets")) {
    const auto elems = lst.get<std::vector<Element>>();
    masks.push_back(mask_of(std::span<const Element>(elems)));
  }
  return SetFamily(p, std::move(masks));
}

json json_of(const MatchingCertificate& c) {
  return json{{"size", c.size()}, {"sets", sets_as_lists(c.masks())}};
}

json json_of(const ShiftSequence& s) {
  json steps = json::array();
  for (const ShiftStep& st : s.steps()) steps.push_back(json{{"i", st.i}, {"j", st.j}});
  return json{{"steps", std::move(steps)}};
}

ShiftSequence shift_sequence_from_json(const json& j) {
  std::vector<ShiftStep> steps;
  for (const auto& st : j.at("steps"))
    steps.emplace_back(st.at("i").get<Element>(), st.at("j").get<Element>());
  return ShiftSequence(std::move(steps));
}

json json_of(const PairSelection& p) {
  return json{{"a", elements_of(p.a)},       {"b", elements_of(p.b)},
              {"x", elements_of(p.x)},       {"a_prime", p.a_prime},
              {"b_prime", p.b_prime},        {"r", p.r},
              {"b1", p.b1}};
}

json json_of(const ChainResult& c) {
  return json{{"t", c.t},
              {"a_seq", sets_as_lists(c.a_seq)},
              {"b_seq", sets_as_lists(c.b_seq)},
              {"seq", json_of(c.seq)}};
}

json json_of(const ProgressAssertions& a) {
  return json{{"b1_count_constant_before_final", a.b1_count_constant_before_final},
              {"final_shift_nondecreasing", a.final_shift_nondecreasing},
              {"chain_sets_survive", a.chain_sets_survive},
              {"chain_targets_absent", a.chain_targets_absent},
              {"b1_count_strictly_increases", a.b1_count_strictly_increases},
              {"phi_strictly_increases", a.phi_strictly_increases},
              {"family_size_preserved", a.family_size_preserved},
              {"s_counts_nondecreasing", a.s_counts_nondecreasing},
              {"triviality_monotone", a.triviality_monotone}};
}

json json_of(const IterationTrace& t) {
  json counts = json::array();
  for (const auto& row : t.s_counts)
    counts.push_back(json{{"element", row.element}, {"before", row.before},
                          {"after", row.after}});
  json j{{"phi_before", t.phi_before},
         {"phi_after", t.phi_after},
         {"b1", t.b1},
         {"pair", json_of(t.pair)},
         {"chain", json_of(t.chain)},
         {"s_counts", std::move(counts)},
         {"intermediate_trivial", t.intermediate_trivial},
         {"assertions", json_of(t.assertions)}};
  if (t.nu_before) j["nu_before"] = *t.nu_before;
  if (t.nu_after) j["nu_after"] = *t.nu_after;
  return j;
}

json json_of(const CompactionResult& c) {
  json relabel = json::array();
  for (auto [o, n] : c.relabel_map) relabel.push_back(json::array({o, n}));
  return json{{"removed", c.removed},
              {"new_n", c.new_n},
              {"relabel_map", std::move(relabel)},
              {"s_changed", c.s_changed},
              {"s_slots_unfilled", c.s_slots_unfilled},
              {"family", json_of(c.family)}};
}

json json_of(const CompactionEvent& c) {
  json j = json_of(c.result);
  j["after_iteration"] = c.after_iterations;
  return j;
}

const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::SubsetOfGStar: return "SubsetOfGStar";
    case OutcomeKind::SubsetOfFStar: return "SubsetOfFStar";
    case OutcomeKind::ContradictionMatching: return "ContradictionMatching";
  }
  return "?";
}

json json_of(const Outcome& o) {
  json iters = json::array();
  for (const auto& t : o.iterations) iters.push_back(json_of(t));
  json comps = json::array();
  for (const auto& c : o.compactions) comps.push_back(json_of(c));
  json j{{"schema_version", kSchemaVersion},
         {"kind", to_string(o.kind)},
         {"params", json_of(o.original)},
         {"final_n", o.final_n},
         {"family_size", o.final_family.size()},
         {"bound", o.bound},
         {"phi_history", o.phi_history},
         {"iterations", std::move(iters)},
         {"compactions", std::move(comps)},
         {"final_family", json_of(o.final_family)},
         {"violations", json::array()}};
  j["certificate"] = o.certificate ? json_of(*o.certificate) : json(nullptr);
  return j;
}

const char* to_string(OracleMethod m) {
  return m == OracleMethod::Direct ? "direct" : "covering";
}

json json_of(const OracleResult& r) {
  return json{{"params", json_of(r.params)},
              {"value", r.value},
              {"method", to_string(r.method)},
              {"conclusive", r.conclusive},
              {"steps", r.steps},
              {"witness", json_of(r.witness)}};
}

}  // namespace emc
