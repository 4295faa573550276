#include "emc/algorithm.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "emc/binomial.hpp"
#include "emc/claim.hpp"
#include "emc/json_io.hpp"

namespace emc {

namespace {

// Resolves every "pick an arbitrary ..." point: least candidate by
// default, uniform draw when a choice seed is in play.
struct Chooser {
  std::optional<std::mt19937_64> rng;

  explicit Chooser(const std::optional<std::uint64_t>& seed) {
    if (seed) rng.emplace(*seed);
  }

  std::size_t index(std::size_t n) { return rng ? (*rng)() % n : 0; }

  template <class T>
  T pick(const std::vector<T>& candidates) {
    if (candidates.empty()) throw std::logic_error("no candidates to pick from");
    return candidates[index(candidates.size())];
  }
};

std::optional<KSet> find_a_with(const SetFamily& f, Chooser& choose) {
  if (!choose.rng) return find_a(f);
  std::vector<Mask> cands;
  const Mask s_bits = f.params().s_mask();
  for (Mask m : f.masks())
    if ((m & s_bits) == 0) cands.push_back(m);
  if (cands.empty()) return std::nullopt;
  return KSet(choose.pick(cands));
}

std::optional<KSet> find_b_with(const SetFamily& f, Chooser& choose) {
  if (!choose.rng) return find_b(f);
  const Params& p = f.params();
  std::vector<Mask> cands;
  for_each_ksubset(p.n, p.k, [&](Mask m) {
    if ((m & p.s_mask()) != 0 && !f.contains(m)) cands.push_back(m);
    return true;
  });
  if (cands.empty()) return std::nullopt;
  return KSet(choose.pick(cands));
}

}  // namespace

std::optional<KSet> find_a(const SetFamily& f) {
  const Mask s_bits = f.params().s_mask();
  for (Mask m : f.masks())
    if ((m & s_bits) == 0) return KSet(m);
  return std::nullopt;
}

std::optional<KSet> find_b(const SetFamily& f) {
  const Params& p = f.params();
  const Mask s_bits = p.s_mask();
  std::optional<KSet> out;
  for_each_ksubset(p.n, p.k, [&](Mask m) {
    if ((m & s_bits) != 0 && !f.contains(m)) {
      out = KSet(m);
      return false;
    }
    return true;
  });
  return out;
}

namespace {

PairSelection select_pair_with(const SetFamily& f, KSet a, KSet b, Chooser& choose) {
  const Params& p = f.params();
  const Mask s_bits = p.s_mask();
  if (!f.contains(a.mask())) throw InputError("A must belong to the family");
  if (f.contains(b.mask())) throw InputError("B must not belong to the family");
  if ((a.mask() & s_bits) != 0) throw InputError("A must be disjoint from S");
  if ((b.mask() & s_bits) == 0) throw InputError("B must meet S");
  if (b.size() != p.k) throw InputError("B must be k-uniform");
  if ((b.mask() & ~p.ground_mask()) != 0) throw InputError("B exceeds the ground set");

  PairSelection sel;
  sel.a = a.mask();
  sel.b = b.mask();
  sel.x = a.mask() & b.mask();
  sel.a_prime = elements_of(a.mask() & ~sel.x);
  const Mask b_rest = b.mask() & ~sel.x;
  sel.b1 = choose.pick(elements_of(b_rest & s_bits));  // some S element of B'
  sel.b_prime.push_back(sel.b1);
  for (Element e : elements_of(b_rest & ~bit_of(sel.b1))) sel.b_prime.push_back(e);
  sel.r = static_cast<unsigned>(sel.a_prime.size());
  if (sel.r == 0 || sel.a_prime.size() != sel.b_prime.size())
    throw ClaimViolation("pair-selection-shape",
                         {{"family", json_of(f)}, {"a", elements_of(sel.a)},
                          {"b", elements_of(sel.b)}});
  return sel;
}

}  // namespace

PairSelection select_pair(const SetFamily& f, KSet a, KSet b) {
  Chooser least(std::nullopt);
  return select_pair_with(f, a, b, least);
}

namespace {

ChainResult build_chain_with(const SetFamily& f, const PairSelection& pair, Chooser& choose) {
  ChainResult chain;
  chain.a_seq.push_back(pair.a);
  std::vector<Element> is, js;

  auto evidence = [&](const char* note) {
    return nlohmann::json{{"family", json_of(f)}, {"pair", json_of(pair)}, {"note", note}};
  };

  // Stage 1: i is pinned to b1, j scans A' for an escape.
  bool stopped = false;
  {
    std::vector<Element> escapes;
    for (Element j : pair.a_prime) {
      const Mask tgt = (pair.a & ~bit_of(j)) | bit_of(pair.b1);
      if (!f.contains(tgt)) escapes.push_back(j);
    }
    const Element j1 = escapes.empty() ? choose.pick(pair.a_prime) : choose.pick(escapes);
    const Mask b1set = (pair.a & ~bit_of(j1)) | bit_of(pair.b1);
    is.push_back(pair.b1);
    js.push_back(j1);
    chain.b_seq.push_back(b1set);
    stopped = !escapes.empty();
    if (!stopped && !f.contains(b1set))
      throw ClaimViolation("chain-stage1-inconsistent", evidence("no-escape target missing"));
  }

  unsigned t = 1;
  while (!stopped) {
    if (t >= pair.r)
      throw ClaimViolation("chain-exceeds-r", evidence("loop ran past stage r"));
    ++t;
    const Mask at = chain.b_seq.back();  // A_t = B_{t-1}, a family member
    chain.a_seq.push_back(at);

    std::vector<Element> avail_j, avail_i;
    for (Element e : pair.a_prime)
      if (std::find(js.begin(), js.end(), e) == js.end()) avail_j.push_back(e);
    for (Element e : pair.b_prime)
      if (std::find(is.begin(), is.end(), e) == is.end()) avail_i.push_back(e);

    std::vector<std::pair<Element, Element>> escapes;
    for (Element j : avail_j) {
      for (Element i : avail_i) {
        if (!mask_contains(at, j) || mask_contains(at, i))
          throw ClaimViolation("chain-candidate-shape", evidence("A_t lost j or gained i"));
        const Mask tgt = (at & ~bit_of(j)) | bit_of(i);
        if (!f.contains(tgt)) escapes.emplace_back(j, i);
      }
    }

    const auto [j, i] =
        escapes.empty()
            ? std::pair{choose.pick(avail_j), choose.pick(avail_i)}
            : choose.pick(escapes);
    const Mask bt = (at & ~bit_of(j)) | bit_of(i);
    is.push_back(i);
    js.push_back(j);
    chain.b_seq.push_back(bt);
    stopped = !escapes.empty();
    if (!stopped && t == pair.r)
      throw ClaimViolation("chain-must-stop-at-r", evidence("B_r should be outside f"));
  }

  chain.t = t;
  std::vector<ShiftStep> steps;
  for (unsigned p = 0; p < t; ++p) steps.emplace_back(is[p], js[p]);
  chain.seq = ShiftSequence(std::move(steps));

  if (f.contains(chain.b_seq.back()))
    throw ClaimViolation("chain-final-in-family", evidence("B_t belongs to f"));
  for (unsigned p = 0; p + 1 < t; ++p)
    if (!f.contains(chain.b_seq[p]))
      throw ClaimViolation("chain-middle-missing", evidence("B_p (p < t) must be in f"));
  return chain;
}

}  // namespace

ChainResult build_chain(const SetFamily& f, const PairSelection& pair) {
  Chooser least(std::nullopt);
  return build_chain_with(f, pair, least);
}

std::pair<SetFamily, IterationTrace> apply_chain_checked(const SetFamily& f,
                                                         const PairSelection& pair,
                                                         const ChainResult& chain,
                                                         const AlgoOptions& opt) {
  const Params& p = f.params();
  const unsigned t = chain.t;
  if (t == 0 || chain.a_seq.size() != t || chain.b_seq.size() != t ||
      chain.seq.length() != t)
    throw InputError("malformed chain");

  IterationTrace tr;
  tr.pair = pair;
  tr.chain = chain;
  tr.b1 = pair.b1;
  tr.phi_before = potential(f);
  if (opt.paranoid) tr.nu_before = matching_number(f);

  const std::vector<Element> s_elems = elements_of(p.s_mask() & p.ground_mask());
  for (Element e : s_elems)
    tr.s_counts.push_back({e, count_containing(f, e), 0});

  const ShiftApplication app = apply_shift_sequence(f, chain.seq);
  // app.intermediates[idx] is F_{t-idx}; position p's family is index t-p.
  const auto& mids = app.intermediates;
  tr.intermediate_trivial = app.trivial;

  auto& as = tr.assertions;

  const std::uint64_t b1_at_t = count_containing(mids[0], pair.b1);
  for (unsigned idx = 1; idx + 1 <= t; ++idx) {  // F_{t-1} .. F_1
    if (count_containing(mids[idx], pair.b1) != b1_at_t)
      as.b1_count_constant_before_final = false;
  }
  const std::uint64_t b1_f1 = count_containing(mids[t - 1], pair.b1);  // F_1
  const std::uint64_t b1_f0 = count_containing(mids[t], pair.b1);
  if (b1_f0 < b1_f1) as.final_shift_nondecreasing = false;

  for (unsigned pos = 1; pos <= t; ++pos) {
    const SetFamily& fp = mids[t - pos];
    if (!fp.contains(chain.a_seq[pos - 1])) as.chain_sets_survive = false;
    if (fp.contains(chain.b_seq[pos - 1])) as.chain_targets_absent = false;
  }

  tr.phi_after = potential(app.result);
  if (!(tr.phi_after > tr.phi_before)) as.phi_strictly_increases = false;
  if (app.result.size() != f.size()) as.family_size_preserved = false;

  for (auto& row : tr.s_counts) {
    row.after = count_containing(app.result, row.element);
    if (row.after < row.before) as.s_counts_nondecreasing = false;
  }
  const std::uint64_t b1_before = count_containing(f, pair.b1);
  if (!(b1_f0 > b1_before)) as.b1_count_strictly_increases = false;

  for (std::size_t idx = 0; idx + 1 < app.trivial.size(); ++idx)
    if (app.trivial[idx] && !app.trivial[idx + 1]) as.triviality_monotone = false;

  if (opt.paranoid) {
    tr.nu_after = matching_number(app.result);
    if (*tr.nu_after > *tr.nu_before)
      throw ClaimViolation("matching-number-increased",
                           {{"family", json_of(f)}, {"trace", json_of(tr)}});
  }

  if (!as.all()) {
    const char* which =
        !as.chain_sets_survive            ? "progress-chain-set-shifted-early"
        : !as.chain_targets_absent        ? "progress-chain-target-present"
        : !as.b1_count_constant_before_final ? "progress-b1-count-drifted"
        : !as.b1_count_strictly_increases ? "progress-b1-count-not-strict"
        : !as.phi_strictly_increases      ? "progress-potential-not-strict"
        : !as.family_size_preserved       ? "progress-size-changed"
        : !as.s_counts_nondecreasing      ? "progress-s-count-dropped"
        : !as.final_shift_nondecreasing   ? "progress-final-shift-decreased"
                                          : "progress-triviality-not-monotone";
    throw ClaimViolation(which, {{"family", json_of(f)}, {"trace", json_of(tr)}});
  }

  return {app.result, std::move(tr)};
}

namespace {

std::pair<SetFamily, IterationTrace> iterate_once_with(const SetFamily& f,
                                                       const AlgoOptions& opt,
                                                       Chooser& choose) {
  const auto a = find_a_with(f, choose);
  if (!a) throw InputError("every member already meets S; nothing to iterate");
  const auto b = find_b_with(f, choose);
  if (!b) throw InputError("no S-meeting set is missing; contradiction phase applies");
  const PairSelection pair = select_pair_with(f, *a, *b, choose);
  const ChainResult chain = build_chain_with(f, pair, choose);
  return apply_chain_checked(f, pair, chain, opt);
}

}  // namespace

std::pair<SetFamily, IterationTrace> iterate_once(const SetFamily& f, const AlgoOptions& opt) {
  Chooser choose(opt.choice_seed);
  return iterate_once_with(f, opt, choose);
}

MatchingCertificate contradiction_certificate(const SetFamily& f, KSet a) {
  const Params& p = f.params();
  if (!p.in_theorem_range()) throw std::invalid_argument("ground set smaller than s*k");
  if (!f.contains(a.mask())) throw InputError("A must belong to the family");
  if ((a.mask() & p.s_mask()) != 0) throw InputError("A must be disjoint from S");
  {
    bool complete = true;
    Mask missing = 0;
    for_each_ksubset(p.n, p.k, [&](Mask m) {
      if ((m & p.s_mask()) != 0 && !f.contains(m)) {
        complete = false;
        missing = m;
        return false;
      }
      return true;
    });
    if (!complete)
      throw InputError("family does not hold every S-meeting set",
                       {{"missing", elements_of(missing)}});
  }

  const unsigned need = (p.s - 1) * p.k;
  Mask x = p.s_mask();  // S itself, disjoint from a by the check above
  for (Element e = 1; e <= p.n && std::popcount(x) < static_cast<int>(need); ++e) {
    if (!a.contains(e) && !mask_contains(x, e)) x |= bit_of(e);
  }
  if (std::popcount(x) != static_cast<int>(need))
    throw std::invalid_argument("not enough elements outside A");

  std::vector<Mask> cert{a.mask()};
  const std::vector<Element> fillers = elements_of(x & ~p.s_mask());
  std::size_t next = 0;
  for (Element i = 1; i + 1 <= p.s; ++i) {
    Mask bi = bit_of(i);
    for (unsigned c = 1; c < p.k; ++c) bi |= bit_of(fillers[next++]);
    if (!f.contains(bi))
      throw ClaimViolation("contradiction-member-missing",
                           {{"family", json_of(f)}, {"b_i", elements_of(bi)}});
    cert.push_back(bi);
  }
  return MatchingCertificate(f, std::move(cert));
}

Outcome run(const SetFamily& f0, const AlgoOptions& opt) {
  const Params orig = f0.params();
  if (!orig.in_theorem_range()) throw InputError("run requires n >= s*k");
  if (auto cert = find_s_matching(f0))
    throw InputError("family owns an s-matching", {{"certificate", json_of(*cert)}});

  Outcome out{OutcomeKind::SubsetOfGStar, f0, orig.n, {}, {}, std::nullopt, {}, orig,
              emc_bound(orig)};
  SetFamily F = f0;
  Chooser choose(opt.choice_seed);
  const std::uint64_t cap = binomial(orig.n, orig.k) + 1;

  for (;;) {
    if (is_trivial(F)) {
      CompactionResult c = compact_ground(F);
      F = c.family;
      out.compactions.push_back({out.iterations.size(), std::move(c)});
    }
    out.phi_history.push_back(potential(F));

    if (F.params().n <= orig.s * orig.k - 1) {
      out.kind = OutcomeKind::SubsetOfGStar;
      const std::uint64_t lim = binomial(static_cast<std::uint64_t>(orig.s) * orig.k - 1, orig.k);
      if (F.size() > lim)
        throw ClaimViolation("clique-bound-exceeded",
                             {{"family", json_of(F)}, {"limit", lim}});
      break;
    }
    if (potential(F) == F.size()) {
      out.kind = OutcomeKind::SubsetOfFStar;
      const Params& cur = F.params();
      const std::uint64_t lim_cur = binomial(cur.n, cur.k) - binomial(cur.n - cur.s + 1, cur.k);
      if (F.size() > lim_cur || F.size() > out.bound)
        throw ClaimViolation("star-bound-exceeded",
                             {{"family", json_of(F)}, {"limit", lim_cur}});
      break;
    }

    // existence checks; the iteration draws its own (possibly randomized)
    // pair, so these stay on the least-element rule
    const auto a = find_a(F);  // exists: some member misses S
    const auto b = find_b(F);
    if (!b) {
      out.kind = OutcomeKind::ContradictionMatching;
      out.certificate = contradiction_certificate(F, *a);
      break;
    }

    if (out.iterations.size() >= cap)
      throw ClaimViolation("iteration-cap-exceeded",
                           {{"cap", cap}, {"family", json_of(F)}});
    auto [fn, tr] = iterate_once_with(F, opt, choose);
    F = std::move(fn);
    out.iterations.push_back(std::move(tr));
  }

  out.final_family = F;
  out.final_n = F.params().n;
  if (out.kind != OutcomeKind::ContradictionMatching) {
    if (F.size() > out.bound)
      throw ClaimViolation("terminal-bound-exceeded",
                           {{"family", json_of(F)}, {"bound", out.bound}});
    if (has_s_matching(F))
      throw ClaimViolation("terminal-matching-grew", {{"family", json_of(F)}});
  }
  return out;
}

}  // namespace emc
