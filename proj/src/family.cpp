#include "emc/family.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "emc/binomial.hpp"
#include "emc/claim.hpp"
#include "emc/kernels.hpp"

namespace emc {

Params::Params(unsigned n_, unsigned k_, unsigned s_) : n(n_), k(k_), s(s_) {
  if (n > kMaxGround) throw std::invalid_argument("ground set larger than 64");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (s < 1) throw std::invalid_argument("s must be >= 1");
}

SetFamily::SetFamily(Params p, std::vector<Mask> sets) : params_(p), masks_(std::move(sets)) {
  for (Mask m : masks_) {
    if ((m & ~params_.ground_mask()) != 0)
      throw std::invalid_argument("set contains an element beyond n");
    if (std::popcount(m) != static_cast<int>(params_.k))
      throw std::invalid_argument("set is not k-uniform");
  }
  std::sort(masks_.begin(), masks_.end());
  if (std::adjacent_find(masks_.begin(), masks_.end()) != masks_.end())
    throw std::invalid_argument("duplicate set in family");
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(masks_.begin(), masks_.end(), m);
}

SetFamily SetFamily::read_text(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(lineno) + ": " + what);
  };

  unsigned n = 0, k = 0, s = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream hs(line);
    if (!(hs >> n >> k >> s)) fail("expected header 'n k s'");
    break;
  }
  if (lineno == 0) throw InputError("empty family file");

  Params p;
  try {
    p = Params(n, k, s);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  std::vector<Mask> masks;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<Element> elems;
    Element e;
    while (ls >> e) elems.push_back(e);
    if (!ls.eof()) fail("malformed element");
    if (elems.size() != p.k) fail("expected " + std::to_string(p.k) + " elements");
    if (!std::is_sorted(elems.begin(), elems.end(), std::less_equal<>()))
      fail("elements must be strictly ascending");
    Mask m = 0;
    for (Element x : elems) {
      if (x < 1 || x > p.n) fail("element out of range 1..n");
      m |= bit_of(x);
    }
    if (std::find(masks.begin(), masks.end(), m) != masks.end()) fail("duplicate set");
    masks.push_back(m);
  }
  return SetFamily(p, std::move(masks));
}

void SetFamily::write_text(std::ostream& out) const {
  out << params_.n << ' ' << params_.k << ' ' << params_.s << '\n';
  for (Mask m : masks_) {
    bool first = true;
    for (Element e : elements_of(m)) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

std::uint64_t emc_bound(const Params& p) {
  if (!p.in_theorem_range()) throw std::invalid_argument("emc_bound requires n >= s*k");
  const std::uint64_t clique = binomial(static_cast<std::uint64_t>(p.s) * p.k - 1, p.k);
  const std::uint64_t star = binomial(p.n, p.k) - binomial(p.n - p.s + 1, p.k);
  return std::max(clique, star);
}

SetFamily make_f_star(const Params& p) {
  if (!p.in_theorem_range()) throw std::invalid_argument("make_f_star requires n >= s*k");
  const Mask s_bits = p.s_mask();
  std::vector<Mask> out;
  for_each_ksubset(p.n, p.k, [&](Mask m) {
    if ((m & s_bits) != 0) out.push_back(m);
    return true;
  });
  return SetFamily(p, std::move(out));
}

SetFamily make_g_star(const Params& p) {
  const unsigned ground = p.s * p.k - 1;
  if (ground > p.n) throw std::invalid_argument("make_g_star requires sk-1 <= n");
  std::vector<Mask> out;
  for_each_ksubset(ground, p.k, [&](Mask m) {
    out.push_back(m);
    return true;
  });
  return SetFamily(p, std::move(out));
}

std::vector<Element> uncovered_elements(const SetFamily& f) {
  const Mask covered = kern::or_reduce(f.masks());
  return elements_of(f.params().ground_mask() & ~covered);
}

bool is_trivial(const SetFamily& f) {
  return kern::or_reduce(f.masks()) != f.params().ground_mask();
}

CompactionResult compact_ground(const SetFamily& f) {
  const Params& p = f.params();
  const Mask covered = kern::or_reduce(f.masks()) & p.ground_mask();
  const std::vector<Element> removed = elements_of(p.ground_mask() & ~covered);
  const std::vector<Element> surviving = elements_of(covered);
  const unsigned new_n = static_cast<unsigned>(surviving.size());

  if (removed.empty()) {
    std::vector<std::pair<Element, Element>> ident;
    ident.reserve(surviving.size());
    for (Element e : surviving) ident.emplace_back(e, e);
    return CompactionResult{f, {}, p.n, std::move(ident), false, 0};
  }

  // S slots first: surviving S elements in ascending order, then the
  // smallest surviving non-S elements; the rest follows order-preservingly.
  std::vector<Element> surv_s, surv_rest;
  for (Element e : surviving) (e <= p.s - 1 ? surv_s : surv_rest).push_back(e);

  std::vector<std::pair<Element, Element>> map;
  map.reserve(surviving.size());
  Element next_slot = 1;
  for (Element e : surv_s) map.emplace_back(e, next_slot++);
  std::size_t rest_i = 0;
  while (next_slot <= p.s - 1 && p.s >= 2 && rest_i < surv_rest.size())
    map.emplace_back(surv_rest[rest_i++], next_slot++);
  const unsigned slots_unfilled = (p.s >= 1 ? (p.s - 1) : 0) - (next_slot - 1);
  Element next_label = next_slot;
  for (; rest_i < surv_rest.size(); ++rest_i) map.emplace_back(surv_rest[rest_i], next_label++);

  Element lookup[kMaxGround + 1] = {};
  for (auto [o, nn] : map) lookup[o] = nn;

  bool s_changed = false;
  for (Element e : removed)
    if (e <= p.s - 1 && p.s >= 2) s_changed = true;
  for (auto [o, nn] : map)
    if (nn <= p.s - 1 && p.s >= 2 && o != nn) s_changed = true;

  std::vector<Mask> remapped;
  remapped.reserve(f.size());
  for (Mask m : f.masks()) {
    Mask out = 0;
    for (Element e : elements_of(m)) out |= bit_of(lookup[e]);
    remapped.push_back(out);
  }
  std::sort(map.begin(), map.end());

  SetFamily packed(Params(new_n, p.k, p.s), std::move(remapped));
  if (packed.size() != f.size())
    throw ClaimViolation("compaction-cardinality",
                         {{"before", f.size()}, {"after", packed.size()}});
  return CompactionResult{std::move(packed), removed, new_n, std::move(map),
                          s_changed, slots_unfilled};
}

std::uint64_t potential(const SetFamily& f) {
  return kern::count_intersecting(f.masks(), f.params().s_mask());
}

SetFamily subfamily_containing(const SetFamily& f, Element x) {
  if (x < 1 || x > f.params().n) throw std::invalid_argument("element out of range 1..n");
  std::vector<Mask> out;
  for (Mask m : f.masks())
    if (mask_contains(m, x)) out.push_back(m);
  return SetFamily(f.params(), std::move(out));
}

std::uint64_t count_containing(const SetFamily& f, Element x) {
  if (x < 1 || x > f.params().n) throw std::invalid_argument("element out of range 1..n");
  return kern::count_intersecting(f.masks(), bit_of(x));
}

}  // namespace emc
