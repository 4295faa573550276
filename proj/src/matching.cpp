#include "emc/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "emc/claim.hpp"
#include "emc/json_io.hpp"
#include "emc/kernels.hpp"
#include "emc/shifting.hpp"

namespace emc {

namespace {

// One reusable search frame: cand_stack[d] holds the indices (ascending)
// of sets compatible with the current depth-d partial matching.
struct Search {
  std::span<const Mask> sets;
  std::vector<std::vector<std::uint32_t>> cand_stack;
  std::vector<std::uint32_t> pick, best_pick;
  std::size_t best = 0;
  std::size_t target = 0;  // 0 = full maximization, else stop at this size
  bool found_target = false;

  explicit Search(std::span<const Mask> s, std::size_t max_depth) : sets(s) {
    cand_stack.resize(max_depth + 2);
    for (auto& v : cand_stack) v.resize(sets.size());
    pick.reserve(max_depth + 1);
  }

  void dfs(std::size_t depth, std::size_t cand_len) {
    if (depth > best) {
      best = depth;
      best_pick = pick;
      if (target != 0 && best >= target) {
        found_target = true;
        return;
      }
    }
    const auto& cand = cand_stack[depth];
    for (std::size_t i = 0; i < cand_len; ++i) {
      if (target == 0) {
        if (depth + (cand_len - i) <= best) break;
      } else {
        if (found_target) return;
        if (depth + (cand_len - i) < target) break;
      }
      const std::uint32_t c = cand[i];
      const std::size_t next_len = kern::filter_disjoint_indexed(
          sets.data(), std::span(cand.data() + i + 1, cand_len - i - 1), sets[c],
          cand_stack[depth + 1].data());
      pick.push_back(c);
      dfs(depth + 1, next_len);
      pick.pop_back();
      if (found_target) return;
    }
  }

  void run_from_all() {
    auto& root = cand_stack[0];
    for (std::size_t i = 0; i < sets.size(); ++i) root[i] = static_cast<std::uint32_t>(i);
    dfs(0, sets.size());
  }
};

std::size_t max_depth_for(std::span<const Mask> sets) {
  // nu can never exceed the number of sets; 64 bits of ground also cap it.
  return std::min<std::size_t>(sets.size(), kMaxGround);
}

}  // namespace

MatchingCertificate::MatchingCertificate(const SetFamily& certified, std::vector<Mask> sets)
    : masks_(std::move(sets)) {
  std::sort(masks_.begin(), masks_.end());
  Mask used = 0;
  for (Mask m : masks_) {
    if ((m & used) != 0) throw InputError("certificate members are not pairwise disjoint");
    used |= m;
    if (!certified.contains(m))
      throw InputError("certificate member does not belong to the family");
  }
}

std::uint64_t matching_number(std::span<const Mask> sets) {
  if (sets.empty()) return 0;
  Search s(sets, max_depth_for(sets));
  s.run_from_all();
  return s.best;
}

std::uint64_t matching_number(const SetFamily& f) { return matching_number(f.masks()); }

MatchingCertificate max_matching(const SetFamily& f) {
  Search s(f.masks(), max_depth_for(f.masks()));
  s.run_from_all();
  std::vector<Mask> out;
  out.reserve(s.best_pick.size());
  for (std::uint32_t i : s.best_pick) out.push_back(f.masks()[i]);
  return MatchingCertificate(f, std::move(out));
}

std::optional<MatchingCertificate> find_s_matching(const SetFamily& f) {
  const unsigned s = f.params().s;
  if (s == 0) return std::nullopt;
  if (f.size() < s) return std::nullopt;
  Search search(f.masks(), std::min<std::size_t>(s, kMaxGround));
  search.target = s;
  search.run_from_all();
  if (!search.found_target) return std::nullopt;
  std::vector<Mask> out;
  for (std::uint32_t i : search.best_pick) out.push_back(f.masks()[i]);
  return MatchingCertificate(f, std::move(out));
}

bool has_s_matching(const SetFamily& f) { return find_s_matching(f).has_value(); }

std::uint64_t naive_matching_number(std::span<const Mask> sets) {
  const std::size_t m = sets.size();
  if (m == 0) return 0;
  if (m > 22) throw std::invalid_argument("naive matcher limited to 22 sets");
  // valid[S] and union_of[S] over all 2^m subsets, extending by the lowest
  // member; entirely independent of the branch-and-bound code path.
  const std::size_t total = std::size_t{1} << m;
  std::vector<Mask> union_of(total, 0);
  std::vector<unsigned char> valid(total, 0);
  valid[0] = 1;
  std::uint64_t best = 0;
  for (std::size_t sub = 1; sub < total; ++sub) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(sub));
    const std::size_t rest = sub & (sub - 1);
    if (valid[rest] && (sets[low] & union_of[rest]) == 0) {
      valid[sub] = 1;
      union_of[sub] = union_of[rest] | sets[low];
      best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::popcount(sub)));
    }
  }
  return best;
}

bool would_create_s_matching(std::span<const Mask> family, Mask candidate, unsigned s) {
  if (s == 0) return true;
  if (s == 1) return true;  // the candidate alone is a 1-matching
  std::vector<Mask> compatible;
  compatible.reserve(family.size());
  for (Mask m : family)
    if ((m & candidate) == 0) compatible.push_back(m);
  if (compatible.size() < s - 1) return false;
  Search search(compatible, s);
  search.target = s - 1;
  search.run_from_all();
  return search.found_target;
}

MatchingCertificate pullback_matching(const SetFamily& f, Element i, Element j,
                                      const MatchingCertificate& m_prime) {
  const ShiftStep step(i, j);
  if (i > f.params().n || j > f.params().n)
    throw std::invalid_argument("shift elements out of range 1..n");
  const SetFamily shifted = shift_family(f, step);

  Mask used = 0;
  for (Mask m : m_prime.masks()) {
    if ((m & used) != 0) throw InputError("m_prime is not pairwise disjoint");
    used |= m;
    if (!shifted.contains(m)) throw InputError("m_prime member not in the shifted family");
  }

  // The altered member, if any: contains i, is absent from f, and its
  // remove-i-add-j preimage is present. Disjointness leaves room for at
  // most one, which is asserted rather than assumed.
  std::vector<Mask> altered;
  for (Mask m : m_prime.masks()) {
    if (!mask_contains(m, i) || mask_contains(m, j)) continue;
    if (f.contains(m)) continue;
    const Mask pre = (m & ~bit_of(i)) | bit_of(j);
    if (f.contains(pre)) altered.push_back(m);
  }
  if (altered.size() > 1)
    throw ClaimViolation("pullback-multiple-altered",
                         {{"family", json_of(f)}, {"i", i}, {"j", j},
                          {"m_prime", json_of(m_prime)}});

  if (altered.empty()) {
    // No member was touched by the shift; m_prime must already live in f.
    for (Mask m : m_prime.masks()) {
      if (!f.contains(m))
        throw ClaimViolation("pullback-unaltered-missing",
                             {{"family", json_of(f)}, {"i", i}, {"j", j},
                              {"m_prime", json_of(m_prime)},
                              {"member", elements_of(m)}});
    }
    return MatchingCertificate(f, {m_prime.masks().begin(), m_prime.masks().end()});
  }

  const Mask b1 = altered.front();
  const Mask a1 = (b1 & ~bit_of(i)) | bit_of(j);
  std::vector<Mask> rest;
  for (Mask m : m_prime.masks())
    if (m != b1) rest.push_back(m);

  // A1 can only collide with the rest in {j}, and with at most one member.
  std::vector<Mask> colliding;
  for (Mask m : rest) {
    const Mask inter = m & a1;
    if (inter == 0) continue;
    if (inter != bit_of(j))
      throw ClaimViolation("pullback-collision-not-j",
                           {{"family", json_of(f)}, {"i", i}, {"j", j},
                            {"m_prime", json_of(m_prime)},
                            {"member", elements_of(m)}});
    colliding.push_back(m);
  }
  if (colliding.size() > 1)
    throw ClaimViolation("pullback-multiple-collisions",
                         {{"family", json_of(f)}, {"i", i}, {"j", j},
                          {"m_prime", json_of(m_prime)}});

  std::vector<Mask> result{a1};
  if (colliding.empty()) {
    result.insert(result.end(), rest.begin(), rest.end());
  } else {
    const Mask b2 = colliding.front();
    const Mask c2 = (b2 & ~bit_of(j)) | bit_of(i);
    if (!f.contains(c2))
      throw ClaimViolation("pullback-replacement-missing",
                           {{"family", json_of(f)}, {"i", i}, {"j", j},
                            {"m_prime", json_of(m_prime)},
                            {"b2", elements_of(b2)}, {"c2", elements_of(c2)}});
    result.push_back(c2);
    for (Mask m : rest)
      if (m != b2) result.push_back(m);
  }

  MatchingCertificate cert(f, std::move(result));
  if (cert.size() != m_prime.size())
    throw ClaimViolation("pullback-size-mismatch",
                         {{"family", json_of(f)}, {"i", i}, {"j", j},
                          {"m_prime", json_of(m_prime)}, {"result", json_of(cert)}});
  return cert;
}

}  // namespace emc
