#include "irack/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "irack/algebra.hpp"
#include "irack/errors.hpp"
#include "irack/parallel.hpp"
#include "irack/tuple.hpp"

namespace irack {

namespace {

using Perm = std::vector<Element>;

std::vector<Perm> all_permutations(std::size_t k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm inverse(const Perm& p) {
  Perm inv(p.size());
  for (Element i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

constexpr Element kUnset = ~Element{0};

// Row-by-row search state: rows [0, assigned) of rhd are fixed.
struct IrackSearch {
  std::size_t k;
  const std::vector<Perm>& perms;
  Perm plus;
  Perm minus;
  Grid rhd;
  std::vector<RawIrack> found;

  bool set(Element r) const { return rhd[r][0] != kUnset; }

  // Checks every axiom instance whose table lookups are all determined.
  bool consistent() const {
    for (Element a = 0; a < k; ++a) {
      if (!set(a)) continue;
      if (rhd[a][minus[a]] != plus[a]) return false;  // IR(2)
      for (Element b = 0; b < k; ++b) {
        if (rhd[a][minus[b]] != minus[rhd[a][b]]) return false;  // IR(6)
        if (set(minus[a])) {
          if (rhd[minus[a]][rhd[a][b]] != b) return false;  // IR(3)
          if (rhd[a][rhd[minus[a]][b]] != b) return false;  // IR(4)
        }
        if (!set(b) || !set(rhd[a][b])) continue;
        const Element ab = rhd[a][b];
        for (Element c = 0; c < k; ++c)
          if (rhd[a][rhd[b][c]] != rhd[ab][rhd[a][c]]) return false;  // IR(5)
      }
    }
    return true;
  }

  void search(Element row) {
    if (row == k) {
      found.push_back(RawIrack{Carrier::numbered(k), rhd, plus, minus});
      return;
    }
    for (const auto& p : perms) {
      rhd[row] = p;
      if (consistent()) search(row + 1);
    }
    rhd[row].assign(k, kUnset);
  }
};

struct RackSearch {
  std::size_t k;
  const std::vector<Perm>& perms;
  Grid rhd;
  std::vector<RawRack> found;

  bool set(Element r) const { return rhd[r][0] != kUnset; }

  bool consistent() const {
    for (Element a = 0; a < k; ++a) {
      if (!set(a)) continue;
      for (Element b = 0; b < k; ++b) {
        if (!set(b) || !set(rhd[a][b])) continue;
        const Element ab = rhd[a][b];
        for (Element c = 0; c < k; ++c)
          if (rhd[a][rhd[b][c]] != rhd[ab][rhd[a][c]]) return false;  // R(3)
      }
    }
    return true;
  }

  void search(Element row) {
    if (row == k) {
      // R(1)/R(2) force b◁a to be the preimage of b under a▷–.
      RawRack raw{Carrier::numbered(k), rhd, Grid(k, std::vector<Element>(k))};
      for (Element a = 0; a < k; ++a)
        for (Element b = 0; b < k; ++b) raw.lhd[rhd[a][b]][a] = b;
      if (check_rack_axioms(raw).all_passed()) found.push_back(std::move(raw));
      return;
    }
    for (const auto& p : perms) {
      rhd[row] = p;
      if (consistent()) search(row + 1);
    }
    rhd[row].assign(k, kUnset);
  }
};

void check_order(std::size_t k) {
  if (k > kMaxEnumerationOrder) {
    throw OutOfRange("enumeration supports orders up to " + std::to_string(kMaxEnumerationOrder) +
                     ", got " + std::to_string(k));
  }
}

Perm relabel_map(const Perm& sigma, const Perm& map) {
  Perm out(map.size());
  for (Element a = 0; a < map.size(); ++a) out[sigma[a]] = sigma[map[a]];
  return out;
}

std::vector<Element> relabel_grid(const Perm& sigma, std::size_t k,
                                  const std::function<Element(Element, Element)>& op) {
  std::vector<Element> out(k * k);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) out[sigma[a] * k + sigma[b]] = sigma[op(a, b)];
  return out;
}

Grid to_grid(const std::vector<Element>& flat, std::size_t k) {
  Grid g(k);
  for (std::size_t i = 0; i < k; ++i) g[i].assign(flat.begin() + i * k, flat.begin() + (i + 1) * k);
  return g;
}

}  // namespace

IrackTable canonical_form(const IrackTable& irack) {
  const std::size_t k = irack.size();
  std::vector<Element> best;
  for (const auto& sigma : all_permutations(k)) {
    std::vector<Element> key = relabel_map(sigma, irack.plus_map());
    const auto minus = relabel_map(sigma, irack.minus_map());
    const auto rhd = relabel_grid(sigma, k, [&](Element a, Element b) { return irack.rhd(a, b); });
    key.insert(key.end(), minus.begin(), minus.end());
    key.insert(key.end(), rhd.begin(), rhd.end());
    if (best.empty() || key < best) best = std::move(key);
  }
  RawIrack raw;
  raw.carrier = Carrier::numbered(k);
  raw.plus.assign(best.begin(), best.begin() + k);
  raw.minus.assign(best.begin() + k, best.begin() + 2 * k);
  raw.rhd = to_grid(std::vector<Element>(best.begin() + 2 * k, best.end()), k);
  return assume_valid(std::move(raw));
}

RackTable canonical_form(const RackTable& rack) {
  const std::size_t k = rack.size();
  std::vector<Element> best;
  for (const auto& sigma : all_permutations(k)) {
    auto key = relabel_grid(sigma, k, [&](Element a, Element b) { return rack.rhd(a, b); });
    const auto lhd = relabel_grid(sigma, k, [&](Element b, Element a) { return rack.lhd(b, a); });
    key.insert(key.end(), lhd.begin(), lhd.end());
    if (best.empty() || key < best) best = std::move(key);
  }
  RawRack raw;
  raw.carrier = Carrier::numbered(k);
  raw.rhd = to_grid(std::vector<Element>(best.begin(), best.begin() + k * k), k);
  raw.lhd = to_grid(std::vector<Element>(best.begin() + k * k, best.end()), k);
  return assume_valid(std::move(raw));
}

EnumerationResult enumerate_iracks(std::size_t k, bool dedup, unsigned threads) {
  check_order(k);
  const auto perms = all_permutations(k);
  auto branches = parallel_map(perms.size(), threads, [&](std::size_t i) {
    IrackSearch s{k, perms, perms[i], inverse(perms[i]), Grid(k, Perm(k, kUnset)), {}};
    s.search(0);
    return std::move(s.found);
  });

  EnumerationResult result;
  result.order = k;
  std::vector<IrackTable> all;
  for (auto& branch : branches)
    for (auto& raw : branch) all.push_back(assume_valid(std::move(raw)));
  result.raw_count = all.size();

  std::set<std::vector<Element>> seen;
  std::vector<IrackTable> canon;
  for (const auto& t : all) {
    IrackTable c = canonical_form(t);
    std::vector<Element> key = c.plus_map();
    key.insert(key.end(), c.minus_map().begin(), c.minus_map().end());
    for (Element a = 0; a < k; ++a)
      for (Element b = 0; b < k; ++b) key.push_back(c.rhd(a, b));
    if (seen.insert(std::move(key)).second) canon.push_back(std::move(c));
  }
  result.canonical_count = canon.size();
  result.iracks = dedup ? std::move(canon) : std::move(all);
  return result;
}

EnumerationResult enumerate_racks(std::size_t k, bool dedup, unsigned threads) {
  check_order(k);
  const auto perms = all_permutations(k);
  // Branch on the first row so workers share nothing.
  auto branches = parallel_map(k == 0 ? 1 : perms.size(), threads, [&](std::size_t i) {
    RackSearch s{k, perms, Grid(k, Perm(k, kUnset)), {}};
    if (k == 0) {
      s.search(0);
    } else {
      s.rhd[0] = perms[i];
      if (s.consistent()) s.search(1);
    }
    return std::move(s.found);
  });

  EnumerationResult result;
  result.order = k;
  std::vector<RackTable> all;
  for (auto& branch : branches)
    for (auto& raw : branch) all.push_back(assume_valid(std::move(raw)));
  result.raw_count = all.size();

  std::set<std::pair<Grid, Grid>> seen;
  std::vector<RackTable> canon;
  for (const auto& t : all) {
    RackTable c = canonical_form(t);
    auto raw = c.raw();
    if (seen.emplace(raw.rhd, raw.lhd).second) canon.push_back(std::move(c));
  }
  result.canonical_count = canon.size();
  result.racks = dedup ? std::move(canon) : std::move(all);
  return result;
}

SaturationResult saturate_to_tangled(const Relation& seed, const IrackTable& irack,
                                     std::size_t max_pairs) {
  const std::size_t k = irack.size();
  if (auto top = seed.max_element(); top && *top >= k) {
    throw OutOfRange("seed mentions an element outside the carrier");
  }
  std::set<Pair> closure(seed.pairs().begin(), seed.pairs().end());
  std::deque<Pair> work(seed.pairs().begin(), seed.pairs().end());
  while (!work.empty()) {
    const Pair p = std::move(work.front());
    work.pop_front();
    for (Element c = 0; c < k; ++c) {
      Pair image{diagonal(irack, c, p.first), diagonal(irack, c, p.second)};
      if (closure.insert(image).second) {
        if (closure.size() > max_pairs) {
          return SaturationFailure{"closure exceeds " + std::to_string(max_pairs) + " pairs", {}};
        }
        work.push_back(std::move(image));
      }
    }
  }
  for (const auto& [a, b] : closure) {
    for (Element c = 0; c < k; ++c) {
      if (act(irack, a, c) != act(irack, b, c)) {
        return SaturationFailure{"TR(2) fails: the two sides act differently", {a, b, c}};
      }
    }
  }
  Relation r(seed.src_arity(), seed.dst_arity(), std::vector<Pair>(closure.begin(), closure.end()));
  return TangledRelation::certify(std::move(r), irack);
}

}  // namespace irack
