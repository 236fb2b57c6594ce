#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "evlogic/error.hpp"
#include "evlogic/model.hpp"
#include "evlogic/scenario.hpp"

namespace evlogic {

const std::vector<Relation>& preorders(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Relation>> cache;
  if (n == 0 || n > 5) throw Error("preorders are only tabulated for 1..5 worlds");
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<World, World>> off;
  for (World a = 0; a < n; ++a)
    for (World b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    Relation r = Relation::identity(n);
    for (std::size_t i = 0; i < off.size(); ++i)
      if ((mask >> i) & 1U) r.add(off[i].first, off[i].second);
    if (r.is_transitive()) out.push_back(std::move(r));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

// Upsets of a preorder, as subsets of the n worlds (including ∅).
std::vector<WorldSet> upsets_of(const Relation& order) {
  const std::size_t n = order.size();
  std::vector<WorldSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const WorldSet s = WorldSet::from_mask(mask);
    bool closed = true;
    s.for_each([&](World w) {
      if (!order.successors(w).subset_of(s)) closed = false;
    });
    if (closed) out.push_back(s);
  }
  return out;
}

void check_bounds(const ModelBounds& b) {
  if (b.max_worlds == 0 || b.max_evidence_sets_per_world == 0 || b.min_worlds == 0)
    throw Error("model bounds must be at least 1");
  if (b.max_worlds > 6) throw Error("exhaustive enumeration is limited to 6 worlds");
}

// Calls fn for every assignment of the atoms to subsets of n worlds.
bool for_each_valuation(EvidenceModel& m, const std::vector<std::string>& atoms, std::size_t i,
                        const std::function<bool()>& fn) {
  if (i == atoms.size()) return fn();
  const std::uint64_t limit = std::uint64_t{1} << m.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    m.valuation[atoms[i]] = WorldSet::from_mask(mask);
    if (!for_each_valuation(m, atoms, i + 1, fn)) return false;
  }
  return true;
}

// Evidence frames on n worlds: a pool of distinct proper sets, each held by
// a nonempty set of worlds, E(w) = {W} ∪ {sets held by w}.
bool for_each_frame(std::size_t n, const ModelBounds& b, bool uniform_only,
                    const std::function<bool(const std::vector<Family>&)>& fn) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> proper;
  for (std::uint64_t s = 1; s < full; ++s) proper.push_back(s);
  const std::size_t per_world = b.max_evidence_sets_per_world - 1;
  const std::size_t max_pool = std::min(b.max_distinct_proper_sets, proper.size());
  std::vector<std::size_t> pool;
  std::vector<std::uint64_t> holders;
  std::vector<Family> evidence(n);

  auto emit = [&]() {
    for (World w = 0; w < n; ++w) {
      Family& fam = evidence[w];
      fam.clear();
      fam.push_back(WorldSet::from_mask(full));
      for (std::size_t i = 0; i < pool.size(); ++i)
        if ((holders[i] >> w) & 1U) fam.push_back(WorldSet::from_mask(proper[pool[i]]));
      normalize(fam);
    }
    return fn(evidence);
  };

  // Assign holders to pool members, then recurse.
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == pool.size()) return emit();
    const std::uint64_t first = uniform_only ? full : 1;
    for (std::uint64_t h = first; h <= full; ++h) {
      bool ok = true;
      for (World w = 0; w < n && ok; ++w) {
        if (!((h >> w) & 1U)) continue;
        std::size_t held = 1;
        for (std::size_t j = 0; j < i; ++j) held += (holders[j] >> w) & 1U;
        if (held > per_world) ok = false;
      }
      if (!ok) continue;
      holders[i] = h;
      if (!assign(i + 1)) return false;
    }
    return true;
  };

  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t size) -> bool {
    if (pool.size() == size) {
      holders.assign(pool.size(), 0);
      return assign(0);
    }
    for (std::size_t s = start; s < proper.size(); ++s) {
      pool.push_back(s);
      const bool go = choose(s + 1, size);
      pool.pop_back();
      if (!go) return false;
    }
    return true;
  };
  for (std::size_t size = 0; size <= max_pool; ++size)
    if (!choose(0, size)) return false;
  return true;
}

}  // namespace

std::uint64_t for_each_evidence_model(const ModelBounds& bounds, const std::function<bool(const EvidenceModel&)>& fn) {
  check_bounds(bounds);
  std::uint64_t count = 0;
  for (std::size_t n = bounds.min_worlds; n <= bounds.max_worlds; ++n) {
    EvidenceModel m(n);
    const bool go = for_each_frame(n, bounds, false, [&](const std::vector<Family>& ev) {
      m.evidence = ev;
      m.valuation.clear();
      return for_each_valuation(m, bounds.atoms, 0, [&] {
        ++count;
        return fn(m);
      });
    });
    if (!go) break;
  }
  return count;
}

std::uint64_t for_each_model(const ModelBounds& bounds, const std::function<bool(const GeneralModel&)>& fn) {
  check_bounds(bounds);
  const ModelClass cls = bounds.class_filter;
  const bool uniform_only = cls == ModelClass::Uniform || cls == ModelClass::Concise;
  std::uint64_t count = 0;
  for (std::size_t n = bounds.min_worlds; n <= bounds.max_worlds; ++n) {
    GeneralModel g;
    g.base = EvidenceModel(n);
    auto visit = [&]() {
      return for_each_valuation(g.base, bounds.atoms, 0, [&] {
        ++count;
        return fn(g);
      });
    };
    const bool go = for_each_frame(n, bounds, uniform_only, [&](const std::vector<Family>& ev) {
      g.base.evidence = ev;
      g.base.valuation.clear();
      if (cls == ModelClass::Intended) {
        g.belief = derived_belief(g.base);
        g.plausibility = derived_plausibility(g.base);
        return visit();
      }
      const Relation spec = derived_plausibility(g.base);
      for (const Relation& order : preorders(n)) {
        if (!order.subset_of(spec)) continue;
        g.plausibility = order;
        const std::vector<WorldSet> ups = upsets_of(order);
        const WorldSet maxw = maximal_worlds(order);
        if (uniform_only) {
          for (const WorldSet& row : ups) {
            if (!row.subset_of(maxw)) continue;
            if (cls == ModelClass::Concise && row != maxw) continue;
            Relation belief(n);
            for (World w = 0; w < n; ++w) belief.successors(w) = row;
            g.belief = belief;
            if (cls == ModelClass::Concise && !is_flat(g)) continue;
            if (!visit()) return false;
          }
          continue;
        }
        // Every row of B is an upset of ≼ (constraint 3).
        std::vector<std::size_t> choice(n, 0);
        Relation belief(n);
        while (true) {
          for (World w = 0; w < n; ++w) belief.successors(w) = ups[choice[w]];
          g.belief = belief;
          if (cls != ModelClass::Flat || is_flat(g))
            if (!visit()) return false;
          std::size_t k = 0;
          while (k < n && ++choice[k] == ups.size()) choice[k++] = 0;
          if (k == n) break;
        }
      }
      return true;
    });
    if (!go) break;
  }
  return count;
}

GeneralModel random_model(std::uint64_t seed, const ModelBounds& bounds) {
  if (bounds.max_worlds == 0 || bounds.max_evidence_sets_per_world == 0 || bounds.min_worlds == 0 ||
      bounds.min_worlds > bounds.max_worlds)
    throw Error("model bounds must be at least 1");
  if (bounds.max_worlds > 16) throw Error("random models are limited to 16 worlds");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t k) { return k == 0 ? 0 : rng() % k; };
  const ModelClass cls = bounds.class_filter;
  const bool uniform_only = cls == ModelClass::Uniform || cls == ModelClass::Concise;
  const std::size_t n = bounds.min_worlds + pick(bounds.max_worlds - bounds.min_worlds + 1);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  GeneralModel g;
  g.base = EvidenceModel(n);
  // Distinct proper sets, each held by a random nonempty set of worlds.
  const std::size_t proper_count = full - 1;
  std::size_t cap = std::min<std::size_t>(bounds.max_distinct_proper_sets, proper_count);
  if (uniform_only) cap = std::min(cap, bounds.max_evidence_sets_per_world - 1);
  const std::size_t k = pick(cap + 1);
  std::vector<std::uint64_t> pool;
  while (pool.size() < k) {
    const std::uint64_t s = 1 + pick(proper_count);
    if (std::find(pool.begin(), pool.end(), s) == pool.end()) pool.push_back(s);
  }
  std::vector<std::size_t> held(n, 1);
  for (World w = 0; w < n; ++w) g.base.evidence[w] = {WorldSet::from_mask(full)};
  for (auto s : pool) {
    const std::uint64_t h = uniform_only ? full : 1 + pick(full);
    for (World w = 0; w < n; ++w) {
      if (!((h >> w) & 1U) || held[w] >= bounds.max_evidence_sets_per_world) continue;
      g.base.evidence[w].push_back(WorldSet::from_mask(s));
      ++held[w];
    }
  }
  for (auto& fam : g.base.evidence) normalize(fam);
  for (const auto& atom : bounds.atoms) g.base.valuation[atom] = WorldSet::from_mask(pick(full + 1));

  const Relation spec = derived_plausibility(g.base);
  if (cls == ModelClass::Intended) {
    g.belief = derived_belief(g.base);
    g.plausibility = spec;
    return g;
  }
  std::vector<const Relation*> orders;
  if (n <= 5) {
    for (const Relation& r : preorders(n))
      if (r.subset_of(spec)) orders.push_back(&r);
  } else {
    orders.push_back(&spec);
  }
  auto random_order = [&]() { return *orders[pick(orders.size())]; };
  auto constant = [&](const WorldSet& row) {
    Relation b(n);
    for (World w = 0; w < n; ++w) b.successors(w) = row;
    return b;
  };

  switch (cls) {
    case ModelClass::All:
    case ModelClass::Flat: {
      Relation order = random_order();
      const auto ups = upsets_of(order);
      g.plausibility = order;
      for (int attempt = 0; attempt < 20; ++attempt) {
        Relation b(n);
        for (World w = 0; w < n; ++w) b.successors(w) = ups[pick(ups.size())];
        g.belief = b;
        if (cls == ModelClass::All || is_flat(g)) return g;
      }
      // B_E rows are ≼_E-upsets, hence ≼-upsets, and meet every evidence set.
      Relation b = derived_belief(g.base);
      for (World w = 0; w < n; ++w) b.successors(w) |= ups[pick(ups.size())];
      g.belief = b;
      return g;
    }
    case ModelClass::Uniform: {
      Relation order = random_order();
      const WorldSet maxw = maximal_worlds(order);
      std::vector<WorldSet> rows;
      for (const auto& u : upsets_of(order))
        if (u.subset_of(maxw)) rows.push_back(u);
      g.plausibility = order;
      g.belief = constant(rows[pick(rows.size())]);
      return g;
    }
    case ModelClass::Concise: {
      for (int attempt = 0; attempt < 20; ++attempt) {
        Relation order = random_order();
        g.plausibility = order;
        g.belief = constant(maximal_worlds(order));
        if (is_flat(g)) return g;
      }
      // With ≼_E the maximal worlds are exactly the derived beliefs.
      g.plausibility = spec;
      g.belief = constant(maximal_worlds(spec));
      return g;
    }
    case ModelClass::Intended:
      break;
  }
  return g;
}

}  // namespace evlogic
