#include "gring/ideals.hpp"

#include <set>
#include <string>

#include "gring/error.hpp"

namespace gring {

namespace {

void check_set(const FiniteRing& r, const ElementSet& s, const char* what) {
  if (s.universe() != r.order())
    throw Error(ErrorKind::domain_error,
                std::string(what) + " is over universe " + std::to_string(s.universe()) +
                    ", expected ring order " + std::to_string(r.order()));
}

// Bare product set {a*b}, no closure.
ElementSet product_set(const FiniteRing& r, const ElementSet& x, const ElementSet& y) {
  ElementSet out(r.order());
  const std::vector<Elem> ys = y.indices();
  x.for_each([&](Elem a) {
    const Elem* row = r.mul_row(a);
    for (Elem b : ys) out.set(row[b]);
  });
  return out;
}

ElementSet closure_under_mult(const FiniteRing& r, ElementSet t, bool left, bool right) {
  const std::size_t n = r.order();
  for (;;) {
    ElementSet ext = t;
    t.for_each([&](Elem a) {
      if (right) {
        const Elem* row = r.mul_row(a);
        for (std::size_t x = 0; x < n; ++x) ext.set(row[x]);
      }
      if (left) {
        for (std::size_t x = 0; x < n; ++x)
          ext.set(r.mul_row(static_cast<Elem>(x))[a]);
      }
    });
    if (ext == t) return t;
    t = additive_closure(r, ext);
  }
}

bool is_additive_subgroup_impl(const FiniteRing& r, const ElementSet& s) {
  if (!s.test(0)) return false;
  const std::vector<Elem> members = s.indices();
  for (Elem a : members) {
    if (!s.test(r.neg(a))) return false;
    const Elem* row = r.add_row(a);
    for (Elem b : members)
      if (!s.test(row[b])) return false;
  }
  return true;
}

bool absorbs_right(const FiniteRing& r, const ElementSet& s) {
  const std::size_t n = r.order();
  bool ok = true;
  s.for_each([&](Elem a) {
    if (!ok) return;
    const Elem* row = r.mul_row(a);
    for (std::size_t x = 0; x < n; ++x)
      if (!s.test(row[x])) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool absorbs_left(const FiniteRing& r, const ElementSet& s) {
  const std::size_t n = r.order();
  const std::vector<Elem> members = s.indices();
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* row = r.mul_row(static_cast<Elem>(x));
    for (Elem a : members)
      if (!s.test(row[a])) return false;
  }
  return true;
}

bool is_graded_impl(const GradedRing& gr, const ElementSet& s) {
  const std::size_t m = gr.group_order();
  bool ok = true;
  s.for_each([&](Elem x) {
    if (!ok) return;
    for (std::size_t g = 0; g < m; ++g)
      if (!s.test(gr.component_of(x, static_cast<Elem>(g)))) {
        ok = false;
        return;
      }
  });
  return ok;
}

using ClosureFn = ElementSet (*)(const GradedRing&, const ElementSet&);

std::vector<ElementSet> enumerate_by_extension(const GradedRing& gr, const Config& cfg,
                                               ClosureFn close, const ElementSet& extenders) {
  if (gr.order() > cfg.max_enum_order)
    throw Error(ErrorKind::cap_exceeded,
                "ring order " + std::to_string(gr.order()) +
                    " exceeds enumeration cap " + std::to_string(cfg.max_enum_order));

  const ElementSet start = close(gr, ElementSet(gr.order()));
  std::set<ElementSet> known{start};
  std::vector<ElementSet> work{start};
  const std::vector<Elem> ext = extenders.indices();
  while (!work.empty()) {
    const ElementSet current = std::move(work.back());
    work.pop_back();
    for (Elem h : ext) {
      if (current.test(h)) continue;
      ElementSet seed = current;
      seed.set(h);
      ElementSet next = close(gr, seed);
      if (known.insert(next).second) {
        if (known.size() > cfg.max_ideals)
          throw Error(ErrorKind::cap_exceeded,
                      "ideal enumeration frontier exceeds cap " +
                          std::to_string(cfg.max_ideals));
        work.push_back(std::move(next));
      }
    }
  }
  return std::vector<ElementSet>(known.begin(), known.end());
}

ElementSet whole_ring_extenders(const GradedRing& gr) { return ElementSet::full(gr.order()); }

ElementSet plain_right_closure(const GradedRing& gr, const ElementSet& seed) {
  return right_ideal_closure(gr.ring(), seed);
}

}  // namespace

ElementSet additive_closure(const FiniteRing& r, const ElementSet& seed) {
  check_set(r, seed, "seed");
  ElementSet out(r.order());
  out.set(0);
  std::vector<Elem> work{0};
  auto insert = [&](Elem e) {
    if (!out.test(e)) {
      out.set(e);
      work.push_back(e);
    }
  };
  seed.for_each(insert);
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Elem a = work[i];
    insert(r.neg(a));
    const Elem* row = r.add_row(a);
    for (std::size_t j = 0; j <= i; ++j) insert(row[work[j]]);
  }
  return out;
}

ElementSet right_ideal_closure(const FiniteRing& r, const ElementSet& seed) {
  check_set(r, seed, "seed");
  return closure_under_mult(r, additive_closure(r, seed), false, true);
}

ElementSet twosided_ideal_closure(const FiniteRing& r, const ElementSet& seed) {
  check_set(r, seed, "seed");
  return closure_under_mult(r, additive_closure(r, seed), true, true);
}

ElementSet principal_right(const FiniteRing& r, Elem a) {
  ElementSet seed(r.order());
  if (a >= r.order())
    throw Error(ErrorKind::domain_error, "element index out of range");
  seed.set(a);
  return right_ideal_closure(r, seed);
}

ElementSet principal_twosided(const FiniteRing& r, Elem a, Reading reading) {
  if (!r.has_unity())
    throw Error(ErrorKind::no_unity, "principal two-sided ideal requires a unital ring");
  if (a >= r.order())
    throw Error(ErrorKind::domain_error, "element index out of range");
  const std::size_t n = r.order();
  ElementSet gens(n);
  if (reading == Reading::xr_only) {
    const Elem* row = r.mul_row(a);
    for (std::size_t x = 0; x < n; ++x) gens.set(row[x]);
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      const Elem xa = r.mul_row(static_cast<Elem>(x))[a];
      const Elem* row = r.mul_row(xa);
      for (std::size_t y = 0; y < n; ++y) gens.set(row[y]);
    }
  }
  return additive_closure(r, gens);
}

ElementSet ideal_product(const FiniteRing& r, const ElementSet& x, const ElementSet& y) {
  check_set(r, x, "left factor");
  check_set(r, y, "right factor");
  return additive_closure(r, product_set(r, x, y));
}

ElementSet ideal_power(const FiniteRing& r, const ElementSet& p, std::size_t k) {
  check_set(r, p, "base");
  if (k == 0)
    throw Error(ErrorKind::domain_error, "ideal power requires exponent >= 1");
  ElementSet out = p;
  for (std::size_t i = 1; i < k; ++i) out = ideal_product(r, out, p);
  return out;
}

ElementSet colon_right(const FiniteRing& r, const ElementSet& p, const ElementSet& k) {
  check_set(r, p, "P");
  check_set(r, k, "K");
  const std::size_t n = r.order();
  const std::vector<Elem> ks = k.indices();
  ElementSet out(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool in = true;
    for (Elem kk : ks)
      if (!p.test(r.mul_row(kk)[x])) {
        in = false;
        break;
      }
    if (in) out.set(static_cast<Elem>(x));
  }
  return out;
}

ElementSet colon_left(const FiniteRing& r, const ElementSet& p, const ElementSet& k) {
  check_set(r, p, "P");
  check_set(r, k, "K");
  const std::size_t n = r.order();
  const std::vector<Elem> ks = k.indices();
  ElementSet out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* row = r.mul_row(static_cast<Elem>(x));
    bool in = true;
    for (Elem kk : ks)
      if (!p.test(row[kk])) {
        in = false;
        break;
      }
    if (in) out.set(static_cast<Elem>(x));
  }
  return out;
}

IdealFlags classify_subset(const GradedRing& gr, const ElementSet& s) {
  const FiniteRing& r = gr.ring();
  check_set(r, s, "subset");
  IdealFlags f;
  f.is_additive_subgroup = is_additive_subgroup_impl(r, s);
  f.is_right_ideal = f.is_additive_subgroup && absorbs_right(r, s);
  f.is_twosided = f.is_right_ideal && absorbs_left(r, s);
  f.is_graded = is_graded_impl(gr, s);
  f.is_proper = s.count() < r.order();
  f.is_idempotent = f.is_additive_subgroup && ideal_product(r, s, s) == s;
  return f;
}

ElementSet graded_right_ideal_closure(const GradedRing& gr, const ElementSet& seed) {
  ElementSet t = right_ideal_closure(gr.ring(), seed);
  const std::size_t m = gr.group_order();
  for (;;) {
    ElementSet ext = t;
    t.for_each([&](Elem x) {
      for (std::size_t g = 0; g < m; ++g) ext.set(gr.component_of(x, static_cast<Elem>(g)));
    });
    if (ext == t) return t;
    t = right_ideal_closure(gr.ring(), ext);
  }
}

ElementSet graded_twosided_ideal_closure(const GradedRing& gr, const ElementSet& seed) {
  ElementSet t = twosided_ideal_closure(gr.ring(), seed);
  const std::size_t m = gr.group_order();
  for (;;) {
    ElementSet ext = t;
    t.for_each([&](Elem x) {
      for (std::size_t g = 0; g < m; ++g) ext.set(gr.component_of(x, static_cast<Elem>(g)));
    });
    if (ext == t) return t;
    t = twosided_ideal_closure(gr.ring(), ext);
  }
}

std::vector<ElementSet> enumerate_graded_right_ideals(const GradedRing& gr,
                                                      const Config& cfg) {
  return enumerate_by_extension(gr, cfg, &graded_right_ideal_closure, gr.homogeneous());
}

std::vector<ElementSet> enumerate_graded_twosided_ideals(const GradedRing& gr,
                                                         const Config& cfg) {
  return enumerate_by_extension(gr, cfg, &graded_twosided_ideal_closure, gr.homogeneous());
}

std::vector<ElementSet> enumerate_right_ideals(const GradedRing& gr, const Config& cfg) {
  return enumerate_by_extension(gr, cfg, &plain_right_closure, whole_ring_extenders(gr));
}

}  // namespace gring
