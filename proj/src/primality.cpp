#include "gring/primality.hpp"

#include <string>

#include "gring/error.hpp"

namespace gring {

namespace {

IdealFlags require_proper_graded_right(const GradedRing& gr, const ElementSet& p) {
  const IdealFlags f = classify_subset(gr, p);
  if (!f.is_proper)
    throw Error(ErrorKind::not_proper, "ideal equals the whole ring");
  if (!f.is_right_ideal || !f.is_graded)
    throw Error(ErrorKind::not_graded_right_ideal,
                "set " + p.to_string() + " is not a graded right ideal");
  return f;
}

void require_proper_graded_twosided(const GradedRing& gr, const ElementSet& p) {
  const IdealFlags f = require_proper_graded_right(gr, p);
  if (!f.is_twosided)
    throw Error(ErrorKind::not_twosided,
                "set " + p.to_string() + " is not a two-sided ideal");
}

void require_unity(const GradedRing& gr) {
  if (!gr.ring().has_unity())
    throw Error(ErrorKind::no_unity, "criterion requires a unital ring");
}

// Pair scan in canonical order; first violating pair wins.
Verdict pair_scan(const GradedRing& gr, const ElementSet& p,
                  std::span<const ElementSet> ideals, Predicate pred,
                  DeciderMethod method) {
  const FiniteRing& r = gr.ring();
  Verdict v;
  v.predicate = pred;
  v.method = method;
  std::optional<ElementSet> p2;
  if (pred == Predicate::almost_prime) p2 = ideal_product(r, p, p);
  for (const ElementSet& x : ideals) {
    if (x.subset_of(p)) continue;
    for (const ElementSet& y : ideals) {
      if (y.subset_of(p)) continue;
      const ElementSet xy = ideal_product(r, x, y);
      if (!xy.subset_of(p)) continue;
      if (pred == Predicate::weakly_prime && xy.is_zero_only()) continue;
      if (pred == Predicate::almost_prime && xy.subset_of(*p2)) continue;
      v.value = false;
      v.ideal_pair = {x, y};
      return v;
    }
  }
  return v;
}

}  // namespace

ElementSet sandwich_set(const FiniteRing& r, Elem x, Elem y) {
  const std::size_t n = r.order();
  ElementSet out(n);
  const Elem* row_x = r.mul_row(x);
  for (std::size_t t = 0; t < n; ++t) out.set(r.mul_row(row_x[t])[y]);
  return out;
}

Verdict is_graded_prime_right(const GradedRing& gr, const ElementSet& p,
                              std::span<const ElementSet> ideals) {
  require_proper_graded_right(gr, p);
  return pair_scan(gr, p, ideals, Predicate::prime, DeciderMethod::pairs_right);
}

Verdict is_graded_weakly_prime_right(const GradedRing& gr, const ElementSet& p,
                                     std::span<const ElementSet> ideals) {
  require_proper_graded_right(gr, p);
  return pair_scan(gr, p, ideals, Predicate::weakly_prime, DeciderMethod::pairs_right);
}

Verdict is_graded_almost_prime_right(const GradedRing& gr, const ElementSet& p,
                                     std::span<const ElementSet> ideals) {
  require_proper_graded_right(gr, p);
  return pair_scan(gr, p, ideals, Predicate::almost_prime, DeciderMethod::pairs_right);
}

Verdict is_graded_prime_right(const GradedRing& gr, const ElementSet& p,
                              const Config& cfg) {
  const auto ideals = enumerate_graded_right_ideals(gr, cfg);
  return is_graded_prime_right(gr, p, ideals);
}

Verdict is_graded_weakly_prime_right(const GradedRing& gr, const ElementSet& p,
                                     const Config& cfg) {
  const auto ideals = enumerate_graded_right_ideals(gr, cfg);
  return is_graded_weakly_prime_right(gr, p, ideals);
}

Verdict is_graded_almost_prime_right(const GradedRing& gr, const ElementSet& p,
                                     const Config& cfg) {
  const auto ideals = enumerate_graded_right_ideals(gr, cfg);
  return is_graded_almost_prime_right(gr, p, ideals);
}

Verdict is_graded_almost_prime_twosided(const GradedRing& gr, const ElementSet& p,
                                        std::span<const ElementSet> twosided_ideals) {
  require_proper_graded_twosided(gr, p);
  return pair_scan(gr, p, twosided_ideals, Predicate::almost_prime,
                   DeciderMethod::pairs_twosided);
}

Verdict is_graded_almost_prime_twosided(const GradedRing& gr, const ElementSet& p,
                                        const Config& cfg) {
  const auto ideals = enumerate_graded_twosided_ideals(gr, cfg);
  return is_graded_almost_prime_twosided(gr, p, ideals);
}

Verdict is_graded_prime_elementwise(const GradedRing& gr, const ElementSet& p) {
  require_unity(gr);
  require_proper_graded_right(gr, p);
  Verdict v;
  v.predicate = Predicate::prime;
  v.method = DeciderMethod::elementwise;
  const std::vector<Elem> homog = gr.homogeneous().indices();
  for (Elem x : homog) {
    if (p.test(x)) continue;
    for (Elem y : homog) {
      if (p.test(y)) continue;
      if (sandwich_set(gr.ring(), x, y).subset_of(p)) {
        v.value = false;
        v.element_pair = {x, y};
        return v;
      }
    }
  }
  return v;
}

Verdict is_graded_almost_prime_elementwise(const GradedRing& gr, const ElementSet& p) {
  require_unity(gr);
  require_proper_graded_twosided(gr, p);
  Verdict v;
  v.predicate = Predicate::almost_prime;
  v.method = DeciderMethod::elementwise;
  const ElementSet p2 = ideal_product(gr.ring(), p, p);
  const std::vector<Elem> homog = gr.homogeneous().indices();
  for (Elem x : homog) {
    if (p.test(x)) continue;
    for (Elem y : homog) {
      if (p.test(y)) continue;
      const ElementSet s = sandwich_set(gr.ring(), x, y);
      if (s.subset_of(p) && !s.subset_of(p2)) {
        v.value = false;
        v.element_pair = {x, y};
        return v;
      }
    }
  }
  return v;
}

ColonCriterionResult almost_prime_colon_criterion(const GradedRing& gr,
                                                  const ElementSet& p, Reading reading) {
  require_unity(gr);
  require_proper_graded_twosided(gr, p);
  const FiniteRing& r = gr.ring();
  const ElementSet p2 = ideal_product(r, p, p);

  ColonCriterionResult res;
  res.condition4.predicate = res.condition5.predicate = Predicate::almost_prime;
  res.condition4.method = DeciderMethod::colon_condition4;
  res.condition5.method = DeciderMethod::colon_condition5;
  res.condition4.reading = res.condition5.reading = reading;

  for (Elem x : gr.homogeneous().indices()) {
    if (p.test(x)) continue;
    const ElementSet bx = principal_twosided(r, x, reading);

    const ElementSet cr = colon_right(r, p, bx);
    const ElementSet cr2 = colon_right(r, p2, bx);
    const ElementSet cl = colon_left(r, p, bx);
    const ElementSet cl2 = colon_left(r, p2, bx);

    if (res.condition4.value) {
      if (cr != (p | cr2)) {
        res.condition4.value = false;
        res.condition4.colon_element = x;
        res.condition4.detail = "right colon";
      } else if (cl != (p | cl2)) {
        res.condition4.value = false;
        res.condition4.colon_element = x;
        res.condition4.detail = "left colon";
      }
    }
    if (res.condition5.value) {
      if (!(cr == p || cr == cr2)) {
        res.condition5.value = false;
        res.condition5.colon_element = x;
        res.condition5.detail = "right colon";
      } else if (!(cl == p || cl == cl2)) {
        res.condition5.value = false;
        res.condition5.colon_element = x;
        res.condition5.detail = "left colon";
      }
    }
    if (!res.condition4.value && !res.condition5.value) break;
  }
  return res;
}

bool verify_witness(const GradedRing& gr, const ElementSet& p, const Verdict& v) {
  if (v.value) return false;  // nothing to replay
  const FiniteRing& r = gr.ring();
  switch (v.method) {
    case DeciderMethod::pairs_right:
    case DeciderMethod::pairs_twosided: {
      if (!v.ideal_pair) return false;
      const auto& [x, y] = *v.ideal_pair;
      const IdealFlags fx = classify_subset(gr, x);
      const IdealFlags fy = classify_subset(gr, y);
      if (!fx.is_right_ideal || !fx.is_graded) return false;
      if (!fy.is_right_ideal || !fy.is_graded) return false;
      if (v.method == DeciderMethod::pairs_twosided &&
          (!fx.is_twosided || !fy.is_twosided))
        return false;
      if (x.subset_of(p) || y.subset_of(p)) return false;
      const ElementSet xy = ideal_product(r, x, y);
      if (!xy.subset_of(p)) return false;
      if (v.predicate == Predicate::weakly_prime && xy.is_zero_only()) return false;
      if (v.predicate == Predicate::almost_prime &&
          xy.subset_of(ideal_product(r, p, p)))
        return false;
      return true;
    }
    case DeciderMethod::elementwise: {
      if (!v.element_pair) return false;
      const auto [x, y] = *v.element_pair;
      if (!gr.is_homogeneous(x) || !gr.is_homogeneous(y)) return false;
      if (p.test(x) || p.test(y)) return false;
      const ElementSet s = sandwich_set(r, x, y);
      if (!s.subset_of(p)) return false;
      if (v.predicate == Predicate::almost_prime &&
          s.subset_of(ideal_product(r, p, p)))
        return false;
      return true;
    }
    case DeciderMethod::colon_condition4:
    case DeciderMethod::colon_condition5: {
      if (!v.colon_element || !v.reading) return false;
      const Elem x = *v.colon_element;
      if (!gr.is_homogeneous(x) || p.test(x)) return false;
      const ElementSet p2 = ideal_product(r, p, p);
      const ElementSet bx = principal_twosided(r, x, *v.reading);
      const ElementSet cr = colon_right(r, p, bx);
      const ElementSet cr2 = colon_right(r, p2, bx);
      const ElementSet cl = colon_left(r, p, bx);
      const ElementSet cl2 = colon_left(r, p2, bx);
      if (v.method == DeciderMethod::colon_condition4)
        return cr != (p | cr2) || cl != (p | cl2);
      return !(cr == p || cr == cr2) || !(cl == p || cl == cl2);
    }
  }
  return false;
}

ClassificationReport classify_all(const GradedRing& gr, const Config& cfg) {
  ClassificationReport rep;
  const auto ideals = enumerate_graded_right_ideals(gr, cfg);
  for (const ElementSet& p : ideals) {
    if (p.count() == gr.order()) continue;  // improper
    IdealReport ir{p,
                   classify_subset(gr, p),
                   is_graded_prime_right(gr, p, ideals),
                   is_graded_weakly_prime_right(gr, p, ideals),
                   is_graded_almost_prime_right(gr, p, ideals)};
    rep.all_almost_prime = rep.all_almost_prime && ir.almost_prime.value;
    rep.ideals.push_back(std::move(ir));
  }
  for (const ElementSet& s : enumerate_right_ideals(gr, cfg)) {
    if (s.count() == gr.order()) continue;
    if (!classify_subset(gr, s).is_graded) rep.non_graded_right_ideals.push_back(s);
  }
  return rep;
}

}  // namespace gring
