#include "gring/quotient.hpp"

#include <algorithm>
#include <string>

#include "gring/error.hpp"
#include "gring/ideals.hpp"

namespace gring {

GradedHom GradedHom::validate(GradedRing source, GradedRing target,
                              std::vector<Elem> map) {
  const std::size_t n = source.order();
  const std::size_t nt = target.order();
  if (source.group_order() != target.group_order() ||
      source.group().table() != target.group().table())
    throw Error(ErrorKind::domain_error,
                "source and target are graded by different groups");
  if (map.size() != n)
    throw Error(ErrorKind::domain_error,
                "element map has " + std::to_string(map.size()) + " entries, expected " +
                    std::to_string(n));
  for (std::size_t a = 0; a < n; ++a)
    if (map[a] >= nt)
      throw Error(ErrorKind::domain_error,
                  "map entry " + std::to_string(a) + " out of range");

  const std::size_t m = source.group_order();
  for (Elem g = 0; g < m; ++g) {
    const ElementSet& tg = target.component(g);
    for (Elem a : source.component(g).indices())
      if (!tg.test(map[a]))
        throw Error::axiom("grading", {g, a},
                           "image leaves the component of the source degree");
  }

  const FiniteRing& rs = source.ring();
  const FiniteRing& rt = target.ring();
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* add_a = rs.add_row(static_cast<Elem>(a));
    const Elem* tadd_fa = rt.add_row(map[a]);
    for (std::size_t b = 0; b < n; ++b)
      if (map[add_a[b]] != tadd_fa[map[b]])
        throw Error::axiom("additivity", {a, b});
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* mul_a = rs.mul_row(static_cast<Elem>(a));
    const Elem* tmul_fa = rt.mul_row(map[a]);
    for (std::size_t b = 0; b < n; ++b)
      if (map[mul_a[b]] != tmul_fa[map[b]])
        throw Error::axiom("multiplicativity", {a, b});
  }

  GradedHom f(std::move(source), std::move(target));
  ElementSet image(nt);
  for (std::size_t a = 0; a < n; ++a) {
    if (map[a] == 0) f.kernel_.set(static_cast<Elem>(a));
    image.set(map[a]);
  }
  f.surjective_ = image.count() == nt;
  f.map_ = std::move(map);
  return f;
}

Elem GradedHom::apply(Elem a) const {
  if (a >= source_.order())
    throw Error(ErrorKind::domain_error, "element index out of range");
  return map_[a];
}

ElementSet GradedHom::image(const ElementSet& s) const {
  if (s.universe() != source_.order())
    throw Error(ErrorKind::domain_error, "set is not over the source ring");
  if (!surjective_)
    throw Error(ErrorKind::not_epimorphism,
                "image of an ideal requires a surjective homomorphism");
  ElementSet out(target_.order());
  s.for_each([&](Elem a) { out.set(map_[a]); });
  const IdealFlags fin = classify_subset(source_, s);
  if (fin.is_right_ideal && fin.is_graded) {
    const IdealFlags fout = classify_subset(target_, out);
    if (!fout.is_right_ideal || !fout.is_graded)
      throw Error(ErrorKind::not_graded_right_ideal,
                  "image of a graded right ideal failed verification");
  }
  return out;
}

ElementSet GradedHom::preimage(const ElementSet& s) const {
  if (s.universe() != target_.order())
    throw Error(ErrorKind::domain_error, "set is not over the target ring");
  ElementSet out(source_.order());
  for (std::size_t a = 0; a < source_.order(); ++a)
    if (s.test(map_[a])) out.set(static_cast<Elem>(a));
  const IdealFlags fin = classify_subset(target_, s);
  if (fin.is_right_ideal && fin.is_graded) {
    const IdealFlags fout = classify_subset(source_, out);
    if (!fout.is_right_ideal || !fout.is_graded || !kernel_.subset_of(out))
      throw Error(ErrorKind::not_graded_right_ideal,
                  "preimage of a graded right ideal failed verification");
  }
  return out;
}

QuotientResult quotient_ring(const GradedRing& gr, const ElementSet& k,
                             const Config& cfg) {
  const FiniteRing& r = gr.ring();
  const std::size_t n = r.order();
  if (k.universe() != n)
    throw Error(ErrorKind::domain_error, "ideal is not over this ring");
  const IdealFlags f = classify_subset(gr, k);
  if (!f.is_twosided)
    throw Error(ErrorKind::not_twosided,
                "quotient requires a two-sided ideal, got " + k.to_string());
  if (!f.is_graded)
    throw Error(ErrorKind::not_graded,
                "quotient requires a graded ideal, got " + k.to_string());

  // Canonical representative: smallest member of each coset x + K.
  const std::vector<Elem> kk = k.indices();
  std::vector<Elem> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* row = r.add_row(static_cast<Elem>(x));
    Elem best = row[kk[0]];
    for (Elem e : kk) best = std::min(best, row[e]);
    rep[x] = best;
  }
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(static_cast<Elem>(x));
  const std::size_t q = reps.size();
  std::vector<Elem> rank(n, 0);
  for (std::size_t i = 0; i < q; ++i) rank[reps[i]] = static_cast<Elem>(i);

  std::vector<std::vector<Elem>> add(q, std::vector<Elem>(q));
  std::vector<std::vector<Elem>> mul(q, std::vector<Elem>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i][j] = rank[rep[r.add(reps[i], reps[j])]];
      mul[i][j] = rank[rep[r.mul(reps[i], reps[j])]];
    }
  std::optional<Elem> unity;
  if (r.has_unity()) unity = rank[rep[*r.unity()]];

  FiniteRing qring = FiniteRing::validate(add, mul, unity, cfg);

  const std::size_t m = gr.group_order();
  std::vector<ElementSet> comps;
  comps.reserve(m);
  for (Elem g = 0; g < m; ++g) {
    ElementSet c(q);
    gr.component(g).for_each([&](Elem s) { c.set(rank[rep[s]]); });
    comps.push_back(std::move(c));
  }
  std::vector<std::vector<Elem>> cay(gr.group_order());
  for (std::size_t a = 0; a < gr.group_order(); ++a)
    for (std::size_t b = 0; b < gr.group_order(); ++b)
      cay[a].push_back(gr.group().op(static_cast<Elem>(a), static_cast<Elem>(b)));
  GradedRing quotient = GradedRing::validate(std::move(qring),
                                             FiniteGroup::validate(cay),
                                             std::move(comps), cfg);

  std::vector<Elem> proj(n);
  for (std::size_t x = 0; x < n; ++x) proj[x] = rank[rep[x]];
  GradedHom projection = GradedHom::validate(gr, std::move(quotient), std::move(proj));
  if (!(projection.kernel() == k))
    throw Error(ErrorKind::domain_error, "projection kernel mismatch");

  return QuotientResult{projection.target(), projection, std::move(rep)};
}

}  // namespace gring
