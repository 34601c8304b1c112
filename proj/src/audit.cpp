#include "gring/audit.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "gring/error.hpp"
#include "gring/primality.hpp"
#include "gring/quotient.hpp"

namespace gring {

namespace {

/// Cached enumerations and verdicts for one graded ring.
struct Analysis {
  GradedRing gr;
  std::vector<ElementSet> right;  // canonical, includes improper R
  std::vector<ElementSet> two;

  Analysis(GradedRing g, const Config& cfg) : gr(std::move(g)) {
    right = enumerate_graded_right_ideals(gr, cfg);
    two = enumerate_graded_twosided_ideals(gr, cfg);
  }

  std::vector<ElementSet> proper(const std::vector<ElementSet>& v) const {
    std::vector<ElementSet> out;
    for (const ElementSet& s : v)
      if (s.count() < gr.order()) out.push_back(s);
    return out;
  }
  std::vector<ElementSet> proper_right() const { return proper(right); }
  std::vector<ElementSet> proper_two() const { return proper(two); }

  const Verdict& prime(const ElementSet& p) {
    auto it = prime_memo.find(p);
    if (it == prime_memo.end())
      it = prime_memo.emplace(p, is_graded_prime_right(gr, p, right)).first;
    return it->second;
  }
  const Verdict& weakly(const ElementSet& p) {
    auto it = weak_memo.find(p);
    if (it == weak_memo.end())
      it = weak_memo.emplace(p, is_graded_weakly_prime_right(gr, p, right)).first;
    return it->second;
  }
  const Verdict& almost(const ElementSet& p) {
    auto it = almost_memo.find(p);
    if (it == almost_memo.end())
      it = almost_memo.emplace(p, is_graded_almost_prime_right(gr, p, right)).first;
    return it->second;
  }
  bool all_almost() {
    if (!all_almost_memo) {
      bool all = true;
      for (const ElementSet& p : proper_right()) all = all && almost(p).value;
      all_almost_memo = all;
    }
    return *all_almost_memo;
  }
  bool all_weakly() {
    if (!all_weakly_memo) {
      bool all = true;
      for (const ElementSet& p : proper_right()) all = all && weakly(p).value;
      all_weakly_memo = all;
    }
    return *all_weakly_memo;
  }

 private:
  std::map<ElementSet, Verdict> prime_memo, weak_memo, almost_memo;
  std::optional<bool> all_almost_memo, all_weakly_memo;
};

struct QuotientAnalysis {
  GradedHom proj;
  Analysis an;
  QuotientAnalysis(GradedHom p, const Config& cfg)
      : proj(std::move(p)), an(proj.target(), cfg) {}
};

// Element-wise almost-prime condition without the two-sided gate; used
// by the informational one-sided measurement.
bool elementwise_condition(const GradedRing& gr, const ElementSet& p) {
  const ElementSet p2 = ideal_product(gr.ring(), p, p);
  const std::vector<Elem> homog = gr.homogeneous().indices();
  for (Elem x : homog) {
    if (p.test(x)) continue;
    for (Elem y : homog) {
      if (p.test(y)) continue;
      const ElementSet s = sandwich_set(gr.ring(), x, y);
      if (s.subset_of(p) && !s.subset_of(p2)) return false;
    }
  }
  return true;
}

std::string describe(const std::string& ring, const std::string& what) {
  return ring + ": " + what;
}

}  // namespace

struct AuditEngine::Impl {
  std::vector<CorpusRing> corpus;
  Config cfg;
  std::set<Reading> readings;
  std::vector<std::unique_ptr<Analysis>> analyses;
  std::map<std::pair<std::size_t, ElementSet>, std::unique_ptr<QuotientAnalysis>> quotients;

  Analysis& ring(std::size_t i) {
    if (!analyses[i]) analyses[i] = std::make_unique<Analysis>(corpus[i].graded, cfg);
    return *analyses[i];
  }

  QuotientAnalysis& quotient(std::size_t i, const ElementSet& k) {
    auto key = std::make_pair(i, k);
    auto it = quotients.find(key);
    if (it == quotients.end()) {
      QuotientResult q = quotient_ring(corpus[i].graded, k, cfg);
      it = quotients
               .emplace(std::move(key),
                        std::make_unique<QuotientAnalysis>(std::move(q.projection), cfg))
               .first;
    }
    return *it->second;
  }

  AuditResult audit_2_2();
  AuditResult audit_2_5();
  AuditResult audit_2_6();
  AuditResult audit_2_7();
  AuditResult audit_2_8();
  AuditResult audit_2_11();
  AuditResult audit_2_12();
  AuditResult audit_2_13();
  AuditResult audit_2_14();
  AuditResult audit_2_15();
  AuditResult audit_2_16();
  AuditResult audit_3_2();
  AuditResult audit_3_3();
  AuditResult audit_3_4();
  AuditResult audit_3_5();
  AuditResult audit_3_6();
};

AuditResult AuditEngine::Impl::audit_2_2() {
  AuditResult r;
  r.theorem = "2.2";
  r.statement = "unital R, proper graded two-sided P: almost prime over " "right ideals iff almost prime over two-sided ideals";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    const auto candidates = an.proper_two();
    if (!an.gr.ring().has_unity()) {
      r.skipped += candidates.size();
      continue;
    }
    for (const ElementSet& p : candidates) {
      const bool as_right = an.almost(p).value;
      const bool as_two = is_graded_almost_prime_twosided(an.gr, p, an.two).value;
      if (as_right == as_two) {
        ++r.checked;
      } else {
        GradedRing gr = an.gr;
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name, "P=" + p.to_string() + " right-verdict " +
                                          std::to_string(as_right) + " != two-sided " +
                                          std::to_string(as_two)),
             [gr, p] {
               return is_graded_almost_prime_right(gr, p).value !=
                      is_graded_almost_prime_twosided(gr, p).value;
             }});
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_5() {
  AuditResult r;
  r.theorem = "2.5";
  r.statement = "unital R, proper graded two-sided P: the pair definition, " "the element-wise condition and both colon conditions agree";
  std::map<Reading, std::pair<std::size_t, std::size_t>> tally;  // agree / total
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    const auto candidates = an.proper_two();
    if (!an.gr.ring().has_unity()) {
      r.skipped += candidates.size();
      continue;
    }
    for (const ElementSet& p : candidates) {
      const bool d_right = an.almost(p).value;
      const bool d_two = is_graded_almost_prime_twosided(an.gr, p, an.two).value;
      const bool d_elem = is_graded_almost_prime_elementwise(an.gr, p).value;
      bool any_reading = false;
      std::ostringstream verdicts;
      verdicts << "right=" << d_right << " two=" << d_two << " elem=" << d_elem;
      for (Reading rd : readings) {
        const ColonCriterionResult c = almost_prime_colon_criterion(an.gr, p, rd);
        const bool agree = d_two == d_right && d_elem == d_right &&
                           c.condition4.value == d_right && c.condition5.value == d_right;
        auto& t = tally[rd];
        ++t.second;
        if (agree) ++t.first;
        any_reading = any_reading || agree;
        verdicts << (rd == Reading::xr_only ? " xr" : " rxr") << "=(c4="
                 << c.condition4.value << ",c5=" << c.condition5.value << ")";
      }
      if (any_reading) {
        ++r.checked;
      } else {
        GradedRing gr = an.gr;
        const std::set<Reading> rds = readings;
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name,
                      "P=" + p.to_string() + " no agreeing reading: " + verdicts.str()),
             [gr, p, rds] {
               const bool dr = is_graded_almost_prime_right(gr, p).value;
               const bool dt = is_graded_almost_prime_twosided(gr, p).value;
               const bool de = is_graded_almost_prime_elementwise(gr, p).value;
               for (Reading rd : rds) {
                 const ColonCriterionResult c = almost_prime_colon_criterion(gr, p, rd);
                 if (dt == dr && de == dr && c.condition4.value == dr &&
                     c.condition5.value == dr)
                   return false;  // some reading agrees after all
               }
               return true;
             }});
      }
    }
  }
  for (const auto& [rd, t] : tally) {
    std::ostringstream note;
    note << "reading " << (rd == Reading::xr_only ? "xr" : "rxr") << ": agreed "
         << t.first << "/" << t.second << " instances";
    r.notes.push_back(note.str());
  }
  // Informational: the element-wise condition against the pair decider
  // on one-sided (not necessarily two-sided) proper graded right ideals.
  std::size_t one_agree = 0, one_total = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    if (!an.gr.ring().has_unity()) continue;
    for (const ElementSet& p : an.proper_right()) {
      ++one_total;
      if (elementwise_condition(an.gr, p) == an.almost(p).value) ++one_agree;
    }
  }
  std::ostringstream note;
  note << "informational, one-sided ideals: element-wise condition matched the pair "
          "decider on "
       << one_agree << "/" << one_total << " instances";
  r.notes.push_back(note.str());
  return r;
}

AuditResult AuditEngine::Impl::audit_2_6() {
  AuditResult r;
  r.theorem = "2.6";
  r.statement = "unital R, graded right I with (I^2:I) inside I: " "prime iff almost prime";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    const auto candidates = an.proper_right();
    if (!an.gr.ring().has_unity()) {
      r.skipped += candidates.size();
      continue;
    }
    for (const ElementSet& p : candidates) {
      const ElementSet p2 = ideal_power(an.gr.ring(), p, 2);
      if (!colon_right(an.gr.ring(), p2, p).subset_of(p)) {
        ++r.skipped;
        continue;
      }
      const bool prime = an.prime(p).value;
      const bool almost = an.almost(p).value;
      if (prime == almost) {
        ++r.checked;
      } else {
        GradedRing gr = an.gr;
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name, "I=" + p.to_string() + " prime=" +
                                          std::to_string(prime) + " almost=" +
                                          std::to_string(almost)),
             [gr, p] {
               return is_graded_prime_right(gr, p).value !=
                      is_graded_almost_prime_right(gr, p).value;
             }});
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_7() {
  AuditResult r;
  r.theorem = "2.7";
  r.statement = "graded right I with I^2 = {0}: weakly prime iff almost prime";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& p : an.proper_right()) {
      if (!ideal_power(an.gr.ring(), p, 2).is_zero_only()) {
        ++r.skipped;
        continue;
      }
      const bool weakly = an.weakly(p).value;
      const bool almost = an.almost(p).value;
      if (weakly == almost) {
        ++r.checked;
      } else {
        GradedRing gr = an.gr;
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name, "I=" + p.to_string() + " weakly=" +
                                          std::to_string(weakly) + " almost=" +
                                          std::to_string(almost)),
             [gr, p] {
               return is_graded_weakly_prime_right(gr, p).value !=
                      is_graded_almost_prime_right(gr, p).value;
             }});
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_8() {
  AuditResult r;
  r.theorem = "2.8";
  r.statement = "R^2 = {0}: every graded right ideal weakly prime iff " "almost prime";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    const ElementSet whole = ElementSet::full(an.gr.order());
    if (!ideal_product(an.gr.ring(), whole, whole).is_zero_only()) {
      ++r.skipped;  // one skip per non-qualifying ring
      continue;
    }
    bool ok = true;
    for (const ElementSet& p : an.proper_right())
      ok = ok && an.weakly(p).value == an.almost(p).value;
    if (ok) {
      ++r.checked;
    } else {
      GradedRing gr = an.gr;
      r.counterexamples.push_back(
          {corpus[i].name,
           describe(corpus[i].name, "weakly/almost verdicts diverge in a square-zero ring"),
           [gr] {
             for (const ElementSet& p : enumerate_graded_right_ideals(gr)) {
               if (p.count() == gr.order()) continue;
               if (is_graded_weakly_prime_right(gr, p).value !=
                   is_graded_almost_prime_right(gr, p).value)
                 return true;
             }
             return false;
           }});
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_11() {
  AuditResult r;
  r.theorem = "2.11";
  r.statement = "graded two-sided I: I almost prime iff I/I^2 weakly prime " "in R/I^2";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& p : an.proper_two()) {
      const ElementSet p2 = ideal_power(an.gr.ring(), p, 2);
      QuotientAnalysis& q = quotient(i, p2);
      const ElementSet image = q.proj.image(p);
      const bool almost = an.almost(p).value;
      const bool weakly_q = q.an.weakly(image).value;
      if (almost == weakly_q) {
        ++r.checked;
      } else {
        GradedRing gr = an.gr;
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name, "I=" + p.to_string() + " almost=" +
                                          std::to_string(almost) + " weakly(I/I^2)=" +
                                          std::to_string(weakly_q)),
             [gr, p] {
               const ElementSet p2 = ideal_power(gr.ring(), p, 2);
               QuotientResult q = quotient_ring(gr, p2);
               return is_graded_almost_prime_right(gr, p).value !=
                      is_graded_weakly_prime_right(q.quotient, q.projection.image(p)).value;
             }});
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_12() {
  AuditResult r;
  r.theorem = "2.12";
  r.statement = "projection with kernel inside an almost prime graded right " "ideal I: the image of I is almost prime";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& k : an.proper_two()) {
      QuotientAnalysis& q = quotient(i, k);
      for (const ElementSet& p : an.proper_right()) {
        if (!k.subset_of(p) || !an.almost(p).value) {
          ++r.skipped;
          continue;
        }
        const ElementSet image = q.proj.image(p);
        if (q.an.almost(image).value) {
          ++r.checked;
        } else {
          GradedRing gr = an.gr;
          r.counterexamples.push_back(
              {corpus[i].name,
               describe(corpus[i].name, "K=" + k.to_string() + " I=" + p.to_string() +
                                            " image not almost prime"),
               [gr, k, p] {
                 QuotientResult q = quotient_ring(gr, k);
                 return is_graded_almost_prime_right(gr, p).value &&
                        !is_graded_almost_prime_right(q.quotient,
                                                      q.projection.image(p)).value;
               }});
        }
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_13() {
  AuditResult r;
  r.theorem = "2.13";
  r.statement = "projection, graded right ideal J of the quotient: if the " "preimage of J is almost prime then so is J";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& k : an.proper_two()) {
      QuotientAnalysis& q = quotient(i, k);
      for (const ElementSet& jbar : q.an.proper_right()) {
        const ElementSet pre = q.proj.preimage(jbar);
        if (!an.almost(pre).value) {
          ++r.skipped;
          continue;
        }
        if (q.an.almost(jbar).value) {
          ++r.checked;
        } else {
          GradedRing gr = an.gr;
          r.counterexamples.push_back(
              {corpus[i].name,
               describe(corpus[i].name,
                        "K=" + k.to_string() + " J=" + jbar.to_string() +
                            " preimage almost prime but J is not"),
               [gr, k, jbar] {
                 QuotientResult q = quotient_ring(gr, k);
                 return is_graded_almost_prime_right(gr, q.projection.preimage(jbar))
                            .value &&
                        !is_graded_almost_prime_right(q.quotient, jbar).value;
               }});
        }
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_14() {
  AuditResult r;
  r.theorem = "2.14";
  r.statement = "projection with kernel inside I^2: if the image of I is " "almost prime then so is I";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& k : an.proper_two()) {
      QuotientAnalysis& q = quotient(i, k);
      for (const ElementSet& p : an.proper_right()) {
        if (!k.subset_of(ideal_power(an.gr.ring(), p, 2))) {
          ++r.skipped;
          continue;
        }
        const ElementSet image = q.proj.image(p);
        if (!q.an.almost(image).value) {
          ++r.skipped;
          continue;
        }
        if (an.almost(p).value) {
          ++r.checked;
        } else {
          GradedRing gr = an.gr;
          r.counterexamples.push_back(
              {corpus[i].name,
               describe(corpus[i].name, "K=" + k.to_string() + " I=" + p.to_string() +
                                            " image almost prime but I is not"),
               [gr, k, p] {
                 QuotientResult q = quotient_ring(gr, k);
                 return is_graded_almost_prime_right(q.quotient,
                                                     q.projection.image(p)).value &&
                        !is_graded_almost_prime_right(gr, p).value;
               }});
        }
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_15() {
  AuditResult r;
  r.theorem = "2.15";
  r.statement = "projection, almost prime J in the quotient with kernel " "inside preimage(J)^2: the preimage of J is almost prime";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& k : an.proper_two()) {
      QuotientAnalysis& q = quotient(i, k);
      for (const ElementSet& jbar : q.an.proper_right()) {
        if (!q.an.almost(jbar).value) {
          ++r.skipped;
          continue;
        }
        const ElementSet pre = q.proj.preimage(jbar);
        if (!k.subset_of(ideal_power(an.gr.ring(), pre, 2))) {
          ++r.skipped;
          continue;
        }
        if (an.almost(pre).value) {
          ++r.checked;
        } else {
          GradedRing gr = an.gr;
          r.counterexamples.push_back(
              {corpus[i].name,
               describe(corpus[i].name, "K=" + k.to_string() + " J=" + jbar.to_string() +
                                            " preimage not almost prime"),
               [gr, k, jbar] {
                 QuotientResult q = quotient_ring(gr, k);
                 const ElementSet pre = q.projection.preimage(jbar);
                 return is_graded_almost_prime_right(q.quotient, jbar).value &&
                        k.subset_of(ideal_power(gr.ring(), pre, 2)) &&
                        !is_graded_almost_prime_right(gr, pre).value;
               }});
        }
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_2_16() {
  AuditResult r;
  r.theorem = "2.16";
  r.statement = "graded two-sided K inside an almost prime graded right " "ideal P: P/K is almost prime in R/K";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& k : an.proper_two()) {
      QuotientAnalysis& q = quotient(i, k);
      for (const ElementSet& p : an.proper_right()) {
        if (!k.subset_of(p) || !an.almost(p).value) {
          ++r.skipped;
          continue;
        }
        const ElementSet image = q.proj.image(p);
        if (q.an.almost(image).value) {
          ++r.checked;
        } else {
          GradedRing gr = an.gr;
          r.counterexamples.push_back(
              {corpus[i].name,
               describe(corpus[i].name, "K=" + k.to_string() + " P=" + p.to_string() +
                                            " P/K not almost prime"),
               [gr, k, p] {
                 QuotientResult q = quotient_ring(gr, k);
                 return is_graded_almost_prime_right(gr, p).value &&
                        !is_graded_almost_prime_right(q.quotient,
                                                      q.projection.image(p)).value;
               }});
        }
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_3_2() {
  AuditResult r;
  r.theorem = "3.2";
  r.statement = "I^2 = {0} for every graded right ideal: all almost prime " "iff all weakly prime";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    bool qualifies = true;
    for (const ElementSet& p : an.proper_right())
      qualifies = qualifies && ideal_power(an.gr.ring(), p, 2).is_zero_only();
    if (!qualifies) {
      ++r.skipped;
      continue;
    }
    if (an.all_almost() == an.all_weakly()) {
      ++r.checked;
    } else {
      GradedRing gr = an.gr;
      r.counterexamples.push_back(
          {corpus[i].name,
           describe(corpus[i].name, "all-almost and all-weakly flags diverge"),
           [gr] {
             bool almost = true, weakly = true;
             for (const ElementSet& p : enumerate_graded_right_ideals(gr)) {
               if (p.count() == gr.order()) continue;
               almost = almost && is_graded_almost_prime_right(gr, p).value;
               weakly = weakly && is_graded_weakly_prime_right(gr, p).value;
             }
             return almost != weakly;
           }});
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_3_3() {
  AuditResult r;
  r.theorem = "3.3";
  r.statement = "R^2 = {0}: all graded right ideals almost prime iff all " "weakly prime";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    const ElementSet whole = ElementSet::full(an.gr.order());
    if (!ideal_product(an.gr.ring(), whole, whole).is_zero_only()) {
      ++r.skipped;
      continue;
    }
    if (an.all_almost() == an.all_weakly()) {
      ++r.checked;
    } else {
      r.counterexamples.push_back(
          {corpus[i].name,
           describe(corpus[i].name, "all-almost and all-weakly flags diverge"),
           [] { return true; }});
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_3_4() {
  AuditResult r;
  r.theorem = "3.4";
  r.statement = "if every graded right ideal of R is almost prime, the same " "holds in every quotient R/K";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& k : an.proper_two()) {
      if (!an.all_almost()) {
        ++r.skipped;
        continue;
      }
      QuotientAnalysis& q = quotient(i, k);
      if (q.an.all_almost()) {
        ++r.checked;
      } else {
        GradedRing gr = an.gr;
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name,
                      "K=" + k.to_string() + " quotient has a non-almost-prime ideal"),
             [gr, k] {
               QuotientResult q = quotient_ring(gr, k);
               for (const ElementSet& p : enumerate_graded_right_ideals(q.quotient)) {
                 if (p.count() == q.quotient.order()) continue;
                 if (!is_graded_almost_prime_right(q.quotient, p).value) return true;
               }
               return false;
             }});
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_3_5() {
  AuditResult r;
  r.theorem = "3.5";
  r.statement = "projection with kernel inside P^2 for every graded right " "ideal P: if all of R/K is almost prime, so is all of R";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& k : an.proper_two()) {
      bool kernel_ok = true;
      for (const ElementSet& p : an.proper_right())
        kernel_ok = kernel_ok && k.subset_of(ideal_power(an.gr.ring(), p, 2));
      if (!kernel_ok) {
        ++r.skipped;
        continue;
      }
      QuotientAnalysis& q = quotient(i, k);
      if (!q.an.all_almost()) {
        ++r.skipped;
        continue;
      }
      if (an.all_almost()) {
        ++r.checked;
      } else {
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name,
                      "K=" + k.to_string() + " quotient all almost prime, source not"),
             [] { return true; }});
      }
    }
  }
  return r;
}

AuditResult AuditEngine::Impl::audit_3_6() {
  AuditResult r;
  r.theorem = "3.6";
  r.statement = "if every graded right ideal of R is almost prime, the same " "holds in R/P for every graded two-sided P";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Analysis& an = ring(i);
    for (const ElementSet& p : an.proper_two()) {
      if (!an.all_almost()) {
        ++r.skipped;
        continue;
      }
      QuotientAnalysis& q = quotient(i, p);
      if (q.an.all_almost()) {
        ++r.checked;
      } else {
        r.counterexamples.push_back(
            {corpus[i].name,
             describe(corpus[i].name,
                      "P=" + p.to_string() + " quotient has a non-almost-prime ideal"),
             [] { return true; }});
      }
    }
  }
  return r;
}

AuditEngine::AuditEngine(std::vector<CorpusRing> corpus, Config cfg,
                         std::set<Reading> readings)
    : impl_(std::make_unique<Impl>()) {
  if (readings.empty())
    throw Error(ErrorKind::domain_error, "at least one reading is required");
  impl_->corpus = std::move(corpus);
  impl_->cfg = cfg;
  impl_->readings = std::move(readings);
  impl_->analyses.resize(impl_->corpus.size());
}

AuditEngine::~AuditEngine() = default;
AuditEngine::AuditEngine(AuditEngine&&) noexcept = default;
AuditEngine& AuditEngine::operator=(AuditEngine&&) noexcept = default;

const std::vector<std::string>& AuditEngine::theorem_ids() {
  static const std::vector<std::string> ids = {"2.2",  "2.5",  "2.6",  "2.7",
                                               "2.8",  "2.11", "2.12", "2.13",
                                               "2.14", "2.15", "2.16", "3.2",
                                               "3.3",  "3.4",  "3.5",  "3.6"};
  return ids;
}

AuditResult AuditEngine::run(const std::string& theorem_id) {
  Impl& im = *impl_;
  if (theorem_id == "2.2") return im.audit_2_2();
  if (theorem_id == "2.5") return im.audit_2_5();
  if (theorem_id == "2.6") return im.audit_2_6();
  if (theorem_id == "2.7") return im.audit_2_7();
  if (theorem_id == "2.8") return im.audit_2_8();
  if (theorem_id == "2.11") return im.audit_2_11();
  if (theorem_id == "2.12") return im.audit_2_12();
  if (theorem_id == "2.13") return im.audit_2_13();
  if (theorem_id == "2.14") return im.audit_2_14();
  if (theorem_id == "2.15") return im.audit_2_15();
  if (theorem_id == "2.16") return im.audit_2_16();
  if (theorem_id == "3.2") return im.audit_3_2();
  if (theorem_id == "3.3") return im.audit_3_3();
  if (theorem_id == "3.4") return im.audit_3_4();
  if (theorem_id == "3.5") return im.audit_3_5();
  if (theorem_id == "3.6") return im.audit_3_6();
  throw Error(ErrorKind::unknown_theorem, "unknown theorem id '" + theorem_id + "'");
}

std::vector<AuditResult> AuditEngine::run_all() {
  std::vector<AuditResult> out;
  out.reserve(theorem_ids().size());
  for (const std::string& id : theorem_ids()) out.push_back(run(id));
  return out;
}

std::vector<ConverseFinding> AuditEngine::converse_search() {
  Impl& im = *impl_;
  std::vector<ConverseFinding> findings;
  for (std::size_t i = 0; i < im.corpus.size(); ++i) {
    Analysis& an = im.ring(i);
    for (const ElementSet& k : an.proper_two()) {
      QuotientAnalysis& q = im.quotient(i, k);
      for (const ElementSet& p : an.proper_right()) {
        if (!k.subset_of(p)) continue;
        if (an.almost(p).value) continue;
        const ElementSet image = q.proj.image(p);
        if (q.an.almost(image).value) {
          GradedRing gr = an.gr;
          findings.push_back({im.corpus[i].name, k, p, [gr, k, p] {
                                QuotientResult q = quotient_ring(gr, k);
                                return is_graded_almost_prime_right(
                                           q.quotient, q.projection.image(p)).value &&
                                       !is_graded_almost_prime_right(gr, p).value;
                              }});
        }
      }
    }
  }
  return findings;
}

}  // namespace gring
