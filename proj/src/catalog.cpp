#include "gring/catalog.hpp"

#include <array>

#include "gring/error.hpp"

namespace gring {

namespace {

using Table = std::vector<std::vector<Elem>>;

GradedRing build_example2(const Config& cfg) {
  // Order-4 non-commutative ring without unity: Klein addition, every
  // nonzero row of the multiplication table constant on {x,y}-columns.
  // Elements 0,x,y,z are indices 0,1,2,3. Z3-graded by S_0={0,x},
  // S_1={0,z}, S_2={0}.
  const Table add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const Table mul = {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 2, 2, 0}, {0, 3, 3, 0}};
  const Table cay = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<ElementSet> comps{ElementSet::of(4, {0, 1}), ElementSet::of(4, {0, 3}),
                                ElementSet::of(4, {0})};
  return GradedRing::validate(FiniteRing::validate(add, mul, std::nullopt, cfg),
                              FiniteGroup::validate(cay), std::move(comps), cfg);
}

GradedRing build_matrix_z2(const Config& cfg) {
  // Subring {0, A, B, C} of the 2x2 matrices over Z2 with A = [[1,1],[0,0]],
  // B = [[0,0],[1,1]], C = A + B. Tables are computed from matrix
  // arithmetic; indices 0..3 in the order above. Z3-graded by
  // S_0={0,A}, S_1={0,C}, S_2={0}.
  using Mat = std::array<int, 4>;  // row-major [[a,b],[c,d]]
  const std::array<Mat, 4> elems = {Mat{0, 0, 0, 0}, Mat{1, 1, 0, 0}, Mat{0, 0, 1, 1},
                                    Mat{1, 1, 1, 1}};
  auto find = [&](const Mat& m) -> Elem {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == m) return static_cast<Elem>(i);
    throw Error(ErrorKind::domain_error, "matrix outside the subring");
  };
  Table add(4, std::vector<Elem>(4));
  Table mul(4, std::vector<Elem>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Mat &x = elems[i], &y = elems[j];
      Mat s, p;
      for (int t = 0; t < 4; ++t) s[t] = (x[t] + y[t]) % 2;
      p[0] = (x[0] * y[0] + x[1] * y[2]) % 2;
      p[1] = (x[0] * y[1] + x[1] * y[3]) % 2;
      p[2] = (x[2] * y[0] + x[3] * y[2]) % 2;
      p[3] = (x[2] * y[1] + x[3] * y[3]) % 2;
      add[i][j] = find(s);
      mul[i][j] = find(p);
    }
  const Table cay = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<ElementSet> comps{ElementSet::of(4, {0, 1}), ElementSet::of(4, {0, 3}),
                                ElementSet::of(4, {0})};
  return GradedRing::validate(FiniteRing::validate(add, mul, std::nullopt, cfg),
                              FiniteGroup::validate(cay), std::move(comps), cfg);
}

GradedRing build_gaussian(long n, const Config& cfg) {
  // Gaussian integers modulo n: elements a+bi with a,b in [0,n),
  // index a + n*b, unity 1. Z2-graded by the real part (S_0) and the
  // imaginary part (S_1).
  if (n < 2 || n > 64)
    throw Error(ErrorKind::param_out_of_range,
                "gaussian-mod modulus must lie in [2, 64], got " + std::to_string(n));
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t order = nn * nn;
  auto enc = [&](long a, long b) {
    return static_cast<Elem>(((a % n + n) % n) + n * ((b % n + n) % n));
  };
  Table add(order, std::vector<Elem>(order));
  Table mul(order, std::vector<Elem>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const long a = static_cast<long>(x % nn), b = static_cast<long>(x / nn);
    for (std::size_t y = 0; y < order; ++y) {
      const long c = static_cast<long>(y % nn), d = static_cast<long>(y / nn);
      add[x][y] = enc(a + c, b + d);
      mul[x][y] = enc(a * c - b * d, a * d + b * c);
    }
  }
  ElementSet real(order), imag(order);
  for (long a = 0; a < n; ++a) real.set(enc(a, 0));
  for (long b = 0; b < n; ++b) imag.set(enc(0, b));
  const Table cay = {{0, 1}, {1, 0}};
  std::vector<ElementSet> comps{std::move(real), std::move(imag)};
  return GradedRing::validate(FiniteRing::validate(add, mul, enc(1, 0), cfg),
                              FiniteGroup::validate(cay), std::move(comps), cfg);
}

GradedRing build_upper_tri(long p, const Config& cfg) {
  // Upper triangular 2x2 matrices [[a,b],[0,c]] over Z_p, index
  // a*p^2 + b*p + c, unity the identity matrix. Z4-graded: S_0 the
  // diagonal matrices, S_2 the strictly upper ones, S_1 = S_3 = {0}.
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw Error(ErrorKind::param_out_of_range,
                "upper-tri entry field size must be a prime <= 7, got " +
                    std::to_string(p));
  const long pp = p;
  const std::size_t order = static_cast<std::size_t>(pp * pp * pp);
  auto enc = [&](long a, long b, long c) {
    auto m = [&](long v) { return (v % pp + pp) % pp; };
    return static_cast<Elem>(m(a) * pp * pp + m(b) * pp + m(c));
  };
  Table add(order, std::vector<Elem>(order));
  Table mul(order, std::vector<Elem>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const long a = static_cast<long>(x) / (pp * pp);
    const long b = (static_cast<long>(x) / pp) % pp;
    const long c = static_cast<long>(x) % pp;
    for (std::size_t y = 0; y < order; ++y) {
      const long d = static_cast<long>(y) / (pp * pp);
      const long e = (static_cast<long>(y) / pp) % pp;
      const long f = static_cast<long>(y) % pp;
      add[x][y] = enc(a + d, b + e, c + f);
      mul[x][y] = enc(a * d, a * e + b * f, c * f);
    }
  }
  ElementSet diag(order), strict(order), zero_only(order);
  zero_only.set(0);
  for (long a = 0; a < pp; ++a)
    for (long c = 0; c < pp; ++c) diag.set(enc(a, 0, c));
  for (long b = 0; b < pp; ++b) strict.set(enc(0, b, 0));
  const Table cay = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  std::vector<ElementSet> comps{std::move(diag), zero_only, std::move(strict),
                                zero_only};
  return GradedRing::validate(FiniteRing::validate(add, mul, enc(1, 0, 1), cfg),
                              FiniteGroup::validate(cay), std::move(comps), cfg);
}

GradedRing build_square_zero(long k, const Config& cfg) {
  // Additive group (Z2)^k with every product zero; element index is the
  // coordinate bitmask. Z2-graded by splitting the coordinates: S_0 the
  // span of the first ceil(k/2), S_1 the span of the rest.
  if (k < 1 || k > 4)
    throw Error(ErrorKind::param_out_of_range,
                "square-zero exponent must lie in [1, 4], got " + std::to_string(k));
  const std::size_t order = std::size_t{1} << k;
  Table add(order, std::vector<Elem>(order));
  Table mul(order, std::vector<Elem>(order, 0));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) add[x][y] = static_cast<Elem>(x ^ y);
  const std::size_t low = (static_cast<std::size_t>(k) + 1) / 2;
  const std::size_t mask0 = (std::size_t{1} << low) - 1;
  ElementSet s0(order), s1(order);
  for (std::size_t x = 0; x < order; ++x) {
    if ((x & ~mask0) == 0) s0.set(static_cast<Elem>(x));
    if ((x & mask0) == 0) s1.set(static_cast<Elem>(x));
  }
  const Table cay = {{0, 1}, {1, 0}};
  std::vector<ElementSet> comps{std::move(s0), std::move(s1)};
  return GradedRing::validate(FiniteRing::validate(add, mul, std::nullopt, cfg),
                              FiniteGroup::validate(cay), std::move(comps), cfg);
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"example2", false, 0, "",
       "order-4 non-commutative ring {0,x,y,z} without unity, Z3-graded by "
       "S_0={0,x}, S_1={0,z}, S_2={0}; indices 0,1,2,3"},
      {"matrix-z2", false, 0, "",
       "subring {0,A,B,C} of the 2x2 matrices over Z2 with A=[[1,1],[0,0]], "
       "B=[[0,0],[1,1]], C=A+B, Z3-graded by S_0={0,A}, S_1={0,C}, S_2={0}; "
       "indices 0,1,2,3"},
      {"gaussian-mod", true, 12, "modulus n in [2, 64]",
       "Gaussian integers modulo n; a+bi has index a+n*b, Z2-graded by real "
       "and imaginary parts"},
      {"upper-tri", true, 2, "prime entry field size p in {2,3,5,7}",
       "upper triangular 2x2 matrices over Z_p; [[a,b],[0,c]] has index "
       "a*p^2+b*p+c, Z4-graded with diagonal matrices in degree 0 and strictly "
       "upper ones in degree 2"},
      {"square-zero", true, 2, "exponent k in [1, 4]",
       "additive group (Z2)^k with all products zero; element index is the "
       "coordinate bitmask, Z2-graded by splitting coordinates"},
  };
  return entries;
}

GradedRing catalog_build(const std::string& name, std::optional<long> param,
                         const Config& cfg) {
  const CatalogEntry* entry = nullptr;
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) entry = &e;
  if (entry == nullptr)
    throw Error(ErrorKind::unknown_entry, "unknown catalog entry '" + name + "'");
  if (!entry->takes_param && param)
    throw Error(ErrorKind::param_out_of_range,
                "catalog entry '" + name + "' takes no parameter");
  const long p = param.value_or(entry->default_param);
  if (name == "example2") return build_example2(cfg);
  if (name == "matrix-z2") return build_matrix_z2(cfg);
  if (name == "gaussian-mod") return build_gaussian(p, cfg);
  if (name == "upper-tri") return build_upper_tri(p, cfg);
  return build_square_zero(p, cfg);
}

std::string catalog_instance_name(const std::string& name, std::optional<long> param) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name && e.takes_param)
      return name + "-" + std::to_string(param.value_or(e.default_param));
  return name;
}

std::vector<CorpusRing> default_corpus(const Config& cfg) {
  std::vector<CorpusRing> corpus;
  auto push = [&](const std::string& name, std::optional<long> param) {
    corpus.push_back({catalog_instance_name(name, param), catalog_build(name, param, cfg)});
  };
  push("example2", {});
  push("matrix-z2", {});
  for (long n : {4, 6, 8, 9, 12}) push("gaussian-mod", n);
  for (long p : {2, 3}) push("upper-tri", p);
  for (long k : {2, 3}) push("square-zero", k);
  return corpus;
}

}  // namespace gring
