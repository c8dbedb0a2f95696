#include "support.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <functional>
#include <set>

#include <unistd.h>

namespace testing_support {

namespace {

std::vector<IndexTuple> sorted_tuples(std::size_t dim, std::size_t k) {
  std::vector<IndexTuple> out;
  IndexTuple t(k);
  std::function<void(std::size_t, Index)> rec = [&](std::size_t pos, Index start) {
    if (pos == k) {
      out.push_back(t);
      return;
    }
    for (Index i = start; i < dim; ++i) {
      t[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

Rational eval_cochain(const Cochain& c, const std::vector<Vector>& args) { return evaluate(c, args); }

}  // namespace

Cochain dense_differential(const LieAlgebra& g, const Cochain& c) {
  const std::size_t n = g.dim(), k = c.degree();
  Cochain out(n, k + 1);
  for (const auto& t : sorted_tuples(n, k + 1)) {
    Rational value;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        std::vector<Vector> args{g.bracket(unit_vector(n, t[i]), unit_vector(n, t[j]))};
        for (std::size_t u = 0; u < t.size(); ++u)
          if (u != i && u != j) args.push_back(unit_vector(n, t[u]));
        const Rational term = eval_cochain(c, args);
        value += (i + j) % 2 == 1 ? term : -term;
      }
    out.add(t, value);
  }
  return out;
}

Vector sharp_by_pairing(const Multivector& r, const Vector& alpha) {
  const std::size_t n = r.dim();
  Vector out(n);
  for (Index k = 0; k < n; ++k) {
    std::vector<Vector> args{alpha, unit_vector(n, k)};
    out[k] = evaluate(r, args);
  }
  return out;
}

bool cybe_by_definition(const LieAlgebra& g, const Multivector& r, const Cochain& psi) {
  const std::size_t n = g.dim();
  std::vector<Vector> sharp(n);
  for (Index i = 0; i < n; ++i) sharp[i] = sharp_by_pairing(r, unit_vector(n, i));
  std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) br[i][j] = g.bracket(sharp[i], sharp[j]);
  for (const auto& t : sorted_tuples(n, 3)) {
    const Index a = t[0], b = t[1], c = t[2];
    // [r#c, r#a] = -[r#a, r#c]
    Rational lhs = br[b][c][a] - br[a][c][b] + br[a][b][c];
    const Rational rhs = -evaluate(psi, std::vector<Vector>{sharp[a], sharp[b], sharp[c]});
    if (lhs != rhs) return false;
  }
  return true;
}

Vector dual_bracket_by_definition(const LieAlgebra& g, const Multivector& r, const Cochain& psi,
                                  const Vector& alpha, const Vector& beta) {
  const std::size_t n = g.dim();
  const Vector ra = sharp_by_pairing(r, alpha), rb = sharp_by_pairing(r, beta);
  Vector out(n);
  for (Index k = 0; k < n; ++k) {
    const Vector y = unit_vector(n, k);
    // <ad*_X gamma, Y> = -<gamma, [X, Y]>
    Rational v = -dot(beta, g.bracket(ra, y)) + dot(alpha, g.bracket(rb, y));
    v += evaluate(psi, std::vector<Vector>{ra, rb, y});
    out[k] = v;
  }
  return out;
}

bool dual_jacobi_by_definition(const LieAlgebra& g, const Multivector& r, const Cochain& psi) {
  const std::size_t n = g.dim();
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      table[i][j] = dual_bracket_by_definition(g, r, psi, unit_vector(n, i), unit_vector(n, j));
  auto br = [&](const Vector& a, const Vector& b) {
    Vector out(n);
    for (Index i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (Index j = 0; j < n; ++j)
        if (!b[j].is_zero()) out += (a[i] * b[j]) * table[i][j];
    }
    return out;
  };
  for (const auto& t : sorted_tuples(n, 3)) {
    const Vector a = unit_vector(n, t[0]), b = unit_vector(n, t[1]), c = unit_vector(n, t[2]);
    Vector res = br(br(a, b), c);
    res += br(br(b, c), a);
    res += br(br(c, a), b);
    if (!is_zero(res)) return false;
  }
  return true;
}

Multivector ad_on_multivector(const LieAlgebra& g, const Vector& x, const Multivector& m) {
  const std::size_t n = g.dim();
  const Matrix ad = g.ad(x);
  Multivector out(n, m.degree());
  for (const auto& [t, c] : m.terms())
    for (std::size_t slot = 0; slot < t.size(); ++slot)
      for (Index k = 0; k < n; ++k) {
        const Rational& a = ad(k, t[slot]);
        if (a.is_zero()) continue;
        IndexTuple moved = t;
        moved[slot] = k;
        out.add(moved, c * a);
      }
  return out;
}

bool is_invariant(const LieAlgebra& g, const Multivector& m) {
  for (Index i = 0; i < g.dim(); ++i)
    if (!ad_on_multivector(g, unit_vector(g.dim(), i), m).is_zero()) return false;
  return true;
}

template <class Tag>
Exterior<Tag> Random::element(std::size_t dim, std::size_t degree, double density) {
  Exterior<Tag> out(dim, degree);
  for (const auto& t : sorted_tuples(dim, degree))
    if (coin(density)) out.add(t, rational());
  return out;
}

template Cochain Random::element<CovectorTag>(std::size_t, std::size_t, double);
template Multivector Random::element<VectorTag>(std::size_t, std::size_t, double);

std::vector<Index> random_pattern_subalgebra(Random& rng, int n) {
  std::set<std::pair<int, int>> pos;
  if (rng.coin()) {
    // Block upper triangular pattern for a random composition of n.
    std::vector<int> block(static_cast<std::size_t>(n) + 1);
    int b = 0;
    for (int i = 1; i <= n; ++i) {
      if (i > 1 && rng.coin()) ++b;
      block[static_cast<std::size_t>(i)] = b;
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (block[static_cast<std::size_t>(i)] <= block[static_cast<std::size_t>(j)] && rng.coin(0.8))
          pos.insert({i, j});
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (rng.coin(0.35)) pos.insert({i, j});
  }
  // Close under [e_ij, e_kl] = d_jk e_il - d_li e_kj.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::pair<int, int>> add;
    for (auto [i, j] : pos)
      for (auto [k, l] : pos) {
        if (j == k && l == i) {
          if (i != j) {
            add.push_back({i, i});
            add.push_back({j, j});
          }
        } else if (j == k) {
          add.push_back({i, l});
        } else if (l == i) {
          add.push_back({k, j});
        }
      }
    for (auto p : add) changed = pos.insert(p).second || changed;
  }
  std::vector<Index> out;
  for (auto [i, j] : pos) out.push_back(catalog::gl_index(n, i, j));
  std::sort(out.begin(), out.end());
  return out;
}

Cochain random_nondegenerate_mu(Random& rng, const LieAlgebra& g, const Subalgebra& p) {
  for (;;) {
    Cochain mu = rng.element<CovectorTag>(g.dim(), 2, 0.5);
    Matrix m(p.dim(), p.dim());
    const Cochain restricted = p.restrict(mu);
    for (const auto& [t, c] : restricted.terms()) {
      m(t[0], t[1]) = c;
      m(t[1], t[0]) = -c;
    }
    if (rank(m) == p.dim()) return mu;
  }
}

StructureConstants jacobi_violator() {
  StructureConstants sc;
  sc[{0, 1}] = Vector{0, 1, 0};
  sc[{0, 2}] = Vector{0, 0, 1};
  sc[{1, 2}] = Vector{1, 0, 0};
  return sc;
}

std::string temp_file(const std::string& stem, const std::string& text) {
  static std::atomic<int> counter{0};
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "modtwist-tests";
  fs::create_directories(dir);
  const fs::path path = dir / (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".json");
  std::ofstream(path) << text;
  return path.string();
}


Vector modular_representative_by_traces(const TwistedTriangularStructure& s) {
  const auto& g = s.algebra();
  const std::size_t n = g.dim();
  std::vector<Vector> image;
  for (Index i = 0; i < n; ++i) image.push_back(sharp_by_pairing(s.r(), unit_vector(n, i)));
  const Subalgebra p = span_subalgebra(g, image);
  if (p.dim() == 0) return Vector(n);
  Vector chi(p.dim());
  for (Index a = 0; a < p.dim(); ++a) {
    const Vector& x = p.basis()[a];
    Rational on_p;
    for (Index b = 0; b < p.dim(); ++b) on_p += p.coordinates(g.bracket(x, p.basis()[b]))[b];
    chi[a] = g.ad(x).trace() - on_p;
  }
  // Any alpha in g* restricting to chi; r#alpha does not depend on the choice.
  const Vector alpha = solve(Matrix::from_rows(p.basis(), n), chi).x;
  return sharp_by_pairing(s.r(), alpha);
}

namespace {

struct Base {
  std::string name;
  LieAlgebra g;
  Multivector r;
  Cochain psi;
};

std::vector<Base> catalog_bases() {
  std::vector<Base> out;
  const auto aff = catalog::affine_example();
  out.push_back({"affine", aff.structure.algebra(), aff.structure.r(), aff.structure.psi()});
  out.push_back({"affine/psi1", aff.structure.algebra(), aff.structure.r(), *aff.printed_psi});
  for (int n : {2, 3}) {
    const auto q = catalog::q_example(n);
    out.push_back({"q" + std::to_string(n), q.structure.algebra(), q.structure.r(), q.structure.psi()});
    const auto gg = catalog::gg_example(n);
    out.push_back({"gg" + std::to_string(n), gg.structure.algebra(), gg.structure.r(), gg.structure.psi()});
  }
  return out;
}

}  // namespace

SuiteResult d_squared_suite(int trials, unsigned seed) {
  Random rng(seed);
  std::vector<LieAlgebra> algebras{catalog::gl(2), catalog::sl(3), catalog::gl(3),
                                   catalog::affine_example().structure.algebra()};
  SuiteResult res;
  for (int t = 0; t < trials; ++t) {
    const auto& g = algebras[static_cast<std::size_t>(t) % algebras.size()];
    const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<int>(std::min<std::size_t>(g.dim() - 1, 4))));
    const Cochain c = rng.element<CovectorTag>(g.dim(), k, k <= 2 ? 0.5 : 0.15);
    const Cochain dc = ce_differential(g, c);
    ++res.trials;
    if (!ce_differential(g, dc).is_zero()) res.fail("d(d c) != 0 in degree " + std::to_string(k));
    // The dense oracle is quadratic in the tuple count; use it on the smaller cases.
    if (g.dim() <= 6 && dc != dense_differential(g, c)) res.fail("sparse d disagrees with the definition");
  }
  return res;
}

SuiteResult jacobi_cybe_suite(int trials, unsigned seed) {
  Random rng(seed);
  const auto bases = catalog_bases();
  SuiteResult res;
  int valid = 0, invalid = 0, invariant = 0;
  for (int t = 0; t < trials; ++t) {
    const Base& b = bases[static_cast<std::size_t>(t) % bases.size()];
    const std::size_t n = b.g.dim();
    Multivector r = b.r;
    Cochain psi = b.psi;
    switch (t / static_cast<int>(bases.size()) % 3) {
      case 0: {  // (t r, psi / t) is again a solution
        const Rational s = rng.nonzero_rational();
        r = s * r;
        psi = (Rational(1) / s) * psi;
        break;
      }
      case 1: {  // r + s e_a ^ e_b
        Index a = static_cast<Index>(rng.integer(0, static_cast<int>(n) - 1));
        Index c = static_cast<Index>(rng.integer(0, static_cast<int>(n) - 2));
        if (c >= a) ++c;
        r += Multivector::basis(n, {a, c}, rng.nonzero_rational());
        break;
      }
      default: {  // psi + d beta stays closed
        psi += ce_differential(b.g, rng.element<CovectorTag>(n, 2, 0.3));
        break;
      }
    }
    ++res.trials;
    const auto s = TwistedTriangularStructure::unchecked(b.g, r, psi);
    const auto v = s.verify();
    const bool cybe = v.passed();
    const bool jacobi = !check_jacobi(dual_lie_algebra_unchecked(s));
    const bool invariant_defect = !cybe && is_invariant(b.g, v.residual);
    if (cybe) ++valid;
    else if (invariant_defect) ++invariant;
    else ++invalid;
    if (cybe && !jacobi) res.fail(b.name + ": CYBE holds but dual Jacobi fails");
    if (!cybe && jacobi != invariant_defect)
      res.fail(b.name + ": dual Jacobi " + (jacobi ? "holds" : "fails") + " with a " +
               (invariant_defect ? "" : "non-") + "invariant CYBE defect");
    if (cybe != cybe_by_definition(b.g, r, psi)) res.fail(b.name + ": CYBE disagrees with the definition");
    if (jacobi != dual_jacobi_by_definition(b.g, r, psi))
      res.fail(b.name + ": dual Jacobi disagrees with the definition");
  }
  res.summary = std::to_string(valid) + " valid, " + std::to_string(invalid) + " invalid, " +
                std::to_string(invariant) + " with invariant defect";
  if (valid == 0 || invalid == 0) res.fail("perturbations did not cover both outcomes");
  return res;
}

namespace {

struct RandomLinearized {
  LieAlgebra g;
  Subalgebra p;
  Cochain mu;
};

RandomLinearized random_linearize_input(Random& rng, int n) {
  const LieAlgebra g = catalog::gl(n);
  for (;;) {
    const auto positions = random_pattern_subalgebra(rng, n);
    if (positions.empty() || positions.size() % 2 != 0) continue;
    std::vector<Vector> gens;
    for (Index i : positions) gens.push_back(unit_vector(g.dim(), i));
    Subalgebra p = span_subalgebra(g, gens);
    Cochain mu = random_nondegenerate_mu(rng, g, p);
    return {g, std::move(p), std::move(mu)};
  }
}

}  // namespace

SuiteResult linearize_suite(int trials, unsigned seed) {
  Random rng(seed);
  SuiteResult res;
  std::map<std::size_t, int> dims;
  for (int t = 0; t < trials; ++t) {
    const int n = t % 2 == 0 ? 3 : 4;
    const auto in = random_linearize_input(rng, n);
    ++res.trials;
    ++dims[in.p.dim()];
    const std::string tag = "gl" + std::to_string(n) + " dim p " + std::to_string(in.p.dim());
    try {
      const auto s = linearize(in.g, in.p, in.mu);
      const auto v = verify_twisted_cybe(in.g, s.r(), s.psi());
      if (!v.passed()) res.fail(tag + ": verify_twisted_cybe rejects the linearization");
      if (!ce_differential(in.g, s.psi()).is_zero()) res.fail(tag + ": psi not closed");
      if (s.psi() != -ce_differential(in.g, in.mu)) res.fail(tag + ": psi != -d mu");
      if (carrier_and_kernel(s).carrier != in.p) res.fail(tag + ": carrier differs from p");
      // Inverse relation evaluated on the dual basis: mu(r#a, r#b) = r(a, b).
      const std::size_t d = in.g.dim();
      std::vector<Vector> sharp;
      for (Index a = 0; a < d; ++a) sharp.push_back(sharp_by_pairing(s.r(), unit_vector(d, a)));
      for (Index a = 0; a < d && res.failures == 0; ++a)
        for (Index b = a + 1; b < d; ++b) {
          if (evaluate(in.mu, std::vector<Vector>{sharp[a], sharp[b]}) != s.r().coeff({a, b})) {
            res.fail(tag + ": r is not inverse to mu on p");
            break;
          }
        }
      // The definition-level oracle is slow on gl_4; run it on every tenth input of each size.
      if (t % 20 < 2 && !cybe_by_definition(in.g, s.r(), s.psi()))
        res.fail(tag + ": CYBE by definition fails");
    } catch (const std::exception& e) {
      res.fail(tag + ": " + e.what());
    }
  }
  for (const auto& [d, c] : dims) res.summary += (res.summary.empty() ? "" : ", ") + std::string("dim ") +
                                                 std::to_string(d) + ": " + std::to_string(c);
  return res;
}

std::vector<std::pair<std::string, TwistedTriangularStructure>> structure_pool(int random_count, unsigned seed) {
  std::vector<std::pair<std::string, TwistedTriangularStructure>> out;
  for (const auto& b : catalog_bases()) out.emplace_back(b.name, TwistedTriangularStructure(b.g, b.r, b.psi));
  for (int n : {4, 5}) {
    out.emplace_back("q" + std::to_string(n), catalog::q_example(n).structure);
    out.emplace_back("gg" + std::to_string(n), catalog::gg_example(n).structure);
  }
  Random rng(seed);
  for (int t = 0; t < random_count; ++t) {
    const auto in = random_linearize_input(rng, 3);
    out.emplace_back("random gl3 #" + std::to_string(t), linearize(in.g, in.p, in.mu));
  }
  return out;
}

SuiteResult homomorphism_suite(const std::vector<std::pair<std::string, TwistedTriangularStructure>>& pool) {
  SuiteResult res;
  for (const auto& [name, s] : pool) {
    ++res.trials;
    const auto& g = s.algebra();
    const std::size_t n = g.dim();
    std::vector<Vector> sharp(n);
    for (Index i = 0; i < n; ++i) sharp[i] = sharp_by_pairing(s.r(), unit_vector(n, i));
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        const Vector br = dual_bracket_by_definition(g, s.r(), s.psi(), unit_vector(n, i), unit_vector(n, j));
        if (sharp_by_pairing(s.r(), br) != g.bracket(sharp[i], sharp[j]))
          res.fail(name + ": r# fails to be a homomorphism on (" + g.label(i) + "*, " + g.label(j) + "*)");
      }
  }
  return res;
}

SuiteResult kernel_suite(const std::vector<std::pair<std::string, TwistedTriangularStructure>>& pool) {
  SuiteResult res;
  for (const auto& [name, s] : pool) {
    ++res.trials;
    const auto& g = s.algebra();
    const std::size_t n = g.dim();
    const auto ck = carrier_and_kernel(s);
    // Kernel of the pairing matrix, read independently of r_sharp.
    Matrix m(n, n);
    for (Index j = 0; j < n; ++j) {
      const Vector col = sharp_by_pairing(s.r(), unit_vector(n, j));
      for (Index i = 0; i < n; ++i) m(i, j) = col[i];
    }
    const auto ker = kernel_basis(m);
    const auto ann = annihilator(g, ck.carrier);
    if (ker.size() != ann.size() || ker.size() + ck.carrier.dim() != n) {
      res.fail(name + ": kernel and annihilator dimensions differ");
      continue;
    }
    std::vector<Cochain> ker_c;
    for (const auto& v : ker) ker_c.push_back(Cochain::from_vector(v));
    if (canonical_covectors(ker_c, n).basis != canonical_covectors(ann, n).basis)
      res.fail(name + ": Ker r# != annihilator(carrier)");
    for (const auto& alpha : ker) {
      for (Index j = 0; j < n; ++j) {
        const Vector br = dual_bracket_by_definition(g, s.r(), s.psi(), alpha, unit_vector(n, j));
        if (!is_zero(sharp_by_pairing(s.r(), br))) res.fail(name + ": Ker r# is not an ideal");
      }
      for (const auto& beta : ker)
        if (!is_zero(dual_bracket_by_definition(g, s.r(), s.psi(), alpha, beta)))
          res.fail(name + ": Ker r# is not abelian");
    }
  }
  return res;
}

SuiteResult modular_agreement_suite(const std::vector<std::pair<std::string, TwistedTriangularStructure>>& pool) {
  SuiteResult res;
  for (const auto& [name, s] : pool) {
    ++res.trials;
    try {
      const auto m = modular_class(s);
      if (!m.all_passed()) res.fail(name + ": a modular-class crosscheck failed");
      if (m.representative != modular_representative_by_traces(s)) res.fail(name + ": representative != trace oracle");
      const auto via_kernel = -sharp_on_carrier(s.sharp(), m.carrier, m.chi_kernel.to_vector());
      const auto via_quotient = sharp_on_carrier(s.sharp(), m.carrier, m.chi_quotient.to_vector());
      if (via_kernel != via_quotient) res.fail(name + ": kernel and quotient formulas differ");
    } catch (const std::exception& e) {
      res.fail(name + ": " + e.what());
    }
  }
  return res;
}

}  // namespace testing_support
