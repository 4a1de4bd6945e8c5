#include "fuzz.hpp"

#include "frame.hpp"
#include "parallel.hpp"
#include "skewalgebra.hpp"
#include "structalg.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <set>

namespace skewmat {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

FElem random_nonzero(const Field& f, std::mt19937_64& rng) {
    if (f.finite()) {
        Int window = f.order() - 1;
        if (window > 40) window = 40;
        return f.element_at(1 + Int(rng()) % window);
    }
    static const int nums[] = {1, -1, 2, -2, 3, -3};
    static const int dens[] = {1, 2, 3};
    return f.from_fraction(nums[rng() % 6], dens[rng() % 3]);
}

FElem random_elem(const Field& f, std::mt19937_64& rng) {
    if (rng() % 3 == 0) return f.zero();
    return random_nonzero(f, rng);
}

Vec random_skew_elem(const SkewSet& c, std::mt19937_64& rng) {
    const Field& f = *c.field();
    Vec v(static_cast<std::size_t>(c.n()) * c.n(), f.zero());
    for (auto& x : v) x = random_elem(f, rng);
    return v;
}

bool vec_eq(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
        if (!f.eq(a[t], b[t])) return false;
    return true;
}

std::string pos_str(const Pos& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

bool pos_in(const PosSet& s, const Pos& p) {
    return std::binary_search(s.begin(), s.end(), p);
}

Vec unit_vec(const FieldPtr& f, std::size_t dim, std::size_t t) {
    Vec v(dim, f->zero());
    v[t] = f->one();
    return v;
}

using CheckFn = std::optional<std::string> (*)(const SkewSet&, std::uint64_t);

std::optional<std::string> check_json_round_trip(const SkewSet& c, std::uint64_t) {
    SkewSet back = SkewSet::from_json(c.to_json());
    if (!back.equal(c)) return "JSON round trip changed the set";
    return std::nullopt;
}

std::optional<std::string> check_nonzero_implies_simple(const SkewSet& c, std::uint64_t) {
    unsigned n = c.n();
    bool all_nonzero = true, diag_nonzero = true;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            if (i != j && c.zero_at(i, j, i)) diag_nonzero = false;
            for (unsigned k = 1; k <= n; ++k)
                if (c.zero_at(i, j, k)) all_nonzero = false;
        }
    if (!diag_nonzero) return std::nullopt;
    if (!is_simple(c).simple) {
        return std::string(all_nonzero ? "all entries" : "all c[i][j][i]") +
               " nonzero yet the set is not simple";
    }
    return std::nullopt;
}

std::optional<std::string> check_closure_laws(const SkewSet& c, std::uint64_t seed) {
    std::mt19937_64 rng(mix(seed, 0xc105));
    unsigned n = c.n();
    PosSet s1, s2;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            unsigned r = rng() % 4;
            if (r == 0) s1.push_back({i, j});
            if (r <= 1) s2.push_back({i, j});
        }
    PosSet cl1 = closure(c, s1), cl2 = closure(c, s2);
    for (const auto& p : s1)
        if (!pos_in(cl1, p)) return "closure not extensive at " + pos_str(p);
    if (closure(c, cl1) != cl1) return "closure not idempotent";
    for (const auto& p : cl1)
        if (!pos_in(cl2, p)) return "closure not monotone at " + pos_str(p);
    if (!is_closed(c, cl1)) return "closure output not closed";
    return std::nullopt;
}

std::optional<std::string> check_ideal_lattice(const SkewSet& c, std::uint64_t seed) {
    IdealEnumeration e = enumerate_ideals(c, 512);
    if (e.truncated) return std::nullopt;
    std::size_t full = static_cast<std::size_t>(c.n()) * c.n();
    bool has_empty = false, has_full = false;
    for (const auto& ide : e.ideals) {
        if (!is_closed(c, ide)) return "enumerated set is not closed";
        if (ide.empty()) has_empty = true;
        if (ide.size() == full) has_full = true;
    }
    if (!has_empty || !has_full) return "lattice misses a trivial ideal";
    std::set<PosSet> all(e.ideals.begin(), e.ideals.end());
    std::mt19937_64 rng(mix(seed, 0x1dea1));
    for (int t = 0; t < 8; ++t) {
        const PosSet& a = e.ideals[rng() % e.ideals.size()];
        const PosSet& b = e.ideals[rng() % e.ideals.size()];
        PosSet u, m;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
        if (!all.count(u)) return "union of two ideals missing from the lattice";
        if (!all.count(m)) return "intersection of two ideals missing from the lattice";
    }
    return std::nullopt;
}

std::optional<std::string> check_homogeneity(const SkewSet& c, std::uint64_t seed) {
    std::mt19937_64 rng(mix(seed, 0x40e0));
    const FieldPtr& f = c.field();
    unsigned n = c.n();
    Vec a(static_cast<std::size_t>(n) * n, f->zero());
    for (auto& x : a)
        if (rng() % 2 == 0) x = random_elem(*f, rng);
    std::vector<Vec> gen = ideal_generated(c, a);
    PosSet cl = closure(c, elem_support(c, a));
    if (gen.size() != cl.size()) {
        return "ideal dimension " + std::to_string(gen.size()) + " != closure size " +
               std::to_string(cl.size());
    }
    RowSpace rs(f, a.size());
    for (const auto& v : gen) rs.insert(v);
    for (const auto& p : cl) {
        if (!rs.contains(unit_vec(f, a.size(), (p.first - 1) * n + (p.second - 1))))
            return "closure unit " + pos_str(p) + " outside the generated ideal";
    }
    return std::nullopt;
}

std::optional<std::string> check_unit_and_products(const SkewSet& c, std::uint64_t seed) {
    std::mt19937_64 rng(mix(seed, 0x111));
    const Field& f = *c.field();
    Vec one = elem_identity(c);
    for (int t = 0; t < 4; ++t) {
        Vec a = random_skew_elem(c, rng);
        if (!vec_eq(f, multiply(c, one, a), a)) return "1*a != a";
        if (!vec_eq(f, multiply(c, a, one), a)) return "a*1 != a";
    }
    unsigned n = c.n();
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            Vec eij = elem_unit(c, i, j);
            if (!vec_eq(f, multiply(c, elem_unit(c, i, i), eij), eij))
                return "e_ii e_ij != e_ij at " + pos_str({i, j});
            if (!vec_eq(f, multiply(c, eij, elem_unit(c, j, j)), eij))
                return "e_ij e_jj != e_ij at " + pos_str({i, j});
        }
    return std::nullopt;
}

std::optional<std::string> check_associator_consistency(const SkewSet& c, std::uint64_t seed) {
    std::mt19937_64 rng(mix(seed, 0xacc));
    unsigned n = c.n();
    const Field& f = *c.field();
    for (int t = 0; t < 24; ++t) {
        unsigned i = 1 + rng() % n, j = 1 + rng() % n, k = 1 + rng() % n, l = 1 + rng() % n;
        Vec a = associator(c, elem_unit(c, i, j), elem_unit(c, j, k), elem_unit(c, k, l));
        Vec expect = scale_vec(chain_obstruction(c, i, j, k, l), elem_unit(c, i, l));
        if (!vec_eq(f, a, expect)) return "basis associator differs from its chain obstruction";
    }
    auto viol = associativity_violation(c);
    if (viol) {
        if (f.is_zero(chain_obstruction(c, viol->i, viol->j, viol->k, viol->l)))
            return "reported associativity violation has zero obstruction";
    } else {
        for (int t = 0; t < 6; ++t) {
            Vec x = random_skew_elem(c, rng);
            Vec y = random_skew_elem(c, rng);
            Vec z = random_skew_elem(c, rng);
            if (!is_zero_vec(f, associator(c, x, y, z)))
                return "associative set with a nonzero associator";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_nucleus_positions(const SkewSet& c, std::uint64_t) {
    NucleusReport rep = nuclei(c);
    unsigned n = c.n();
    const Field& f = *c.field();
    PosSet meet;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            Pos p{i, j};
            if (pos_in(rep.left, p) && pos_in(rep.middle, p) && pos_in(rep.right, p))
                meet.push_back(p);
        }
    if (meet != rep.nucleus) return "nucleus is not the meet of the one-sided nuclei";
    const PosSet* sides[3] = {&rep.left, &rep.middle, &rep.right};
    const char* names[3] = {"left", "middle", "right"};
    for (int s = 0; s < 3; ++s) {
        const PosSet& N = *sides[s];
        for (unsigned i = 1; i <= n; ++i)
            if (!pos_in(N, {i, i}))
                return std::string(names[s]) + " nucleus misses the diagonal";
        for (const auto& p : N) {
            unsigned i = p.first, j = p.second;
            if (!f.eq(c.at(i, j, i), c.at(j, i, j)))
                return std::string(names[s]) + " nucleus holds " + pos_str(p) +
                       " with c[i][j][i] != c[j][i][j]";
            if (!f.is_zero(c.at(i, j, i)) && !pos_in(N, {j, i}))
                return std::string(names[s]) + " nucleus misses the reverse of " + pos_str(p);
        }
        for (const auto& p : N)
            for (const auto& q : N) {
                if (p.second != q.first) continue;
                if (!c.zero_at(p.first, p.second, q.second) && !pos_in(N, {p.first, q.second}))
                    return std::string(names[s]) + " nucleus not closed under " + pos_str(p) +
                           "*" + pos_str(q);
            }
    }
    return std::nullopt;
}

// Every one-sided membership decision is replayed against the bilinear
// associator on the only basis pairs that can interact with the slot.
std::optional<std::string> check_nucleus_associators(const SkewSet& c, std::uint64_t) {
    NucleusReport rep = nuclei(c);
    unsigned n = c.n();
    const Field& f = *c.field();
    auto left_ok = [&](unsigned i, unsigned j) {
        for (unsigned b = 1; b <= n; ++b)
            for (unsigned d = 1; d <= n; ++d)
                if (!is_zero_vec(f, associator(c, elem_unit(c, i, j), elem_unit(c, j, b),
                                               elem_unit(c, b, d))))
                    return false;
        return true;
    };
    auto middle_ok = [&](unsigned i, unsigned j) {
        for (unsigned a = 1; a <= n; ++a)
            for (unsigned d = 1; d <= n; ++d)
                if (!is_zero_vec(f, associator(c, elem_unit(c, a, i), elem_unit(c, i, j),
                                               elem_unit(c, j, d))))
                    return false;
        return true;
    };
    auto right_ok = [&](unsigned i, unsigned j) {
        for (unsigned a = 1; a <= n; ++a)
            for (unsigned b = 1; b <= n; ++b)
                if (!is_zero_vec(f, associator(c, elem_unit(c, a, b), elem_unit(c, b, i),
                                               elem_unit(c, i, j))))
                    return false;
        return true;
    };
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            Pos p{i, j};
            if (left_ok(i, j) != pos_in(rep.left, p))
                return "left nucleus disagrees with direct associators at " + pos_str(p);
            if (middle_ok(i, j) != pos_in(rep.middle, p))
                return "middle nucleus disagrees with direct associators at " + pos_str(p);
            if (right_ok(i, j) != pos_in(rep.right, p))
                return "right nucleus disagrees with direct associators at " + pos_str(p);
        }
    return std::nullopt;
}

std::optional<std::string> check_s_j_split(const SkewSet& c, std::uint64_t) {
    NucleusReport rep = nuclei(c);
    const Field& f = *c.field();
    PosSet jdirect;
    for (const auto& p : rep.nucleus)
        if (f.is_zero(c.at(p.first, p.second, p.first))) jdirect.push_back(p);
    if (jdirect != rep.j_positions) return "J support differs from the direct computation";
    if (rep.regular != jdirect.empty()) return "regular flag inconsistent with J";
    if (rep.s_is_partition) {
        PosSet from_blocks;
        for (const auto& b : rep.s_blocks)
            for (unsigned i : b)
                for (unsigned j : b) from_blocks.push_back({i, j});
        sort_pos_set(from_blocks);
        PosSet s_expected;
        for (const auto& p : rep.nucleus)
            if (!pos_in(jdirect, p)) s_expected.push_back(p);
        if (from_blocks != s_expected) return "S blocks do not tile N minus J";
        std::vector<unsigned> atoms;
        for (const auto& b : rep.s_blocks) atoms.push_back(static_cast<unsigned>(b.size()));
        std::sort(atoms.begin(), atoms.end());
        if (atoms != rep.atoms) return "atom degrees differ from block sizes";
    }
    return std::nullopt;
}

// Nucleus regular <=> the nucleus positions tile as a partition whose blocks
// restrict to simple skew sets, with both sides recomputed from scratch.
std::optional<std::string> check_main7(const SkewSet& c, std::uint64_t) {
    NucleusReport rep = nuclei(c);
    unsigned n = c.n();
    const Field& f = *c.field();
    bool regular = true;
    for (const auto& p : rep.nucleus)
        if (f.is_zero(c.at(p.first, p.second, p.first))) regular = false;
    std::vector<std::vector<bool>> rel(n + 1, std::vector<bool>(n + 1, false));
    for (const auto& p : rep.nucleus) rel[p.first][p.second] = true;
    bool partition = true;
    for (unsigned i = 1; i <= n && partition; ++i) {
        if (!rel[i][i]) partition = false;
        for (unsigned j = 1; j <= n && partition; ++j) {
            if (rel[i][j] != rel[j][i]) partition = false;
            for (unsigned k = 1; k <= n; ++k)
                if (rel[i][j] && rel[j][k] && !rel[i][k]) {
                    partition = false;
                    break;
                }
        }
    }
    bool blocks_simple = partition;
    if (partition) {
        std::vector<bool> seen(n + 1, false);
        for (unsigned i = 1; i <= n && blocks_simple; ++i) {
            if (seen[i]) continue;
            std::vector<unsigned> block;
            for (unsigned j = 1; j <= n; ++j)
                if (rel[i][j]) {
                    block.push_back(j);
                    seen[j] = true;
                }
            if (!is_simple(c.restrict(block)).simple) blocks_simple = false;
        }
    }
    bool lhs = partition && blocks_simple;
    if (lhs != regular) {
        return std::string("nucleus regular = ") + (regular ? "true" : "false") +
               " but simple-block partition = " + (lhs ? "true" : "false");
    }
    if (regular) {
        if (!rep.regular) return "report regular flag false on a regular nucleus";
        if (!rep.s_is_partition) return "regular nucleus but S is not a partition";
        if (!rep.j_positions.empty()) return "regular nucleus with nonempty J";
        unsigned total = 0;
        for (unsigned a : rep.atoms) total += a;
        if (total != n) return "atom degrees sum to " + std::to_string(total);
    }
    return std::nullopt;
}

std::optional<std::string> check_center(const SkewSet& c, std::uint64_t) {
    std::vector<Vec> z = center(c);
    if (z.size() != 1) return "center dimension " + std::to_string(z.size());
    const Field& f = *c.field();
    unsigned n = c.n();
    const Vec& v = z[0];
    const FElem& lambda = v[0];
    if (f.is_zero(lambda)) return "center basis vector vanishes at (1,1)";
    for (unsigned t = 0; t < n * n; ++t) {
        bool diag = (t / n) == (t % n);
        if (diag ? !f.eq(v[t], lambda) : !f.is_zero(v[t]))
            return "center basis vector is not a scalar matrix";
    }
    return std::nullopt;
}

std::optional<std::string> check_nucleus_linear(const SkewSet& c, std::uint64_t) {
    if (c.n() > 3) return std::nullopt;
    StructAlgebra a = StructAlgebra::from_skew(c);
    NucleusSpaces sp = nucleus_linear(a);
    NucleusReport rep = nuclei(c);
    const FieldPtr& f = c.field();
    std::size_t dim = a.dim();
    unsigned n = c.n();
    auto match = [&](const std::vector<Vec>& space, const PosSet& support,
                     const char* name) -> std::optional<std::string> {
        if (space.size() != support.size()) {
            return std::string(name) + " dimension " + std::to_string(space.size()) +
                   " != support size " + std::to_string(support.size());
        }
        RowSpace rs(f, dim);
        for (const auto& v : space) rs.insert(v);
        for (const auto& p : support)
            if (!rs.contains(unit_vec(f, dim, (p.first - 1) * n + (p.second - 1))))
                return std::string(name) + " misses the unit at " + pos_str(p);
        return std::nullopt;
    };
    if (auto r = match(sp.left, rep.left, "left nucleus")) return r;
    if (auto r = match(sp.middle, rep.middle, "middle nucleus")) return r;
    if (auto r = match(sp.right, rep.right, "right nucleus")) return r;
    if (auto r = match(sp.nucleus, rep.nucleus, "nucleus")) return r;
    if (sp.center.size() != 1) return "linear-path center dimension != 1";
    return std::nullopt;
}

// sigma through structure constants must agree with the combinatorial S/J
// picture: dimensions always, squared block sizes when S is a partition.
std::optional<std::string> check_sigma_quotient(const SkewSet& c, std::uint64_t) {
    if (c.n() > 3) return std::nullopt;
    NucleusReport rep = nuclei(c);
    StructAlgebra a = StructAlgebra::from_skew(c);
    std::vector<Vec> cand;
    for (const auto& p : rep.j_positions) cand.push_back(elem_unit(c, p.first, p.second));
    SigmaResult sig;
    try {
        sig = sigma(a, &cand);
    } catch (const error& e) {
        if (e.code() == errc::no_generator) return std::nullopt;  // bounded search gave up
        return std::string("sigma failed: ") + e.what();
    }
    if (sig.nucleus_dim != rep.nucleus.size())
        return "sigma nucleus dimension " + std::to_string(sig.nucleus_dim);
    if (sig.radical_dim != rep.j_positions.size())
        return "sigma radical dimension " + std::to_string(sig.radical_dim);
    unsigned total = 0;
    for (const auto& at : sig.atoms) total += at.dim;
    if (total != rep.nucleus.size() - rep.j_positions.size())
        return "sigma atom dimensions sum to " + std::to_string(total);
    if (rep.s_is_partition) {
        std::vector<unsigned> expect;
        for (const auto& b : rep.s_blocks)
            expect.push_back(static_cast<unsigned>(b.size() * b.size()));
        std::sort(expect.begin(), expect.end());
        std::vector<unsigned> got;
        for (const auto& at : sig.atoms) {
            if (at.center_dim != 1)
                return "skew sigma atom with center dimension " + std::to_string(at.center_dim);
            got.push_back(at.dim);
        }
        if (got != expect) return "sigma atom dimensions differ from squared block sizes";
    }
    return std::nullopt;
}

std::optional<std::string> check_semiassoc_delta(const SkewSet& c, std::uint64_t seed) {
    StructAlgebra a = StructAlgebra::from_skew(c);
    unsigned n = c.n();
    std::vector<Vec> delta;
    for (unsigned i = 1; i <= n; ++i) delta.push_back(elem_unit(c, i, i));
    SemiassocReport rep = verify_semiassociative(a, delta, mix(seed, 0x5e31));
    if (!rep.ok) {
        return "diagonal certificate failed at stage " + std::to_string(rep.failed_stage) +
               ": " + rep.detail;
    }
    return std::nullopt;
}

std::optional<std::string> check_equivalence_laws(const SkewSet& c, std::uint64_t seed) {
    std::mt19937_64 rng(mix(seed, 0xe901));
    const Field& f = *c.field();
    unsigned n = c.n();
    EquivResult self = equivalent(c, c);
    if (!self.equivalent) return "set not equivalent to itself";
    if (!check_equiv_witness(c, c, self.gamma)) return "reflexive witness fails verification";
    std::vector<std::vector<FElem>> gamma(n, std::vector<FElem>(n, f.one()));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j) gamma[i][j] = random_nonzero(f, rng);
    SkewSet scaled = c;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (SkewSet::forced(i, j, k)) continue;
                scaled.set(i, j, k, gamma[i - 1][j - 1] * gamma[j - 1][k - 1] /
                                        gamma[i - 1][k - 1] * c.at(i, j, k));
            }
    EquivResult fwd = equivalent(c, scaled);
    if (!fwd.equivalent) return "scaled set reported inequivalent";
    if (!check_equiv_witness(c, scaled, fwd.gamma)) return "scaling witness fails verification";
    if (!equivalent(scaled, c).equivalent) return "equivalence not symmetric";
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (SkewSet::forced(i, j, k) || c.zero_at(i, j, k)) continue;
                SkewSet punched = c;
                punched.set(i, j, k, f.zero());
                EquivResult r = equivalent(c, punched);
                if (r.equivalent) return "pattern change reported equivalent";
                if (r.reason != "pattern") return "pattern mismatch classified as " + r.reason;
                return std::nullopt;
            }
    return std::nullopt;
}

std::optional<std::string> check_tensor_laws(const SkewSet& c, std::uint64_t seed) {
    std::mt19937_64 rng(mix(seed, 0x7e45));
    unsigned n = c.n();
    SkewSet one = SkewSet::trivial(c.field(), 1);
    if (!c.tensor(one).equal(c)) return "c tensor 1 differs from c";
    if (!one.tensor(c).equal(c)) return "1 tensor c differs from c";
    unsigned n2 = (n <= 3) ? 1 + rng() % 3 : 1 + rng() % 2;
    SkewSet c2 = random_skewset(c.field(), n2, 0.3, mix(seed, 0x7e46));
    SkewSet t = c.tensor(c2);
    unsigned big = n * n2;
    for (unsigned bi = 1; bi <= big; ++bi)
        for (unsigned bj = 1; bj <= big; ++bj)
            for (unsigned bk = 1; bk <= big; ++bk) {
                unsigned i = (bi - 1) / n2 + 1, i2 = (bi - 1) % n2 + 1;
                unsigned j = (bj - 1) / n2 + 1, j2 = (bj - 1) % n2 + 1;
                unsigned k = (bk - 1) / n2 + 1, k2 = (bk - 1) % n2 + 1;
                if (!c.field()->eq(t.at(bi, bj, bk),
                                   c.at(i, j, k) * c2.at(i2, j2, k2)))
                    return "tensor entry differs from the product formula";
            }
    StructAlgebra prod = tensor_algebras(StructAlgebra::from_skew(c),
                                         StructAlgebra::from_skew(c2));
    if (!prod.equal_under_relabeling(StructAlgebra::from_skew(t),
                                     tensor_basis_relabeling(n, n2)))
        return "tensor algebra differs from the tensored skew set";
    NucleusReport rt = nuclei(t), ra = nuclei(c), rb = nuclei(c2);
    PosSet expected;
    for (const auto& p : ra.nucleus)
        for (const auto& q : rb.nucleus)
            expected.push_back(
                {(p.first - 1) * n2 + q.first, (p.second - 1) * n2 + q.second});
    sort_pos_set(expected);
    if (expected != rt.nucleus) return "tensor nucleus differs from the nucleus tensor";
    if (ra.regular && rb.regular) {
        if (!rt.regular) return "tensor of regular sets not regular";
        if (ra.s_is_partition && rb.s_is_partition && rt.s_is_partition) {
            std::vector<unsigned> prods;
            for (unsigned x : ra.atoms)
                for (unsigned y : rb.atoms) prods.push_back(x * y);
            std::sort(prods.begin(), prods.end());
            if (prods != rt.atoms) return "tensor atoms are not pairwise products";
        }
    }
    return std::nullopt;
}

struct NamedCheck {
    const char* name;
    CheckFn fn;
};

const std::vector<NamedCheck>& battery() {
    static const std::vector<NamedCheck> checks = {
        {"json_round_trip", check_json_round_trip},
        {"nonzero_entries_imply_simple", check_nonzero_implies_simple},
        {"closure_laws", check_closure_laws},
        {"ideal_lattice_closed", check_ideal_lattice},
        {"homogeneous_ideals", check_homogeneity},
        {"unit_and_diagonal_products", check_unit_and_products},
        {"associator_chain_consistency", check_associator_consistency},
        {"nucleus_position_laws", check_nucleus_positions},
        {"nucleus_associator_agreement", check_nucleus_associators},
        {"nucleus_s_j_split", check_s_j_split},
        {"regular_iff_simple_partition", check_main7},
        {"scalar_center", check_center},
        {"nucleus_linear_agreement", check_nucleus_linear},
        {"sigma_quotient_agreement", check_sigma_quotient},
        {"diagonal_certificate", check_semiassoc_delta},
        {"equivalence_laws", check_equivalence_laws},
        {"tensor_laws", check_tensor_laws},
    };
    return checks;
}

bool reproduces(CheckFn fn, const SkewSet& c, std::uint64_t seed) {
    try {
        return fn(c, seed).has_value();
    } catch (const error&) {
        return true;
    }
}

// Greedy index removal: keep dropping one index while the check still fails.
Json minimize(const SkewSet& c0, CheckFn fn, std::uint64_t seed) {
    SkewSet cur = c0;
    bool shrunk = true;
    while (shrunk && cur.n() > 1) {
        shrunk = false;
        for (unsigned drop = 1; drop <= cur.n(); ++drop) {
            std::vector<unsigned> keep;
            for (unsigned t = 1; t <= cur.n(); ++t)
                if (t != drop) keep.push_back(t);
            SkewSet smaller = cur.restrict(keep);
            if (reproduces(fn, smaller, seed)) {
                cur = smaller;
                shrunk = true;
                break;
            }
        }
    }
    return cur.to_json();
}

}  // namespace

std::vector<std::string> fuzz_invariant_names() {
    std::vector<std::string> names;
    for (const auto& nc : battery()) names.push_back(nc.name);
    return names;
}

std::vector<std::pair<std::string, std::string>> run_battery(const SkewSet& c,
                                                             std::uint64_t instance_seed) {
    std::vector<std::pair<std::string, std::string>> fails;
    for (const auto& nc : battery()) {
        try {
            if (auto d = nc.fn(c, instance_seed)) fails.emplace_back(nc.name, *d);
        } catch (const error& e) {
            fails.emplace_back(nc.name,
                               std::string("error ") + errc_name(e.code()) + ": " + e.what());
        }
    }
    return fails;
}

FuzzReport run_fuzz(const FuzzOptions& opt) {
    if (!opt.field) fail(errc::bad_input, "fuzz options need a field");
    if (opt.n < 1) fail(errc::bad_input, "fuzz degree must be positive");
    FuzzReport rep;
    rep.count = opt.count;
    std::vector<std::vector<FuzzViolation>> slots(opt.count);
    std::atomic<std::size_t> checks{0};
    parallel_for(opt.count, [&](std::size_t t) {
        std::uint64_t s = mix(opt.seed, t);
        SkewSet c = random_skewset(opt.field, opt.n, opt.density, s);
        auto fails = run_battery(c, s);
        checks += battery().size();
        for (auto& [name, detail] : fails) {
            FuzzViolation v;
            v.invariant = name;
            v.index = t;
            v.input = c.to_json();
            v.detail = detail;
            for (const auto& nc : battery())
                if (name == nc.name) {
                    v.minimized = minimize(c, nc.fn, s);
                    break;
                }
            slots[t].push_back(std::move(v));
        }
    });
    for (auto& sl : slots)
        for (auto& v : sl) rep.violations.push_back(std::move(v));
    rep.checks = checks.load();
    return rep;
}

Json FuzzReport::to_json() const {
    Json j;
    j["count"] = count;
    j["checks"] = checks;
    j["pass"] = pass();
    Json arr = Json::array();
    for (const auto& v : violations) {
        Json vj;
        vj["invariant"] = v.invariant;
        vj["index"] = v.index;
        vj["detail"] = v.detail;
        vj["input"] = v.input;
        vj["minimized"] = v.minimized;
        arr.push_back(std::move(vj));
    }
    j["violations"] = std::move(arr);
    return j;
}

}  // namespace skewmat
