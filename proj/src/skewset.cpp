#include "skewset.hpp"

#include "smith.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace skewmat {

SkewSet::SkewSet(FieldPtr f, unsigned n) : f_(std::move(f)), n_(n) {
    if (n_ < 1 || n_ > 64) fail(errc::bad_shape, "skew set degree out of range");
    c_.assign(static_cast<std::size_t>(n_) * n_ * n_, f_->one());
}

SkewSet SkewSet::trivial(FieldPtr f, unsigned n) { return SkewSet(std::move(f), n); }

const FElem& SkewSet::at(unsigned i, unsigned j, unsigned k) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_) {
        fail(errc::bad_shape, "skew set index out of range");
    }
    return c_[idx(i, j, k)];
}

bool SkewSet::zero_at(unsigned i, unsigned j, unsigned k) const {
    return f_->is_zero(at(i, j, k));
}

void SkewSet::set(unsigned i, unsigned j, unsigned k, FElem v) {
    if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_) {
        fail(errc::bad_shape, "skew set index out of range");
    }
    f_->check(v);
    if (forced(i, j, k) && !f_->is_one(v)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "," << k << ") is constrained to 1";
        fail(errc::not_reduced, os.str());
    }
    c_[idx(i, j, k)] = std::move(v);
}

SkewSet SkewSet::tensor(const SkewSet& other) const {
    if (!f_->same(*other.f_)) fail(errc::field_mismatch, "tensor of skew sets over different fields");
    unsigned n1 = n_, n2 = other.n_;
    SkewSet r(f_, n1 * n2);
    for (unsigned i1 = 1; i1 <= n1; ++i1)
        for (unsigned i2 = 1; i2 <= n2; ++i2)
            for (unsigned j1 = 1; j1 <= n1; ++j1)
                for (unsigned j2 = 1; j2 <= n2; ++j2)
                    for (unsigned k1 = 1; k1 <= n1; ++k1)
                        for (unsigned k2 = 1; k2 <= n2; ++k2) {
                            unsigned I = (i1 - 1) * n2 + i2;
                            unsigned J = (j1 - 1) * n2 + j2;
                            unsigned K = (k1 - 1) * n2 + k2;
                            if (forced(I, J, K)) continue;
                            r.c_[r.idx(I, J, K)] = f_->mul(at(i1, j1, k1), other.at(i2, j2, k2));
                        }
    return r;
}

SkewSet SkewSet::relabel(const std::vector<unsigned>& perm) const {
    if (perm.size() != n_) fail(errc::bad_shape, "relabeling permutation has wrong length");
    std::vector<bool> seen(n_ + 1, false);
    for (unsigned v : perm) {
        if (v < 1 || v > n_ || seen[v]) fail(errc::bad_input, "not a permutation of 1..n");
        seen[v] = true;
    }
    SkewSet r(f_, n_);
    for (unsigned i = 1; i <= n_; ++i)
        for (unsigned j = 1; j <= n_; ++j)
            for (unsigned k = 1; k <= n_; ++k) {
                if (forced(i, j, k)) continue;
                r.c_[r.idx(i, j, k)] = at(perm[i - 1], perm[j - 1], perm[k - 1]);
            }
    return r;
}

SkewSet SkewSet::restrict(const std::vector<unsigned>& indices) const {
    for (unsigned v : indices) {
        if (v < 1 || v > n_) fail(errc::bad_input, "restriction index out of range");
    }
    SkewSet r(f_, static_cast<unsigned>(indices.size()));
    unsigned m = static_cast<unsigned>(indices.size());
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= m; ++j)
            for (unsigned k = 1; k <= m; ++k) {
                if (forced(i, j, k)) continue;
                r.c_[r.idx(i, j, k)] = at(indices[i - 1], indices[j - 1], indices[k - 1]);
            }
    return r;
}

bool SkewSet::same_pattern(const SkewSet& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t t = 0; t < c_.size(); ++t) {
        if (f_->is_zero(c_[t]) != o.f_->is_zero(o.c_[t])) return false;
    }
    return true;
}

bool SkewSet::equal(const SkewSet& o) const {
    if (n_ != o.n_ || !f_->same(*o.f_)) return false;
    for (std::size_t t = 0; t < c_.size(); ++t) {
        if (c_[t].v != o.c_[t].v) return false;
    }
    return true;
}

Json SkewSet::to_json() const {
    Json j;
    j["n"] = n_;
    j["field"] = f_->to_json();
    j["default"] = "1";
    Json entries = Json::array();
    for (unsigned i = 1; i <= n_; ++i)
        for (unsigned j2 = 1; j2 <= n_; ++j2)
            for (unsigned k = 1; k <= n_; ++k) {
                if (forced(i, j2, k)) continue;
                const FElem& v = at(i, j2, k);
                if (f_->is_one(v)) continue;
                Json e;
                e["i"] = i;
                e["j"] = j2;
                e["k"] = k;
                e["v"] = f_->elem_to_json(v);
                entries.push_back(std::move(e));
            }
    j["entries"] = std::move(entries);
    return j;
}

SkewSet SkewSet::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("field")) {
        fail(errc::bad_input, "skew set JSON requires \"n\" and \"field\"");
    }
    Int n_raw = json_to_int(j["n"]);
    if (n_raw < 1 || n_raw > 64) fail(errc::bad_shape, "skew set degree out of range");
    unsigned n = static_cast<unsigned>(to_u64(n_raw));
    FieldPtr f = Field::from_json(j["field"]);
    FElem def = f->one();
    if (j.contains("default")) def = f->elem_from_json(j["default"]);
    SkewSet r(f, n);
    if (!f->is_one(def)) {
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j2 = 1; j2 <= n; ++j2)
                for (unsigned k = 1; k <= n; ++k) {
                    if (!forced(i, j2, k)) r.set(i, j2, k, def);
                }
    }
    if (j.contains("entries")) {
        if (!j["entries"].is_array()) fail(errc::bad_input, "\"entries\" must be an array");
        std::vector<bool> seen(static_cast<std::size_t>(n) * n * n, false);
        for (const auto& e : j["entries"]) {
            if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") ||
                !e.contains("v")) {
                fail(errc::bad_input, "each entry needs \"i\", \"j\", \"k\", \"v\"");
            }
            Int ii = json_to_int(e["i"]), jj = json_to_int(e["j"]), kk = json_to_int(e["k"]);
            if (ii < 1 || ii > n || jj < 1 || jj > n || kk < 1 || kk > n) {
                fail(errc::bad_shape, "entry index out of range");
            }
            unsigned i = static_cast<unsigned>(to_u64(ii));
            unsigned j2 = static_cast<unsigned>(to_u64(jj));
            unsigned k = static_cast<unsigned>(to_u64(kk));
            if (forced(i, j2, k)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j2 << "," << k
                   << ") is a constrained position and may not appear";
                fail(errc::not_reduced, os.str());
            }
            std::size_t flat = (static_cast<std::size_t>(i - 1) * n + (j2 - 1)) * n + (k - 1);
            if (seen[flat]) {
                std::ostringstream os;
                os << "duplicate entry (" << i << "," << j2 << "," << k << ")";
                fail(errc::bad_input, os.str());
            }
            seen[flat] = true;
            r.set(i, j2, k, f->elem_from_json(e["v"]));
        }
    }
    return r;
}

std::vector<Violation> validate_skewset_json(const Json& j) {
    std::vector<Violation> out;
    if (!j.is_object() || !j.contains("n") || !j.contains("field")) {
        fail(errc::bad_input, "skew set JSON requires \"n\" and \"field\"");
    }
    Int n_raw = json_to_int(j["n"]);
    if (n_raw < 1 || n_raw > 64) fail(errc::bad_shape, "skew set degree out of range");
    unsigned n = static_cast<unsigned>(to_u64(n_raw));
    FieldPtr f = Field::from_json(j["field"]);
    FElem def = f->one();
    if (j.contains("default")) def = f->elem_from_json(j["default"]);
    bool def_ok = f->is_one(def);
    std::vector<bool> listed(static_cast<std::size_t>(n) * n * n, false);
    if (j.contains("entries") && j["entries"].is_array()) {
        for (const auto& e : j["entries"]) {
            Int ii = json_to_int(e["i"]), jj = json_to_int(e["j"]), kk = json_to_int(e["k"]);
            if (ii < 1 || ii > n || jj < 1 || jj > n || kk < 1 || kk > n) {
                fail(errc::bad_shape, "entry index out of range");
            }
            unsigned i = static_cast<unsigned>(to_u64(ii));
            unsigned j2 = static_cast<unsigned>(to_u64(jj));
            unsigned k = static_cast<unsigned>(to_u64(kk));
            listed[(static_cast<std::size_t>(i - 1) * n + (j2 - 1)) * n + (k - 1)] = true;
            if (SkewSet::forced(i, j2, k)) {
                FElem v = f->elem_from_json(e["v"]);
                if (!f->is_one(v)) out.push_back({i, j2, k, f->to_string(v)});
            }
        }
    }
    if (!def_ok) {
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j2 = 1; j2 <= n; ++j2)
                for (unsigned k = 1; k <= n; ++k) {
                    if (!SkewSet::forced(i, j2, k)) continue;
                    if (!listed[(static_cast<std::size_t>(i - 1) * n + (j2 - 1)) * n + (k - 1)]) {
                        out.push_back({i, j2, k, f->to_string(def)});
                    }
                }
    }
    return out;
}

bool check_equiv_witness(const SkewSet& a, const SkewSet& b,
                         const std::vector<std::vector<FElem>>& gamma) {
    unsigned n = a.n();
    if (b.n() != n || gamma.size() != n) return false;
    const Field& F = *a.field();
    for (unsigned i = 0; i < n; ++i) {
        if (gamma[i].size() != n) return false;
        if (!F.is_one(gamma[i][i])) return false;
        for (unsigned j = 0; j < n; ++j) {
            if (F.is_zero(gamma[i][j])) return false;
        }
    }
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                FElem lhs = b.at(i, j, k);
                FElem rhs = F.mul(F.mul(gamma[i - 1][j - 1], gamma[j - 1][k - 1]),
                                  F.mul(F.inv(gamma[i - 1][k - 1]), a.at(i, j, k)));
                if (!F.eq(lhs, rhs)) return false;
            }
    return true;
}

EquivResult equivalent(const SkewSet& a, const SkewSet& b) {
    if (a.n() != b.n()) fail(errc::bad_shape, "equivalence requires equal degrees");
    if (!a.field()->same(*b.field())) fail(errc::field_mismatch, "equivalence requires one field");
    unsigned n = a.n();
    const FieldPtr& fp = a.field();
    const Field& F = *fp;

    EquivResult res;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (a.zero_at(i, j, k) != b.zero_at(i, j, k)) {
                    res.reason = "pattern";
                    std::ostringstream os;
                    os << "zero patterns differ at (" << i << "," << j << "," << k << ")";
                    res.detail = os.str();
                    return res;
                }
            }

    // unknowns: gamma_{ij} for i != j
    std::vector<std::pair<unsigned, unsigned>> unknowns;
    std::vector<std::vector<int>> unknown_index(n, std::vector<int>(n, -1));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i != j) {
                unknown_index[i][j] = static_cast<int>(unknowns.size());
                unknowns.emplace_back(i, j);
            }
        }

    IMat m;
    std::vector<FElem> rhs;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (SkewSet::forced(i, j, k) || a.zero_at(i, j, k)) continue;
                std::vector<Int> row(unknowns.size(), Int(0));
                auto bump = [&](unsigned x, unsigned y, int delta) {
                    int u = unknown_index[x - 1][y - 1];
                    if (u >= 0) row[u] += delta;
                };
                bump(i, j, +1);
                bump(j, k, +1);
                bump(i, k, -1);
                m.push_back(std::move(row));
                rhs.push_back(F.div(b.at(i, j, k), a.at(i, j, k)));
            }

    std::vector<FElem> y(unknowns.size(), F.one());
    if (!m.empty()) {
        SmithResult snf = smith_normal_form(m);
        // multiplicative application of u to the rhs
        auto apply_row = [&](const std::vector<Int>& row) {
            FElem acc = F.one();
            for (std::size_t t = 0; t < rhs.size(); ++t) {
                if (row[t] == 0) continue;
                acc = F.mul(acc, F.pow(rhs[t], row[t]));
            }
            return acc;
        };
        std::size_t rows = snf.d.size();
        std::size_t cols = unknowns.size();
        for (std::size_t r = 0; r < rows; ++r) {
            FElem s = apply_row(snf.u[r]);
            Int d = r < cols ? snf.d[r][r] : Int(0);
            if (d == 0) {
                if (!F.is_one(s)) {
                    res.reason = "system";
                    res.detail = "scaling system is inconsistent";
                    return res;
                }
            } else {
                auto root = F.nth_root(s, to_u64(d));
                if (!root) {
                    res.reason = "system";
                    res.detail = "required " + d.str() + "-th root does not exist in the field";
                    return res;
                }
                y[r] = *root;
            }
        }
        // gamma_u = prod_v y_v ^ V[u][v]
        std::vector<FElem> x(cols, F.one());
        for (std::size_t u = 0; u < cols; ++u) {
            FElem acc = F.one();
            for (std::size_t v = 0; v < cols; ++v) {
                if (snf.v[u][v] == 0 || F.is_one(y[v])) continue;
                acc = F.mul(acc, F.pow(y[v], snf.v[u][v]));
            }
            x[u] = acc;
        }
        y = std::move(x);
    }

    res.gamma.assign(n, std::vector<FElem>(n, F.one()));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        res.gamma[unknowns[u].first][unknowns[u].second] = y[u];
    }
    if (!check_equiv_witness(a, b, res.gamma)) {
        fail(errc::internal, "equivalence witness failed verification");
    }
    res.equivalent = true;
    return res;
}

SkewSet force_ideals(FieldPtr f, unsigned n, const std::vector<PosSet>& ideals) {
    for (const auto& ideal : ideals) {
        for (const auto& [i, j] : ideal) {
            if (i < 1 || i > n || j < 1 || j > n) fail(errc::bad_input, "ideal position out of range");
        }
    }
    auto member = [&](const PosSet& s, unsigned i, unsigned j) {
        return std::find(s.begin(), s.end(), Pos{i, j}) != s.end();
    };
    SkewSet r = SkewSet::trivial(f, n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                bool zero = false;
                for (const auto& ideal : ideals) {
                    if ((member(ideal, i, j) || member(ideal, j, k)) && !member(ideal, i, k)) {
                        zero = true;
                        break;
                    }
                }
                if (!zero) continue;
                if (SkewSet::forced(i, j, k)) {
                    std::ostringstream os;
                    os << "forcing would zero the constrained entry (" << i << "," << j << "," << k
                       << "); the ideal family is not closed under the diagonal actions";
                    fail(errc::reducedness_conflict, os.str());
                }
                r.set(i, j, k, f->zero());
            }
    return r;
}

SkewSet radical_envelope(FieldPtr f, const std::vector<std::vector<unsigned>>& partition) {
    unsigned n = 0;
    for (const auto& block : partition) n += static_cast<unsigned>(block.size());
    std::vector<unsigned> block_of(n + 1, 0);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty()) fail(errc::bad_input, "empty partition block");
        for (unsigned v : partition[b]) {
            if (v < 1 || v > n || block_of[v] != 0) {
                fail(errc::bad_input, "partition must cover 1..n exactly once");
            }
            block_of[v] = static_cast<unsigned>(b + 1);
        }
    }
    SkewSet r = SkewSet::trivial(f, n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (SkewSet::forced(i, j, k)) continue;
                // the middle index must share a block with an outer one;
                // requiring all three blocks equal instead breaks associativity
                // as soon as a block of size >= 2 coexists with another block
                bool linked = block_of[i] == block_of[j] || block_of[j] == block_of[k];
                if (!linked) r.set(i, j, k, f->zero());
            }
    return r;
}

SkewSet random_skewset(FieldPtr f, unsigned n, double zero_density, std::uint64_t seed) {
    if (zero_density < 0.0 || zero_density > 1.0) {
        fail(errc::bad_input, "zero density must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    SkewSet r = SkewSet::trivial(f, n);
    const bool finite = f->finite();
    // fixed small-height nonzero pool for the rationals
    static const int nums[] = {1, -1, 2, -2, 3, -3};
    static const int dens[] = {1, 2, 3};
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (SkewSet::forced(i, j, k)) continue;
                if (coin(rng) < zero_density) {
                    r.set(i, j, k, f->zero());
                } else if (finite) {
                    Int idx = 1 + Int(rng()) % (f->order() - 1);
                    r.set(i, j, k, f->element_at(idx));
                } else {
                    int num = nums[rng() % 6];
                    int den = dens[rng() % 3];
                    r.set(i, j, k, f->from_fraction(num, den));
                }
            }
    return r;
}

Json pos_set_to_json(const PosSet& s) {
    Json arr = Json::array();
    for (const auto& [i, j] : s) arr.push_back(Json::array({i, j}));
    return arr;
}

PosSet pos_set_from_json(const Json& j) {
    if (!j.is_array()) fail(errc::bad_input, "position set must be an array of [i, j] pairs");
    PosSet s;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) {
            fail(errc::bad_input, "position must be a pair [i, j]");
        }
        Int i = json_to_int(e[0]), jj = json_to_int(e[1]);
        if (i < 1 || jj < 1) fail(errc::bad_input, "positions are 1-based");
        s.emplace_back(static_cast<unsigned>(to_u64(i)), static_cast<unsigned>(to_u64(jj)));
    }
    sort_pos_set(s);
    return s;
}

void sort_pos_set(PosSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace skewmat
