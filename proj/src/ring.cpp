#include "tccert/ring.hpp"

#include <algorithm>

namespace tccert {

void SparseVec::add(std::size_t index, const Scalar& value) {
    if (value.is_zero()) return;
    entries.emplace_back(index, value);
}

void SparseVec::normalize() {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, Scalar>> merged;
    for (auto& e : entries) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second.is_zero(); }),
                 merged.end());
    entries = std::move(merged);
}

std::size_t GradedAlgebra::dim(int degree) const {
    if (degree < 0 || degree > top_degree()) return 0;
    return dims_[degree];
}

std::size_t GradedAlgebra::total_dim() const {
    std::size_t t = 0;
    for (std::size_t d : dims_) t += d;
    return t;
}

std::size_t GradedAlgebra::flat(int degree, std::size_t index) const {
    if (degree < 0 || degree > top_degree() || index >= dims_[degree])
        throw AlgebraError("basis reference out of range");
    return offsets_[degree] + index;
}

std::string GradedAlgebra::label(int degree, std::size_t index) const {
    flat(degree, index);  // range check
    if (!is_tensor()) {
        const std::string& l = labels_[degree][index];
        if (!l.empty()) return l;
        return "e" + std::to_string(degree) + "_" + std::to_string(index);
    }
    const auto& tb = std::get<TensorBacking>(backing_);
    TensorIndex t = tensor_decode(degree, index);
    return tb.lhs->label(t.lhs_degree, t.lhs_index) + "⊗" +
           tb.rhs->label(degree - t.lhs_degree, t.rhs_index);
}

bool GradedAlgebra::is_tensor() const {
    return std::holds_alternative<TensorBacking>(backing_);
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::tensor_lhs() const {
    if (!is_tensor()) throw AlgebraError("not a tensor algebra");
    return std::get<TensorBacking>(backing_).lhs;
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::tensor_rhs() const {
    if (!is_tensor()) throw AlgebraError("not a tensor algebra");
    return std::get<TensorBacking>(backing_).rhs;
}

GradedAlgebra::TensorIndex GradedAlgebra::tensor_decode(int degree, std::size_t index) const {
    const auto& tb = std::get<TensorBacking>(backing_);
    std::size_t off = 0;
    for (int p = 0; p <= degree; ++p) {
        int q = degree - p;
        std::size_t block = tb.lhs->dim(p) * tb.rhs->dim(q);
        if (index < off + block) {
            std::size_t local = index - off;
            return TensorIndex{p, local / tb.rhs->dim(q), local % tb.rhs->dim(q)};
        }
        off += block;
    }
    throw AlgebraError("tensor index out of range");
}

std::size_t GradedAlgebra::tensor_encode(int lhs_degree, std::size_t lhs_index, int rhs_degree,
                                         std::size_t rhs_index) const {
    const auto& tb = std::get<TensorBacking>(backing_);
    int degree = lhs_degree + rhs_degree;
    std::size_t off = 0;
    for (int p = 0; p < lhs_degree; ++p) off += tb.lhs->dim(p) * tb.rhs->dim(degree - p);
    return off + lhs_index * tb.rhs->dim(rhs_degree) + rhs_index;
}

std::optional<SparseVec> GradedAlgebra::basis_product_opt(int da, std::size_t ia, int db,
                                                          std::size_t ib) const {
    flat(da, ia);
    flat(db, ib);
    if (da + db > top_degree()) return SparseVec{};
    if (da == 0) {  // unit
        SparseVec v;
        v.add(ib, Scalar::one(field_));
        return v;
    }
    if (db == 0) {
        SparseVec v;
        v.add(ia, Scalar::one(field_));
        return v;
    }
    if (const auto* ex = std::get_if<ExplicitBacking>(&backing_)) {
        const TableEntry& e = ex->table[flat(da, ia)][flat(db, ib)];
        if (!e.known) return std::nullopt;
        return e.value;
    }
    const auto& tb = std::get<TensorBacking>(backing_);
    TensorIndex x = tensor_decode(da, ia);
    TensorIndex y = tensor_decode(db, ib);
    int xr_deg = da - x.lhs_degree, yr_deg = db - y.lhs_degree;

    auto l = tb.lhs->basis_product_opt(x.lhs_degree, x.lhs_index, y.lhs_degree, y.lhs_index);
    auto r = tb.rhs->basis_product_opt(xr_deg, x.rhs_index, yr_deg, y.rhs_index);
    if ((l && l->empty()) || (r && r->empty())) return SparseVec{};
    if (!l || !r) return std::nullopt;

    bool negate = (xr_deg % 2 != 0) && (y.lhs_degree % 2 != 0);  // (-1)^{|b||a'|}
    SparseVec out;
    int pl = x.lhs_degree + y.lhs_degree, pr = xr_deg + yr_deg;
    for (const auto& [li, lv] : l->entries)
        for (const auto& [ri, rv] : r->entries) {
            Scalar c = lv * rv;
            if (negate) c = -c;
            out.add(tensor_encode(pl, li, pr, ri), c);
        }
    out.normalize();
    return out;
}

SparseVec GradedAlgebra::basis_product(int da, std::size_t ia, int db, std::size_t ib) const {
    auto v = basis_product_opt(da, ia, db, ib);
    if (!v)
        throw UnknownStructureConstant("structure constant (" + label(da, ia) + ")·(" +
                                       label(db, ib) + ") is unknown");
    return *v;
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::tensor(
    std::shared_ptr<const GradedAlgebra> lhs, std::shared_ptr<const GradedAlgebra> rhs) {
    if (lhs->field() != rhs->field()) throw AlgebraError("tensor factors over different fields");
    auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
    alg->field_ = lhs->field();
    int top = lhs->top_degree() + rhs->top_degree();
    alg->dims_.assign(top + 1, 0);
    for (int d = 0; d <= top; ++d)
        for (int p = 0; p <= d; ++p) alg->dims_[d] += lhs->dim(p) * rhs->dim(d - p);
    alg->offsets_.resize(alg->dims_.size());
    std::size_t off = 0;
    for (std::size_t d = 0; d < alg->dims_.size(); ++d) {
        alg->offsets_[d] = off;
        off += alg->dims_[d];
    }
    alg->backing_ = TensorBacking{std::move(lhs), std::move(rhs)};
    return alg;
}

AlgebraBuilder::AlgebraBuilder(const FieldSpec& f, std::vector<std::size_t> dims)
    : field_(f), dims_(std::move(dims)) {
    if (dims_.empty() || dims_[0] != 1)
        throw AlgebraError("degree 0 must be one-dimensional (the unit)");
    labels_.resize(dims_.size());
    for (std::size_t d = 0; d < dims_.size(); ++d) labels_[d].resize(dims_[d]);
    labels_[0][0] = "1";
}

void AlgebraBuilder::set_label(int degree, std::size_t index, std::string label) {
    labels_.at(degree).at(index) = std::move(label);
}

void AlgebraBuilder::set_product(int da, std::size_t ia, int db, std::size_t ib, SparseVec v) {
    if (da <= 0 || db <= 0) throw AlgebraError("unit products are implicit");
    v.normalize();
    if (da + db > static_cast<int>(dims_.size()) - 1) {
        if (!v.empty()) throw AlgebraError("product beyond top degree must be zero");
        return;
    }
    for (const auto& [i, s] : v.entries) {
        (void)s;
        if (i >= dims_[da + db]) throw AlgebraError("product coordinate out of range");
    }
    products_[{da, ia, db, ib}] = std::move(v);
}

void AlgebraBuilder::set_unknown(int da, std::size_t ia, int db, std::size_t ib) {
    if (da <= 0 || db <= 0) throw AlgebraError("unit products are implicit");
    if (da + db > static_cast<int>(dims_.size()) - 1) return;  // forced zero anyway
    products_[{da, ia, db, ib}] = std::nullopt;
}

namespace {

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].first != b.entries[i].first ||
            a.entries[i].second != b.entries[i].second)
            return false;
    return true;
}

SparseVec sparse_negate(const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, s] : v.entries) out.add(i, -s);
    return out;
}

}  // namespace

std::shared_ptr<const GradedAlgebra> AlgebraBuilder::build(std::size_t associativity_limit) const {
    auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
    alg->field_ = field_;
    alg->dims_ = dims_;
    alg->labels_ = labels_;
    alg->offsets_.resize(dims_.size());
    std::size_t off = 0;
    for (std::size_t d = 0; d < dims_.size(); ++d) {
        alg->offsets_[d] = off;
        off += dims_[d];
    }
    std::size_t total = off;
    GradedAlgebra::ExplicitBacking ex;
    ex.table.assign(total, std::vector<GradedAlgebra::TableEntry>(total));
    for (const auto& [key, val] : products_) {
        auto [da, ia, db, ib] = key;
        auto& entry = ex.table[alg->flat(da, ia)][alg->flat(db, ib)];
        if (val) {
            entry.known = true;
            entry.value = *val;
        } else {
            entry.known = false;
        }
    }
    alg->backing_ = std::move(ex);

    // graded commutativity on known pairs
    for (int da = 1; da <= alg->top_degree(); ++da)
        for (int db = da; da + db <= alg->top_degree(); ++db)
            for (std::size_t ia = 0; ia < alg->dim(da); ++ia)
                for (std::size_t ib = 0; ib < alg->dim(db); ++ib) {
                    auto xy = alg->basis_product_opt(da, ia, db, ib);
                    auto yx = alg->basis_product_opt(db, ib, da, ia);
                    if (!xy || !yx) continue;
                    SparseVec expect = (da % 2 != 0 && db % 2 != 0) ? sparse_negate(*yx) : *yx;
                    if (!sparse_equal(*xy, expect))
                        throw AlgebraError("graded commutativity fails on (" +
                                           alg->label(da, ia) + ", " + alg->label(db, ib) + ")");
                }

    if (total <= associativity_limit) {
        // (xy)z = x(yz) on all basis triples whose products are known
        auto mult_sparse = [&](const SparseVec& v, int dv, int db2, std::size_t ib2,
                               bool right) -> std::optional<SparseVec> {
            SparseVec acc;
            for (const auto& [i, s] : v.entries) {
                auto prod = right ? alg->basis_product_opt(dv, i, db2, ib2)
                                  : alg->basis_product_opt(db2, ib2, dv, i);
                if (!prod) return std::nullopt;
                for (const auto& [j, t] : prod->entries) acc.add(j, s * t);
            }
            acc.normalize();
            return acc;
        };
        for (int da = 1; da <= alg->top_degree(); ++da)
            for (int db = 1; da + db <= alg->top_degree(); ++db)
                for (int dc = 1; da + db + dc <= alg->top_degree(); ++dc)
                    for (std::size_t ia = 0; ia < alg->dim(da); ++ia)
                        for (std::size_t ib = 0; ib < alg->dim(db); ++ib)
                            for (std::size_t ic = 0; ic < alg->dim(dc); ++ic) {
                                auto xy = alg->basis_product_opt(da, ia, db, ib);
                                auto yz = alg->basis_product_opt(db, ib, dc, ic);
                                if (!xy || !yz) continue;
                                auto lhs = mult_sparse(*xy, da + db, dc, ic, true);
                                auto rhs = mult_sparse(*yz, db + dc, da, ia, false);
                                if (!lhs || !rhs) continue;
                                if (!sparse_equal(*lhs, *rhs))
                                    throw AlgebraError("associativity fails on basis triple");
                            }
    }
    return alg;
}

AlgebraElement AlgebraElement::unit(std::shared_ptr<const GradedAlgebra> alg) {
    AlgebraElement e(alg);
    e.add_term(0, 0, Scalar::one(alg->field()));
    return e;
}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const GradedAlgebra> alg, int degree,
                                     std::size_t index) {
    AlgebraElement e(alg);
    e.add_term(degree, index, Scalar::one(alg->field()));
    return e;
}

void AlgebraElement::add_term(int degree, std::size_t index, const Scalar& value) {
    if (!alg_) throw AlgebraError("element has no algebra");
    if (degree < 0 || degree > alg_->top_degree() || index >= alg_->dim(degree))
        throw AlgebraError("element term out of range");
    auto it = comps_.find(degree);
    if (it == comps_.end())
        it = comps_.emplace(degree, std::vector<Scalar>(alg_->dim(degree),
                                                        Scalar::zero(alg_->field()))).first;
    it->second[index] += value;
    if (it->second[index].is_zero()) {
        bool all_zero = true;
        for (const Scalar& s : it->second)
            if (!s.is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero) comps_.erase(it);
    }
}

Scalar AlgebraElement::coeff(int degree, std::size_t index) const {
    auto it = comps_.find(degree);
    if (it == comps_.end()) return Scalar::zero(alg_->field());
    return it->second.at(index);
}

bool AlgebraElement::is_zero() const { return comps_.empty(); }

bool AlgebraElement::is_homogeneous(int* degree) const {
    if (comps_.empty()) {
        if (degree) *degree = 0;
        return true;
    }
    if (comps_.size() != 1) return false;
    if (degree) *degree = comps_.begin()->first;
    return true;
}

void AlgebraElement::prune() {
    for (auto it = comps_.begin(); it != comps_.end();) {
        bool all_zero = true;
        for (const Scalar& s : it->second)
            if (!s.is_zero()) {
                all_zero = false;
                break;
            }
        it = all_zero ? comps_.erase(it) : std::next(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (alg_ != o.alg_) throw AlgebraError("algebra mismatch in addition");
    AlgebraElement r = *this;
    for (const auto& [d, v] : o.comps_) {
        auto it = r.comps_.find(d);
        if (it == r.comps_.end()) {
            r.comps_[d] = v;
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
        }
    }
    r.prune();
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [d, v] : r.comps_) {
        (void)d;
        for (Scalar& s : v) s = -s;
    }
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    AlgebraElement r = *this;
    for (auto& [d, v] : r.comps_) {
        (void)d;
        for (Scalar& c : v) c *= s;
    }
    r.prune();
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return alg_ == o.alg_ && (*this - o).is_zero();
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra() != y.algebra()) throw AlgebraError("algebra mismatch in product");
    const auto& alg = x.algebra();
    AlgebraElement out(alg);
    for (const auto& [dx, vx] : x.components())
        for (const auto& [dy, vy] : y.components()) {
            if (dx + dy > alg->top_degree()) continue;
            for (std::size_t i = 0; i < vx.size(); ++i) {
                if (vx[i].is_zero()) continue;
                for (std::size_t j = 0; j < vy.size(); ++j) {
                    if (vy[j].is_zero()) continue;
                    SparseVec prod = alg->basis_product(dx, i, dy, j);
                    Scalar c = vx[i] * vy[j];
                    for (const auto& [k, s] : prod.entries) out.add_term(dx + dy, k, c * s);
                }
            }
        }
    return out;
}

AlgebraElement power(const AlgebraElement& x, unsigned k) {
    AlgebraElement r = AlgebraElement::unit(x.algebra());
    for (unsigned i = 0; i < k; ++i) r = multiply(r, x);
    return r;
}

AlgebraElement embed_lhs(const std::shared_ptr<const GradedAlgebra>& tensor_alg,
                         const AlgebraElement& x) {
    if (!tensor_alg->is_tensor() || tensor_alg->tensor_lhs() != x.algebra())
        throw AlgebraError("embed_lhs: element does not belong to the left factor");
    AlgebraElement out(tensor_alg);
    for (const auto& [d, v] : x.components())
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero())
                out.add_term(d, tensor_alg->tensor_encode(d, i, 0, 0), v[i]);
    return out;
}

AlgebraElement embed_rhs(const std::shared_ptr<const GradedAlgebra>& tensor_alg,
                         const AlgebraElement& y) {
    if (!tensor_alg->is_tensor() || tensor_alg->tensor_rhs() != y.algebra())
        throw AlgebraError("embed_rhs: element does not belong to the right factor");
    AlgebraElement out(tensor_alg);
    for (const auto& [d, v] : y.components())
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero())
                out.add_term(d, tensor_alg->tensor_encode(0, 0, d, i), v[i]);
    return out;
}

AlgebraElement zero_divisor(const std::shared_ptr<const GradedAlgebra>& tensor_alg,
                            const AlgebraElement& u) {
    if (!u.is_homogeneous()) throw AlgebraError("zero_divisor needs a homogeneous class");
    return embed_rhs(tensor_alg, u) - embed_lhs(tensor_alg, u);
}

std::vector<Scalar> bidegree_component(const AlgebraElement& x, int p, int q) {
    const auto& aa = x.algebra();
    if (!aa->is_tensor()) throw AlgebraError("bidegree_component needs a tensor algebra");
    auto lhs = aa->tensor_lhs();
    auto rhs = aa->tensor_rhs();
    if (p < 0 || p > lhs->top_degree() || q < 0 || q > rhs->top_degree())
        throw AlgebraError("invalid bidegree");
    std::vector<Scalar> out(lhs->dim(p) * rhs->dim(q), Scalar::zero(aa->field()));
    auto it = x.components().find(p + q);
    if (it == x.components().end()) return out;
    for (std::size_t idx = 0; idx < it->second.size(); ++idx) {
        if (it->second[idx].is_zero()) continue;
        auto t = aa->tensor_decode(p + q, idx);
        if (t.lhs_degree == p) out[t.lhs_index * rhs->dim(q) + t.rhs_index] = it->second[idx];
    }
    return out;
}

DiagonalRestriction::DiagonalRestriction(std::shared_ptr<const GradedAlgebra> self_tensor)
    : aa_(std::move(self_tensor)) {
    if (!aa_->is_tensor() || aa_->tensor_lhs() != aa_->tensor_rhs())
        throw AlgebraError("diagonal restriction needs a self-tensor A⊗A");
    a_ = aa_->tensor_lhs();
}

AlgebraElement DiagonalRestriction::apply(const AlgebraElement& x) const {
    if (x.algebra() != aa_) throw AlgebraError("element not in A⊗A");
    AlgebraElement out(a_);
    for (const auto& [d, v] : x.components()) {
        if (d > a_->top_degree()) continue;
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
            if (v[idx].is_zero()) continue;
            auto t = aa_->tensor_decode(d, idx);
            SparseVec prod =
                a_->basis_product(t.lhs_degree, t.lhs_index, d - t.lhs_degree, t.rhs_index);
            for (const auto& [k, s] : prod.entries) out.add_term(d, k, v[idx] * s);
        }
    }
    return out;
}

std::size_t DiagonalRestriction::kernel_dim() const {
    // degree-preserving linear map; assemble the full matrix
    std::size_t cols = aa_->total_dim();
    std::size_t rows = a_->total_dim();
    Matrix m(aa_->field(), rows, cols);
    std::size_t col = 0;
    std::vector<std::size_t> a_offsets(a_->top_degree() + 1, 0);
    for (int d = 1; d <= a_->top_degree(); ++d) a_offsets[d] = a_offsets[d - 1] + a_->dim(d - 1);
    for (int d = 0; d <= aa_->top_degree(); ++d)
        for (std::size_t idx = 0; idx < aa_->dim(d); ++idx, ++col) {
            if (d > a_->top_degree()) continue;
            auto t = aa_->tensor_decode(d, idx);
            SparseVec prod =
                a_->basis_product(t.lhs_degree, t.lhs_index, d - t.lhs_degree, t.rhs_index);
            for (const auto& [k, s] : prod.entries) m.at(a_offsets[d] + k, col) = s;
        }
    return cols - reduce_echelon(m).rank;
}

}  // namespace tccert
