#ifndef BICOHOM_DOUBLE_COMPLEX_HPP
#define BICOHOM_DOUBLE_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicohom/bidegree.hpp"
#include "bicohom/errors.hpp"
#include "bicohom/matrix.hpp"

namespace bicohom {

struct Violation {
    enum class Kind {
        DelDel,           // del o del != 0 starting at `at`
        DelbarDelbar,     // delbar o delbar != 0 starting at `at`
        Anticommute,      // del o delbar + delbar o del != 0 starting at `at`
        ConjInvolution,   // conj(q,p) o conj(p,q) != id at `at`
        ConjIntertwine,   // conj o del != delbar o conj starting at `at`
        OutsideDimension  // support outside [0,n]^2
    };
    Kind kind;
    Bidegree at;

    std::string describe() const {
        switch (kind) {
            case Kind::DelDel: return "del o del != 0 at " + to_string(at);
            case Kind::DelbarDelbar: return "delbar o delbar != 0 at " + to_string(at);
            case Kind::Anticommute:
                return "del o delbar + delbar o del != 0 at " + to_string(at);
            case Kind::ConjInvolution: return "conj o conj != id at " + to_string(at);
            case Kind::ConjIntertwine:
                return "conj o del != delbar o conj at " + to_string(at);
            case Kind::OutsideDimension:
                return "support " + to_string(at) + " outside [0,n]^2";
        }
        return "?";
    }
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    std::string describe() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.describe();
        }
        return s;
    }
};

/**
 * A bounded double complex: finitely many nonzero spaces A^{p,q} with
 * coordinate matrices del: A^{p,q} -> A^{p+1,q} and delbar: A^{p,q} ->
 * A^{p,q+1}. Absent spaces are zero, absent maps are zero maps of the right
 * shape. The two differentials square to zero and anticommute, so d =
 * del + delbar differentiates the total complex.
 *
 * An optional real structure conj: A^{p,q} -> A^{q,p} models conjugation:
 * it must be an involution intertwining the two differentials.
 *
 * Values are immutable once handed to the functors; mutation through the
 * setters resets the cached validation state.
 */
class DoubleComplex {
public:
    DoubleComplex() = default;
    explicit DoubleComplex(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    std::optional<int> complex_dimension() const { return n_; }
    void set_complex_dimension(int n) {
        if (n < 0) throw BadDimension("complex dimension must be nonnegative");
        n_ = n;
        valid_cache_ = -1;
    }

    int dim(const Bidegree& b) const {
        auto it = dims_.find(b);
        return it == dims_.end() ? 0 : it->second;
    }
    int dim(int p, int q) const { return dim(Bidegree{p, q}); }

    void set_dim(const Bidegree& b, int d) {
        if (d < 0) throw BadDimension("negative space dimension at " + to_string(b));
        if (d == 0) {
            dims_.erase(b);
        } else {
            dims_[b] = d;
        }
        valid_cache_ = -1;
    }

    /// Coordinate matrix of del at (p,q), materialized with the right shape.
    Matrix del(const Bidegree& b) const {
        auto it = del_.find(b);
        if (it != del_.end()) return it->second;
        return Matrix(dim(b.p + 1, b.q), dim(b));
    }
    Matrix del(int p, int q) const { return del(Bidegree{p, q}); }

    Matrix delbar(const Bidegree& b) const {
        auto it = delbar_.find(b);
        if (it != delbar_.end()) return it->second;
        return Matrix(dim(b.p, b.q + 1), dim(b));
    }
    Matrix delbar(int p, int q) const { return delbar(Bidegree{p, q}); }

    Matrix conj(const Bidegree& b) const {
        auto it = conj_.find(b);
        if (it != conj_.end()) return it->second;
        return Matrix(dim(b.q, b.p), dim(b));
    }
    Matrix conj(int p, int q) const { return conj(Bidegree{p, q}); }

    bool has_conj() const { return !conj_.empty(); }

    void set_del(const Bidegree& b, const Matrix& m) {
        require_shape(m, dim(b.p + 1, b.q), dim(b), "del", b);
        if (m.is_zero()) {
            del_.erase(b);
        } else {
            del_[b] = m;
        }
        valid_cache_ = -1;
    }

    void set_delbar(const Bidegree& b, const Matrix& m) {
        require_shape(m, dim(b.p, b.q + 1), dim(b), "delbar", b);
        if (m.is_zero()) {
            delbar_.erase(b);
        } else {
            delbar_[b] = m;
        }
        valid_cache_ = -1;
    }

    void set_conj(const Bidegree& b, const Matrix& m) {
        require_shape(m, dim(b.q, b.p), dim(b), "conj", b);
        if (m.is_zero()) {
            conj_.erase(b);
        } else {
            conj_[b] = m;
        }
        valid_cache_ = -1;
    }

    void drop_conj() {
        conj_.clear();
        valid_cache_ = -1;
    }

    const std::map<Bidegree, int>& dims() const { return dims_; }
    const std::map<Bidegree, Matrix>& del_entries() const { return del_; }
    const std::map<Bidegree, Matrix>& delbar_entries() const { return delbar_; }
    const std::map<Bidegree, Matrix>& conj_entries() const { return conj_; }

    /// Bidegrees with nonzero spaces, ascending (p, then q).
    std::vector<Bidegree> support() const {
        std::vector<Bidegree> s;
        s.reserve(dims_.size());
        for (const auto& [b, d] : dims_) s.push_back(b);
        return s;
    }

    std::optional<Hull> hull() const {
        if (dims_.empty()) return std::nullopt;
        Hull h{dims_.begin()->first.p, dims_.begin()->first.p, dims_.begin()->first.q,
               dims_.begin()->first.q};
        for (const auto& [b, d] : dims_) {
            h.pmin = std::min(h.pmin, b.p);
            h.pmax = std::max(h.pmax, b.p);
            h.qmin = std::min(h.qmin, b.q);
            h.qmax = std::max(h.qmax, b.q);
        }
        return h;
    }

    int total_dim() const {
        int t = 0;
        for (const auto& [b, d] : dims_) t += d;
        return t;
    }

    /**
     * Checks every structural identity and returns the full list of
     * violations; the complex is valid iff the list is empty. Violations are
     * data, not errors.
     */
    ValidationReport validate() const {
        ValidationReport report;
        if (n_) {
            for (const auto& [b, d] : dims_) {
                if (b.p < 0 || b.p > *n_ || b.q < 0 || b.q > *n_)
                    report.violations.push_back({Violation::Kind::OutsideDimension, b});
            }
        }
        for (const auto& [b, d] : dims_) {
            const Bidegree up{b.p + 1, b.q}, right{b.p, b.q + 1};
            if (!(del(up) * del(b)).is_zero())
                report.violations.push_back({Violation::Kind::DelDel, b});
            if (!(delbar(right) * delbar(b)).is_zero())
                report.violations.push_back({Violation::Kind::DelbarDelbar, b});
            if (!(del(right) * delbar(b) + delbar(up) * del(b)).is_zero())
                report.violations.push_back({Violation::Kind::Anticommute, b});
        }
        if (has_conj()) {
            for (const auto& [b, d] : dims_) {
                const Bidegree swapped{b.q, b.p};
                if (conj(swapped) * conj(b) != Matrix::identity(d))
                    report.violations.push_back({Violation::Kind::ConjInvolution, b});
                if (conj({b.p + 1, b.q}) * del(b) != delbar(swapped) * conj(b))
                    report.violations.push_back({Violation::Kind::ConjIntertwine, b});
            }
        }
        valid_cache_ = report.valid() ? 1 : 0;
        return report;
    }

    bool is_valid() const {
        if (valid_cache_ < 0) validate();
        return valid_cache_ == 1;
    }

    bool operator==(const DoubleComplex& o) const {
        return name_ == o.name_ && n_ == o.n_ && dims_ == o.dims_ && del_ == o.del_ &&
               delbar_ == o.delbar_ && conj_ == o.conj_;
    }
    bool operator!=(const DoubleComplex& o) const { return !(*this == o); }

private:
    void require_shape(const Matrix& m, int rows, int cols, const char* what,
                       const Bidegree& b) const {
        if (m.rows() != rows || m.cols() != cols)
            throw DimensionMismatch(std::string(what) + " at " + to_string(b) + " must be " +
                                    std::to_string(rows) + "x" + std::to_string(cols) +
                                    ", got " + m.shape_str());
    }

    std::string name_;
    std::optional<int> n_;
    std::map<Bidegree, int> dims_;
    std::map<Bidegree, Matrix> del_;
    std::map<Bidegree, Matrix> delbar_;
    std::map<Bidegree, Matrix> conj_;
    mutable int valid_cache_ = -1;  // -1 unknown, 0 invalid, 1 valid
};

/// Throws InvalidComplex when the complex fails validation.
inline void ensure_valid(const DoubleComplex& c) {
    if (!c.is_valid()) {
        throw InvalidComplex("complex '" + c.name() + "' is invalid: " + c.validate().describe());
    }
}

}  // namespace bicohom

#endif  // BICOHOM_DOUBLE_COMPLEX_HPP
