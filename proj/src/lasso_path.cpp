#include "lrsel/lasso_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace lrsel {

namespace {

// Cholesky factor of the active-set Gram matrix, grown one column at a
// time. Columns are kept in entry order; drops trigger a refactorization.
class GramCholesky {
public:
    explicit GramCholesky(const Eigen::MatrixXd& X) : X_(X) {}

    int size() const { return k_; }
    const std::vector<int>& order() const { return order_; }

    void add(int j) {
        const Eigen::VectorXd xj = X_.col(j);
        const double gjj = xj.squaredNorm();
        Eigen::VectorXd g(k_);
        for (int i = 0; i < k_; ++i) {
            g(i) = X_.col(order_[i]).dot(xj);
        }
        const Eigen::VectorXd l =
            k_ > 0 ? L_.topLeftCorner(k_, k_).triangularView<Eigen::Lower>().solve(g)
                   : Eigen::VectorXd();
        const double pivot2 = gjj - l.squaredNorm();
        if (!(pivot2 > 1e-12 * gjj)) {
            throw DegenerateDesign("column " + std::to_string(j + 1) +
                                   " is collinear with the active set");
        }
        if (L_.rows() <= k_) {
            const int cap = std::max(8, 2 * k_);
            Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(cap, cap);
            grown.topLeftCorner(k_, k_) = L_.topLeftCorner(k_, k_);
            L_.swap(grown);
        }
        L_.row(k_).head(k_) = l.transpose();
        L_(k_, k_) = std::sqrt(pivot2);
        order_.push_back(j);
        ++k_;
    }

    void drop(int j) {
        order_.erase(std::find(order_.begin(), order_.end(), j));
        --k_;
        refactor();
    }

    void refactor() {
        Eigen::MatrixXd G(k_, k_);
        for (int a = 0; a < k_; ++a) {
            for (int b = 0; b <= a; ++b) {
                G(a, b) = G(b, a) = X_.col(order_[a]).dot(X_.col(order_[b]));
            }
        }
        Eigen::LLT<Eigen::MatrixXd> llt(G);
        if (llt.info() != Eigen::Success) {
            throw DegenerateDesign("active-set Gram matrix is not positive definite");
        }
        L_ = llt.matrixL();
    }

    // Solves (X_A' X_A) x = b.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const {
        Eigen::VectorXd x = L_.topLeftCorner(k_, k_).triangularView<Eigen::Lower>().solve(b);
        L_.topLeftCorner(k_, k_).transpose().triangularView<Eigen::Upper>().solveInPlace(x);
        return x;
    }

private:
    const Eigen::MatrixXd& X_;
    Eigen::MatrixXd L_;
    std::vector<int> order_;
    int k_ = 0;
};

std::vector<int> sorted(const std::vector<int>& v) {
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

LassoPath compute_lars_path(const StandardizedDataset& data, int max_steps) {
    const Eigen::MatrixXd& X = data.Xs;
    const Eigen::VectorXd& y = data.ys;
    const int n = data.n();
    const int d = data.d();
    const int cap = std::min(d, n - 1);
    if (max_steps <= 0) {
        max_steps = 8 * cap;
    }

    LassoPath path;
    path.n = n;
    path.d = d;

    Eigen::VectorXd c = X.transpose() * y;
    int first = 0;
    double cmax = 0.0;
    for (int j = 0; j < d; ++j) {
        if (std::abs(c(j)) > cmax + 1e-12 * std::max(1.0, cmax)) {
            cmax = std::abs(c(j));
            first = j;
        }
    }
    path.lambda_max = 2.0 * cmax;
    if (!(path.lambda_max > 1e-14 * std::sqrt(y.squaredNorm() + 1.0))) {
        path.lambda_max = std::max(path.lambda_max, 0.0);
        return path;  // zero (or orthogonal) response: empty path
    }

    const double end_tol = 1e-12 * path.lambda_max;
    const double pos_tol = 1e-13 * path.lambda_max;

    GramCholesky chol(X);
    chol.add(first);
    std::vector<double> sign_of;  // entry order, matches chol.order()
    sign_of.push_back(c(first) > 0 ? 1.0 : -1.0);

    double lam = path.lambda_max;
    std::vector<char> is_active(d, 0);
    is_active[first] = 1;

    for (int step = 0; step < max_steps; ++step) {
        const int k = chol.size();
        const auto& order = chol.order();

        Eigen::VectorXd xty(k), s(k);
        for (int i = 0; i < k; ++i) {
            xty(i) = X.col(order[i]).dot(y);
            s(i) = sign_of[i];
        }
        const Eigen::VectorXd bols = chol.solve(xty);
        const Eigen::VectorXd w = chol.solve(s);

        // beta_A(t) = bols - (t/2) w, exact at every breakpoint
        Eigen::VectorXd betaA = bols - 0.5 * lam * w;
        Eigen::VectorXd fitted = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < k; ++i) {
            fitted += betaA(i) * X.col(order[i]);
        }
        const Eigen::VectorXd r = y - fitted;
        c = X.transpose() * r;
        Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < k; ++i) {
            u += w(i) * X.col(order[i]);
        }
        const Eigen::VectorXd a = X.transpose() * u;

        // next event: inactive correlation reaching the boundary, or an
        // active coefficient crossing zero
        double gamma = lam;  // default: run the segment down to lambda = 0
        int join = -1, dropped = -1;
        for (int j = 0; j < d; ++j) {
            if (is_active[j]) continue;
            for (const double g : {(lam - 2.0 * c(j)) / (1.0 - a(j)),
                                   (lam + 2.0 * c(j)) / (1.0 + a(j))}) {
                if (g > pos_tol && g < gamma - 1e-12 * path.lambda_max) {
                    gamma = g;
                    join = j;
                    dropped = -1;
                }
            }
        }
        for (int i = 0; i < k; ++i) {
            if (w(i) == 0.0) continue;
            const double g = -2.0 * betaA(i) / w(i);
            if (g > pos_tol && g < gamma - 1e-12 * path.lambda_max) {
                gamma = g;
                dropped = order[i];
                join = -1;
            }
        }
        if (!(gamma > 0.0)) {
            throw NoProgress();
        }

        const double lam_next = (join < 0 && dropped < 0) ? 0.0 : lam - gamma;
        Eigen::VectorXd betaA_next = bols - 0.5 * lam_next * w;

        PathSegment seg;
        seg.lambda_hi = lam;
        seg.lambda_lo = std::max(lam_next, 0.0);
        seg.active = sorted(order);
        seg.beta_hi = Eigen::VectorXd::Zero(d);
        seg.beta_lo = Eigen::VectorXd::Zero(d);
        for (int i = 0; i < k; ++i) {
            seg.beta_hi(order[i]) = betaA(i);
            seg.beta_lo(order[i]) = betaA_next(i);
        }
        if (dropped >= 0) {
            seg.beta_lo(dropped) = 0.0;
        }
        path.segments.push_back(std::move(seg));

        if (lam_next <= end_tol) {
            break;  // residual correlation ~ 0
        }
        if (join >= 0) {
            if (k == cap) {
                break;  // size limit min(d, n-1) reached
            }
            chol.add(join);
            sign_of.push_back(c(join) - 0.5 * gamma * a(join) > 0 ? 1.0 : -1.0);
            is_active[join] = 1;
        } else if (dropped >= 0) {
            const auto pos = std::find(order.begin(), order.end(), dropped) - order.begin();
            sign_of.erase(sign_of.begin() + pos);
            chol.drop(dropped);
            is_active[dropped] = 0;
        }
        lam = lam_next;
        if ((step + 1) % 64 == 0) {
            chol.refactor();  // drift control
        }
    }
    return path;
}

Eigen::VectorXd coefficients_at(const LassoPath& path, double lambda) {
    if (lambda <= 0.0) {
        throw DomainError("lambda must be positive");
    }
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(path.d);
    if (path.segments.empty() || lambda >= path.lambda_max) {
        return beta;
    }
    for (const auto& seg : path.segments) {
        if (lambda > seg.lambda_hi) {
            break;
        }
        if (lambda > seg.lambda_lo || &seg == &path.segments.back()) {
            const double width = seg.lambda_hi - seg.lambda_lo;
            if (lambda <= seg.lambda_lo || width <= 0.0) {
                return seg.beta_lo;  // clamp below an early-terminated path
            }
            const double t = (lambda - seg.lambda_lo) / width;
            return seg.beta_lo + t * (seg.beta_hi - seg.beta_lo);
        }
    }
    return beta;
}

std::vector<CandidateModel> candidate_subsets(const LassoPath& path,
                                              const StandardizedDataset& data,
                                              CandidateDiagnostics* diag) {
    CandidateDiagnostics local;
    CandidateDiagnostics& dg = diag ? *diag : local;
    dg = CandidateDiagnostics{};

    std::vector<CandidateModel> out;
    std::map<std::vector<int>, std::size_t> seen;
    for (const auto& seg : path.segments) {
        if (seg.active.empty()) {
            ++dg.excluded_empty;
            continue;
        }
        auto it = seen.find(seg.active);
        if (it != seen.end()) {
            auto& cand = out[it->second];
            cand.lambda_lo = std::min(cand.lambda_lo, seg.lambda_lo);
            cand.lambda_hi = std::max(cand.lambda_hi, seg.lambda_hi);
            continue;
        }
        CandidateModel cand;
        cand.subset = seg.active;
        cand.lambda_lo = seg.lambda_lo;
        cand.lambda_hi = seg.lambda_hi;
        cand.df = static_cast<int>(seg.active.size());
        seen.emplace(seg.active, out.size());
        out.push_back(std::move(cand));
    }

    std::vector<CandidateModel> kept;
    kept.reserve(out.size());
    for (auto& cand : out) {
        if (cand.df > path.n - 1) {
            ++dg.excluded_df_overflow;
            continue;
        }
        try {
            cand.fit = ols_fit(data, cand.subset);
        } catch (const RankDeficient&) {
            ++dg.excluded_rank_deficient;
            continue;
        }
        kept.push_back(std::move(cand));
    }
    if (kept.empty()) {
        throw NoCandidates();
    }
    return kept;
}

}  // namespace lrsel
