#include "jackpoly/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jackpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw InvalidInput("row index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::operator<(const Partition& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return parts_ > o.parts_; // lexicographically larger first within a weight
}

Partition Partition::with_part_increased(int row) const {
    std::vector<int> p = parts_;
    if (row == length() + 1)
        p.push_back(1);
    else if (row >= 1 && row <= length())
        p[row - 1] += 1;
    else
        throw InvalidInput("cannot grow row " + std::to_string(row));
    return Partition(std::move(p));
}

Partition Partition::remove_row_prefix(int n) const {
    if (n >= length()) return Partition();
    return Partition(std::vector<int>(parts_.begin() + n, parts_.end()));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
    os << "]";
    return os.str();
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> cols(lambda.part(1), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) cols[j]++;
    return Partition(std::move(cols));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight()) throw WeightMismatch("dominance needs equal weights");
    long smu = 0, slam = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        smu += mu.part(i);
        slam += lambda.part(i);
        if (smu > slam) return false;
    }
    return true;
}

bool contains(const Partition& mu, const Partition& lambda) {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

long n_stat(const Partition& lambda) {
    long s = 0;
    for (int i = 1; i <= lambda.length(); ++i) s += static_cast<long>(i - 1) * lambda.part(i);
    return s;
}

RatFun content_plain(const Cell& box, const RatFun& theta) {
    return RatFun(box.col - 1) - theta * RatFun(box.row - 1);
}

RatFun content_primed(const Cell& box, const Partition& lambda, const RatFun& theta) {
    if (box.col > lambda.part(box.row)) throw CellOutOfDiagram(
        "cell (" + std::to_string(box.row) + "," + std::to_string(box.col) + ") outside diagram");
    Partition conj = conjugate(lambda);
    return RatFun(lambda.part(box.row) - box.col) +
           theta * RatFun(conj.part(box.col) - box.row);
}

RatFun hook_product_H(const Partition& lambda, const RatFun& theta) {
    RatFun h(1);
    Partition conj = conjugate(lambda);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            RatFun cprime = RatFun(lambda.part(i) - j) + theta * RatFun(conj.part(j) - i);
            h = h * (cprime + RatFun(1));
        }
    return h;
}

bool in_fat_hook(const Partition& lambda, int n, int m) {
    if (n < 0 || m < 0) throw InvalidInput("fat hook needs n, m >= 0");
    return lambda.part(n + 1) <= m;
}

FrobeniusCoords frobenius_nm(const Partition& lambda, int n, int m) {
    if (!in_fat_hook(lambda, n, m)) throw NotInFatHook(lambda.to_string());
    RatFun theta = RatFun::theta();
    RatFun theta_inv = RatFun::theta_inverse();
    RatFun half(BigRational(1, 2));
    FrobeniusCoords f;
    RatFun xshift = half * (RatFun(m) - theta * RatFun(n));
    for (int i = 1; i <= n; ++i)
        f.p.push_back(RatFun(lambda.part(i)) - theta * (RatFun(i) - half) - xshift);
    Partition mu = lambda.remove_row_prefix(n);
    Partition muc = conjugate(mu);
    RatFun yshift = half * (theta_inv * RatFun(m) + RatFun(n));
    for (int j = 1; j <= m; ++j)
        f.q.push_back(RatFun(muc.part(j)) - theta_inv * (RatFun(j) - half) + yshift);
    return f;
}

FlatCoords frobenius_flat(const Partition& lambda, int n, int m) {
    if (!in_fat_hook(lambda, n, m)) throw NotInFatHook(lambda.to_string());
    FlatCoords f;
    for (int i = 1; i <= n; ++i) f.a.push_back(lambda.part(i));
    Partition muc = conjugate(lambda.remove_row_prefix(n));
    for (int j = 1; j <= m; ++j) f.b.push_back(muc.part(j));
    return f;
}

namespace {
void gen_rec(int remaining, int max_part, std::vector<int>& cur,
             const std::function<bool(const Partition&)>& pred, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p(cur);
        if (!pred || pred(p)) out.push_back(std::move(p));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_rec(remaining - k, k, cur, pred, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of_weight(int weight) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_rec(weight, weight, cur, nullptr, out);
    return out;
}

std::vector<Partition> enumerate_partitions(
    int max_weight, const std::function<bool(const Partition&)>& predicate) {
    if (max_weight < 0) throw InvalidInput("max_weight must be >= 0");
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<int> cur;
        gen_rec(w, w, cur, predicate, out);
    }
    return out;
}

std::vector<Partition> maximal_rectangles(const Partition& lambda) {
    if (lambda.empty()) throw InvalidInput("maximal_rectangles of empty partition");
    std::vector<Partition> out;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.part(i) > lambda.part(i + 1))
            out.push_back(Partition(std::vector<int>(i, lambda.part(i))));
    }
    return out;
}

std::vector<Cell> cells_of(const Partition& lambda) {
    std::vector<Cell> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cells.push_back(Cell{i, j});
    return cells;
}

} // namespace jackpoly
