#include "quivinv/quiver.hpp"

#include "quivinv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quivinv {

Quiver::Quiver(int num_vertices, std::vector<Arrow> arrows)
    : r_(num_vertices), arrows_(std::move(arrows)) {
    if (r_ < 1) throw domain_error("Quiver: needs at least one vertex");
    for (const auto& [i, j] : arrows_)
        if (i < 0 || i >= r_ || j < 0 || j >= r_)
            throw domain_error("Quiver: arrow endpoint out of range");
    std::sort(arrows_.begin(), arrows_.end());
}

int Quiver::loops_at(int i) const {
    if (i < 0 || i >= r_) throw domain_error("Quiver: vertex out of range");
    int n = 0;
    for (const auto& [a, b] : arrows_)
        if (a == i && b == i) ++n;
    return n;
}

bool Quiver::is_symmetric() const {
    auto a = arrow_matrix();
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < r_; ++j)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                return false;
    return true;
}

std::vector<std::vector<int>> Quiver::arrow_matrix() const {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(r_),
                                    std::vector<int>(static_cast<std::size_t>(r_), 0));
    for (const auto& [i, j] : arrows_)
        ++a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return a;
}

std::vector<std::vector<int>> Quiver::cartan() const {
    auto a = arrow_matrix();
    std::vector<std::vector<int>> c(static_cast<std::size_t>(r_),
                                    std::vector<int>(static_cast<std::size_t>(r_), 0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (i == j ? 2 : 0) - a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return c;
}

Quiver Quiver::doubled() const {
    std::vector<Arrow> a = arrows_;
    for (const auto& [i, j] : arrows_) a.emplace_back(j, i);
    return Quiver(r_, std::move(a));
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> a;
    a.reserve(arrows_.size());
    for (const auto& [i, j] : arrows_) a.emplace_back(j, i);
    return Quiver(r_, std::move(a));
}

Quiver Quiver::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int r = -1;
    std::vector<Arrow> arrows;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        auto fail = [&](const std::string& what) {
            throw domain_error("quiver file line " + std::to_string(line_no) + ": " + what);
        };
        if (word == "vertices") {
            if (r != -1) fail("duplicate vertices line");
            if (!(ls >> r) || r < 1) fail("vertex count must be a positive integer");
        } else if (word == "arrow") {
            if (r == -1) fail("arrow before vertices line");
            int i = 0, j = 0;
            if (!(ls >> i >> j) || i < 1 || i > r || j < 1 || j > r)
                fail("arrow needs two vertex indices in 1.." + std::to_string(r));
            arrows.emplace_back(i - 1, j - 1);
        } else {
            fail("unknown directive '" + word + "'");
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#')
            fail("trailing text '" + rest + "'");
    }
    if (r == -1) throw domain_error("quiver file: missing vertices line");
    return Quiver(r, std::move(arrows));
}

std::string Quiver::serialize() const {
    std::ostringstream os;
    os << "vertices " << r_ << "\n";
    for (const auto& [i, j] : arrows_) os << "arrow " << i + 1 << " " << j + 1 << "\n";
    return os.str();
}

long tits_form(const Quiver& g, const DimVector& v) {
    if (v.size() != static_cast<std::size_t>(g.num_vertices()))
        throw domain_error("tits_form: dimension vector size mismatch");
    long q = 0;
    for (int x : v) q += static_cast<long>(x) * x;
    for (const auto& [i, j] : g.arrows())
        q -= static_cast<long>(v[static_cast<std::size_t>(i)]) *
             v[static_cast<std::size_t>(j)];
    return q;
}

namespace {

bool support_connected(const Quiver& g, const DimVector& v) {
    int r = g.num_vertices();
    std::vector<char> in(static_cast<std::size_t>(r), 0), seen(static_cast<std::size_t>(r), 0);
    int start = -1, count = 0;
    for (int i = 0; i < r; ++i)
        if (v[static_cast<std::size_t>(i)] > 0) {
            in[static_cast<std::size_t>(i)] = 1;
            ++count;
            start = i;
        }
    if (count <= 1) return true;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.arrows()) {
            int y = -1;
            if (a == x) y = b;
            else if (b == x) y = a;
            if (y >= 0 && in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == count;
}

} // namespace

RootClass classify_root(const Quiver& g, const DimVector& v_in) {
    int r = g.num_vertices();
    if (v_in.size() != static_cast<std::size_t>(r))
        throw domain_error("classify_root: dimension vector size mismatch");
    bool all_zero = true;
    for (int x : v_in) {
        if (x < 0) throw domain_error("classify_root: negative dimension");
        if (x > 0) all_zero = false;
    }
    if (all_zero) throw domain_error("classify_root: zero vector");

    const auto c = g.cartan();
    std::vector<char> loop_free(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) loop_free[static_cast<std::size_t>(i)] = g.loops_at(i) == 0;

    DimVector v = v_in;
    for (;;) {
        for (int x : v)
            if (x < 0) return RootClass::NotRoot;
        if (!support_connected(g, v)) return RootClass::NotRoot;
        long total = std::accumulate(v.begin(), v.end(), 0L);
        if (total == 1) {
            for (int i = 0; i < r; ++i)
                if (v[static_cast<std::size_t>(i)] == 1)
                    return loop_free[static_cast<std::size_t>(i)] ? RootClass::RealRoot
                                                                  : RootClass::ImaginaryRoot;
        }
        int pivot = -1;
        long pairing = 0;
        for (int i = 0; i < r && pivot == -1; ++i) {
            if (!loop_free[static_cast<std::size_t>(i)]) continue;
            long dot = 0;
            for (int j = 0; j < r; ++j)
                dot += static_cast<long>(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                       v[static_cast<std::size_t>(j)];
            if (dot > 0) {
                pivot = i;
                pairing = dot;
            }
        }
        if (pivot == -1) return RootClass::ImaginaryRoot;
        v[static_cast<std::size_t>(pivot)] -= static_cast<int>(pairing);
    }
}

std::pair<Quiver, DimVector> attach_legs(const Quiver& g, const MultiPartition& mu,
                                         const std::vector<int>& legs) {
    int r = g.num_vertices();
    if (legs.size() != static_cast<std::size_t>(r))
        throw domain_error("attach_legs: leg profile size mismatch");
    int total_slots = 0;
    for (int k : legs) {
        if (k < 1) throw domain_error("attach_legs: every vertex needs at least one leg slot");
        total_slots += k;
    }
    if (mu.num_slots() != total_slots)
        throw domain_error("attach_legs: multipartition has wrong slot count");

    DimVector v(static_cast<std::size_t>(r), 0);
    int slot = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < legs[static_cast<std::size_t>(i)]; ++j, ++slot) {
            int size = mu.slot(slot).size();
            if (j == 0)
                v[static_cast<std::size_t>(i)] = size;
            else if (v[static_cast<std::size_t>(i)] != size)
                throw domain_error("attach_legs: unequal slot sizes at one vertex");
        }
    }

    std::vector<Quiver::Arrow> arrows = g.arrows();
    DimVector ext = v;
    int next = r;
    slot = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < legs[static_cast<std::size_t>(i)]; ++j, ++slot) {
            const Partition& la = mu.slot(slot);
            int prev = i;
            int running = v[static_cast<std::size_t>(i)];
            for (int m = 1; m < la.length(); ++m) {
                running -= la.part(m - 1);
                arrows.emplace_back(next, prev);
                ext.push_back(running);
                prev = next;
                ++next;
            }
        }
    }
    return {Quiver(next, std::move(arrows)), std::move(ext)};
}

std::pair<Quiver, DimVector> attach_legs(const Quiver& g, const MultiPartition& mu) {
    return attach_legs(g, mu, std::vector<int>(static_cast<std::size_t>(g.num_vertices()), 1));
}

MultiPartition one_column_multipartition(const DimVector& v, const std::vector<int>& legs) {
    if (v.size() != legs.size())
        throw domain_error("one_column_multipartition: size mismatch");
    std::vector<Partition> slots;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw domain_error("one_column_multipartition: negative dimension");
        for (int j = 0; j < legs[i]; ++j) slots.push_back(Partition::single_column(v[i]));
    }
    return MultiPartition(std::move(slots));
}

long d_mu(const Quiver& g, const MultiPartition& mu, const std::vector<int>& legs) {
    auto [ext, v] = attach_legs(g, mu, legs);
    return 1 - tits_form(ext, v);
}

long d_mu(const Quiver& g, const MultiPartition& mu) {
    return d_mu(g, mu, std::vector<int>(static_cast<std::size_t>(g.num_vertices()), 1));
}

} // namespace quivinv
