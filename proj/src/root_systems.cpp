#include "pivotal/root_systems.hpp"

#include "pivotal/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pivotal {

RootType rootTypeFromString(const std::string& s) {
    if (s == "A" || s == "a") return RootType::A;
    if (s == "B" || s == "b") return RootType::B;
    if (s == "C" || s == "c") return RootType::C;
    if (s == "D" || s == "d") return RootType::D;
    if (s == "G2" || s == "g2") return RootType::G2;
    if (s == "F4" || s == "f4") return RootType::F4;
    if (s == "E6" || s == "e6") return RootType::E6;
    if (s == "E7" || s == "e7") return RootType::E7;
    if (s == "E8" || s == "e8") return RootType::E8;
    throw UnsupportedType("unknown root system type '" + s + "'");
}

std::string rootTypeToString(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
        case RootType::G2: return "G2";
        case RootType::F4: return "F4";
        case RootType::E6: return "E6";
        case RootType::E7: return "E7";
        case RootType::E8: return "E8";
    }
    return "?";
}

int RootSystem::rootIndex(const QVec& r) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), r);
    if (it == roots.end() || *it != r) return -1;
    return static_cast<int>(it - roots.begin());
}

bool RootSystem::isPositive(const QVec& r) const {
    return std::binary_search(positive.begin(), positive.end(), r);
}

QVec reflect(const QVec& alpha, const QVec& x) {
    Rational factor = 2 * dot(alpha, x) / dot(alpha, alpha);
    return sub(x, scaled(alpha, factor));
}

namespace {

void appendSigned(std::vector<QVec>& roots, const QVec& v) {
    roots.push_back(v);
    roots.push_back(negated(v));
}

std::vector<QVec> halfCubeRoots(int n, const std::vector<int>& fixedTail, bool evenMinusTotal) {
    // Vectors (+-1, ..., +-1, fixedTail...) with the prescribed parity of the
    // total number of -1 entries.
    std::vector<QVec> out;
    int               freeCount = n;
    for (int mask = 0; mask < (1 << freeCount); ++mask) {
        QVec v;
        int  minus = 0;
        for (int i = 0; i < freeCount; ++i) {
            int s = (mask >> i) & 1 ? -1 : 1;
            if (s < 0) ++minus;
            v.emplace_back(s);
        }
        for (int s : fixedTail) {
            if (s < 0) ++minus;
            v.emplace_back(s);
        }
        if ((minus % 2 == 0) == evenMinusTotal) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

RootSystem build_root_system(RootType type, int rank) {
    RootSystem Phi;
    Phi.type = type;
    std::vector<QVec> all;

    switch (type) {
        case RootType::A: {
            if (rank < 1) throw InvalidRank("type A needs rank >= 1");
            int n          = rank + 1;
            Phi.rank       = rank;
            Phi.ambientDim = n;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) all.push_back(sub(unitVec(n, i), unitVec(n, j)));
            Phi.chamber = QVec(n);
            for (int i = 0; i < n; ++i) Phi.chamber[i] = n - i;
            break;
        }
        case RootType::B:
        case RootType::C: {
            if (rank < 2) throw InvalidRank("types B and C need rank >= 2");
            int n          = rank;
            Phi.rank       = rank;
            Phi.ambientDim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    appendSigned(all, sub(unitVec(n, i), unitVec(n, j)));
                    appendSigned(all, add(unitVec(n, i), unitVec(n, j)));
                }
            for (int i = 0; i < n; ++i)
                appendSigned(all, unitVec(n, i, type == RootType::C ? 2 : 1));
            Phi.chamber = QVec(n);
            for (int i = 0; i < n; ++i) Phi.chamber[i] = n - i;
            break;
        }
        case RootType::D: {
            if (rank < 2) throw InvalidRank("type D needs rank >= 2");
            int n          = rank;
            Phi.rank       = rank;
            Phi.ambientDim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    appendSigned(all, sub(unitVec(n, i), unitVec(n, j)));
                    appendSigned(all, add(unitVec(n, i), unitVec(n, j)));
                }
            Phi.chamber = QVec(n);
            for (int i = 0; i < n; ++i) Phi.chamber[i] = n - i;
            break;
        }
        case RootType::G2: {
            if (rank != 2 && rank != 0) throw InvalidRank("G2 has rank 2");
            Phi.rank       = 2;
            Phi.ambientDim = 3;
            appendSigned(all, {Rational(1), Rational(-1), Rational(0)});
            appendSigned(all, {Rational(0), Rational(1), Rational(-1)});
            appendSigned(all, {Rational(1), Rational(0), Rational(-1)});
            appendSigned(all, {Rational(2), Rational(-1), Rational(-1)});
            appendSigned(all, {Rational(-1), Rational(2), Rational(-1)});
            appendSigned(all, {Rational(-1), Rational(-1), Rational(2)});
            Phi.chamber = {Rational(5), Rational(1), Rational(-6)};
            break;
        }
        case RootType::F4: {
            if (rank != 4 && rank != 0) throw InvalidRank("F4 has rank 4");
            Phi.rank       = 4;
            Phi.ambientDim = 4;
            for (int i = 0; i < 4; ++i) appendSigned(all, unitVec(4, i, 2));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    appendSigned(all, add(unitVec(4, i, 2), unitVec(4, j, 2)));
                    appendSigned(all, sub(unitVec(4, i, 2), unitVec(4, j, 2)));
                }
            for (int mask = 0; mask < 16; ++mask) {
                QVec v(4);
                for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
                all.push_back(std::move(v));
            }
            Phi.chamber = {Rational(8), Rational(4), Rational(2), Rational(1)};
            break;
        }
        case RootType::E8:
        case RootType::E7:
        case RootType::E6: {
            int wanted = type == RootType::E8 ? 8 : (type == RootType::E7 ? 7 : 6);
            if (rank != wanted && rank != 0)
                throw InvalidRank("E-type rank is fixed");
            Phi.rank       = wanted;
            Phi.ambientDim = 8;
            std::vector<QVec> e8;
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) {
                    appendSigned(e8, add(unitVec(8, i, 2), unitVec(8, j, 2)));
                    appendSigned(e8, sub(unitVec(8, i, 2), unitVec(8, j, 2)));
                }
            for (const auto& v : halfCubeRoots(8, {}, true)) e8.push_back(v);

            QVec orth1 = add(unitVec(8, 6), unitVec(8, 7));  // e7 + e8
            QVec orth2 = add(unitVec(8, 5), unitVec(8, 6));  // e6 + e7
            for (const auto& r : e8) {
                if (type != RootType::E8 && dot(r, orth1) != 0) continue;
                if (type == RootType::E6 && dot(r, orth2) != 0) continue;
                all.push_back(r);
            }
            if (type == RootType::E8)
                Phi.chamber = {Rational(1),  Rational(2),  Rational(4),  Rational(8),
                               Rational(16), Rational(32), Rational(64), Rational(128)};
            else if (type == RootType::E7)
                Phi.chamber = {Rational(1),  Rational(2),  Rational(4), Rational(8),
                               Rational(16), Rational(32), Rational(64), Rational(-64)};
            else
                Phi.chamber = {Rational(1), Rational(2), Rational(4), Rational(8),
                               Rational(16), Rational(64), Rational(0), Rational(0)};
            break;
        }
    }

    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Phi.roots = std::move(all);

    for (const auto& r : Phi.roots) {
        Rational value = dot(Phi.chamber, r);
        if (value == 0) throw std::logic_error("chamber functional vanishes on a root");
        if (value > 0) Phi.positive.push_back(r);
    }

    // Simple roots: indecomposable positive roots.
    for (const auto& r : Phi.positive) {
        bool decomposable = false;
        for (const auto& a : Phi.positive) {
            if (a == r) continue;
            QVec b = sub(r, a);
            if (Phi.isPositive(b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) Phi.simple.push_back(r);
    }
    if (static_cast<int>(Phi.simple.size()) != Phi.rank)
        throw std::logic_error("simple system size disagrees with the rank");

    // Crystallographic sanity: integrality, symmetry, reduced root lines.
    for (const auto& a : Phi.roots) {
        for (const auto& b : Phi.roots) {
            Rational cart = 2 * dot(a, b) / dot(a, a);
            if (denominator(cart) != 1)
                throw std::logic_error("Cartan integer is not an integer");
        }
        if (!Phi.isRoot(negated(a))) throw std::logic_error("root set is not symmetric");
        for (const auto& b : Phi.roots)
            if (b != a && b != negated(a) && canonicalLine(a) == canonicalLine(b))
                throw std::logic_error("root system is not reduced");
    }
    // Every positive root is a nonnegative integer combination of Delta.
    for (const auto& r : Phi.positive) {
        auto coef = expressInBasis(Phi.simple, r);
        if (!coef) throw std::logic_error("positive root outside the simple span");
        for (const auto& x : *coef)
            if (x < 0 || denominator(x) != 1)
                throw std::logic_error("positive root is not a nonnegative integer combination");
    }
    return Phi;
}

BigInt weylOrder(RootType type, int rank) {
    auto fact = [](int n) {
        BigInt f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (type) {
        case RootType::A: return fact(rank + 1);
        case RootType::B:
        case RootType::C: return (BigInt(1) << rank) * fact(rank);
        case RootType::D: return (BigInt(1) << (rank - 1)) * fact(rank);
        case RootType::G2: return 12;
        case RootType::F4: return 1152;
        case RootType::E6: return 51840;
        case RootType::E7: return 2903040;
        case RootType::E8: return BigInt("696729600");
    }
    throw std::logic_error("unreachable");
}

bool is_incomparable(const RootSystem& Phi, const QVec& alpha, const QVec& beta) {
    if (!Phi.isPositive(alpha) || !Phi.isPositive(beta))
        throw NotPositiveRoot("both roots must be positive");
    if (alpha == beta) throw NotPositiveRoot("roots must be distinct");
    auto coef = expressInBasis(Phi.simple, sub(beta, alpha));
    if (!coef) throw std::logic_error("difference escapes the root span");
    bool allNonNeg = true, allNonPos = true;
    for (const auto& x : *coef) {
        if (x < 0) allNonNeg = false;
        if (x > 0) allNonPos = false;
    }
    return !(allNonNeg || allNonPos);
}

namespace {

enum class RootForm { Minus, Plus, Short };  // e_i - e_j, e_i + e_j, (2)e_i

struct ClassicalRoot {
    RootForm form;
    int      i = 0;  // 1-based, i < j for the two-letter forms
    int      j = 0;
};

ClassicalRoot parseClassicalPositive(const RootSystem& Phi, const QVec& r) {
    int n = Phi.ambientDim;
    std::vector<std::pair<int, Rational>> nz;
    for (int t = 0; t < n; ++t)
        if (r[t] != 0) nz.emplace_back(t + 1, r[t]);
    if (nz.size() == 1) {
        return {RootForm::Short, nz[0].first, 0};
    }
    if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == -1)
        return {RootForm::Minus, nz[0].first, nz[1].first};
    if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == 1)
        return {RootForm::Plus, nz[0].first, nz[1].first};
    throw NotPositiveRoot("not a classical positive root: " + vecToString(r));
}

bool intervalContains(int a, int b, int c, int d) {  // [c,d] subset of [a,b]
    return a <= c && d <= b;
}

}  // namespace

bool classify_incomparable(const RootSystem& Phi, const QVec& alpha, const QVec& beta) {
    if (Phi.type != RootType::A && Phi.type != RootType::B && Phi.type != RootType::C &&
        Phi.type != RootType::D)
        throw UnsupportedType("classification tables cover the infinite families only");
    if (!Phi.isPositive(alpha) || !Phi.isPositive(beta))
        throw NotPositiveRoot("both roots must be positive");
    if (alpha == beta) throw NotPositiveRoot("roots must be distinct");

    ClassicalRoot x = parseClassicalPositive(Phi, alpha);
    ClassicalRoot y = parseClassicalPositive(Phi, beta);
    int           n = Phi.ambientDim;

    // Same-form cases are symmetric; mixed cases are normalized so that the
    // "structurally earlier" form comes first.
    if (x.form == RootForm::Minus && y.form == RootForm::Minus) {
        // incomparable iff neither interval contains the other
        return !intervalContains(x.i, x.j, y.i, y.j) && !intervalContains(y.i, y.j, x.i, x.j);
    }
    if (x.form == RootForm::Plus && y.form == RootForm::Plus) {
        // incomparable iff one closed interval nests strictly inside the other
        auto nests = [](const ClassicalRoot& out, const ClassicalRoot& in) {
            return out.i < in.i && in.j < out.j;
        };
        return nests(x, y) || nests(y, x);
    }
    if (x.form == RootForm::Plus && y.form == RootForm::Minus) std::swap(x, y);
    if (x.form == RootForm::Minus && y.form == RootForm::Plus) {
        // e_k - e_l vs e_i + e_j
        int k = x.i, i = y.i, j = y.j, l = x.j;
        if (Phi.type == RootType::D) return k < i || (j == n && l == n);
        return k < i;
    }
    if (x.form == RootForm::Short && y.form != RootForm::Short) std::swap(x, y);
    if (y.form == RootForm::Short) {
        if (Phi.type == RootType::D)
            throw NotPositiveRoot("type D has no short roots");
        int i = y.i;
        if (x.form == RootForm::Short) return false;  // e_i vs e_j always comparable
        if (x.form == RootForm::Minus) return x.i < i;            // (B4)/(C4)
        // plus-form against a short root: (B5) vs (C5)
        if (Phi.type == RootType::B) return i < x.i;
        return x.i < i && i < x.j;  // C5
    }
    throw std::logic_error("unreachable classification case");
}

std::vector<std::pair<QVec, QVec>> incomparable_pairs(const RootSystem& Phi) {
    std::vector<std::pair<QVec, QVec>> out;
    for (std::size_t a = 0; a < Phi.positive.size(); ++a)
        for (std::size_t b = a + 1; b < Phi.positive.size(); ++b)
            if (is_incomparable(Phi, Phi.positive[a], Phi.positive[b]))
                out.emplace_back(Phi.positive[a], Phi.positive[b]);
    return out;
}

QVec SignedPermutation::apply(const QVec& x) const {
    if (static_cast<int>(x.size()) != size()) throw DimensionMismatch("window size mismatch");
    QVec y = zeroVec(x.size());
    for (int p = 0; p < size(); ++p) {
        int m    = std::abs(window[p]) - 1;
        int sign = window[p] > 0 ? 1 : -1;
        y[m] += sign * x[p];
    }
    return y;
}

int SignedPermutation::barCount() const {
    int c = 0;
    for (int v : window) c += v < 0;
    return c;
}

std::string SignedPermutation::toString() const {
    std::ostringstream os;
    for (int p = 0; p < size(); ++p) {
        if (p) os << " ";
        os << window[p];
    }
    return os.str();
}

std::set<QVec> positiveSimpleImages(const RootSystem& Phi, const SignedPermutation& w) {
    std::set<QVec> out;
    for (const auto& delta : Phi.simple) {
        QVec padded = delta;
        padded.resize(w.size(), Rational(0));
        QVec image = w.apply(padded);
        image.resize(Phi.ambientDim, Rational(0));
        if (!Phi.isRoot(image)) throw std::logic_error("window does not preserve the root system");
        if (Phi.isPositive(image)) out.insert(image);
    }
    return out;
}

namespace {

// --- window assembly helpers ------------------------------------------------
//
// A window is a sequence of signed letters; the positive simple-root images
// come from the junction patterns
//   (+a, -b)            -> e_a + e_b
//   (+a, +b) with a < b -> e_a - e_b
//   (-a, -b) with b < a -> e_b - e_a
//   trailing +m         -> e_m        (types B/C)
//   trailing (x, y)     -> x + y      (type D extra root)
// Everything else is negative. The builders below assemble candidates from
// ascending barred runs, descending unbarred runs and explicit junctions; the
// caller verifies every candidate exactly and keeps the first that works.

std::vector<int> ascendingBarred(int from, int to, const std::set<int>& skip) {
    std::vector<int> out;
    for (int v = from; v <= to; ++v)
        if (!skip.count(v)) out.push_back(-v);
    return out;
}

std::vector<int> descendingPlain(int from, int to, const std::set<int>& skip) {
    std::vector<int> out;
    for (int v = from; v >= to; --v)
        if (!skip.count(v)) out.push_back(v);
    return out;
}

void appendAll(std::vector<int>& w, const std::vector<int>& part) {
    w.insert(w.end(), part.begin(), part.end());
}

// Ascending barred run over `letters` with the descent splices installed: each
// splice [big, small] is placed at the sorted position of its larger letter.
std::vector<int> barredWithSplices(std::set<int> letters,
                                   std::vector<std::pair<int, int>> splices) {
    std::vector<int> out;
    std::map<int, std::vector<int>> blockAt;  // sort key (max letter) -> block
    for (auto [big, small] : splices) {
        blockAt[big] = {-big, -small};
        letters.erase(big);
        letters.erase(small);
    }
    for (int v : letters) blockAt[v] = {-v};
    for (auto& [key, block] : blockAt) appendAll(out, block);
    return out;
}

}  // namespace

SignedPermutation witness(const RootSystem& Phi, const QVec& alphaIn, const QVec& betaIn) {
    if (Phi.type != RootType::A && Phi.type != RootType::B && Phi.type != RootType::C &&
        Phi.type != RootType::D)
        throw UnsupportedType("witness tables cover the infinite families only");
    if (!is_incomparable(Phi, alphaIn, betaIn))
        throw NotPositiveRoot("witness requires an incomparable pair");

    const int n = Phi.ambientDim;

    auto tryWindow = [&](std::vector<int> win) -> std::optional<SignedPermutation> {
        if (static_cast<int>(win.size()) != n) return std::nullopt;
        std::vector<bool> used(n + 1, false);
        for (int v : win) {
            int m = std::abs(v);
            if (m < 1 || m > n || used[m]) return std::nullopt;
            used[m] = true;
        }
        SignedPermutation w{std::move(win)};
        if (Phi.type == RootType::D && w.barCount() % 2 != 0) return std::nullopt;
        auto images = positiveSimpleImages(Phi, w);
        if (images == std::set<QVec>{alphaIn, betaIn}) return w;
        return std::nullopt;
    };

    auto range = [](int from, int to) {
        std::set<int> L;
        for (int v = from; v <= to; ++v) L.insert(v);
        return L;
    };

    std::vector<std::vector<int>> candidates;

    if (Phi.type == RootType::A) {
        ClassicalRoot x = parseClassicalPositive(Phi, alphaIn);
        ClassicalRoot y = parseClassicalPositive(Phi, betaIn);
        // Ascending blocks carry the two roots; everything else descends.
        std::map<int, std::vector<int>, std::greater<int>> blocks;
        std::set<int> taken;
        auto addBlock = [&](std::vector<int> b) {
            for (int v : b) taken.insert(v);
            blocks[b.front()] = std::move(b);
        };
        if (x.j == y.i)
            addBlock({x.i, x.j, y.j});
        else if (y.j == x.i)
            addBlock({y.i, y.j, x.j});
        else {
            addBlock({x.i, x.j});
            addBlock({y.i, y.j});
        }
        for (int v = 1; v <= n; ++v)
            if (!taken.count(v)) blocks[v] = {v};
        std::vector<int> win;
        for (auto& [key, b] : blocks) appendAll(win, b);
        candidates.push_back(std::move(win));
    } else {
        ClassicalRoot x = parseClassicalPositive(Phi, alphaIn);
        ClassicalRoot y = parseClassicalPositive(Phi, betaIn);
        if (static_cast<int>(x.form) > static_cast<int>(y.form)) std::swap(x, y);
        // Now the form pair is ordered Minus <= Plus <= Short.

        if (x.form == RootForm::Minus && y.form == RootForm::Minus) {
            // All-barred ascending with descent splices; the last-letter flip
            // is the parity dial for type D.
            std::vector<int> win;
            if (x.j == y.i || y.j == x.i) {
                const ClassicalRoot& hi = (x.j == y.i) ? y : x;  // hi.i == lo.j
                const ClassicalRoot& lo = (x.j == y.i) ? x : y;
                std::map<int, std::vector<int>> blockAt;
                blockAt[hi.j] = {-hi.j, -hi.i, -lo.i};
                for (int v : range(1, n)) {
                    if (v == hi.j || v == hi.i || v == lo.i) continue;
                    blockAt[v] = {-v};
                }
                for (auto& [key, b] : blockAt) appendAll(win, b);
            } else {
                win = barredWithSplices(range(1, n), {{x.j, x.i}, {y.j, y.i}});
            }
            candidates.push_back(win);
            win.back() = -win.back();
            candidates.push_back(win);
        } else if (x.form == RootForm::Plus && y.form == RootForm::Plus) {
            ClassicalRoot out = x, in = y;
            if (!(out.i < in.i)) std::swap(out, in);
            int i = out.i, j = out.j, k = in.i, l = in.j;
            if (j < n) {
                std::vector<int> win;
                appendAll(win, ascendingBarred(1, k - 1, {i}));
                win.push_back(k);
                win.push_back(-l);
                appendAll(win, descendingPlain(j - 1, k + 1, {l}));
                win.push_back(i);
                win.push_back(-j);
                appendAll(win, ascendingBarred(j + 1, n, {}));
                candidates.push_back(win);
                win.back() = -win.back();
                candidates.push_back(win);
            } else {
                // j == n: both roots through (+a, -b) junctions, even bars.
                std::vector<int> win;
                appendAll(win, ascendingBarred(1, i - 1, {}));
                win.push_back(n);
                win.push_back(-i);
                appendAll(win, ascendingBarred(i + 1, k - 1, {}));
                win.push_back(l);
                win.push_back(-k);
                appendAll(win, ascendingBarred(k + 1, n - 1, {l}));
                candidates.push_back(win);
            }
        } else if (x.form == RootForm::Minus && y.form == RootForm::Plus) {
            int k = x.i, l = x.j, i = y.i, j = y.j;
            if (Phi.type == RootType::D && j == n && l == n) {
                if (i == k) {
                    for (int lastSign : {-1, +1}) {
                        std::vector<int> win;
                        appendAll(win, ascendingBarred(1, n - 1, {i}));
                        win.push_back(i);
                        win.push_back(lastSign * n);
                        candidates.push_back(win);
                    }
                } else {
                    for (int lastSign : {+1, -1}) {
                        std::vector<int> win;
                        appendAll(win, ascendingBarred(1, n - 1, {i, k}));
                        win.push_back(k);
                        win.push_back(n);
                        win.push_back(lastSign * i);
                        candidates.push_back(win);
                    }
                }
            } else if (Phi.type == RootType::D && j == n) {
                // alpha = e_i + e_n; beta = e_k - e_l with l < n.
                if (l == i) {
                    std::vector<int> win;
                    appendAll(win, ascendingBarred(1, k - 1, {}));
                    win.push_back(n);
                    win.push_back(-i);
                    win.push_back(-k);
                    appendAll(win, ascendingBarred(k + 1, n - 1, {i}));
                    candidates.push_back(win);
                } else {
                    std::set<int> head = range(1, n - 1);
                    head.erase(i);
                    std::vector<int> win = barredWithSplices(head, {{l, k}});
                    win.push_back(n);
                    win.push_back(-i);
                    candidates.push_back(win);
                }
            } else if (Phi.type == RootType::D && l == n) {
                // beta = e_k - e_n from a barred splice, alpha from (+j, -i).
                std::vector<int> win;
                std::set<int> head = range(1, i - 1);
                head.insert(n);
                appendAll(win, barredWithSplices(head, {{n, k}}));
                appendAll(win, ascendingBarred(i + 1, j - 1, {}));
                win.push_back(j);
                win.push_back(-i);
                appendAll(win, ascendingBarred(j + 1, n - 1, {}));
                candidates.push_back(win);
            } else if (Phi.type == RootType::D && j == l) {
                // Shared letter: the triple (+i, -l, -k) carries both roots.
                std::vector<int> win;
                appendAll(win, ascendingBarred(1, i - 1, {k}));
                win.push_back(i);
                win.push_back(-l);
                win.push_back(-k);
                appendAll(win, ascendingBarred(i + 1, n, {l}));
                candidates.push_back(win);
            } else if (Phi.type == RootType::D) {
                // j, l < n: reserve +-n as the parity dial.
                for (int lastSign : {+1, -1}) {
                    std::vector<int> win;
                    if (l >= i) {
                        appendAll(win, ascendingBarred(1, i - 1, {k}));
                        for (int v : descendingPlain(n - 1, i, {j, k})) {
                            if (v == l) win.push_back(k);
                            win.push_back(v);
                        }
                    } else {
                        std::set<int> head = range(1, i - 1);
                        appendAll(win, barredWithSplices(head, {{l, k}}));
                        appendAll(win, descendingPlain(n - 1, i, {j}));
                    }
                    win.push_back(-j);
                    win.push_back(lastSign * n);
                    candidates.push_back(win);
                }
            } else {
                // Types B and C (B3): k < i.
                std::vector<int> win;
                if (j == l) {
                    appendAll(win, ascendingBarred(1, i - 1, {k}));
                    win.push_back(i);
                    win.push_back(-l);
                    win.push_back(-k);
                    appendAll(win, ascendingBarred(i + 1, n, {l}));
                } else if (l >= i) {
                    appendAll(win, ascendingBarred(1, i - 1, {k}));
                    for (int v : descendingPlain(n, i, {j, k})) {
                        if (v == l) win.push_back(k);
                        win.push_back(v);
                    }
                    win.push_back(-j);
                } else {
                    appendAll(win, barredWithSplices(range(1, i - 1), {{l, k}}));
                    appendAll(win, descendingPlain(n, i, {j}));
                    win.push_back(-j);
                }
                candidates.push_back(win);
            }
        } else if (x.form == RootForm::Minus && y.form == RootForm::Short) {
            // (B4)/(C4): k < i.
            int k = x.i, l = x.j, i = y.i;
            std::vector<int> win;
            if (l >= i) {
                appendAll(win, ascendingBarred(1, i - 1, {k}));
                for (int v : descendingPlain(n, i, {k})) {
                    if (v == l) win.push_back(k);
                    win.push_back(v);
                }
            } else {
                appendAll(win, barredWithSplices(range(1, i - 1), {{l, k}}));
                appendAll(win, descendingPlain(n, i, {}));
            }
            candidates.push_back(win);
        } else if (x.form == RootForm::Plus && y.form == RootForm::Short) {
            // (B5): i < k; (C5): k < i < l.
            int k = x.i, l = x.j, i = y.i;
            std::vector<int> win;
            appendAll(win, ascendingBarred(1, i - 1, {k}));
            win.push_back(k);
            win.push_back(-l);
            appendAll(win, descendingPlain(n, i, {k, l}));
            candidates.push_back(win);
        }
    }

    if (Phi.type == RootType::D) {
        std::size_t base = candidates.size();
        for (std::size_t c = 0; c < base; ++c) {
            auto flipped = candidates[c];
            flipped.back() = -flipped.back();
            candidates.push_back(std::move(flipped));
        }
    }
    for (auto& win : candidates)
        if (auto w = tryWindow(std::move(win))) return *w;
    throw CaseNotCovered("no verified window for " + vecToString(alphaIn) + " vs " +
                         vecToString(betaIn));
}


namespace {

// Reflection permutation table on root indices for every root.
std::vector<std::vector<int>> reflectionTable(const RootSystem& Phi) {
    std::vector<std::vector<int>> table(Phi.roots.size(),
                                        std::vector<int>(Phi.roots.size(), -1));
    for (std::size_t a = 0; a < Phi.roots.size(); ++a)
        for (std::size_t b = 0; b < Phi.roots.size(); ++b) {
            int idx = Phi.rootIndex(reflect(Phi.roots[a], Phi.roots[b]));
            if (idx < 0) throw std::logic_error("reflection leaves the root system");
            table[a][b] = idx;
        }
    return table;
}

// Exhaustive walk over simple systems with a visited set; fine up to a few
// hundred thousand group elements.
void dfsSimpleSystems(const RootSystem& Phi, DfsReport& report) {
    auto refl = reflectionTable(Phi);
    std::vector<char> positive(Phi.roots.size(), 0);
    for (std::size_t r = 0; r < Phi.roots.size(); ++r)
        positive[r] = Phi.isPositive(Phi.roots[r]) ? 1 : 0;

    std::vector<std::int16_t> start;
    for (const auto& d : Phi.simple) start.push_back(static_cast<std::int16_t>(Phi.rootIndex(d)));
    std::sort(start.begin(), start.end());

    std::set<std::vector<std::int16_t>> visited{start};
    std::vector<std::vector<std::int16_t>> stack{start};
    while (!stack.empty()) {
        auto S = std::move(stack.back());
        stack.pop_back();
        ++report.statesVisited;
        std::vector<int> pos;
        for (auto r : S)
            if (positive[r]) pos.push_back(r);
        if (pos.size() == 2)
            report.pairsFound.insert({Phi.roots[std::min(pos[0], pos[1])],
                                      Phi.roots[std::max(pos[0], pos[1])]});
        for (auto mirror : S) {
            std::vector<std::int16_t> next;
            next.reserve(S.size());
            for (auto r : S) next.push_back(static_cast<std::int16_t>(refl[mirror][r]));
            std::sort(next.begin(), next.end());
            if (visited.insert(next).second) stack.push_back(std::move(next));
        }
    }
}

// Reverse search over the Weyl orbit of a regular dominant point: the parent
// of a non-dominant chamber reflects at its smallest negative simple wall, so
// the orbit forms a tree and no visited set is needed. The simple system
// image rides along through the simple-reflection permutation tables.
void reverseSearchSimpleSystems(const RootSystem& Phi, DfsReport& report) {
    const int r = Phi.rank;

    std::vector<std::vector<long long>> cart(r, std::vector<long long>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational c = 2 * dot(Phi.simple[i], Phi.simple[j]) / dot(Phi.simple[i], Phi.simple[i]);
            if (denominator(c) != 1) throw std::logic_error("Cartan entry is not integral");
            cart[i][j] = static_cast<long long>(numerator(c));
        }

    std::vector<std::vector<int>> sperm(r, std::vector<int>(Phi.roots.size()));
    for (int i = 0; i < r; ++i)
        for (std::size_t a = 0; a < Phi.roots.size(); ++a) {
            int idx = Phi.rootIndex(reflect(Phi.simple[i], Phi.roots[a]));
            if (idx < 0) throw std::logic_error("reflection leaves the root system");
            sperm[i][a] = idx;
        }
    std::vector<char> positive(Phi.roots.size(), 0);
    for (std::size_t a = 0; a < Phi.roots.size(); ++a)
        positive[a] = Phi.isPositive(Phi.roots[a]) ? 1 : 0;

    QVec rho = zeroVec(Phi.ambientDim);
    for (const auto& p : Phi.positive) addInPlace(rho, p);
    std::vector<long long> t0(r);
    for (int j = 0; j < r; ++j) {
        Rational v = dot(rho, Phi.simple[j]);
        if (denominator(v) != 1 || v <= 0) throw std::logic_error("base point is not dominant");
        t0[j] = static_cast<long long>(numerator(v));
    }

    struct Frame {
        std::vector<long long> t;
        std::vector<int>       S;  // root indices of the simple-system image
        int                    nextCandidate = 0;
    };
    std::vector<Frame> stack;
    {
        Frame f;
        f.t = t0;
        for (const auto& d : Phi.simple) f.S.push_back(Phi.rootIndex(d));
        stack.push_back(std::move(f));
    }
    auto visit = [&](const Frame& f) {
        ++report.statesVisited;
        int pos[2], cnt = 0;
        for (int a : f.S) {
            if (!positive[a]) continue;
            if (cnt < 2) pos[cnt] = a;
            if (++cnt > 2) break;
        }
        if (cnt == 2)
            report.pairsFound.insert({Phi.roots[std::min(pos[0], pos[1])],
                                      Phi.roots[std::max(pos[0], pos[1])]});
    };
    visit(stack.back());

    std::vector<long long> tNext(r);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.nextCandidate == r) {
            stack.pop_back();
            continue;
        }
        int i = f.nextCandidate++;
        if (f.t[i] <= 0) continue;
        bool child = true;
        for (int j = 0; j < r; ++j) {
            tNext[j] = f.t[j] - cart[i][j] * f.t[i];
            if (j < i && tNext[j] < 0) {
                child = false;
                break;
            }
        }
        if (!child) continue;
        for (int j = 0; j < r; ++j)
            if (tNext[j] == 0) throw std::logic_error("orbit point is not regular");
        Frame g;
        g.t = tNext;
        g.S.reserve(r);
        for (int a : f.S) g.S.push_back(sperm[i][a]);
        visit(g);
        stack.push_back(std::move(g));
    }
}

}  // namespace

namespace {

DfsReport finishReport(const RootSystem& Phi, DfsReport report) {
    BigInt order = weylOrder(Phi.type, Phi.rank);
    if (BigInt(report.statesVisited) != order)
        throw std::logic_error("walk visited " + std::to_string(report.statesVisited) +
                               " states, expected " + order.str());
    auto pairs               = incomparable_pairs(Phi);
    report.incomparableCount = pairs.size();
    report.allIncomparableCovered = true;
    for (const auto& pr : pairs) {
        auto key = pr.first < pr.second ? pr : std::make_pair(pr.second, pr.first);
        if (!report.pairsFound.count(key)) report.allIncomparableCovered = false;
    }
    return report;
}

}  // namespace

DfsReport dfs_verify_visited(const RootSystem& Phi) {
    DfsReport report;
    dfsSimpleSystems(Phi, report);
    return finishReport(Phi, report);
}

DfsReport dfs_verify_reverse(const RootSystem& Phi) {
    DfsReport report;
    reverseSearchSimpleSystems(Phi, report);
    return finishReport(Phi, report);
}

DfsReport dfs_verify_comp_roots(const RootSystem& Phi, bool allowLarge) {
    BigInt order = weylOrder(Phi.type, Phi.rank);
    if (!allowLarge && order > 50000)
        throw EnumerationGuard("Weyl group of order " + order.str() +
                               " needs the long-running flag");
    return order <= 200000 ? dfs_verify_visited(Phi) : dfs_verify_reverse(Phi);
}

Polytope coxeter_zonotope(const RootSystem& Phi) {
    Polytope Z = zonotope(Phi.positive);
    for (auto& v : Z.vertices)
        for (auto& x : v) x /= 2;
    Z.name = "Z_" + rootTypeToString(Phi.type) + std::to_string(Phi.rank);

    auto dirs = edge_directions(Z);
    std::set<QVec> dirSet(dirs.begin(), dirs.end());
    std::set<QVec> rootSet(Phi.roots.begin(), Phi.roots.end());
    if (dirSet != rootSet)
        throw std::logic_error("edge directions of the Coxeter zonotope differ from the roots");
    return Z;
}

bool verify_np_roots(const RootSystem& Phi) {
    if (Phi.rank > 3)
        throw EnumerationGuard("full neighbotope verification is desk scale (rank <= 3)");
    Polytope Z  = coxeter_zonotope(Phi);
    auto     NP = neighbotope(Z, Normalization::gi());
    auto     SP = sweep_polytope(SweepConfiguration(Phi.roots.begin(), Phi.roots.end()));
    return normally_equivalent(view(NP), view(SP));
}

std::string rootSystemToJson(const RootSystem& Phi) {
    nlohmann::json j;
    j["type"] = rootTypeToString(Phi.type);
    j["rank"] = Phi.rank;
    auto vecArray = [](const std::vector<QVec>& vs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : vs) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& x : v) row.push_back(rationalToString(x));
            arr.push_back(row);
        }
        return arr;
    };
    j["roots"]  = vecArray(Phi.roots);
    j["simple"] = vecArray(Phi.simple);
    return j.dump(2);
}

}  // namespace pivotal

