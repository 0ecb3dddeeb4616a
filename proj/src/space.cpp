#include "keycomb/space.hpp"

#include <deque>
#include <map>
#include <mutex>

#include "keycomb/errors.hpp"
#include "keycomb/pieri.hpp"

namespace keycomb {

KohnertSpace enumerate_kd(const Composition& a, std::size_t cap) {
    check_composition(a);
    KohnertSpace space;
    space.source = a;
    Diagram start = key_diagram(a);
    std::deque<Diagram> queue{start};
    space.diagrams.insert(start);
    while (!queue.empty()) {
        Diagram t = std::move(queue.front());
        queue.pop_front();
        for (const Diagram& s : kohnert_successors(t)) {
            if (space.diagrams.insert(s).second) {
                if (space.diagrams.size() > cap)
                    throw CapExceeded("Kohnert diagram count exceeds cap", space.diagrams.size());
                queue.push_back(s);
            }
        }
    }
    return space;
}

namespace {

std::mutex cache_mutex;

const Polynomial& key_polynomial_cached(const Composition& a, std::size_t nvars) {
    static std::map<std::pair<Composition, std::size_t>, Polynomial> cache;
    Composition key = trimmed(a);
    if (key.size() > nvars) throw InvalidComposition("composition longer than variable count");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({key, nvars});
    if (it != cache.end()) return it->second;
    Polynomial p(nvars);
    for (const Diagram& t : enumerate_kd(key).diagrams)
        p.add_term(row_weight(t, nvars), 1);
    return cache.emplace(std::make_pair(key, nvars), std::move(p)).first->second;
}

const std::set<Composition, CompLess>& lswap_down_set_cached(const Composition& a) {
    static std::map<Composition, std::set<Composition, CompLess>> cache;
    Composition key = trimmed(a);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::set<Composition, CompLess> seen{key};
    std::deque<Composition> queue{key};
    while (!queue.empty()) {
        Composition cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                if (cur[i] >= cur[j]) continue;
                Composition next = cur;
                std::swap(next[i], next[j]);
                next = trimmed(next);
                if (seen.insert(next).second) queue.push_back(next);
            }
    }
    return cache.emplace(key, std::move(seen)).first->second;
}

} // namespace

Polynomial key_polynomial(const Composition& a) {
    return key_polynomial(a, std::max<std::size_t>(a.size(), comp_length(a)));
}

Polynomial key_polynomial(const Composition& a, std::size_t nvars) {
    check_composition(a);
    return key_polynomial_cached(a, nvars);
}

bool lswap_leq(const Composition& b, const Composition& a) {
    if (trimmed(sorted_decreasing(a)) != trimmed(sorted_decreasing(b))) return false;
    return lswap_down_set_cached(a).count(trimmed(b)) > 0;
}

std::set<Composition, CompLess> lswap_down_set(const Composition& a) {
    check_composition(a);
    return lswap_down_set_cached(a);
}

bool kd_membership(const Diagram& t, const Composition& a) {
    if (!is_generic(t)) return false;
    ThreadDecomposition td = thread_decomposition(t);
    if (!td.anchored) return false;
    return lswap_leq(td.weight, a);
}

TargetSpace enumerate_target_space(const Composition& a, int k, int m, std::size_t cap) {
    check_composition(a);
    if (k < 1) throw InvalidComposition("k must be positive");
    if (m < 0) throw InvalidComposition("m must be nonnegative");
    TargetSpace out;
    out.base = a;
    out.k = k;
    out.m = m;
    if (m == 0) {
        out.diagrams = enumerate_kd(a, cap).diagrams;
        return out;
    }
    if (m == 1) {
        for (const AddableCell& cell : k_addable_cells(padded(a, k), k)) {
            Composition idx = cell.support;
            idx = padded(idx, cell.row);
            ++idx[cell.row - 1];
            for (const Diagram& t : enumerate_kd(idx, cap).diagrams) {
                out.diagrams.insert(t);
                if (out.diagrams.size() > cap)
                    throw CapExceeded("target space exceeds cap", out.diagrams.size());
            }
        }
        return out;
    }
    // degree recursion: extend each key diagram of the previous level by one
    // more added column
    TargetSpace prev = enumerate_target_space(a, k, m - 1, cap);
    Composition base_cwt = padded(column_weight(key_diagram(a)), 0);
    for (const Diagram& d : prev.diagrams) {
        Composition b = row_weight(d);
        if (d != key_diagram(b)) continue;
        TargetSpace next = enumerate_target_space(b, k, 1, cap);
        for (const Diagram& u : next.diagrams) {
            Composition cwt = column_weight(u);
            // the difference from cwt(a) must be m distinct unit columns
            Composition diff = padded(cwt, base_cwt.size());
            Composition bc = padded(base_cwt, diff.size());
            int ones = 0;
            bool ok = true;
            for (std::size_t i = 0; i < diff.size(); ++i) {
                int delta = diff[i] - bc[i];
                if (delta == 1) ++ones;
                else if (delta != 0) ok = false;
            }
            if (!ok || ones != m) continue;
            out.diagrams.insert(u);
            if (out.diagrams.size() > cap)
                throw CapExceeded("target space exceeds cap", out.diagrams.size());
        }
    }
    return out;
}

} // namespace keycomb
