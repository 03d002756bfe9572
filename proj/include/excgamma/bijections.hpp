#pragma once

// Statistic-transporting maps on S_n.

#include <algorithm>
#include <vector>

#include "excgamma/groups.hpp"

namespace excgamma {

/// Foata's first fundamental transformation, normalized so that
/// des(foata_fft(pi)) = exc(pi).
///
/// Each cycle of pi is written starting at its maximum m and followed
/// backwards: m, pi^{-1}(m), pi^{-2}(m), ...; cycles are ordered by increasing
/// maxima and concatenated. Consecutive letters x, pi^{-1}(x) form a descent
/// exactly when pi^{-1}(x) is an excedance position of pi, and every cycle
/// boundary is an ascent.
inline Perm foata_fft(const Perm& p) {
    const std::size_t n = p.size();
    const Perm inv = p.inverse();
    std::vector<char> seen(n + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int start = static_cast<int>(n); start >= 1; --start) {
        if (seen[start]) continue;
        // Descending scan means `start` is the maximum of its cycle.
        std::vector<int> cycle;
        for (int x = start; !seen[x]; x = inv(static_cast<std::size_t>(x))) {
            seen[x] = 1;
            cycle.push_back(x);
        }
        cycles.push_back(std::move(cycle));
    }
    std::reverse(cycles.begin(), cycles.end());
    Window word;
    word.reserve(n);
    for (const auto& c : cycles) word.insert(word.end(), c.begin(), c.end());
    return Perm(std::move(word));
}

/// Inverse of foata_fft: cut the word before each left-to-right maximum.
inline Perm foata_fft_inverse(const Perm& word) {
    const std::size_t n = word.size();
    Window image(n, 0);
    const auto w = word.window();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && w[j] < w[i]) ++j;
        // Cycle w[i..j): w[k+1] = pi^{-1}(w[k]), i.e. pi(w[k+1]) = w[k].
        for (std::size_t k = i; k + 1 < j; ++k) image[w[k + 1] - 1] = w[k];
        image[w[i] - 1] = w[j - 1];
        i = j;
    }
    return Perm(std::move(image));
}

/// For pi with n in position n-1: delete the letter n, apply foata_fft, and
/// prepend n. Carries (exc, nexc - 1) to (des, asc) and lands on pos_n = 1.
inline Perm penultimate_max_map(const Perm& p) {
    const std::size_t n = p.size();
    if (n < 2 || p(n - 1) != static_cast<int>(n))
        throw PreconditionViolated("letter n must sit at position n-1");
    Window rest;
    for (int v : p.window())
        if (v != static_cast<int>(n)) rest.push_back(v);
    const Perm image = foata_fft(Perm(std::move(rest)));
    Window out{static_cast<int>(n)};
    out.insert(out.end(), image.window().begin(), image.window().end());
    return Perm(std::move(out));
}

inline Perm penultimate_max_map_inverse(const Perm& p) {
    const std::size_t n = p.size();
    if (n < 2 || p(1) != static_cast<int>(n))
        throw PreconditionViolated("letter n must sit at position 1");
    const Perm pre = foata_fft_inverse(Perm(Window(p.window().begin() + 1, p.window().end())));
    Window out(pre.window().begin(), pre.window().end());
    out.insert(out.end() - 1, static_cast<int>(n));
    return Perm(std::move(out));
}

/// Swaps the last two window entries when n is at position <= n-2; flips the
/// sign and keeps exc and pos_n.
inline Perm last_two_swap(const Perm& p) {
    const std::size_t n = p.size();
    if (n < 2 || stat::pos_max(p.window()) > n - 2)
        throw PreconditionViolated("letter n must sit at a position <= n-2");
    Window w(p.window().begin(), p.window().end());
    std::swap(w[n - 2], w[n - 1]);
    return Perm(std::move(w));
}

/// S_{n-1} -> n-cycles of S_n: a_1..a_{n-1} |-> cycle (1, n+1-a_1, ..., n+1-a_{n-1}).
/// exc of the image is des(pi) + 1.
inline Perm cycle_map(const Perm& p) {
    const std::size_t n = p.size() + 1;
    if (n < 2) throw PreconditionViolated("cycle map needs n >= 2");
    Window out(n, 0);
    int prev = 1;
    for (int a : p.window()) {
        const int next = static_cast<int>(n) + 1 - a;
        out[prev - 1] = next;
        prev = next;
    }
    out[prev - 1] = 1;
    return Perm(std::move(out));
}

inline Perm cycle_map_inverse(const Perm& cycle) {
    const std::size_t n = cycle.size();
    if (n < 2 || cycle_type(cycle) != CycleType({static_cast<unsigned>(n)}))
        throw PreconditionViolated("input is not an n-cycle");
    Window out;
    for (int x = cycle(1); x != 1; x = cycle(static_cast<std::size_t>(x)))
        out.push_back(static_cast<int>(n) + 1 - x);
    return Perm(std::move(out));
}

/// Excedances of a cycle given in cycle notation: #{x : successor(x) > x}.
inline unsigned cycle_excedances(const std::vector<int>& cycle) {
    unsigned c = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) c += cycle[(i + 1) % cycle.size()] > cycle[i];
    return c;
}

/// Relabels a cycle on an arbitrary set of positive integers to [k] (smallest
/// letter to 1, and so on) and returns it as a permutation of [k].
inline Perm restrict_order_preserving(const std::vector<int>& cycle) {
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DuplicateEntries("cycle lists a letter twice");
    for (int v : sorted)
        if (v <= 0) throw InvalidInput("cycle letters must be positive");
    auto rank = [&](int v) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
    };
    Window out(cycle.size(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out[rank(cycle[i]) - 1] = rank(cycle[(i + 1) % cycle.size()]);
    return Perm(std::move(out));
}

}  // namespace excgamma
