#ifndef TAUFORGE_RNG_HPP
#define TAUFORGE_RNG_HPP

#include "tauforge/util.hpp"

namespace tauforge {

// splitmix64: deterministic across platforms, cheap, good enough for
// randomized algebra (equal-degree splitting, torsion search).
class Rng {
public:
    explicit Rng(u64 seed) : state_(seed) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection
    u64 below(u64 n) {
        if (n == 0) fail(ErrCat::internal, "rng: below(0)");
        u64 lim = ~u64(0) - ~u64(0) % n;
        u64 v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    // derive an independent child stream (worker index, retry counter, ...)
    Rng child(u64 idx) const {
        Rng tmp(state_ ^ (0x632be59bd9b4e019ull * (idx + 1)));
        tmp.next();
        return tmp;
    }

private:
    u64 state_;
};

} // namespace tauforge

#endif
