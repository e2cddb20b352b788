#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lfd {

// Data/format problems (bad magic, truncated file, version mismatch).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values where finite ones are required (diverged training).
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline int env_thread_cap() {
    if (const char* s = std::getenv("LF_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
    return 0;  // 0 = library default
}

// Counter-based RNG (splitmix64 core). Self-contained so that streams are
// reproducible across compilers, and splittable by label so that every
// consumer derives its own independent stream from one root seed.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Derive an independent stream; label keeps module streams decoupled.
    Rng derive(const std::string& label) const {
        uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (unsigned char c : label) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return Rng(state_ ^ h ^ 0x6a09e667f3bcc909ULL);
    }
    Rng derive(uint64_t salt) const { return derive(std::to_string(salt)); }

    double uniform() {  // [0, 1)
        return double(next_u64() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [lo, hi] inclusive
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + int64_t(next_u64() % uint64_t(hi - lo + 1));
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 1e-300) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

  private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace lfd
