#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bakit/syntax.hpp"

namespace bakit::testgen {

inline constexpr std::uint64_t kSeed = 0xBA5E5EEDull;

struct Shape {
    bool lt = true;
    bool monus = false;
    bool exists = true;
    bool block = true;
    bool multi_block = true;
    int max_numeral = 3;
};

class Gen {
public:
    explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::mt19937_64& rng() { return rng_; }

    Term term(int depth, const std::vector<std::string>& vars, const Shape& s = {});
    Formula atom(const std::vector<std::string>& vars, const Shape& s = {});
    Formula formula(int depth, const std::vector<std::string>& vars, const Shape& s = {});
    Formula positive(int depth, const std::vector<std::string>& vars, const Shape& s = {});
    Formula quantifier_free(int depth, const std::vector<std::string>& vars, const Shape& s = {});
    // bounded quantifiers with numeral bounds up to max_bound
    Formula delta0(int depth, const std::vector<std::string>& vars, int max_bound, const Shape& s = {});

    std::string fresh(const std::vector<std::string>& vars);

private:
    std::mt19937_64 rng_;
};

}  // namespace bakit::testgen
