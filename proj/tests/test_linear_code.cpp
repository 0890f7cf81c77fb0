#include <abatch/constructions.hpp>
#include <abatch/linear_code.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace abatch;

namespace {

using Mask = std::uint32_t;

// Column j of g as a k-bit integer.
Mask column_mask(const GeneratorMatrix& g, std::size_t j) {
    Mask m = 0;
    for (std::size_t i = 0; i < g.k(); ++i)
        if (g.at(i, j)) m |= Mask{1} << i;
    return m;
}

Mask span_sum(const GeneratorMatrix& g, Mask coords) {
    Mask s = 0;
    for (std::size_t j = 0; j < g.n(); ++j)
        if ((coords >> j) & 1U) s ^= column_mask(g, j);
    return s;
}

// Brute force over every coordinate subset: sums to e_target and no proper
// nonempty subset does.
std::vector<Mask> oracle_minimal_sets(const GeneratorMatrix& g, std::size_t target) {
    const Mask goal = Mask{1} << target;
    std::vector<Mask> hits;
    for (Mask s = 1; s < (Mask{1} << g.n()); ++s)
        if (span_sum(g, s) == goal) hits.push_back(s);
    std::vector<Mask> minimal;
    for (Mask s : hits) {
        bool ok = true;
        for (Mask o : hits)
            if (o != s && (o & s) == o) ok = false;
        if (ok) minimal.push_back(s);
    }
    return minimal;
}

Mask to_mask(const BitVec& v) {
    Mask m = 0;
    for (auto i : v.indices()) m |= Mask{1} << i;
    return m;
}

GeneratorMatrix random_code(std::mt19937_64& rng, std::size_t k, std::size_t n) {
    while (true) {
        std::vector<BitVec> rows;
        for (std::size_t i = 0; i < k; ++i) {
            BitVec r(n);
            for (std::size_t j = 0; j < n; ++j) r.set(j, rng() & 1U);
            rows.push_back(r);
        }
        if (gf2_rank(rows) == k) return GeneratorMatrix(rows);
    }
}

// Disjoint minimal sets for every target, by plain recursion.
bool oracle_assign(const std::vector<std::vector<Mask>>& sets, const std::vector<std::size_t>& q,
                   std::size_t pos, Mask used) {
    if (pos == q.size()) return true;
    for (Mask s : sets[q[pos]])
        if ((s & used) == 0 && oracle_assign(sets, q, pos + 1, used | s)) return true;
    return false;
}

bool oracle_batch(const GeneratorMatrix& g, std::size_t t) {
    std::vector<std::vector<Mask>> sets;
    for (std::size_t i = 0; i < g.k(); ++i) sets.push_back(oracle_minimal_sets(g, i));
    bool all = true;
    for_each_multiset(g.k(), t, [&](const std::vector<std::size_t>& q) {
        if (!oracle_assign(sets, q, 0, 0)) all = false;
        return all;
    });
    return all;
}

// Strict asynchronous property by exhaustive walk over queries, assignments,
// completed positions and newcomers.
bool oracle_async_strict(const GeneratorMatrix& g, std::size_t t) {
    std::vector<std::vector<Mask>> sets;
    for (std::size_t i = 0; i < g.k(); ++i) sets.push_back(oracle_minimal_sets(g, i));
    bool ok = true;
    for_each_multiset(g.k(), t, [&](const std::vector<std::size_t>& q) {
        if (!oracle_assign(sets, q, 0, 0)) {
            ok = false;
            return false;
        }
        std::vector<Mask> chosen(t);
        auto walk = [&](auto&& self, std::size_t pos, Mask used) -> void {
            if (!ok) return;
            if (pos == t) {
                for (std::size_t done = 0; done < t; ++done) {
                    const Mask busy = used & ~chosen[done];
                    for (std::size_t nc = 0; nc < g.k(); ++nc) {
                        bool fits = false;
                        for (Mask s : sets[nc])
                            if ((s & busy) == 0) fits = true;
                        if (!fits) ok = false;
                    }
                }
                return;
            }
            for (Mask s : sets[q[pos]])
                if ((s & used) == 0) {
                    chosen[pos] = s;
                    self(self, pos + 1, used | s);
                }
        };
        walk(walk, 0, 0);
        return ok;
    });
    return ok;
}

}  // namespace

TEST_CASE("generator matrix validation") {
    std::vector<std::string> bad_len{"101", "01"};
    CHECK_THROWS_AS(GeneratorMatrix::from_strings(bad_len), std::invalid_argument);
    std::vector<std::string> dep{"110", "110"};
    CHECK_THROWS_AS(GeneratorMatrix::from_strings(dep), std::invalid_argument);
    std::vector<std::string> wide{"10", "01", "11"};
    CHECK_THROWS_AS(GeneratorMatrix::from_strings(wide), std::invalid_argument);
    const auto g = example1_code();
    CHECK(g.k() == 4);
    CHECK(g.n() == 8);
    CHECK(g.redundancy() == 4);
    CHECK(g.systematic());
    CHECK(simplex_counterexample().systematic());
}

TEST_CASE("encode is linear and systematic codes copy the message") {
    std::mt19937_64 rng(3);
    const auto g = example1_code();
    for (int trial = 0; trial < 50; ++trial) {
        BitVec x(4), y(4);
        for (std::size_t i = 0; i < 4; ++i) {
            x.set(i, rng() & 1U);
            y.set(i, rng() & 1U);
        }
        CHECK((encode(x, g) ^ encode(y, g)) == encode(x ^ y, g));
        const auto c = encode(x, g);
        for (std::size_t i = 0; i < 4; ++i) CHECK(c.test(i) == x.test(i));
    }
    CHECK_THROWS_AS(encode(BitVec(3), g), std::invalid_argument);
}

TEST_CASE("simplex minimal recovery sets of x1") {
    const auto g = simplex_counterexample();
    const auto capped = enumerate_recovery_sets(g, 0, 2);
    std::vector<std::vector<std::size_t>> got;
    for (const auto& s : capped) got.push_back(s.coords.indices());
    CHECK(got == std::vector<std::vector<std::size_t>>{{0}, {1, 3}, {2, 4}, {5, 6}});
    const auto all = enumerate_recovery_sets(g, 0);
    CHECK(all.size() == 8);
    CHECK(all.back().coords.indices() == std::vector<std::size_t>{3, 4, 6});
    for (const auto& s : all) CHECK(is_minimal_recovery_set(g, s));
}

TEST_CASE("recovery-set enumeration agrees with a brute-force oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t k = 1 + rng() % 5;
        const std::size_t n = k + rng() % 6;
        const auto g = random_code(rng, k, n);
        for (std::size_t target = 0; target < k; ++target) {
            const auto sets = enumerate_recovery_sets(g, target);
            std::vector<Mask> got;
            for (const auto& s : sets) {
                CHECK(s.target == target);
                got.push_back(to_mask(s.coords));
            }
            auto expect = oracle_minimal_sets(g, target);
            std::vector<Mask> sorted_got = got;
            std::sort(sorted_got.begin(), sorted_got.end());
            std::sort(expect.begin(), expect.end());
            CHECK(sorted_got == expect);
            for (std::size_t i = 1; i < sets.size(); ++i) {
                const bool ordered = sets[i - 1].size() < sets[i].size() ||
                                     (sets[i - 1].size() == sets[i].size() &&
                                      sets[i - 1].coords.index_less(sets[i].coords));
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("enumeration for more than 64 information symbols") {
    const std::size_t k = 65;
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < k; ++i) {
        BitVec r(k + 2);
        r.set(i);
        rows.push_back(r);
    }
    // parity 65 = x0 + x1, parity 66 = x1 + x2
    rows[0].set(65);
    rows[1].set(65);
    rows[1].set(66);
    rows[2].set(66);
    const GeneratorMatrix g(rows);
    auto list = [&](std::size_t target) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& s : enumerate_recovery_sets(g, target)) out.push_back(s.coords.indices());
        return out;
    };
    CHECK(list(0) == std::vector<std::vector<std::size_t>>{{0}, {1, 65}, {2, 65, 66}});
    CHECK(list(1) == std::vector<std::vector<std::size_t>>{{1}, {0, 65}, {2, 66}});
    CHECK(list(40) == std::vector<std::vector<std::size_t>>{{40}});
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(enumerate_recovery_sets(simplex_counterexample(), 0, 0, 2), BudgetExceeded);
}

TEST_CASE("multiset walk") {
    std::size_t count = 0;
    std::vector<std::size_t> prev;
    for_each_multiset(4, 3, [&](const std::vector<std::size_t>& q) {
        CHECK(std::is_sorted(q.begin(), q.end()));
        if (!prev.empty()) CHECK(prev < q);
        prev = q;
        ++count;
        return true;
    });
    CHECK(count == 20);
    CHECK(multiset_count(4, 3) == doctest::Approx(20));
}

TEST_CASE("golden verdicts for the two small examples") {
    const auto ex1 = example1_code();
    CHECK(is_batch_code(ex1, 3).holds());
    CHECK(is_pir_code(ex1, 3).holds());
    const auto sx = simplex_counterexample();
    CHECK(is_batch_code(sx, 4).holds());
    CHECK(is_pir_code(sx, 4).holds());
    const auto async = is_asynchronous_batch_code(sx, 4);
    CHECK_FALSE(async.holds());
    REQUIRE(async.witness);
    CHECK(async.witness->query.indices == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(async.witness->newcomer == 1);
    CHECK_FALSE(is_batch_code(sx, 5).holds());
}

TEST_CASE("assignments are disjoint and decode") {
    const auto g = example1_code();
    const RecoveryCatalog cat(g);
    for_each_multiset(4, 3, [&](const std::vector<std::size_t>& q) {
        const auto a = find_disjoint_assignment(cat, q, BitVec(g.n()));
        REQUIRE(a);
        BitVec used(g.n());
        for (std::size_t i = 0; i < q.size(); ++i) {
            const auto& s = a->sets[i];
            CHECK(s.target == q[i]);
            CHECK_FALSE(s.coords.intersects(used));
            used |= s.coords;
            CHECK(is_minimal_recovery_set(g, s));
        }
        return true;
    });
}

TEST_CASE("batch and pir verdicts agree with oracles on random codes") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 1 + rng() % 4;
        const std::size_t n = k + rng() % 5;
        const auto g = random_code(rng, k, n);
        for (std::size_t t = 1; t <= 3; ++t) {
            const bool batch = is_batch_code(g, t).holds();
            CHECK(batch == oracle_batch(g, t));
            const bool pir = is_pir_code(g, t).holds();
            if (batch) CHECK(pir);
            if (t > 1 && batch) CHECK(is_batch_code(g, t - 1).holds());
        }
    }
}

TEST_CASE("strict asynchronous verdict agrees with an exhaustive oracle") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + rng() % 3;
        const std::size_t n = k + rng() % 5;
        const auto g = random_code(rng, k, n);
        for (std::size_t t = 1; t <= 3; ++t) {
            const auto r = is_asynchronous_batch_code(g, t);
            CHECK(r.holds() == oracle_async_strict(g, t));
            if (r.holds()) CHECK(is_batch_code(g, t).holds());
        }
    }
    CHECK(oracle_async_strict(simplex_counterexample(), 4) == false);
    CHECK(oracle_async_strict(example1_code(), 3) ==
          is_asynchronous_batch_code(example1_code(), 3).holds());
}

TEST_CASE("asynchronous modes are ordered") {
    const auto g = example1_code();
    const bool strict = is_asynchronous_batch_code(g, 3, AsyncMode::strict).holds();
    const bool scheduled = is_asynchronous_batch_code(g, 3, AsyncMode::scheduled).holds();
    const bool relaxed = is_asynchronous_batch_code(g, 3, AsyncMode::relaxed).holds();
    if (strict) CHECK(scheduled);
    if (scheduled) CHECK(relaxed);
    CHECK(scheduled);
    CHECK(relaxed);
    CHECK(parse_async_mode("relaxed") == AsyncMode::relaxed);
    CHECK_THROWS_AS(parse_async_mode("lenient"), std::invalid_argument);
}

TEST_CASE("query budget reports budget_exceeded") {
    SearchLimits lim;
    lim.query_budget = 3;
    const auto r = is_batch_code(example1_code(), 3, lim);
    CHECK(r.verdict == Verdict::budget_exceeded);
    CHECK(r.cost.over_budget);
}
