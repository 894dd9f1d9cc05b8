#include <kclique/bitset.hh>

#include <doctest.h>

#include <random>
#include <set>

using kclique::VertexSet;

TEST_CASE("single bit operations")
{
    VertexSet s{130};
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.first() == -1);

    s.set(0);
    s.set(63);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(! s.test(62));

    s.reset(63);
    CHECK(! s.test(63));
    CHECK(s.count() == 3);
}

TEST_CASE("iteration is ascending")
{
    VertexSet s{200};
    for (int v : {5, 0, 199, 64, 63, 128})
        s.set(v);

    CHECK(s.members() == std::vector<int>{0, 5, 63, 64, 128, 199});

    std::vector<int> seen;
    for (int v : s)
        seen.push_back(v);
    CHECK(seen == s.members());
}

TEST_CASE("fill respects the universe width")
{
    for (int n : {1, 63, 64, 65, 128, 130}) {
        VertexSet s{n};
        s.fill();
        CHECK(s.count() == n);
        CHECK(s.first() == 0);
        CHECK(s.members().back() == n - 1);
    }
}

TEST_CASE("set algebra against a reference implementation")
{
    std::mt19937 rng{42};
    const int n = 170;

    for (int trial = 0 ; trial < 50 ; ++trial) {
        VertexSet a{n}, b{n};
        std::set<int> ra, rb;
        for (int i = 0 ; i < 60 ; ++i) {
            int v = int(rng() % n), w = int(rng() % n);
            a.set(v);
            ra.insert(v);
            b.set(w);
            rb.insert(w);
        }

        VertexSet a_and_b = a;
        a_and_b &= b;
        VertexSet a_or_b = a;
        a_or_b |= b;
        VertexSet a_minus_b = a;
        a_minus_b.and_not(b);

        std::set<int> expected_and, expected_or = ra, expected_minus = ra;
        for (int v : ra)
            if (rb.count(v))
                expected_and.insert(v);
        expected_or.insert(rb.begin(), rb.end());
        for (int v : rb)
            expected_minus.erase(v);

        CHECK(a_and_b.members() == std::vector<int>(expected_and.begin(), expected_and.end()));
        CHECK(a_or_b.members() == std::vector<int>(expected_or.begin(), expected_or.end()));
        CHECK(a_minus_b.members() == std::vector<int>(expected_minus.begin(), expected_minus.end()));

        CHECK(a_and_b.subset_of(a));
        CHECK(a.subset_of(a_or_b));
        CHECK(a.intersects(b) == ! a_and_b.empty());
    }
}
