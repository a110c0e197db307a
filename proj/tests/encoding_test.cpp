#include <doctest.h>

#include "qsearch/encoding.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/rng.hpp"

using namespace qsearch;

namespace {

Dataset make(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    Dataset d;
    for (const auto &[i, v] : pairs) {
        d.items.push_back({i, v});
    }
    return d;
}

std::vector<std::uint64_t> values_of(const Dataset &d) {
    std::vector<std::uint64_t> out;
    for (const DataPoint &p : d.items) {
        out.push_back(p.value);
    }
    return out;
}

} // namespace

TEST_CASE("update_values compresses in target-then-first-occurrence order") {
    const Dataset d = make({{0, 5}, {1, 3}, {2, 5}, {3, 9}});
    const Dataset out = update_values(d, {5});
    CHECK(values_of(out) == std::vector<std::uint64_t>{0, 1, 0, 2});
    // indexes and order preserved
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(out.items[i].index == d.items[i].index);
    }
}

TEST_CASE("update_values with a single distinct value") {
    const Dataset d = make({{0, 7}, {1, 7}, {2, 7}});
    CHECK(values_of(update_values(d, {7})) == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("a second compression against canonical targets is the identity") {
    Xoshiro256 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset d;
        const std::size_t n = 1 + rng.next_below(30);
        for (std::size_t i = 0; i < n; ++i) {
            d.items.push_back({i, rng.next_below(12)});
        }
        const std::uint64_t target = d.items[rng.next_below(n)].value;
        const Dataset once = update_values(d, {target});
        const Dataset twice = update_values(once, {0});
        CHECK(once == twice);
    }
}

TEST_CASE("update_values validates its inputs") {
    CHECK_THROWS_AS(update_values(Dataset{}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(update_values(make({{0, 1}}), {}), std::invalid_argument);
    CHECK_THROWS_AS(update_values(make({{0, 1}}), {1, 1}), std::invalid_argument);
}

TEST_CASE("value ids stay dense and targets take the leading ids") {
    Xoshiro256 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset d;
        const std::size_t n = 2 + rng.next_below(40);
        for (std::size_t i = 0; i < n; ++i) {
            d.items.push_back({i, 100 + rng.next_below(9) * 7});
        }
        const std::uint64_t target = d.items[0].value;
        const Dataset out = update_values(d, {target});

        std::set<std::uint64_t> distinct_in, distinct_out;
        for (const DataPoint &p : d.items) {
            distinct_in.insert(p.value);
        }
        for (const DataPoint &p : out.items) {
            distinct_out.insert(p.value);
        }
        REQUIRE(distinct_out.size() == distinct_in.size());
        // ids are exactly 0..distinct-1
        CHECK(*distinct_out.begin() == 0);
        CHECK(*distinct_out.rbegin() == distinct_out.size() - 1);
        // every original target item now carries id 0
        for (std::size_t i = 0; i < n; ++i) {
            if (d.items[i].value == target) {
                CHECK(out.items[i].value == 0);
            }
        }
    }
}

TEST_CASE("update_indexes assigns fresh indexes in iteration order") {
    const Dataset d = make({{7, 0}, {2, 1}, {9, 0}});
    const IndexMapping mapping = update_indexes(d);
    REQUIRE(mapping.size() == 3);
    CHECK(mapping.original_of(0) == 7);
    CHECK(mapping.original_of(1) == 2);
    CHECK(mapping.original_of(2) == 9);

    const IndexMapping singleton = update_indexes(make({{0, 0}}));
    CHECK(singleton.original_of(0) == 0);
    CHECK_THROWS_AS(update_indexes(Dataset{}), std::invalid_argument);
}

TEST_CASE("maintain_indexes restores the original keys") {
    const Dataset fresh = make({{0, 0}, {1, 1}, {2, 0}});
    const IndexMapping mapping({7, 2, 9});
    const Dataset restored = maintain_indexes(fresh, mapping);
    CHECK(restored == make({{7, 0}, {2, 1}, {9, 0}}));

    CHECK(maintain_indexes(Dataset{}, mapping).empty());
    CHECK_THROWS_AS(maintain_indexes(make({{5, 0}}), mapping), InconsistencyError);
}

TEST_CASE("relabel then restore is the identity") {
    Xoshiro256 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset d;
        std::set<std::uint64_t> used;
        const std::size_t n = 1 + rng.next_below(25);
        while (d.size() < n) {
            const std::uint64_t idx = rng.next_below(1000);
            if (used.insert(idx).second) {
                d.items.push_back({idx, rng.next_below(8)});
            }
        }
        const IndexMapping mapping = update_indexes(d);
        Dataset fresh;
        for (std::uint64_t k = 0; k < d.size(); ++k) {
            fresh.items.push_back({k, d.items[k].value});
        }
        CHECK(maintain_indexes(fresh, mapping) == d);
    }
}

TEST_CASE("qubit widths for the benchmark shapes") {
    Dataset fifteen;
    for (std::uint64_t i = 0; i < 15; ++i) {
        fifteen.items.push_back({i, i % 11});
    }
    CHECK(compute_qubits(fifteen) == QubitWidths{4, 4});

    Dataset five;
    for (std::uint64_t i = 0; i < 5; ++i) {
        five.items.push_back({i, 0});
    }
    CHECK(compute_qubits(five) == QubitWidths{3, 1});

    CHECK(compute_qubits(make({{0, 0}})) == QubitWidths{1, 1});
    CHECK_THROWS_AS(compute_qubits(Dataset{}), std::invalid_argument);
}

TEST_CASE("shrinking a dataset never widens either field") {
    Xoshiro256 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset d;
        const std::size_t n = 2 + rng.next_below(60);
        for (std::size_t i = 0; i < n; ++i) {
            d.items.push_back({i, rng.next_below(20)});
        }
        const QubitWidths full = compute_qubits(d);
        Dataset shrunk = d;
        shrunk.items.resize(1 + rng.next_below(n));
        const QubitWidths smaller = compute_qubits(shrunk);
        CHECK(smaller.index_bits <= full.index_bits);
        CHECK(smaller.value_bits <= full.value_bits);
    }
}

TEST_CASE("binary pair layout is index bits then value bits") {
    Dataset d;
    for (std::uint64_t i = 0; i < 15; ++i) {
        d.items.push_back({i, (i + 3) % 4}); // 4 distinct -> widths (4, 2)
    }
    const EncodedProblem enc = generate_binary_pairs(d, 1);
    CHECK(enc.widths == QubitWidths{4, 2});
    CHECK(enc.universe[2] == "001001"); // index 2, value 1

    Dataset tiny = make({{0, 0}});
    const EncodedProblem micro = generate_binary_pairs(tiny, 1);
    CHECK(micro.universe == std::vector<std::string>{"00"});
    CHECK(micro.marked == std::set<std::string>{"00"});
}

TEST_CASE("marked set collects exactly the target ids") {
    Dataset d;
    for (std::uint64_t i = 0; i < 15; ++i) {
        d.items.push_back({i, i < 5 ? 0 : 1 + (i % 7)});
    }
    const EncodedProblem enc = generate_binary_pairs(d, 1);
    CHECK(enc.marked.size() == 5);
}

TEST_CASE("uncompressed values overflow the value field") {
    // two distinct values -> 1 value bit, but the raw payload needs four bits
    const Dataset d = make({{0, 0}, {1, 9}});
    CHECK_THROWS_AS(generate_binary_pairs(d, 1), std::invalid_argument);
}

TEST_CASE("decode splits and orders surviving states") {
    ProbabilityMap survivors;
    survivors.entries["001001"] = 0.2;
    const Dataset single = decode(survivors, QubitWidths{4, 2});
    CHECK(single == make({{2, 1}}));

    CHECK(decode(ProbabilityMap{}, QubitWidths{4, 2}).empty());

    ProbabilityMap mixed;
    mixed.entries["00101"] = 0.1; // index 2, value 1
    mixed.entries["01000"] = 0.4; // index 4, value 0
    mixed.entries["00000"] = 0.1; // index 0, value 0
    const Dataset ordered = decode(mixed, QubitWidths{4, 1});
    CHECK(ordered == make({{4, 0}, {0, 0}, {2, 1}})); // prob desc, then index asc

    ProbabilityMap malformed;
    malformed.entries["01"] = 1.0;
    CHECK_THROWS_AS(decode(malformed, QubitWidths{4, 2}), std::invalid_argument);

    ProbabilityMap duplicated;
    duplicated.entries["0010"] = 0.5; // index 1, value 0 at widths (3, 1)
    duplicated.entries["0011"] = 0.5; // index 1, value 1
    CHECK_THROWS_AS(decode(duplicated, QubitWidths{3, 1}), InconsistencyError);
}

TEST_CASE("encode then decode round-trips any compressed dataset") {
    Xoshiro256 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset d;
        const std::size_t n = 1 + rng.next_below(50);
        const std::uint64_t distinct = 1 + rng.next_below(9);
        for (std::size_t i = 0; i < n; ++i) {
            d.items.push_back({i, rng.next_below(distinct)});
        }
        const Dataset compressed = update_values(d, {d.items[0].value});
        const EncodedProblem enc = generate_binary_pairs(compressed, 1);
        ProbabilityMap fake;
        for (const std::string &bits : enc.universe) {
            fake.entries[bits] = 1.0 / static_cast<double>(enc.universe.size());
        }
        const Dataset back = decode(fake, enc.widths);
        CHECK(back.as_map() == compressed.as_map());
    }
}
