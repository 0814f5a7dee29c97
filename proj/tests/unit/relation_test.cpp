#include <doctest.h>

#include "commitguard/relation.hpp"

using namespace commitguard;

TEST_CASE("classification covers all four access pairs") {
    CHECK(classify_relation(AccessClass::Reader, AccessClass::Reader) == Relation::Friend);
    CHECK(classify_relation(AccessClass::Writer, AccessClass::Writer) == Relation::Family);
    CHECK(classify_relation(AccessClass::Reader, AccessClass::Writer) == Relation::Strange);
    CHECK(classify_relation(AccessClass::Writer, AccessClass::Reader) == Relation::Strange);
}

TEST_CASE("classification is symmetric") {
    for (AccessClass a : {AccessClass::Reader, AccessClass::Writer}) {
        for (AccessClass b : {AccessClass::Reader, AccessClass::Writer}) {
            CHECK(classify_relation(a, b) == classify_relation(b, a));
        }
    }
}

TEST_CASE("only friends may run concurrently") {
    CHECK(may_run_concurrently(Relation::Friend));
    CHECK_FALSE(may_run_concurrently(Relation::Family));
    CHECK_FALSE(may_run_concurrently(Relation::Strange));
}

TEST_CASE("concurrency implies no writer on either side") {
    for (AccessClass a : {AccessClass::Reader, AccessClass::Writer}) {
        for (AccessClass b : {AccessClass::Reader, AccessClass::Writer}) {
            if (may_run_concurrently(classify_relation(a, b))) {
                CHECK(a == AccessClass::Reader);
                CHECK(b == AccessClass::Reader);
            }
        }
    }
}

TEST_CASE("relation names round trip") {
    for (Relation rel : {Relation::Friend, Relation::Family, Relation::Strange}) {
        CHECK(relation_from_string(to_string(rel)) == rel);
    }
    CHECK(relation_from_string("Enemy") == std::nullopt);
}
