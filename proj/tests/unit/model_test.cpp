#include <doctest.h>

#include <random>
#include <set>

#include "commitguard/errors.hpp"
#include "commitguard/log.hpp"
#include "commitguard/model.hpp"

using namespace commitguard;

namespace {

AgentId sws(const std::string& name) {
    return AgentId{name, AgentKind::SocialWebService};
}

AgentId authority(const std::string& name) {
    return AgentId{name, AgentKind::NetworkAuthority};
}

CommitmentContent post_content() {
    CommitmentContent content;
    content.detail = "d_self";
    content.owner = sws("sws_youtube");
    content.purpose = "publish";
    return content;
}

CommitmentContent collect_content() {
    CommitmentContent content;
    content.detail = "d";
    content.owner = sws("sws_facebook");
    content.purpose = "import";
    content.condition = Condition{"valid", {"p_d"}};
    return content;
}

}  // namespace

TEST_CASE("responsibility catalog matches the formulas") {
    const auto& r1 = responsibility_template(ResponsibilityId::Resp1);
    CHECK(r1.action_name == "Collect");
    CHECK(r1.modality == Modality::Permission);
    CHECK(r1.has_condition);
    CHECK(r1.creditor_kind == AgentKind::SocialWebService);
    CHECK(r1.condition_predicate == "valid");

    const auto& r2 = responsibility_template(ResponsibilityId::Resp2);
    CHECK(r2.action_name == "Post");
    CHECK(r2.modality == Modality::Obligation);
    CHECK_FALSE(r2.has_condition);
    CHECK(r2.creditor_kind == AgentKind::NetworkAuthority);

    CHECK(responsibility_template(ResponsibilityId::Resp3).action_name == "not-Tamper");
    CHECK(responsibility_template(ResponsibilityId::Resp4).action_name == "Sign-off");
    CHECK(responsibility_template(ResponsibilityId::Resp4).condition_predicate == "status");
    CHECK(responsibility_template(ResponsibilityId::Resp5).action_name == "not-Reveal");
    CHECK(responsibility_template(ResponsibilityId::Resp5).condition_predicate ==
          "collection");
    CHECK(responsibility_template(ResponsibilityId::Resp6).action_name == "Share");
    CHECK(responsibility_template(ResponsibilityId::Resp7).action_name == "PostActivity");
    CHECK(responsibility_template(ResponsibilityId::Resp7).modality ==
          Modality::Obligation);
}

TEST_CASE("standard classification table") {
    const ClassificationTable table = ClassificationTable::standard();
    CHECK(access_class(table, ResponsibilityId::Resp1) == AccessClass::Reader);
    CHECK(access_class(table, ResponsibilityId::Resp2) == AccessClass::Writer);
    CHECK(access_class(table, ResponsibilityId::Resp3) == AccessClass::Reader);
    CHECK(access_class(table, ResponsibilityId::Resp4) == AccessClass::Reader);
    CHECK(access_class(table, ResponsibilityId::Resp5) == AccessClass::Reader);
    CHECK(access_class(table, ResponsibilityId::Resp6) == AccessClass::Writer);
    CHECK(access_class(table, ResponsibilityId::Resp7) == AccessClass::Writer);
}

TEST_CASE("every responsibility has exactly one class in any table") {
    ClassificationTable table = ClassificationTable::standard();
    table.set(ResponsibilityId::Resp1, AccessClass::Writer);
    for (ResponsibilityId id : kAllResponsibilities) {
        const AccessClass cls = table.access(id);
        CHECK((cls == AccessClass::Reader || cls == AccessClass::Writer));
    }
    CHECK(table.access(ResponsibilityId::Resp1) == AccessClass::Writer);
    CHECK(describe(ResponsibilityId::Resp1, table).access == AccessClass::Writer);
}

TEST_CASE("lifecycle automaton accepts exactly the five legal edges") {
    const std::set<std::pair<LifecycleState, LifecycleState>> legal = {
        {LifecycleState::Created, LifecycleState::Active},
        {LifecycleState::Created, LifecycleState::Waiting},
        {LifecycleState::Waiting, LifecycleState::Signaled},
        {LifecycleState::Signaled, LifecycleState::Active},
        {LifecycleState::Active, LifecycleState::Deactivated},
    };
    for (LifecycleState from : {LifecycleState::Created, LifecycleState::Waiting,
                                LifecycleState::Active, LifecycleState::Signaled,
                                LifecycleState::Deactivated}) {
        for (LifecycleState to : {LifecycleState::Created, LifecycleState::Waiting,
                                  LifecycleState::Active, LifecycleState::Signaled,
                                  LifecycleState::Deactivated}) {
            CHECK(transition_is_legal(from, to) == legal.contains({from, to}));
        }
    }
}

TEST_CASE("random transition sequences accepted iff they walk the automaton") {
    std::mt19937_64 rng(7);
    const std::array<LifecycleState, 5> states = {
        LifecycleState::Created, LifecycleState::Waiting, LifecycleState::Active,
        LifecycleState::Signaled, LifecycleState::Deactivated};
    for (int trial = 0; trial < 200; ++trial) {
        Commitment c = instantiate(1, ResponsibilityId::Resp2, sws("sws_youtube"),
                                   authority("sn_auth"), post_content(),
                                   AccountRef{"fb", "alice"}, 0, 0);
        ExecutionLog log;
        LifecycleState expected = LifecycleState::Created;
        for (int step = 0; step < 6; ++step) {
            const LifecycleState target = states[rng() % states.size()];
            if (transition_is_legal(expected, target)) {
                apply_transition(c, target, step, log);
                expected = target;
            } else {
                CHECK_THROWS_AS(apply_transition(c, target, step, log), IllegalTransition);
                CHECK(c.state == expected);
            }
        }
    }
}

TEST_CASE("transition emits exactly one record per move") {
    Commitment c = instantiate(9, ResponsibilityId::Resp1, sws("sws_linkedin"),
                               sws("sws_facebook"), collect_content(),
                               AccountRef{"fb", "alice"}, 5, 0);
    ExecutionLog log;
    apply_transition(c, LifecycleState::Active, 5, log);
    CHECK(log.size() == 1);
    CHECK(log.records()[0].cid == 9);
    CHECK(log.records()[0].old_state == LifecycleState::Created);
    CHECK(log.records()[0].new_state == LifecycleState::Active);
    CHECK(log.records()[0].action_name == "Collect");

    apply_transition(c, LifecycleState::Deactivated, 9, log);
    CHECK(log.size() == 2);
    CHECK(c.state == LifecycleState::Deactivated);
}

TEST_CASE("waiting cannot jump straight to active") {
    Commitment c = instantiate(3, ResponsibilityId::Resp2, sws("sws_youtube"),
                               authority("sn_auth"), post_content(),
                               AccountRef{"fb", "alice"}, 0, 0);
    ExecutionLog log;
    apply_transition(c, LifecycleState::Waiting, 0, log);
    CHECK_THROWS_AS(apply_transition(c, LifecycleState::Active, 1, log),
                    IllegalTransition);
    apply_transition(c, LifecycleState::Signaled, 1, log);
    apply_transition(c, LifecycleState::Active, 1, log);
    CHECK(c.state == LifecycleState::Active);
}

TEST_CASE("instantiate builds a Created commitment") {
    const Commitment c = instantiate(42, ResponsibilityId::Resp2, sws("sws_youtube"),
                                     authority("sn_auth_facebook"), post_content(),
                                     AccountRef{"fb", "alice"}, 7, 0);
    CHECK(c.state == LifecycleState::Created);
    CHECK(c.cid == 42);
    CHECK(c.created_at == 7);
    CHECK(c.debtor.name == "sws_youtube");
}

TEST_CASE("instantiate rejects a creditor of the wrong kind") {
    CHECK_THROWS_AS(instantiate(1, ResponsibilityId::Resp2, sws("sws_a"), sws("sws_b"),
                                post_content(), AccountRef{"fb", "alice"}, 0, 0),
                    TemplateMismatch);
}

TEST_CASE("instantiate checks condition presence and shape") {
    // Resp1 requires valid(...).
    CommitmentContent no_condition = collect_content();
    no_condition.condition.reset();
    CHECK_THROWS_AS(instantiate(1, ResponsibilityId::Resp1, sws("sws_linkedin"),
                                sws("sws_facebook"), no_condition,
                                AccountRef{"fb", "alice"}, 5, 0),
                    TemplateMismatch);

    CommitmentContent wrong_predicate = collect_content();
    wrong_predicate.condition = Condition{"status", {"x"}};
    CHECK_THROWS_AS(instantiate(1, ResponsibilityId::Resp1, sws("sws_linkedin"),
                                sws("sws_facebook"), wrong_predicate,
                                AccountRef{"fb", "alice"}, 5, 0),
                    TemplateMismatch);

    CommitmentContent extra_condition = post_content();
    extra_condition.condition = Condition{"valid", {"p"}};
    CHECK_THROWS_AS(instantiate(1, ResponsibilityId::Resp2, sws("sws_youtube"),
                                authority("sn_auth"), extra_condition,
                                AccountRef{"fb", "alice"}, 0, 0),
                    TemplateMismatch);

    const Commitment ok = instantiate(1, ResponsibilityId::Resp1, sws("sws_linkedin"),
                                      sws("sws_facebook"), collect_content(),
                                      AccountRef{"fb", "alice"}, 5, 0);
    CHECK(ok.content.condition->predicate == "valid");
    CHECK(ok.content.condition->args == std::vector<std::string>{"p_d"});
}

TEST_CASE("instantiation is pure modulo cid") {
    Commitment a = instantiate(1, ResponsibilityId::Resp1, sws("sws_linkedin"),
                               sws("sws_facebook"), collect_content(),
                               AccountRef{"fb", "alice"}, 5, 2);
    Commitment b = instantiate(2, ResponsibilityId::Resp1, sws("sws_linkedin"),
                               sws("sws_facebook"), collect_content(),
                               AccountRef{"fb", "alice"}, 5, 2);
    b.cid = a.cid;
    CHECK(a == b);
}

TEST_CASE("failed path only leaves Created") {
    Commitment c = instantiate(5, ResponsibilityId::Resp1, sws("sws_linkedin"),
                               sws("sws_facebook"), collect_content(),
                               AccountRef{"fb", "alice"}, 0, 0);
    ExecutionLog log;
    fail_commitment(c, 0, log);
    CHECK(c.state == LifecycleState::Deactivated);
    CHECK(log.records()[0].failed);
    CHECK_THROWS_AS(fail_commitment(c, 1, log), IllegalTransition);
}

TEST_CASE("string round trips") {
    for (ResponsibilityId id : kAllResponsibilities) {
        CHECK(responsibility_from_string(to_string(id)) == id);
    }
    CHECK(responsibility_from_string("Resp8") == std::nullopt);
    CHECK(lifecycle_from_string("Waiting") == LifecycleState::Waiting);
    CHECK(access_class_from_string("Reader") == AccessClass::Reader);
    CHECK(responsibility_ordinal(ResponsibilityId::Resp7) == 7);
}
