#include <random>

#include "anpsi/pi.hpp"
#include "anpsi/transitions.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace anpsi;

namespace {

// Test-side re-statement of the frame table, kept independent of frame().
Assertion frame_oracle(const Process& p, const InstanceSignature& sig) {
  switch (p.kind()) {
    case Process::Kind::Assert:
      return p.psi();
    case Process::Kind::Par:
      return sig.compose(frame_oracle(p.left(), sig), frame_oracle(p.right(), sig));
    case Process::Kind::Restrict:
      return frame_oracle(p.body(), sig);
    default:
      return sig.unit;
  }
}

}  // namespace

TEST_CASE("frame follows the definitional table") {
  NameTable t;
  InstanceSignature sig = testgen::test_anp_instance();
  auto pool = testgen::Pool::make(t);
  std::mt19937 rng(31);

  Assertion psi = testgen::random_assertion(pool, rng);
  SUBCASE("assertion process exposes its assertion") {
    Frame f = frame(Process::assertion(psi), sig);
    CHECK(f.binders.empty());
    CHECK(f.assertion == psi);
  }
  SUBCASE("assertions under prefixes are not visible") {
    Process prefixed = Process::output(Term::leaf(pool.chans[0]), Term::leaf(pool.msgs[0]),
                                       Process::assertion(psi));
    CHECK(frame(prefixed, sig).assertion == sig.unit);
    Name v = t.intern(Sort::Var, "v");
    Process under_in = Process::input(Term::leaf(pool.chans[0]), {v}, Term::leaf(v),
                                      Process::assertion(psi));
    CHECK(frame(under_in, sig).assertion == sig.unit);
    std::vector<Process::Branch> br;
    br.push_back({Condition::truth(), Process::assertion(psi)});
    CHECK(frame(Process::choice(std::move(br)), sig).assertion == sig.unit);
    CHECK(frame(Process::repl(Process::assertion(psi)), sig).assertion == sig.unit);
  }
  SUBCASE("parallel composes subframes") {
    Assertion psi2 = testgen::random_assertion(pool, rng);
    Process par = Process::par(Process::assertion(psi), Process::assertion(psi2));
    CHECK(frame(par, sig).assertion == sig.compose(psi, psi2));
  }
  SUBCASE("restriction adds a binder") {
    Name a = t.fresh(Sort::Msg, "a");
    Frame f = frame(Process::restrict(a, Process::assertion(psi)), sig);
    REQUIRE(f.binders.size() == 1);
    CHECK(f.binders[0] == a);
    CHECK(f.assertion == psi);
  }
}

TEST_CASE("frame matches the oracle on 500 random processes") {
  NameTable t;
  InstanceSignature sig = testgen::test_anp_instance();
  auto pool = testgen::Pool::make(t);
  std::mt19937 rng(37);
  for (int i = 0; i < 500; ++i) {
    Process p = testgen::random_process(pool, rng, 4);
    CHECK(frame(p, sig).assertion == frame_oracle(p, sig));
  }
}

TEST_CASE("match_pattern spec examples") {
  NameTable t;
  Name x = t.intern(Sort::Var, "x");
  Name y = t.intern(Sort::Var, "y");
  Name m = t.intern(Sort::Msg, "m");
  Name a = t.intern(Sort::Msg, "a");
  Name b = t.intern(Sort::Msg, "b");

  auto s = match_pattern({x}, Term::leaf(x), Term::leaf(m));
  REQUIRE(s.has_value());
  CHECK(substitute(Term::leaf(x), *s) == Term::leaf(m));

  auto s2 = match_pattern({x, y}, Term::app("pair", {Term::leaf(x), Term::leaf(y)}),
                          Term::app("pair", {Term::leaf(a), Term::leaf(b)}));
  REQUIRE(s2.has_value());
  CHECK(*s2->lookup(x) == Term::leaf(a));
  CHECK(*s2->lookup(y) == Term::leaf(b));

  CHECK_FALSE(match_pattern({x}, Term::app("hash", {Term::leaf(x)}),
                            Term::app("pair", {Term::leaf(a), Term::leaf(b)}))
                  .has_value());

  CHECK_THROWS_AS((void)match_pattern({x, x}, Term::leaf(x), Term::leaf(a)),
                  WellFormednessError);
  CHECK_THROWS_AS((void)match_pattern({x}, Term::leaf(m), Term::leaf(m)),
                  WellFormednessError);
}

TEST_CASE("pi instance entailment and transitions") {
  NameTable t;
  Name a = t.intern(Sort::Chan, "a");
  Name b = t.intern(Sort::Chan, "b");
  Name m = t.intern(Sort::Msg, "m");
  Name c = t.intern(Sort::Chan, "c");
  InstanceSignature sig = make_pi_instance({a, b, m, c});

  CHECK(sig.entails(sig.unit, Condition::term_eq(Term::leaf(a), Term::leaf(a))));
  CHECK_FALSE(sig.entails(sig.unit, Condition::term_eq(Term::leaf(a), Term::leaf(b))));
  CHECK(sig.compose(sig.unit, sig.unit) == sig.unit);

  SUBCASE("com fires for name-equal channels") {
    Name x = t.intern(Sort::Var, "x");
    Process p = Process::par(
        Process::output(Term::leaf(a), Term::leaf(m), Process::nil()),
        Process::input(Term::leaf(a), {x}, Term::leaf(x), Process::nil()));
    auto ts = transitions(sig.unit, p, sig, 2, t);
    bool found_tau = false;
    for (const Transition& tr : ts)
      if (tr.label.kind == Label::Kind::Tau) {
        found_tau = true;
        CHECK(tr.target == Process::par(Process::nil(), Process::nil()));
      }
    CHECK(found_tau);
    // plus the two visible halves
    CHECK(ts.size() == 3);
  }

  SUBCASE("unentailed case yields nothing") {
    std::vector<Process::Branch> br;
    br.push_back({Condition::term_eq(Term::leaf(a), Term::leaf(b)),
                  Process::output(Term::leaf(c), Term::leaf(m), Process::nil())});
    Process p = Process::choice(std::move(br));
    CHECK(transitions(sig.unit, p, sig, 2, t).empty());
  }

  SUBCASE("assertion processes have no transitions") {
    CHECK(transitions(sig.unit, Process::assertion(Assertion{}), sig, 2, t).empty());
    CHECK(transitions(sig.unit, Process::nil(), sig, 2, t).empty());
  }
}

TEST_CASE("restriction blocks, wraps, or extrudes") {
  NameTable t;
  Name a = t.intern(Sort::Chan, "a");
  Name m = t.intern(Sort::Msg, "m");
  InstanceSignature sig = make_pi_instance({a, m});

  SUBCASE("channel mention blocks") {
    Process p = Process::restrict(
        a, Process::output(Term::leaf(a), Term::leaf(m), Process::nil()));
    CHECK(transitions(sig.unit, p, sig, 2, t).empty());
  }

  SUBCASE("payload mention extrudes") {
    Name n = t.intern(Sort::Msg, "n");
    Process p = Process::restrict(
        n, Process::output(Term::leaf(a), Term::leaf(n), Process::nil()));
    auto ts = transitions(sig.unit, p, sig, 2, t);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].label.kind == Label::Kind::Out);
    REQUIRE(ts[0].label.extruded.size() == 1);
    CHECK(ts[0].label.extruded[0] == n);
    CHECK_FALSE(mentions(ts[0].label.channel, n));
  }

  SUBCASE("unrelated restriction stays wrapped") {
    Name n = t.intern(Sort::Msg, "n");
    Process p = Process::restrict(
        n, Process::output(Term::leaf(a), Term::leaf(m), Process::nil()));
    auto ts = transitions(sig.unit, p, sig, 2, t);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].label.extruded.empty());
    CHECK(ts[0].target.kind() == Process::Kind::Restrict);
  }
}

TEST_CASE("scope opening invariant on random restricted outputs") {
  NameTable t;
  auto pool = testgen::Pool::make(t);
  std::mt19937 rng(41);
  std::vector<Name> universe = pool.chans;
  universe.insert(universe.end(), pool.msgs.begin(), pool.msgs.end());
  InstanceSignature sig = make_pi_instance(universe);
  for (int i = 0; i < 200; ++i) {
    Process body = testgen::random_process(pool, rng, 3);
    Name bound = t.fresh(Sort::Msg, "s");
    Process p = Process::restrict(bound, body);
    for (const Transition& tr : transitions(sig.unit, p, sig, 1, t)) {
      if (tr.label.kind != Label::Kind::Out) continue;
      CHECK_FALSE(mentions(tr.label.channel, bound));
      if (mentions(tr.label.payload, bound)) {
        bool listed = false;
        for (Name e : tr.label.extruded) listed = listed || e == bound;
        CHECK(listed);
      }
    }
  }
}

TEST_CASE("communication requires channel equality under composed assertions") {
  // An ANP-style guard: the input is only offered once e0 is done, so the
  // com appears exactly when a parallel assertion supplies the record.
  NameTable t;
  InstanceSignature sig = testgen::test_anp_instance();
  Name k = t.intern(Sort::Config, "K");
  Name ch = t.intern(Sort::Chan, "ch");
  Name m = t.intern(Sort::Msg, "m");
  Name x = t.intern(Sort::Var, "x");
  Term chan = Term::chan(ConfigPath{std::nullopt, {k}}, ch);

  ActionPattern dep;
  dep.event = "e0";
  std::vector<Process::Branch> br;
  br.push_back({Condition::done({dep}),
                Process::input(chan, {x}, Term::leaf(x), Process::nil())});
  Process guarded_in = Process::choice(std::move(br));
  Process out = Process::output(chan, Term::leaf(m), Process::nil());

  SUBCASE("without the record no com fires") {
    Process p = Process::par(out, guarded_in);
    for (const Transition& tr : transitions(sig.unit, p, sig, 1, t))
      CHECK(tr.label.kind != Label::Kind::Tau);
  }
  SUBCASE("a floating assertion enables the com") {
    Assertion have;
    have.done.insert(ActionRecord{"e0", Polarity::Output, chan, Term::leaf(m)});
    Process p = Process::par(Process::par(out, guarded_in), Process::assertion(have));
    bool tau = false;
    for (const Transition& tr : transitions(sig.unit, p, sig, 1, t))
      tau = tau || tr.label.kind == Label::Kind::Tau;
    CHECK(tau);
  }
}

TEST_CASE("transitions are deterministic up to alpha on alpha-variants") {
  NameTable t;
  auto pool = testgen::Pool::make(t);
  std::mt19937 rng(43);
  std::vector<Name> universe = pool.chans;
  universe.insert(universe.end(), pool.msgs.begin(), pool.msgs.end());
  InstanceSignature sig = make_pi_instance(universe);
  for (int i = 0; i < 100; ++i) {
    Process p = testgen::random_process(pool, rng, 3);
    Process q = freshen_binders(p, t);  // alpha-variant
    auto key_set = [&](const Process& proc) {
      std::set<std::string> keys;
      for (const Transition& tr : transitions(sig.unit, proc, sig, 1, t)) {
        // Canonical step key: bound witnesses and binders are canonized by
        // the normalized target key; label names canonize positionally.
        keys.insert(canonical_key(tr.target, true));
      }
      return keys;
    };
    CHECK(key_set(p) == key_set(q));
  }
}

TEST_CASE("replication honors the unfold budget") {
  NameTable t;
  Name a = t.intern(Sort::Chan, "a");
  Name m = t.intern(Sort::Msg, "m");
  InstanceSignature sig = make_pi_instance({a, m});
  Process bang = Process::repl(Process::output(Term::leaf(a), Term::leaf(m), Process::nil()));
  CHECK(transitions(sig.unit, bang, sig, 0, t).empty());
  auto ts = transitions(sig.unit, bang, sig, 1, t);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].label.kind == Label::Kind::Out);

  // Two copies can talk to each other when the budget allows two unfolds.
  Name x = t.intern(Sort::Var, "x");
  Process pingpong = Process::repl(Process::par(
      Process::output(Term::leaf(a), Term::leaf(m), Process::nil()),
      Process::input(Term::leaf(a), {x}, Term::leaf(x), Process::nil())));
  bool tau = false;
  for (const Transition& tr : transitions(sig.unit, pingpong, sig, 2, t))
    tau = tau || tr.label.kind == Label::Kind::Tau;
  CHECK(tau);
}
