#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "lad/context_io.hpp"
#include "lad/entailment.hpp"
#include "lad/errors.hpp"
#include "lad/semantics.hpp"
#include "lad/syntax.hpp"
#include "lad/transform.hpp"
#include "oracle.hpp"

using namespace lad;

namespace {

Formula P(const char* s) { return parse_formula(s); }

const AtomList kMurderAtoms{"p", "q", "r", "s", "t"};

Context murder() {
  return Context(kMurderAtoms, {World::from_bits(kMurderAtoms, "10101").index(),
                                World::from_bits(kMurderAtoms, "10010").index(),
                                World::from_bits(kMurderAtoms, "01011").index(),
                                World::from_bits(kMurderAtoms, "01100").index()});
}

const std::vector<Formula> kMurderPremises{P("p \\/ q"), P("p -> r -> t"), P("q -> s -> t")};
const Formula kMurderConclusion = P("(r -> t) | (s -> t)");

}  // namespace

TEST_SUITE("evaluation") {
  TEST_CASE("truth at worlds") {
    const World w1 = World::from_bits(kMurderAtoms, "10101");
    CHECK(truth(w1, P("p /\\ r")));
    CHECK_FALSE(truth(w1, Formula::falsum()));
    CHECK(truth(w1, P("q \\/ ~q")));
    CHECK_THROWS_AS(truth(w1, P("z")), UnknownAtom);
    CHECK_THROWS_AS(truth(w1, P("!p")), std::invalid_argument);
  }

  TEST_CASE("murder scenario") {
    const Context c = murder();
    for (const auto& f : kMurderPremises) CHECK(asserts(c, f));
    CHECK_FALSE(asserts(c, kMurderConclusion));
    CHECK(asserts(c, P("!(p -> q)")));
    // E = {w3, w4}: the two worlds where p is false.
    const Context e34(kMurderAtoms, {World::from_bits(kMurderAtoms, "01011").index(),
                                     World::from_bits(kMurderAtoms, "01100").index()});
    CHECK_FALSE(asserts(e34, P("!(p -> q)")));
  }

  TEST_CASE("falsum is denied everywhere") {
    for (std::uint64_t m = 1; m < 16; ++m)
      for (Variant v : kAllVariants) CHECK(denies(Context::from_mask({"p", "q"}, m), Formula::falsum(), v));
  }

  TEST_CASE("unknown atoms") {
    CHECK_THROWS_AS(asserts(Context::all_worlds({"p"}), P("q")), UnknownAtom);
    CHECK_THROWS_AS(asserts(Context::all_worlds({"p"}), P("p -> q")), UnknownAtom);
  }

  TEST_CASE("judgments") {
    const Judgment j = judge(Context::all_worlds({"p"}), P("p | ~p"));
    CHECK_FALSE(j.asserted);
    CHECK(j.denied == false);
    const Judgment k = judge(Context({"p"}, {1}), P("!p"));
    CHECK_FALSE(k.asserted);
    CHECK(k.denied);
  }
}

TEST_SUITE("cross-check") {
  TEST_CASE("lazy evaluator, tables and oracle agree on all small formulas") {
    const AtomList atoms{"p", "q"};
    const auto formulas = gen::up_to(atoms, 5);
    for (Variant v : kAllVariants) {
      ContextTable table(atoms, v);
      Evaluator lazy(atoms, {0, 1, 2, 3}, v);
      const oracle::Semantics ref{atoms, v};
      for (const auto& f : formulas) {
        const ContextSet& a = table.asserted(f);
        const ContextSet& d = table.denied(f);
        for (std::uint64_t m = 1; m < 16; ++m) {
          const auto ws = oracle::worlds_of(m);
          const bool ra = ref.pos(ws, f);
          const bool rd = ref.neg(ws, f);
          if (a.test(m) != ra || d.test(m) != rd || lazy.asserts(f, m) != ra || lazy.denies(f, m) != rd) {
            FAIL_CHECK("mismatch on " << to_string(f) << " at context " << m << " variant "
                                      << variant_name(v));
          }
        }
      }
    }
  }

  TEST_CASE("random deeper formulas over three atoms") {
    const AtomList atoms{"p", "q", "r"};
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      const Formula f = gen::random_formula(rng, atoms, 4 + static_cast<int>(rng() % 8));
      const Variant v = kAllVariants[rng() % 3];
      ContextTable table(atoms, v);
      const oracle::Semantics ref{atoms, v};
      for (int k = 0; k < 10; ++k) {
        std::uint64_t m = 0;
        while (m == 0 || std::popcount(m) > 4) m = rng() & 0xFF;
        const auto ws = oracle::worlds_of(m);
        CHECK(table.asserted(f).test(m) == ref.pos(ws, f));
        CHECK(table.denied(f).test(m) == ref.neg(ws, f));
        const Context c(atoms, ws);
        CHECK(asserts(c, f, v) == ref.pos(ws, f));
        CHECK(denies(c, f, v) == ref.neg(ws, f));
      }
    }
  }

  TEST_CASE("tables over a partial universe") {
    const AtomList atoms{"p", "q", "r"};
    const std::vector<std::uint64_t> universe{1, 4, 6};
    const Formula f = P("(p -> q) | !(r -> <>q)");
    ContextTable table(atoms, universe, Variant::gauker);
    Evaluator lazy(atoms, universe, Variant::gauker);
    for (std::uint64_t m = 1; m < 8; ++m) {
      CHECK(table.asserted(f).test(m) == lazy.asserts(f, m));
      CHECK(table.denied(f).test(m) == lazy.denies(f, m));
    }
  }

  TEST_CASE("context sets") {
    ContextSet s(2);
    s.set(0b01);
    CHECK(s.upward_closure().count() == 2);
    CHECK(s.complement().count() == 2);
    CHECK(ContextSet::all_nonempty(7).count() == 127);
    ContextSet big(8);
    big.set(0b1);
    CHECK(big.upward_closure().count() == 128);
    CHECK(big.first() == 1);
    CHECK_THROWS(ContextSet(17));
  }
}

TEST_SUITE("entailment") {
  TEST_CASE("murder sequent is invalid, with a countermodel") {
    EnumerationOptions opts;
    opts.atom_bound = 5;
    CHECK_FALSE(entails(kMurderPremises, kMurderConclusion, Variant::gauker, opts));
    const auto cm = countermodel(kMurderPremises, kMurderConclusion, Variant::gauker, opts);
    REQUIRE(cm.has_value());
    for (const auto& f : kMurderPremises) CHECK(asserts(*cm, f));
    CHECK_FALSE(asserts(*cm, kMurderConclusion));
    CHECK_THROWS_AS(entails(kMurderPremises, kMurderConclusion), AtomBoundExceeded);
  }

  TEST_CASE("classical examples") {
    CHECK(entails({P("p => q"), P("p")}, P("q")));
    CHECK_FALSE(entails({P("<>p & <>~p")}, Formula::falsum()));
    CHECK_FALSE(countermodel({P("p")}, P("p")).has_value());
    CHECK(entails({}, P("p \\/ ~p")));
    CHECK_FALSE(entails({}, P("p | !p")));
  }

  TEST_CASE("empty atom set uses a dummy atom") {
    CHECK(enumeration_atoms({Formula::falsum()}) == AtomList{"p"});
    CHECK(entails({Formula::falsum()}, Formula::falsum()));
    CHECK_FALSE(entails({}, Formula::falsum()));
  }

  TEST_CASE("countermodel is the first in ascending order") {
    const auto cm = countermodel({}, P("p"));
    REQUIRE(cm.has_value());
    CHECK(cm->mask() == 0b01);
  }

  TEST_CASE("atom bound") {
    EnumerationOptions opts;
    opts.atom_bound = 1;
    CHECK_THROWS_AS(entails({P("p")}, P("q"), Variant::gauker, opts), AtomBoundExceeded);
    opts.atom_bound = 99;
    CHECK_THROWS_AS(entails({P("a & b & c & d & e & f")}, P("g"), Variant::gauker, opts), AtomBoundExceeded);
    try {
      entails({P("a & b & c & d & e")}, P("a"));
    } catch (const AtomBoundExceeded& e) {
      CHECK(e.atoms() == 5);
      CHECK(e.bound() == 4);
    }
  }

  TEST_CASE("six atoms stream through the lazy evaluator") {
    EnumerationOptions opts;
    opts.atom_bound = 6;
    CHECK_FALSE(entails({P("b | c | d | e | f")}, P("a"), Variant::gauker, opts));
  }

  TEST_CASE("equivalence") {
    CHECK(strongly_equivalent(P("!(p /\\ q)"), P("~(p /\\ q)")));
    CHECK(strongly_equivalent(P("!(p -> q)"), P("p -> !q"), Variant::connexive));
    CHECK_FALSE(strongly_equivalent(P("!(p -> q)"), P("p -> !q"), Variant::gauker));
    CHECK(strongly_equivalent(P("p"), P("p & p")));
    CHECK(equivalent(P("!(p -> q)"), P("<>(p & ~q)")));
    CHECK(strongly_equivalent(P("!(p -> q)"), P("<>(p & ~q)")));
    CHECK(equivalent(P("!(p -> (q | ~q))"), P("<>(p & (~q & ~~q))")));
    CHECK_FALSE(strongly_equivalent(P("!(p -> (q | ~q))"), P("<>(p & (~q & ~~q))")));
  }

  TEST_CASE("persistence") {
    const auto w = persistence_counterexample(P("!(p -> q)"), {"p", "q"});
    REQUIRE(w.has_value());
    CHECK(asserts(w->context, P("!(p -> q)")));
    CHECK_FALSE(asserts(w->subcontext, P("!(p -> q)")));
    CHECK(is_persistent(P("p \\/ ~q"), {"p", "q"}));
    CHECK(is_persistent(P("(p -> q) | !r"), {"p", "q", "r"}));
    CHECK_THROWS_AS(is_persistent(P("p"), {"q"}), UnknownAtom);
  }

  TEST_CASE("characteristic formulas") {
    for (std::uint64_t m = 1; m < 16; ++m) CHECK(check_characteristic(Context::from_mask({"p", "q"}, m)));
    CHECK(check_characteristic(Context({"p"}, {0})));
    CHECK(check_characteristic(Context({"p"}, {1})));
    for (std::uint64_t x = 1; x < 8; ++x) {
      std::vector<Context> set;
      for (std::uint64_t m = 1; m < 4; ++m)
        if ((x >> (m - 1)) & 1U) set.push_back(Context::from_mask({"p"}, m));
      CHECK(check_characteristic_set(set));
    }
  }
}

TEST_SUITE("properties") {
  const AtomList kPQ{"p", "q"};

  TEST_CASE("consistency under gauker and nelson, and the connexive witness") {
    for (Variant v : {Variant::gauker, Variant::nelson}) {
      ContextTable t(kPQ, v);
      for (const auto& f : gen::up_to(kPQ, 5)) CHECK((t.asserted(f) & t.denied(f)).empty());
    }
    const Formula w = P("(p & !p) -> (p | !p)");
    for (std::uint64_t m = 1; m < 4; ++m)
      CHECK(asserts(Context::from_mask({"p"}, m), Formula::conj(w, Formula::neg(w)), Variant::connexive));
  }

  TEST_CASE("singletons are classical") {
    for (Variant v : {Variant::gauker, Variant::nelson})
      for (const auto& f : gen::up_to(kPQ, 5))
        for (std::uint64_t w = 0; w < 4; ++w) {
          const Context c(kPQ, {w});
          const bool t = truth(World(kPQ, w), e_translate(f));
          CHECK(asserts(c, f, v) == t);
          CHECK(denies(c, f, v) == !t);
        }
  }

  TEST_CASE("classical L-fragment") {
    std::mt19937_64 rng(5);
    const AtomList atoms{"p", "q", "r"};
    for (int i = 0; i < 100; ++i) {
      std::vector<Formula> prem;
      for (int k = static_cast<int>(rng() % 3); k > 0; --k)
        prem.push_back(gen::random_formula(rng, atoms, 1 + static_cast<int>(rng() % 5), true));
      const Formula c = gen::random_formula(rng, atoms, 1 + static_cast<int>(rng() % 5), true);
      const AtomList occ = enumeration_atoms([&] {
        auto all = prem;
        all.push_back(c);
        return all;
      }());
      CHECK(entails(prem, c) == oracle::classically_entails(occ, prem, c));
    }
  }

  TEST_CASE("safe formulas persist") {
    for (const auto& f : gen::up_to(kPQ, 5))
      if (is_safe(f)) CHECK(is_persistent(f, kPQ));
  }

  TEST_CASE("replacement of strong equivalents") {
    for (Variant v : kAllVariants) {
      ContextTable t(kPQ, v);
      auto key = [&](const Formula& f) {
        std::string k;
        for (std::uint64_t m = 1; m < 16; ++m) {
          k += t.asserted(f).test(m) ? '1' : '0';
          k += t.denied(f).test(m) ? '1' : '0';
        }
        return k;
      };
      std::map<std::string, std::vector<Formula>> classes;
      for (const auto& f : gen::up_to(kPQ, 4)) classes[key(f)].push_back(f);
      std::mt19937_64 rng(17);
      int checked = 0;
      for (int i = 0; i < 200; ++i) {
        const Formula chi = gen::random_formula(rng, kPQ, 2 + static_cast<int>(rng() % 7));
        for (const auto& path : occurrence_paths(chi)) {
          const auto& cls = classes[key(subformula_at(chi, path))];
          if (cls.empty()) continue;
          const Formula psi = cls[rng() % cls.size()];
          Formula replaced = chi;
          try {
            replaced = substitute(chi, path, psi);
          } catch (const LayerError&) {
            continue;
          }
          CHECK(strongly_equivalent(chi, replaced, v));
          ++checked;
        }
      }
      CHECK(checked > 500);
    }
  }

  TEST_CASE("weak negation flips assertion") {
    ContextTable t(kPQ, Variant::gauker);
    for (const auto& f : gen::up_to(kPQ, 5)) {
      const Formula w = weak_negate(f);
      CHECK(t.asserted(w) == t.asserted(f).complement());
      CHECK(entails({}, Formula::disj(f, w)));
      CHECK(entails({f, w}, Formula::falsum()));
    }
  }

  TEST_CASE("nnf preserves meaning") {
    for (const auto& f : gen::up_to({"p", "q"}, 5)) {
      CHECK(strongly_equivalent(f, nnf(f, Variant::connexive), Variant::connexive));
      CHECK(equivalent(f, nnf(f, Variant::gauker), Variant::gauker));
      CHECK(equivalent(f, nnf(f, Variant::nelson), Variant::nelson));
    }
  }

  TEST_CASE("atom locality") {
    std::mt19937_64 rng(23);
    const AtomList atoms{"p", "q", "r"};
    for (int i = 0; i < 100; ++i) {
      const Formula f = gen::random_formula(rng, atoms, 1 + static_cast<int>(rng() % 8));
      const AtomList occ = make_atom_list(atoms_of(f));
      if (occ.empty() || occ.size() > 3) continue;
      std::uint64_t m = 0;
      while (m == 0) m = rng() & ((std::uint64_t{1} << (std::uint64_t{1} << occ.size())) - 1);
      const Context c = Context::from_mask(occ, m);
      const Context e = c.extend("z");
      for (Variant v : kAllVariants) {
        const Judgment a = judge(c, f, v);
        const Judgment b = judge(e, f, v);
        CHECK(a.asserted == b.asserted);
        CHECK(a.denied == b.denied);
      }
    }
  }

  TEST_CASE("nelson licenses the antecedent") {
    CHECK(entails({P("!(p -> q)")}, P("p"), Variant::nelson));
    CHECK_FALSE(entails({P("!(p -> q)")}, P("p"), Variant::gauker));
  }

  TEST_CASE("soundness facts for the disjunction eliminations") {
    // (a) safe side premises, L-disjunction, L-conclusion; (b) any premises.
    std::mt19937_64 rng(29);
    int instances_a = 0, instances_b = 0;
    for (int i = 0; i < 400; ++i) {
      const Formula delta = gen::random_formula(rng, kPQ, 1 + static_cast<int>(rng() % 5));
      const Formula a = gen::random_formula(rng, kPQ, 1 + static_cast<int>(rng() % 3), true);
      const Formula b = gen::random_formula(rng, kPQ, 1 + static_cast<int>(rng() % 3), true);
      const Formula g = gen::random_formula(rng, kPQ, 1 + static_cast<int>(rng() % 3), true);
      std::vector<Formula> safe;
      if (is_safe(delta)) safe.push_back(delta);
      if (entails([&] { auto s = safe; s.push_back(a); return s; }(), g) &&
          entails([&] { auto s = safe; s.push_back(b); return s; }(), g)) {
        CHECK(entails({delta, Formula::ext_or(a, b)}, g));
        ++instances_a;
      }
      const Formula phi = gen::random_formula(rng, kPQ, 1 + static_cast<int>(rng() % 4));
      const Formula psi = gen::random_formula(rng, kPQ, 1 + static_cast<int>(rng() % 4));
      const Formula chi = gen::random_formula(rng, kPQ, 1 + static_cast<int>(rng() % 4));
      if (entails({delta, phi}, chi) && entails({delta, psi}, chi)) {
        CHECK(entails({delta, Formula::disj(phi, psi)}, chi));
        ++instances_b;
      }
    }
    CHECK(instances_a > 10);
    CHECK(instances_b > 10);
  }
}

TEST_SUITE("context files") {
  TEST_CASE("parse and reorder columns") {
    const Context c = parse_context("# murder\nq p\n10\n\n01\n");
    CHECK(c.atoms() == AtomList{"p", "q"});
    CHECK(c.worlds() == std::vector<std::uint64_t>{1, 2});
    CHECK(format_context(c) == "p q\n01\n10\n");
    CHECK(parse_context(format_context(murder())) == murder());
  }

  TEST_CASE("malformed files") {
    CHECK_THROWS_AS(parse_context("p q\n"), FormatError);
    CHECK_THROWS_AS(parse_context(""), FormatError);
    CHECK_THROWS_AS(parse_context("p q\n10\n10\n"), FormatError);
    CHECK_THROWS_AS(parse_context("p p\n10\n"), FormatError);
    CHECK_THROWS_AS(parse_context("p q\n1\n"), FormatError);
    CHECK_THROWS_AS(parse_context("p q\n12\n"), FormatError);
    CHECK_THROWS_AS(parse_context("p 2q\n10\n"), FormatError);
  }
}
