/* Copyright 2026 The holkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "holkit/bootstrap.h"

namespace holkit {

namespace {

Type A() { return Type::var("A"); }
Term p() { return Term::var("p", bool_ty()); }
Term q() { return Term::var("q", bool_ty()); }
Term r() { return Term::var("r", bool_ty()); }
Var xv() { return Var{"x", A()}; }
Term x() { return Term::var(xv()); }
Term y() { return Term::var("y", A()); }
Term c() { return Term::var("c", A()); }
Term f() { return Term::var("f", fun_ty(A(), A())); }
Term g() { return Term::var("g", fun_ty(A(), A())); }
Term P() { return Term::var("P", fun_ty(A(), bool_ty())); }
Term Q() { return Term::var("Q", fun_ty(A(), bool_ty())); }
Term ap(const Term& a, const Term& b) { return Term::app(a, b); }

Theorem conj_comm(const Logic& L, const Theorem& th) {
  return L.conj(L.conjunct2(th), L.conjunct1(th));
}

Theorem disj_cases_thm(const Logic& L) {
  const Kernel& k = L.kernel();
  return L.disj_cases(k.assume(mk_disj(p(), q())),
                      L.mp(k.assume(mk_imp(p(), r())), k.assume(p())),
                      L.mp(k.assume(mk_imp(q(), r())), k.assume(q())));
}

Theorem choose_thm(const Logic& L) {
  const Kernel& k = L.kernel();
  Theorem all = k.assume(mk_forall(xv(), mk_imp(ap(P(), x()), q())));
  Theorem got = L.mp(L.spec(x(), all), k.assume(ap(P(), x())));
  return L.choose(xv(), k.assume(mk_exists(xv(), ap(P(), x()))), got);
}

Theorem f_elim_thm(const Logic& L) {
  const Kernel& k = L.kernel();
  return L.spec(p(), k.eq_mp(L.unfold(kFalse, {}), k.assume(mk_false())));
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const char* name, bool imp,
                 std::function<Theorem(const Logic&)> fn) {
    out.push_back(CorpusEntry{name, imp, std::move(fn)});
  };

  // Equality reasoning.
  add("truth", false, [](const Logic& L) { return L.truth(); });
  add("refl_bool", false,
      [](const Logic& L) { return L.kernel().refl(p()); });
  add("beta_id", false, [](const Logic& L) {
    return L.kernel().beta(ap(Term::abs(xv(), x()), y()));
  });
  add("sym_eq", false, [](const Logic& L) {
    return L.sym(L.kernel().assume(mk_eq(p(), q())));
  });
  add("trans_eq", false, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return k.trans(k.assume(mk_eq(p(), q())), k.assume(mk_eq(q(), r())));
  });
  add("ap_term", false, [](const Logic& L) {
    return L.ap_term(f(), L.kernel().assume(mk_eq(x(), y())));
  });
  add("ap_thm", false, [](const Logic& L) {
    return L.ap_thm(L.kernel().assume(mk_eq(f(), g())), x());
  });
  add("mk_comb", false, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return k.mk_comb(k.assume(mk_eq(f(), g())), k.assume(mk_eq(x(), y())));
  });
  add("abs_eq", false, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return k.abs(xv(), L.ap_thm(k.assume(mk_eq(f(), g())), x()));
  });
  add("inst_type", false, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Theorem b = k.beta(ap(Term::abs(xv(), x()), y()));
    return k.inst_type(TypeSubstitution({{"A", bool_ty()}}), b);
  });
  add("inst_term", false, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Theorem s = L.sym(k.assume(mk_eq(p(), q())));
    return k.inst(TermSubstitution({{p().as_var(), mk_conj(q(), r())}}), s);
  });
  add("eqt_intro", false, [](const Logic& L) {
    return L.eqt_intro(L.kernel().assume(p()));
  });
  add("eqt_elim", false, [](const Logic& L) {
    return L.eqt_elim(L.kernel().assume(mk_eq(p(), mk_truth())));
  });

  // Conjunction.
  add("conj", false, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return L.conj(k.assume(p()), k.assume(q()));
  });
  add("conjunct1", false, [](const Logic& L) {
    return L.conjunct1(L.kernel().assume(mk_conj(p(), q())));
  });
  add("conjunct2", false, [](const Logic& L) {
    return L.conjunct2(L.kernel().assume(mk_conj(p(), q())));
  });
  add("conj_comm", false, [](const Logic& L) {
    return conj_comm(L, L.kernel().assume(mk_conj(p(), q())));
  });
  add("conj_assoc", false, [](const Logic& L) {
    Theorem a = L.kernel().assume(mk_conj(p(), mk_conj(q(), r())));
    Theorem qr = L.conjunct2(a);
    return L.conj(L.conj(L.conjunct1(a), L.conjunct1(qr)), L.conjunct2(qr));
  });
  add("iff_conj_comm", false, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return k.deduct_antisym(conj_comm(L, k.assume(mk_conj(q(), p()))),
                            conj_comm(L, k.assume(mk_conj(p(), q()))));
  });

  // Implication.
  add("mp", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return L.mp(k.assume(mk_imp(p(), q())), k.assume(p()));
  });
  add("disch", true, [](const Logic& L) {
    return L.disch(p(), L.kernel().assume(q()));
  });
  add("imp_refl", true, [](const Logic& L) {
    return L.disch(p(), L.kernel().assume(p()));
  });
  add("imp_trans", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Theorem got = L.mp(k.assume(mk_imp(q(), r())),
                       L.mp(k.assume(mk_imp(p(), q())), k.assume(p())));
    return L.disch(p(), got);
  });
  add("k_comb", true, [](const Logic& L) {
    return L.disch(p(), L.disch(q(), L.kernel().assume(p())));
  });
  add("s_comb", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Term h1 = mk_imp(p(), mk_imp(q(), r()));
    Term h2 = mk_imp(p(), q());
    Theorem hp = k.assume(p());
    Theorem got = L.mp(L.mp(k.assume(h1), hp), L.mp(k.assume(h2), hp));
    return L.disch(h1, L.disch(h2, L.disch(p(), got)));
  });
  add("imp_antisym", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return k.deduct_antisym(L.mp(k.assume(mk_imp(q(), p())), k.assume(q())),
                            L.mp(k.assume(mk_imp(p(), q())), k.assume(p())));
  });
  add("truth_imp", true, [](const Logic& L) {
    return L.disch(p(), L.truth());
  });
  add("curry", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Term h = mk_imp(mk_conj(p(), q()), r());
    Theorem got = L.mp(k.assume(h), L.conj(k.assume(p()), k.assume(q())));
    return L.disch(h, L.disch(p(), L.disch(q(), got)));
  });
  add("uncurry", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Term h = mk_imp(p(), mk_imp(q(), r()));
    Theorem a = k.assume(mk_conj(p(), q()));
    Theorem got = L.mp(L.mp(k.assume(h), L.conjunct1(a)), L.conjunct2(a));
    return L.disch(h, L.disch(mk_conj(p(), q()), got));
  });
  add("and_imp_left", true, [](const Logic& L) {
    Term pq = mk_conj(p(), q());
    return L.disch(pq, L.conjunct1(L.kernel().assume(pq)));
  });
  add("eq_sym_imp", true, [](const Logic& L) {
    Term e = mk_eq(x(), y());
    return L.disch(e, L.sym(L.kernel().assume(e)));
  });

  // Universal quantification.
  add("gen", true, [](const Logic& L) {
    return L.gen(xv(), L.kernel().refl(x()));
  });
  add("spec_inst", true, [](const Logic& L) {
    return L.spec(c(), L.gen(xv(), L.kernel().refl(x())));
  });
  add("forall_elim", true, [](const Logic& L) {
    Term all = mk_forall(xv(), ap(P(), x()));
    return L.disch(all, L.spec(c(), L.kernel().assume(all)));
  });
  add("forall_and", true, [](const Logic& L) {
    Term all = mk_forall(xv(), mk_conj(ap(P(), x()), ap(Q(), x())));
    Theorem got = L.gen(xv(), L.conjunct1(L.spec(x(), L.kernel().assume(all))));
    return L.disch(all, got);
  });

  // Disjunction.
  add("disj1", true, [](const Logic& L) {
    return L.disj1(L.kernel().assume(p()), q());
  });
  add("disj2", true, [](const Logic& L) {
    return L.disj2(p(), L.kernel().assume(q()));
  });
  add("disj_comm", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    return L.disj_cases(k.assume(mk_disj(p(), q())),
                        L.disj2(q(), k.assume(p())),
                        L.disj1(k.assume(q()), p()));
  });
  add("disj_cases", true, disj_cases_thm);
  add("disj_imp", true, [](const Logic& L) {
    return L.disch(mk_disj(p(), q()),
                   L.disch(mk_imp(p(), r()),
                           L.disch(mk_imp(q(), r()), disj_cases_thm(L))));
  });
  add("or_intro_imp", true, [](const Logic& L) {
    return L.disch(p(), L.disj1(L.kernel().assume(p()), q()));
  });

  // Existential quantification.
  add("exists_intro", true, [](const Logic& L) {
    return L.exists_i(mk_exists(xv(), ap(P(), x())), c(),
                      L.kernel().assume(ap(P(), c())));
  });
  add("exists_refl", true, [](const Logic& L) {
    return L.exists_i(mk_exists(xv(), mk_eq(x(), c())), c(),
                      L.kernel().refl(c()));
  });
  add("choose", true, choose_thm);
  add("exists_imp", true, [](const Logic& L) {
    return L.disch(mk_exists(xv(), ap(P(), x())),
                   L.disch(mk_forall(xv(), mk_imp(ap(P(), x()), q())),
                           choose_thm(L)));
  });
  add("forall_imp_exists", true, [](const Logic& L) {
    Term all = mk_forall(xv(), ap(P(), x()));
    Theorem got = L.exists_i(mk_exists(xv(), ap(P(), x())), x(),
                             L.spec(x(), L.kernel().assume(all)));
    return L.disch(all, got);
  });

  // Negation and falsity.
  add("not_intro", false, [](const Logic& L) {
    return L.not_intro(L.kernel().assume(mk_imp(p(), mk_false())));
  });
  add("not_elim", false, [](const Logic& L) {
    return L.not_elim(L.kernel().assume(mk_neg(p())));
  });
  add("f_elim", true, f_elim_thm);
  add("ex_falso_imp", true, [](const Logic& L) {
    return L.disch(mk_false(), f_elim_thm(L));
  });
  add("not_false", true, [](const Logic& L) {
    return L.not_intro(L.disch(mk_false(), L.kernel().assume(mk_false())));
  });
  add("contrapositive", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Term h1 = mk_imp(p(), q());
    Term h2 = mk_neg(q());
    Theorem absurd =
        L.mp(L.not_elim(k.assume(h2)), L.mp(k.assume(h1), k.assume(p())));
    return L.disch(h1, L.disch(h2, L.not_intro(L.disch(p(), absurd))));
  });
  add("not_not_intro", true, [](const Logic& L) {
    const Kernel& k = L.kernel();
    Term np = mk_neg(p());
    Theorem absurd = L.mp(L.not_elim(k.assume(np)), k.assume(p()));
    return L.disch(p(), L.not_intro(L.disch(np, absurd)));
  });
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace holkit
