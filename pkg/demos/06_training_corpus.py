#!/usr/bin/env python3
# The corpus factory: random predicates under anti-mutant rules, branch
# pruning, triviality filtering, and branch-covering examples.
import tempfile

from invsynth import expr, traingen
from invsynth.expr import Compare, Ite, Program, Var
from invsynth.oracle import Oracle, SolverConfig

oracle = traingen.corpus_oracle(seed=1)

p = traingen.gen_program(7)
print("random predicate:", p)
print("operator nodes:", sum(1 for nd in expr.iter_nodes(p.root)
                             if not isinstance(nd, (expr.Var, expr.Const))))

# an if-then-else whose condition cannot be false collapses to one branch
redundant = Program(
    Compare("bveq", Ite(Compare("bveq", Var(0), Var(0)), Var(1), Var(2)),
            Var(1)), 3)
print("\nbefore pruning:", redundant)
print("after pruning: ", traingen.prune_ite(redundant, oracle))

always = expr.parse_token_text("<s> ( bvuge v0 #0 ) </s>")
print("\n'x >= 0' is trivial:", traingen.is_trivial(always, oracle))

branchy = expr.parse_token_text(
    "<s> ( ite ( bvult v0 #8 ) ( bveq v1 #0 ) ( bvugt v1 #4 ) ) </s>")
examples = traingen.gen_informative_examples(branchy, 10, seed=2,
                                             oracle=oracle)
low = sum((e.inputs[0] & 0xFF) < 8 for e in examples)
print(f"\ninformative examples hit both branches: {low} low, "
      f"{len(examples) - low} high")

with tempfile.NamedTemporaryFile(suffix=".jsonl") as tmp:
    stats = traingen.gen_corpus(200, traingen.GenConstraints(max_params=2),
                                tmp.name, seed=3)
    print(f"\ncorpus: generated={stats.generated} "
          f"discarded={stats.discarded} emitted={stats.emitted}")
    print("first record:", open(tmp.name).readline()[:120], "...")
