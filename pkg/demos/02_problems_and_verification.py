#!/usr/bin/env python3
# Invariant problems: the (init, trans, post) triple, the three conditions,
# and oracle verification with counterexamples.
import os

from invsynth import expr
from invsynth.benchmarks import instantiate_conditions, load_benchmark
from invsynth.oracle import Oracle, SolverConfig

HERE = os.path.dirname(os.path.abspath(__file__))
bench = os.path.join(HERE, "..", "benchmarks", "s1_counter_w4.sl")

spec = load_benchmark(bench)
print("params:", spec.params, "width:", spec.width)
print("init: ", expr.to_smtlib(spec.init, list(spec.params), spec.width))
print("post: ", expr.to_smtlib(spec.post, list(spec.params), spec.width))

candidate = expr.parse_token_text("<s> ( bvult v0 #8 ) </s>")
for cond in instantiate_conditions(spec, candidate):
    print(f"{cond.kind:14s} over {cond.formula.param_count} variable(s)")

oracle = Oracle(SolverConfig(backend="brute", random_phase=True, seed=1))

print("\nbvult x 8  ->", oracle.verify_invariant(spec, candidate).status)

always_true = expr.true_program(1)
outcome = oracle.verify_invariant(spec, always_true)
print("true       ->", outcome.status, outcome.counterexample)

stuck = expr.parse_token_text("<s> ( bveq v0 #0 ) </s>")
outcome = oracle.verify_invariant(spec, stuck)
print("x == 0     ->", outcome.status, outcome.counterexample)

# the forced-label regions for single states
for x in (0, 5, 9):
    print(f"label of {x}:", oracle.solve_output_labels(spec, (x,)))
