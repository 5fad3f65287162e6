#!/usr/bin/env python3
# From a logical problem to labeled input-output examples: random and
# targeted inputs, and the four labeling heuristics for the open region.
import os

from invsynth.benchmarks import load_benchmark
from invsynth.examplegen import (HEURISTICS, generate_examples, label,
                                 sample_random_inputs, sample_targeted_inputs)
from invsynth.oracle import Oracle, SolverConfig

HERE = os.path.dirname(os.path.abspath(__file__))
spec = load_benchmark(os.path.join(HERE, "..", "benchmarks", "s1_counter_w4.sl"))
oracle = Oracle(SolverConfig(backend="brute", random_phase=True, seed=7))

print("random inputs:  ", sample_random_inputs(spec, 8, seed=7))
print("targeted inputs:", sample_targeted_inputs(spec, 6, oracle))
print("(the targeted side always hits the initial region and the")
print(" one-step-reachable assertion violations)\n")

# state 5 satisfies the assertion but is not initial: its label is open
for h in HEURISTICS:
    print(f"{h:18s} labels 5 as", label(spec, (5,), h, seed=3, oracle=oracle))

print()
for h in ("over_approximate", "combined_random"):
    examples = generate_examples(spec, 10, h, seed=9, oracle=oracle)
    text = ", ".join(f"{e.inputs[0]}:{'T' if e.output else 'F'}"
                     for e in sorted(examples, key=lambda e: e.inputs))
    print(f"{h:18s} -> {text}")
