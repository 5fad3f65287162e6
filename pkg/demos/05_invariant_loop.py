#!/usr/bin/env python3
# One-shot versus counterexample-guided synthesis on a problem whose
# over-approximate labels are wrong at first: the loop repairs them.
import os

from invsynth.benchmarks import load_benchmark
from invsynth.engine import EngineConfig, run_cegns, run_egns
from invsynth.oracle import Oracle, SolverConfig
from invsynth.synth import EnumSynthesizer

HERE = os.path.dirname(os.path.abspath(__file__))
spec = load_benchmark(os.path.join(HERE, "..", "benchmarks",
                                   "parity_flag_w4.sl"))


def config(mode, seed=0):
    return EngineConfig(mode=mode, beam=100, progs=100, init_examples=10,
                        cex_buffer_cap=50, max_iterations=40, timeout_s=60.0,
                        heuristic="over_approximate", seed=seed,
                        cex_harvest=3)


one_shot = run_egns(spec, config("egns"), EnumSynthesizer(),
                    Oracle(SolverConfig(random_phase=True, seed=0)))
print("one-shot:", one_shot.status, "-", one_shot.reason or one_shot.invariant)

loop = run_cegns(spec, config("cegns"), EnumSynthesizer(),
                 Oracle(SolverConfig(random_phase=True, seed=0)))
print("loop:    ", loop.status, "after", loop.iterations, "iteration(s)")
print("invariant:", loop.invariant)

print("\ncounterexamples that repaired the labels:")
for rec in loop.transcript:
    if rec["event"] == "counterexample":
        arrow = "" if rec["successor"] is None else f" -> {rec['successor']}"
        print(f"  it{rec['iteration']} {rec['kind']:14s} at {rec['state']}{arrow}")
    if rec["event"] == "verified":
        print(f"  it{rec['iteration']} verified {rec['candidate']}")
