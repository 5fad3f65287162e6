#!/usr/bin/env python3
# The synthesizer boundary: examples in, ranked candidates out.  Two local
# backends (bottom-up enumeration and a weighted grammar sampler) plus the
# line-delimited wire protocol used for external synthesizers.
import json

from invsynth.examplegen import IOExample
from invsynth.synth import (EnumSynthesizer, GrammarSynthesizer,
                            SynthesisRequest, synthesize)

examples = (IOExample((0,), True), IOExample((3,), True),
            IOExample((9,), False), IOExample((12,), False))
req = SynthesisRequest(examples=examples, beam=5, param_count=1, width=4)

print("enumerative backend (size order, observational dedup):")
for p, score in synthesize(req, EnumSynthesizer()).candidates:
    print(f"  {score:.3f}  {p}")

print("\ngrammar sampler (ranked by example satisfaction, then likelihood):")
for p, score in synthesize(req, GrammarSynthesizer(seed=4)).candidates:
    print(f"  {score:.3f}  {p}")

print("\nwire protocol request (one line on the synthesizer's stdin):")
request = {"beam": req.beam, "param_count": req.param_count,
           "examples": [e.to_wire() for e in examples]}
print(" ", json.dumps(request))
print("wire protocol response (one line back):")
response = {"candidates": [
    {"tokens": ["<s>", "(", "bvult", "v0", "#8", ")", "</s>"], "score": 0.83}]}
print(" ", json.dumps(response))
