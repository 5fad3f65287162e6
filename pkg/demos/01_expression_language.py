#!/usr/bin/env python3
# The predicate language: 50 tokens, bit-vector semantics, SMT-LIB emission.
from invsynth import expr

print("vocabulary size:", len(expr.VOCABULARY))
print("tokens:", " ".join(expr.VOCABULARY))

# parse a token sequence; a run of nibbles is one constant, MSB first
p = expr.parse_token_text("<s> ( bvult v0 #1 #F ) </s>")
print("\nparsed:", p)           # prints the round-tripped token form
print("0x1F as nibbles:", expr.const_tokens(0x1F))

# evaluation is total, two's-complement, modulo 2**width
print("\n5 < 31 (width 32):", expr.evaluate(p, [5]))
print("5 < 31 truncated to width 4 (31 -> 15):", expr.evaluate(p, [5], width=4))

wrap = expr.parse_token_text("<s> ( bveq ( bvadd v0 #1 ) #0 ) </s>")
print("0xFFFFFFFF + 1 == 0:", expr.evaluate(wrap, [0xFFFFFFFF]))

shift = expr.parse_token_text("<s> ( bvult ( bvshl v0 #2 #0 ) #1 ) </s>")
print("x << 32 is 0:", expr.evaluate(shift, [5]))

# conditional branches are traced by stable node index
branchy = expr.parse_token_text(
    "<s> ( ite ( bvult v0 #8 ) ( bveq v1 #0 ) ( bvugt v1 #4 ) ) </s>")
print("\ntrace [3, 0]:", expr.eval_trace(branchy, [3, 0]))
print("trace [9, 7]:", expr.eval_trace(branchy, [9, 7]))

# the same predicate as an SMT-LIB2 term
print("\nSMT-LIB:", expr.to_smtlib(branchy, ["x", "y"]))
print("width 5 uses binary literals:", expr.to_smtlib(p, ["x"], width=5))
