"""Index sequences, the middle-letter rewrite, and the eight-type table.

A sequence over {1,2,3,4} with distinct neighbors is written end-first:
"1321" ends at 1 and starts at 1.  Inside any window of three pairwise
distinct indices the middle one can be swapped for the missing fourth,
and everything in this package is organized around the classes of that
rewriting.
"""

from quadlat import (
    canonicalize,
    class_closure,
    prepend,
    representative,
    rewrite_neighbors,
    seq_from_string,
    seq_to_string,
    slice_enumerate,
)

s = seq_from_string("1321")
print("sequence:", seq_to_string(s))
print("one-step rewrites:", sorted(seq_to_string(x) for x in rewrite_neighbors(s)))

closure = class_closure(s)
print("full class:", sorted(seq_to_string(x) for x in closure))

c = canonicalize(s)
print("canonical form:", c, "| length", c.length, "| members", c.class_size)
print("lex-min member:", seq_to_string(representative(c)))

print()
print("slices of classes starting at 1 (size n(n+1)/2):")
for n in range(1, 8):
    print(f"  n={n}: {len(slice_enumerate(n))} classes")

print()
print("appending an index at the end side walks the eight-type table:")
c = canonicalize(seq_from_string("21"))
print("  start:", c)
for i in (1, 3, 1, 2):
    c = prepend(i, c)
    print(f"  after {i}:", c)
