"""Grow the free projective plane on a path of length 6 and watch delta stay put."""
from gonlab import classify_free, complete, delta, gamma_k, girth, is_open, normalize_to_hatrack

seed = gamma_k(3, 6)
print(f"seed: {len(seed)} vertices, delta={delta(seed)}, open={is_open(seed).open}")

trace = complete(seed, 4)
for i, s in enumerate(trace.snapshots):
    print(f"stage {i}: {len(s):4d} vertices {s.num_edges:4d} edges  delta={delta(s)}  girth={girth(s)}")

# a pendant costs one unit of delta, so this generates the next free plane up
g = seed.extend({"q": seed.part("x3").other}, [("x3", "q")])
hr, cert = normalize_to_hatrack(g)
print(f"generator with a pendant: delta={delta(g)}, hat-rack spine length {len(hr.counts) - 1}, {len(cert.steps)} steps")
print(classify_free(g).statement)
