"""Build the two witness families and re-check them from disk."""
import tempfile

from gonlab import WitnessBundle, acl_dcl_witness, ladder_prefix

for n in (3, 4, 5):
    b = acl_dcl_witness(n)
    print(f"n={n}: {len(b.graph)} vertices, {sum(v for _, v in b.assertions)}/{len(b.assertions)} assertions hold")

lad = ladder_prefix(4, 3)
with tempfile.TemporaryDirectory() as d:
    lad.write(d)
    back = WitnessBundle.read(d)
    failed = [k for k, v in back.recheck() if not v]
print(f"ladder n=4 with 3 rungs: {len(lad.graph)} vertices, failed after reload: {failed or 'none'}")
