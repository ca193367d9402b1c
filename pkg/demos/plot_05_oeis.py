"""
Regression against OEIS b-files
===============================

Bindings map an A-number to a computation. ``compare_sequence`` recomputes
every term of a b-file and reports differences. Snapshots live in
``incpat/data/oeis``; ``tools/fetch_oeis_snapshots.py`` downloads them.
"""

from incpat import oeis

bindings = oeis.load_bindings()
for ident, b in sorted(bindings.items()):
    print(ident, b.family, f"s={b.s} r={b.r}")

###############################################################################
# A hand-written record with one wrong term shows what a failure looks like.

record = oeis.parse_bfile("0 1\n1 1\n2 2\n3 5\n4 18\n", id="A049774")
print(oeis.compare_sequence(bindings["A049774"], record).summary())

###############################################################################
# Vendored snapshots, if any are present.

data_dir = oeis.default_data_dir()
for ident, b in sorted(bindings.items()):
    path = oeis.bfile_path(data_dir, ident)
    if path.exists():
        print(oeis.compare_sequence(b, oeis.read_bfile(path)).summary())
    else:
        print(f"{ident}: no snapshot")
