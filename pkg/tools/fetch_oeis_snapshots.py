#!/usr/bin/env python3
"""Download OEIS b-files for every bound sequence into the package data dir.

    python tools/fetch_oeis_snapshots.py [--data-dir DIR] [--id A049774 ...]

Existing files are left alone unless --force is given. Each download is parsed
before it is written, so a truncated or HTML response never lands on disk.
"""

import argparse
import sys
import urllib.request

from incpat import oeis


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--data-dir", default=None)
    p.add_argument("--id", action="append")
    p.add_argument("--force", action="store_true")
    p.add_argument("--timeout", type=float, default=30.0)
    args = p.parse_args(argv)

    data_dir = args.data_dir or oeis.default_data_dir()
    ids = args.id or sorted(oeis.load_bindings())
    failed = 0
    for ident in ids:
        path = oeis.bfile_path(data_dir, ident)
        if path.exists() and not args.force:
            print(f"{ident}: already present")
            continue
        try:
            with urllib.request.urlopen(oeis.fetch_url(ident), timeout=args.timeout) as resp:
                text = resp.read().decode("utf-8")
            record = oeis.parse_bfile(text, ident)
        except Exception as exc:  # network or format problem; keep going
            print(f"{ident}: failed ({exc})", file=sys.stderr)
            failed += 1
            continue
        path.write_text(text, encoding="utf-8")
        print(f"{ident}: {len(record)} terms -> {path}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
