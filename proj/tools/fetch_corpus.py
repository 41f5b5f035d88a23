#!/usr/bin/env python3
"""Download the pinned SuiteSparse matrices into data/corpus/{small,large}.

Only the standard library is used. Each entry of corpus_lists/<list>.txt is a
Group/Name pair; the Matrix Market tarball is fetched and the main .mtx file
extracted as <dest>/<list>/<Name>.mtx. Rectangular or unsymmetric matrices
are skipped with a log line. Existing files are left alone.
"""

import argparse
import io
import pathlib
import sys
import tarfile
import urllib.error
import urllib.request

MIRRORS = (
    "https://sparse.tamu.edu/MM/{group}/{name}.tar.gz",
    "https://suitesparse-collection-website.herokuapp.com/MM/{group}/{name}.tar.gz",
)

HERE = pathlib.Path(__file__).resolve().parent


def read_list(which):
    path = HERE / "corpus_lists" / f"{which}.txt"
    entries = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            group, name = line.split("/", 1)
            entries.append((group, name))
    return entries


def download(group, name, timeout):
    last = None
    for url in MIRRORS:
        url = url.format(group=group, name=name)
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                return resp.read()
        except (urllib.error.URLError, OSError) as e:
            last = e
    raise RuntimeError(f"{group}/{name}: {last}")


def extract_mtx(blob, name):
    with tarfile.open(fileobj=io.BytesIO(blob), mode="r:gz") as tar:
        for member in tar.getmembers():
            if member.isfile() and member.name.endswith(f"/{name}.mtx"):
                return tar.extractfile(member).read()
    raise RuntimeError(f"{name}.mtx not found in archive")


def exclusion_reason(mtx):
    """None for a square symmetric coordinate matrix, else why it is skipped."""
    lines = iter(mtx.decode("latin-1").splitlines())
    banner = next(lines, "").lower().split()
    if len(banner) < 5 or banner[0] != "%%matrixmarket" or banner[2] != "coordinate":
        return "not a coordinate Matrix Market file"
    if banner[4] == "general":
        return "structurally unsymmetric (general)"
    for line in lines:
        if line.strip() and not line.startswith("%"):
            rows, cols = line.split()[:2]
            return None if rows == cols else f"rectangular {rows}x{cols}"
    return "missing size line"


def fetch(which, dest, timeout):
    out_dir = dest / which
    out_dir.mkdir(parents=True, exist_ok=True)
    failed = 0
    for group, name in read_list(which):
        target = out_dir / f"{name}.mtx"
        if target.exists():
            print(f"have  {group}/{name}")
            continue
        try:
            mtx = extract_mtx(download(group, name, timeout), name)
            reason = exclusion_reason(mtx)
            if reason:
                print(f"skip  {group}/{name}: {reason}", file=sys.stderr)
                continue
            target.write_bytes(mtx)
            print(f"got   {group}/{name}")
        except Exception as e:  # keep going; report at the end
            failed += 1
            print(f"FAIL  {e}", file=sys.stderr)
    return failed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--list", choices=("small", "large", "all"), default="all")
    ap.add_argument("--dest", default="data/corpus")
    ap.add_argument("--timeout", type=float, default=60.0)
    args = ap.parse_args()

    lists = ("small", "large") if args.list == "all" else (args.list,)
    failed = sum(fetch(w, pathlib.Path(args.dest), args.timeout) for w in lists)
    if failed:
        print(f"{failed} matrices could not be fetched", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
