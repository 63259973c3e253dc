"""L-value cache file: checksummed CSV, atomic rewrite, exact roundtrip.

Format:

    # sha256=<hex digest of everything after this line>
    q,a,b,re,im,method,err
    5,-1,-2,0.53788...,-0.12...,afe,1e-09

Rows are sorted by (q, a, b); floats carry 17 significant digits so binary64
values roundtrip bit-exactly.  Files are rewritten atomically (temp file +
rename); a checksum mismatch refuses to load.
"""

from __future__ import annotations

import hashlib
import os
import tempfile

from .lfunctions import LValueRecord

__all__ = ["CacheCorruptError", "write_lvalue_cache", "read_lvalue_cache", "cache_roundtrip"]

_HEADER = "q,a,b,re,im,method,err"


class CacheCorruptError(RuntimeError):
    """Checksum mismatch or malformed cache file."""


def _body(records: list[LValueRecord]) -> str:
    lines = [_HEADER]
    for r in sorted(records, key=lambda r: (r.q, r.a, r.b)):
        lines.append(
            f"{r.q},{r.a},{r.b},{r.value.real:.17g},{r.value.imag:.17g},"
            f"{r.method},{r.err_estimate:.17g}"
        )
    return "\n".join(lines) + "\n"


def write_lvalue_cache(path: str, records: list[LValueRecord]) -> None:
    body = _body(records)
    digest = hashlib.sha256(body.encode()).hexdigest()
    payload = f"# sha256={digest}\n{body}"
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".lvalue-cache-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_lvalue_cache(path: str) -> list[LValueRecord]:
    with open(path) as fh:
        first = fh.readline()
        body = fh.read()
    if not first.startswith("# sha256="):
        raise CacheCorruptError("missing checksum line")
    digest = first.strip().split("=", 1)[1]
    if hashlib.sha256(body.encode()).hexdigest() != digest:
        raise CacheCorruptError("checksum mismatch")
    lines = body.splitlines()
    if not lines or lines[0] != _HEADER:
        raise CacheCorruptError("missing header row")
    out = []
    for line in lines[1:]:
        q, a, b, re, im, method, err = line.split(",")
        out.append(
            LValueRecord(
                q=int(q),
                a=int(a),
                b=int(b),
                value=complex(float(re), float(im)),
                method=method,
                err_estimate=float(err),
            )
        )
    return out


def cache_roundtrip(records: list[LValueRecord], path: str) -> list[LValueRecord]:
    """Write then read back; the identity on sorted record lists."""
    write_lvalue_cache(path, records)
    return read_lvalue_cache(path)
