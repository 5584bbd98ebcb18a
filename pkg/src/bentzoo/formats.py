"""Function-file formats and canonical JSON output.

Truth tables are two-line text files: a header naming the type, size and
flavor, then one hex string.

    boolfn n=<n> flavor=<mv|uv:0x<poly>>
    <2^n bits, hex-packed: hex digit j holds table[4j..4j+3], table[4j] = LSB>

    genfn n=<n> k=<k> flavor=<mv|uv:0x<poly>>
    <2^n values, each ceil(k/4) hex digits, most significant digit first>

    vectfn n=<n> k=<k> flavor=<mv|uv:0x<poly>,sub=0x<poly>>
    <same packing as genfn>

Partitions are JSON objects {"n": int, "U": [ints] | null, "parts": [[ints]]}.
All JSON emitted by the CLI goes through canonical_json, which fixes key
order and number formatting so identical invocations are byte-identical.
"""

from __future__ import annotations

import json

import numpy as np

from .boolfn import BoolFn
from .errors import ParseError
from .genfn import GenFn
from .gf2m import Field
from .vectfn import VectFn


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _flavor_tag(field: Field | None) -> str:
    return "mv" if field is None else f"uv:0x{field.poly:x}"


def _parse_flavor(tag: str, n: int) -> Field | None:
    if tag == "mv":
        return None
    if tag.startswith("uv:"):
        try:
            poly = int(tag[3:], 16)
        except ValueError as exc:
            raise ParseError(f"bad flavor tag {tag!r}") from exc
        return Field(n, poly)
    raise ParseError(f"bad flavor tag {tag!r}")


def _parse_header(line: str, expect: str) -> dict:
    parts = line.strip().split()
    if not parts or parts[0] != expect:
        raise ParseError(f"expected a {expect!r} header, got {line.strip()!r}")
    fields = {}
    for tok in parts[1:]:
        if "=" not in tok:
            raise ParseError(f"bad header token {tok!r}")
        key, val = tok.split("=", 1)
        fields[key] = val
    return fields


# -- Boolean functions ---------------------------------------------------

def boolfn_to_text(f: BoolFn) -> str:
    bits = f.table
    digits = []
    for j in range(0, bits.shape[0], 4):
        chunk = bits[j:j + 4]
        v = 0
        for i, b in enumerate(chunk):
            v |= int(b) << i
        digits.append(f"{v:x}")
    return f"boolfn n={f.n} flavor={_flavor_tag(f.field)}\n" + "".join(digits) + "\n"


def boolfn_from_text(text: str) -> BoolFn:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("boolfn file must have a header line and a data line")
    head = _parse_header(lines[0], "boolfn")
    try:
        n = int(head["n"])
    except (KeyError, ValueError) as exc:
        raise ParseError("missing or bad n in header") from exc
    field = _parse_flavor(head.get("flavor", "mv"), n)
    data = lines[1].strip()
    if len(data) * 4 != 1 << n and not (n < 2 and len(data) == 1):
        raise ParseError(f"expected {max(1, (1 << n) // 4)} hex digits, got {len(data)}")
    table = np.zeros(1 << n, dtype=np.uint8)
    for j, ch in enumerate(data):
        try:
            v = int(ch, 16)
        except ValueError as exc:
            raise ParseError(f"bad hex digit {ch!r}") from exc
        for i in range(4):
            idx = 4 * j + i
            if idx < 1 << n:
                table[idx] = (v >> i) & 1
    return BoolFn(table, field)


# -- generalized and vectorial functions -----------------------------------

def _values_to_hex(values: np.ndarray, k: int) -> str:
    width = (k + 3) // 4
    return "".join(f"{int(v):0{width}x}" for v in values)


def _values_from_hex(data: str, n: int, k: int) -> np.ndarray:
    width = (k + 3) // 4
    if len(data) != width * (1 << n):
        raise ParseError(f"expected {width * (1 << n)} hex digits, got {len(data)}")
    try:
        return np.array(
            [int(data[i * width:(i + 1) * width], 16) for i in range(1 << n)],
            dtype=np.int64,
        )
    except ValueError as exc:
        raise ParseError("bad hex digit in value data") from exc


def genfn_to_text(f: GenFn) -> str:
    head = f"genfn n={f.n} k={f.k} flavor={_flavor_tag(f.field)}"
    return head + "\n" + _values_to_hex(f.values, f.k) + "\n"


def genfn_from_text(text: str) -> GenFn:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("genfn file must have a header line and a data line")
    head = _parse_header(lines[0], "genfn")
    try:
        n, k = int(head["n"]), int(head["k"])
    except (KeyError, ValueError) as exc:
        raise ParseError("missing or bad n/k in header") from exc
    field = _parse_flavor(head.get("flavor", "mv"), n)
    return GenFn(k, _values_from_hex(lines[1].strip(), n, k), field)


def vectfn_to_text(f: VectFn) -> str:
    tag = _flavor_tag(f.field)
    if f.field is not None:
        sub_poly = f.embed.sub.poly if f.embed.sub is not None else 0b11
        tag += f",sub=0x{sub_poly:x}"
    head = f"vectfn n={f.n} k={f.k} flavor={tag}"
    return head + "\n" + _values_to_hex(f.table, f.k) + "\n"


def vectfn_from_text(text: str) -> VectFn:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("vectfn file must have a header line and a data line")
    head = _parse_header(lines[0], "vectfn")
    try:
        n, k = int(head["n"]), int(head["k"])
    except (KeyError, ValueError) as exc:
        raise ParseError("missing or bad n/k in header") from exc
    tag = head.get("flavor", "mv")
    embed = None
    field = None
    if tag != "mv":
        main_tag, _, sub_part = tag.partition(",")
        field = _parse_flavor(main_tag, n)
        if sub_part:
            if not sub_part.startswith("sub=0x"):
                raise ParseError(f"bad subfield tag {sub_part!r}")
            sub_poly = int(sub_part[6:], 16)
            if k >= 2:
                embed = field.subfield(k, Field(k, sub_poly))
            else:
                embed = field.subfield(k)
        else:
            embed = field.subfield(k)
    return VectFn(k, _values_from_hex(lines[1].strip(), n, k), field, embed)


# -- partitions --------------------------------------------------------------

def partition_to_json(n: int, parts, u_part=None) -> str:
    obj = {
        "n": n,
        "U": sorted(int(v) for v in u_part) if u_part is not None else None,
        "parts": [sorted(int(v) for v in p) for p in parts],
    }
    return canonical_json(obj)


def partition_from_json(text: str) -> tuple[int, list[list[int]], list[int] | None]:
    try:
        obj = json.loads(text)
        n = int(obj["n"])
        u_part = obj.get("U")
        parts = [[int(v) for v in p] for p in obj["parts"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad partition JSON: {exc}") from exc
    return n, parts, list(u_part) if u_part is not None else None


# -- spectra ------------------------------------------------------------------

def walsh_csv(values) -> str:
    lines = ["b,value"]
    for b, v in enumerate(values):
        lines.append(f"{b},{int(v)}")
    return "\n".join(lines) + "\n"


def gen_spectrum_csv(spec) -> str:
    lines = ["c,u,coeffs"]
    for c in sorted(spec.rows_by_c):
        rows = spec.rows_by_c[c]
        for u in range(rows.shape[0]):
            coeffs = "[" + ",".join(str(int(v)) for v in rows[u]) + "]"
            lines.append(f'{c},{u},"K={spec.level};{coeffs}"')
    return "\n".join(lines) + "\n"


def load_function(text: str):
    """Dispatch on the header tag; returns a BoolFn, GenFn or VectFn."""
    first = text.lstrip().split(None, 1)
    if not first:
        raise ParseError("empty function file")
    tag = first[0]
    if tag == "boolfn":
        return boolfn_from_text(text)
    if tag == "genfn":
        return genfn_from_text(text)
    if tag == "vectfn":
        return vectfn_from_text(text)
    raise ParseError(f"unknown function file tag {tag!r}")
