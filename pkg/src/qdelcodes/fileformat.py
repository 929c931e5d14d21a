"""QDEL container files and textual string formats.

A QDEL file is self-describing: a fixed header carrying the full code
parameters (including overrides), the payload kind, and the exact payload
length, followed by the payload symbols bit-packed MSB-first and padded
with zeros to a byte boundary.  Ground-truth artifacts written this way can
be moved between machines and still decode with the identical plan.
"""

from __future__ import annotations

import struct
from typing import NamedTuple

from .bits import num_rows
from .errors import ParameterError
from .params import MODE_BURST_BIN, MODE_BURST_Q, MODE_TWODEL, CodeParams
from .sketches import COLORED, VERBATIM

MAGIC = b"QDEL"
VERSION = 1

_MODE_CODE = {MODE_TWODEL: 0, MODE_BURST_BIN: 1, MODE_BURST_Q: 2}
_MODE_NAME = {v: k for k, v in _MODE_CODE.items()}
_PROVIDER_CODE = {VERBATIM: 0, COLORED: 1}
_PROVIDER_NAME = {v: k for k, v in _PROVIDER_CODE.items()}

KIND_MESSAGE = 0
KIND_CODEWORD = 1
KIND_RECEIVED = 2

_NONE = 0xFFFFFFFF

_HEADER = struct.Struct("<4sBBIHBBBBBIIIIBII")


class Payload(NamedTuple):
    params: CodeParams
    kind: int
    symbols: tuple


def _pack_symbols(symbols, q: int) -> tuple[bytes, int]:
    width = num_rows(q)
    bits = len(symbols) * width
    value = 0
    for s in symbols:
        value = (value << width) | s
    pad = (-bits) % 8
    return (value << pad).to_bytes((bits + pad) // 8, "big"), bits


def _unpack_symbols(raw: bytes, count: int, q: int) -> tuple:
    width = num_rows(q)
    bits = count * width
    value = int.from_bytes(raw, "big") >> ((-bits) % 8)
    mask = (1 << width) - 1
    return tuple((value >> (width * (count - 1 - i))) & mask for i in range(count))


def write_payload(path: str, params: CodeParams, kind: int, symbols) -> None:
    syms = tuple(int(s) for s in symbols) if not isinstance(symbols, str) \
        else tuple(int(ch) for ch in symbols)
    raw, bits = _pack_symbols(syms, params.q)
    header = _HEADER.pack(
        MAGIC, VERSION, _MODE_CODE[params.mode], params.n, params.q, params.t,
        params.d, _PROVIDER_CODE[params.provider], params.w_max, params.lam,
        _NONE if params.reg_window is None else params.reg_window,
        _NONE if params.rho is None else params.rho,
        _NONE if params.delta is None else params.delta,
        _NONE if params.delta_prime is None else params.delta_prime,
        kind, len(syms), bits)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(raw)


def read_payload(path: str) -> Payload:
    with open(path, "rb") as fh:
        header = fh.read(_HEADER.size)
        raw = fh.read()
    if len(header) != _HEADER.size:
        raise ParameterError("truncated QDEL header")
    (magic, version, mode, n, q, t, d, provider, w_max, lam,
     reg_window, rho, delta, delta_prime, kind, count, bits) = _HEADER.unpack(header)
    if magic != MAGIC:
        raise ParameterError("not a QDEL file")
    if version != VERSION:
        raise ParameterError("unsupported QDEL version %d" % version)
    params = CodeParams(
        mode=_MODE_NAME[mode], n=n, q=q, t=t, d=d,
        provider=_PROVIDER_NAME[provider], w_max=w_max, lam=lam,
        reg_window=None if reg_window == _NONE else reg_window,
        rho=None if rho == _NONE else rho,
        delta=None if delta == _NONE else delta,
        delta_prime=None if delta_prime == _NONE else delta_prime)
    if bits != count * num_rows(q):
        raise ParameterError("inconsistent payload bit length")
    if len(raw) != (bits + (-bits) % 8) // 8:
        raise ParameterError("truncated QDEL payload")
    return Payload(params, kind, _unpack_symbols(raw, count, q))


# ---------------------------------------------------------------------------
# textual formats


def format_string(value, q: int, hex_bits: bool = False) -> str:
    if q == 2:
        bits = value if isinstance(value, str) else "".join(str(s) for s in value)
        if hex_bits:
            if len(bits) % 4:
                raise ValueError("hex output needs a multiple of 4 bits, got %d" % len(bits))
            return format(int(bits, 2), "0%dx" % (len(bits) // 4)) if bits else ""
        return bits
    seq = value if not isinstance(value, str) else value
    return " ".join(str(s) for s in seq)


def parse_string(text: str, q: int, hex_bits: bool = False):
    text = text.strip()
    if q == 2:
        if hex_bits:
            return format(int(text, 16), "0%db" % (len(text) * 4)) if text else ""
        if any(ch not in "01" for ch in text):
            raise ValueError("binary input must be a 01 string")
        return text
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split())
