"""Vectorized exhaustive-enumeration kernels.

Everything distance-related funnels through here: the q^k codeword space is
swept in chunks, with GF(2) codewords packed into uint64 words (one or more
per block) and general fields handled as int16 symbol arrays.  Block
weights come from OR-reductions over per-block support masks, which also
drive the single-pass per-subset minima used by the distance profiles.

Chunks are produced in a fixed message order (message index digits in base
q select generator rows), so reductions are deterministic and independent
of chunk boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .fields import Field

__all__ = [
    "DEFAULT_CAP",
    "DimensionCapError",
    "subset_minima",
    "min_block_distance",
    "weight_histogram",
    "CodewordTable",
    "build_table",
]

DEFAULT_CAP = 28
_INF = np.iinfo(np.int64).max
_CHUNK_BUDGET = 1 << 22  # target elements resident per chunk


class DimensionCapError(Exception):
    """Enumeration over q^k refused because k exceeds the configured cap."""


def check_cap(k: int, cap: int | None) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if k > limit:
        raise DimensionCapError(
            f"dimension {k} above enumeration cap {limit}; raise cap explicitly"
        )


# ---------------------------------------------------------------------------
# popcount

if hasattr(np, "bitwise_count"):

    def popcount_u64(a: np.ndarray) -> np.ndarray:
        return np.bitwise_count(a)

else:  # numpy < 2.0
    _POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def popcount_u64(a: np.ndarray) -> np.ndarray:
        b = np.ascontiguousarray(a).view(np.uint8).reshape(a.shape + (8,))
        return _POP8[b].sum(axis=-1, dtype=np.uint8)


# ---------------------------------------------------------------------------
# generator packing


def _pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a (..., nbits) 0/1 array into (..., W) uint64, bit j of word w
    holding position 64*w + j (little-endian within the vector)."""
    nbits = bits.shape[-1]
    w = (nbits + 63) // 64
    padded = np.zeros(bits.shape[:-1] + (w * 64,), dtype=np.uint8)
    padded[..., :nbits] = bits
    return np.packbits(padded, axis=-1, bitorder="little").view(np.uint64)


def _rows_to_blocks(rows: Sequence[Sequence[int]], m: int) -> np.ndarray:
    arr = np.array(rows, dtype=np.int16)
    k, length = arr.shape
    if length % m:
        raise ValueError(f"length {length} not divisible by block count {m}")
    return arr.reshape(k, m, length // m)


def _pack_block_rows(blocks: np.ndarray) -> np.ndarray:
    """(k, m, nb) 0/1 -> (k, m, Wb) uint64."""
    return _pack_bits(blocks.astype(np.uint8))


# ---------------------------------------------------------------------------
# codeword chunk iterators


def _iter_chunks_gf2(packed: np.ndarray, chunk_rows: int | None = None) -> Iterator[np.ndarray]:
    """All 2^k codewords of the row space, chunked.  packed: (k, W) uint64.

    The first chunk starts with the zero word; chunk t covers message
    indices [t * 2^lo, (t+1) * 2^lo).
    """
    k, w = packed.shape
    if chunk_rows is None:
        chunk_rows = _CHUNK_BUDGET // max(w, 1)
    lo = min(k, max(1, chunk_rows.bit_length() - 1))
    low = np.zeros((1, w), dtype=np.uint64)
    for i in range(lo):
        low = np.concatenate([low, low ^ packed[i]])
    if k == lo:
        yield low
        return
    cur = np.zeros(w, dtype=np.uint64)
    yield low
    for t in range(1, 1 << (k - lo)):
        flip = (t & -t).bit_length() - 1
        cur = cur ^ packed[lo + flip]
        yield low ^ cur


class _FieldOps:
    """Chunk arithmetic for one field: mod-p fast path or table lookups."""

    def __init__(self, field: Field):
        self.field = field
        self.q = field.q
        if field.e == 1:
            self.add_table = None
            self.scalar_rows = None
        else:
            add, mul = field.tables()
            self.add_table = add
            self.mul_col = mul  # mul[c, value]

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.add_table is None:
            return (a + b) % self.q
        return self.add_table[a, b]

    def scaled(self, c: int, row: np.ndarray) -> np.ndarray:
        if self.add_table is None:
            return (c * row) % self.q
        return self.mul_col[c, row]


def _iter_chunks_modq(
    rows: np.ndarray, field: Field, chunk_rows: int | None = None
) -> Iterator[np.ndarray]:
    """All q^k codewords as (C, L) int16 chunks; message digit i (base q)
    scales generator row i."""
    ops = _FieldOps(field)
    q = field.q
    k, length = rows.shape
    if chunk_rows is None:
        chunk_rows = _CHUNK_BUDGET // max(length, 1)
    per = max(q, chunk_rows)
    lo = 1
    while lo < k and q ** (lo + 1) <= per:
        lo += 1
    low = np.zeros((1, length), dtype=np.int16)
    for i in range(lo):
        low = np.concatenate([ops.add(low, ops.scaled(c, rows[i])) for c in range(q)])
    hi = k - lo
    if hi == 0:
        yield low
        return
    cur = np.zeros(length, dtype=np.int16)
    digits = [0] * hi
    yield low
    total = q**hi
    for _ in range(1, total):
        pos = 0
        while digits[pos] == q - 1:
            digits[pos] = 0
            cur = ops.add(cur, rows[lo + pos])
            pos += 1
        digits[pos] += 1
        cur = ops.add(cur, rows[lo + pos])
        yield ops.add(low, cur)


# ---------------------------------------------------------------------------
# support masks

_POW2 = (np.uint64(1) << np.arange(64, dtype=np.uint64)).astype(np.uint64)


def _support_masks(vals: np.ndarray) -> np.ndarray:
    """(C, m, nb) symbol values -> (C, m) uint64 support bitmasks (nb <= 64)."""
    nb = vals.shape[-1]
    if nb > 64:
        raise ValueError("block length above 64 is not supported by the mask path")
    return ((vals != 0).astype(np.uint64) * _POW2[:nb]).sum(axis=-1, dtype=np.uint64)


# ---------------------------------------------------------------------------
# per-subset minima (single pass over the codeword space)


def subset_minima(
    field: Field,
    rows: Sequence[Sequence[int]],
    m: int,
    *,
    cap: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Minimum block and Hamming weights of every nonempty block-subset.

    Returns (block_min, ham_min), each of length 2^m and indexed by the
    subset bitmask (bit i = block i+1 present).  Entry 0 and subsets whose
    projection is identically zero hold the _INF sentinel.
    """
    if m > 16:
        raise ValueError("block count above 16 not supported for profiles")
    k = len(rows)
    check_cap(k, cap)
    nsub = 1 << m
    block_min = np.full(nsub, _INF, dtype=np.int64)
    ham_min = np.full(nsub, _INF, dtype=np.int64)
    # the subset DP keeps ~2^m arrays of one chunk resident
    chunk_rows = max(1024, _CHUNK_BUDGET // nsub)

    if field.q == 2:
        blocks = _rows_to_blocks(rows, m)
        nb = blocks.shape[-1]
        if nb > 64:
            raise ValueError("block length above 64 not supported")
        packed = _pack_block_rows(blocks)[:, :, 0]  # (k, m)
        for chunk in _iter_chunks_gf2(packed, chunk_rows=chunk_rows):
            bw = popcount_u64(chunk).astype(np.int32)
            _update_minima(chunk, bw, block_min, ham_min)
    else:
        arr = np.array(rows, dtype=np.int16)
        nb = arr.shape[1] // m
        for chunk in _iter_chunks_modq(arr, field, chunk_rows=chunk_rows):
            vals = chunk.reshape(chunk.shape[0], m, nb)
            masks = _support_masks(vals)
            bw = (vals != 0).sum(axis=-1, dtype=np.int32)
            _update_minima(masks, bw, block_min, ham_min)
    return block_min, ham_min


_INF32 = np.iinfo(np.int32).max


def _update_minima(
    masks: np.ndarray,
    bw: np.ndarray,
    block_min: np.ndarray,
    ham_min: np.ndarray,
) -> None:
    """Fold one chunk into the per-subset minima (masks: (C, m) uint64)."""
    m = masks.shape[1]
    nsub = 1 << m
    unions: list[np.ndarray | None] = [None] * nsub
    hams: list[np.ndarray | None] = [None] * nsub
    for t in range(1, nsub):
        i = (t & -t).bit_length() - 1
        rest = t ^ (1 << i)
        if rest == 0:
            u = masks[:, i]
            h = bw[:, i]
            w = h  # single block: block weight = Hamming weight
        else:
            u = unions[rest] | masks[:, i]
            h = hams[rest] + bw[:, i]
            w = popcount_u64(u).astype(np.int32)
        unions[t] = u
        hams[t] = h
        valid = u != 0
        if valid.any():
            bm = int(np.min(w, where=valid, initial=_INF32))
            hm = int(np.min(h, where=valid, initial=_INF32))
            if bm < block_min[t]:
                block_min[t] = bm
            if hm < ham_min[t]:
                ham_min[t] = hm


# ---------------------------------------------------------------------------
# single-metric sweeps


def _iter_block_weights(
    field: Field, rows: Sequence[Sequence[int]], m: int
) -> Iterator[np.ndarray]:
    """Yield per-chunk block weights (m = 1 gives Hamming weights)."""
    if field.q == 2:
        blocks = _rows_to_blocks(rows, m)
        packed = _pack_block_rows(blocks)  # (k, m, Wb)
        k, _, wb = packed.shape
        flat = packed.reshape(k, m * wb)
        for chunk in _iter_chunks_gf2(flat):
            words = chunk.reshape(chunk.shape[0], m, wb)
            union = np.bitwise_or.reduce(words, axis=1)  # (C, Wb)
            yield popcount_u64(union).sum(axis=-1, dtype=np.int64)
    else:
        arr = np.array(rows, dtype=np.int16)
        nb = arr.shape[1] // m
        if arr.shape[1] % m:
            raise ValueError("length not divisible by block count")
        for chunk in _iter_chunks_modq(arr, field):
            vals = chunk.reshape(chunk.shape[0], m, nb)
            yield (vals != 0).any(axis=1).sum(axis=-1, dtype=np.int64)


def min_block_distance(
    field: Field,
    rows: Sequence[Sequence[int]],
    m: int,
    *,
    cap: int | None = None,
) -> int:
    """Minimum block weight over nonzero codewords (m = 1: Hamming)."""
    check_cap(len(rows), cap)
    best = _INF
    for w in _iter_block_weights(field, rows, m):
        nz = w > 0
        if nz.any():
            best = min(best, int(np.min(w, where=nz, initial=_INF)))
    if best == _INF:
        raise ValueError("degenerate zero code has no minimum distance")
    return best


def weight_histogram(
    field: Field,
    rows: Sequence[Sequence[int]],
    m: int,
    *,
    cap: int | None = None,
) -> np.ndarray:
    """Counts of codewords by block weight, length (n_blocks + 1)."""
    check_cap(len(rows), cap)
    nb_cols = len(rows[0]) // m
    counts = np.zeros(nb_cols + 1, dtype=np.int64)
    for w in _iter_block_weights(field, rows, m):
        counts += np.bincount(w, minlength=nb_cols + 1)
    return counts


# ---------------------------------------------------------------------------
# full codeword tables (decoding support)

_TABLE_BUDGET = 1 << 24  # max resident elements for a decode table


@dataclass
class CodewordTable:
    """All q^k codewords of a blocked code, message-indexed.

    GF(2): ``packed`` has shape (2^k, m, Wb) uint64.  Other fields:
    ``values`` has shape (q^k, m, nb) int16.  Message index digits in base q
    (little-endian) are the message symbols.
    """

    field: Field
    k: int
    m: int
    nb: int
    packed: np.ndarray | None
    values: np.ndarray | None

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def message(self, index: int) -> tuple[int, ...]:
        q = self.field.q
        out = []
        for _ in range(self.k):
            out.append(index % q)
            index //= q
        return tuple(out)

    def codeword(self, index: int) -> tuple[int, ...]:
        if self.values is not None:
            return tuple(int(x) for x in self.values[index].reshape(-1))
        words = self.packed[index]  # (m, Wb)
        bits: list[int] = []
        for b in range(self.m):
            for j in range(self.nb):
                bits.append(int(words[b, j // 64] >> np.uint64(j % 64)) & 1)
        return tuple(bits)


def build_table(field: Field, rows: Sequence[Sequence[int]], m: int) -> CodewordTable:
    k = len(rows)
    length = len(rows[0])
    nb = length // m
    if field.q**k * length > _TABLE_BUDGET * 4:
        raise DimensionCapError(f"codeword table too large for k={k}, q={field.q}")
    if field.q == 2:
        blocks = _rows_to_blocks(rows, m)
        packed = _pack_block_rows(blocks)
        kk, _, wb = packed.shape
        flat = packed.reshape(kk, m * wb)
        table = np.zeros((1, m * wb), dtype=np.uint64)
        for i in range(kk):
            table = np.concatenate([table, table ^ flat[i]])
        return CodewordTable(field, k, m, nb, table.reshape(-1, m, wb), None)
    ops = _FieldOps(field)
    arr = np.array(rows, dtype=np.int16)
    table = np.zeros((1, length), dtype=np.int16)
    for i in range(k):
        table = np.concatenate([ops.add(table, ops.scaled(c, arr[i])) for c in range(field.q)])
    return CodewordTable(field, k, m, nb, None, table.reshape(-1, m, nb))


def pack_received_gf2(vec: Sequence[int], m: int) -> np.ndarray:
    """Pack one received word into (m, Wb) uint64 for the decode kernels."""
    arr = np.array(vec, dtype=np.uint8).reshape(m, -1)
    return _pack_bits(arr)


def hamming_distances(table: CodewordTable, received: np.ndarray, blocks: Sequence[int]) -> np.ndarray:
    """Distance from ``received`` to every codeword, restricted to ``blocks``.

    received: (m, Wb) uint64 (GF(2)) or (m, nb) int16.  Returns (q^k,) int64.
    """
    idx = list(blocks)
    if table.packed is not None:
        diff = table.packed[:, idx, :] ^ received[idx, :][None, :, :]
        return popcount_u64(diff).sum(axis=(1, 2), dtype=np.int64)
    diff = table.values[:, idx, :] != received[idx, :][None, :, :]
    return diff.sum(axis=(1, 2), dtype=np.int64)


def block_distances(table: CodewordTable, received: np.ndarray, blocks: Sequence[int]) -> np.ndarray:
    """Block-metric distances restricted to ``blocks`` (columns that differ)."""
    idx = list(blocks)
    if table.packed is not None:
        diff = table.packed[:, idx, :] ^ received[idx, :][None, :, :]
        union = np.bitwise_or.reduce(diff, axis=1)
        return popcount_u64(union).sum(axis=-1, dtype=np.int64)
    diff = table.values[:, idx, :] != received[idx, :][None, :, :]
    return diff.any(axis=1).sum(axis=-1, dtype=np.int64)
