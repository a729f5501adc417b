"""Generalized Pell strings, Munarini binary strings and the codec between them.

A generalized Pell string over ``{0, ..., k}`` is a word in the free monoid on
the letters ``0, 1, ..., k-1, kk``; equivalently no maximal run of ``k`` has
odd length.  Each letter is sent to a block of ``k`` bits:

    i  (0 <= i < k)  ->  A_i = 0^(i-1) 1 0^(k-i)      (A_0 = 0^k)
    kk               ->  A_k A_0

and the concatenation is a binary Fibonacci string of length ``k*n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError, UnsupportedParameterError


@dataclass(frozen=True, order=True)
class PellString:
    """Immutable (k+1)-ary string with even runs of ``k``."""

    symbols: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.k < 1:
            raise InputError(f"arity must be >= 1, got {self.k}")
        if not is_pell_string(self.symbols, self.k):
            raise InputError(f"{self.symbols!r} has an odd run of {self.k}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        return format_symbols(self.symbols, self.k)

    def count(self, symbol: int) -> int:
        return self.symbols.count(symbol)


@dataclass(frozen=True, order=True)
class BinaryLabel:
    """Fixed-length bit string; a vertex of some hypercube Q_m."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.bits, tuple):
            object.__setattr__(self, "bits", tuple(self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise InputError(f"not a bit string: {self.bits!r}")

    @classmethod
    def from_str(cls, text: str) -> BinaryLabel:
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_int(cls, value: int, length: int) -> BinaryLabel:
        return cls(tuple((value >> (length - 1 - i)) & 1 for i in range(length)))

    def to_int(self) -> int:
        """Integer whose binary expansion (MSB first) is this label."""
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @property
    def weight(self) -> int:
        return sum(self.bits)


# ---------------------------------------------------------------------------
# serialization

def format_symbols(symbols: Sequence[int], k: int) -> str:
    if k >= 10:
        return ".".join(map(str, symbols))
    return "".join(map(str, symbols))


def parse_pell(text: str, k: int) -> PellString:
    """Inverse of ``str(PellString)`` for the given arity."""
    if text == "":
        return PellString((), k)
    try:
        if k >= 10:
            symbols = tuple(int(s) for s in text.split("."))
        else:
            symbols = tuple(int(c) for c in text)
    except ValueError as exc:
        raise InputError(f"cannot parse {text!r} as a Pell string") from exc
    return PellString(symbols, k)


# ---------------------------------------------------------------------------
# Pell strings

def is_pell_string(symbols: Iterable[int], k: int) -> bool:
    """True iff every maximal run of ``k`` in ``symbols`` has even length.

    Raises InputError for a symbol outside ``[0, k]``.
    """
    run = 0
    for s in symbols:
        if not 0 <= s <= k:
            raise InputError(f"symbol {s} outside [0, {k}]")
        if s == k:
            run += 1
        else:
            if run % 2:
                return False
            run = 0
    return run % 2 == 0


def _words(n: int, letters: Sequence[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    # letters must be sorted so that the output is lexicographic
    if n == 0:
        yield ()
        return
    for letter in letters:
        if len(letter) <= n:
            for rest in _words(n - len(letter), letters):
                yield letter + rest


def _pell_letters(k: int) -> list[tuple[int, ...]]:
    return [(i,) for i in range(k)] + [(k, k)]


def iter_pell_tuples(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Raw symbol tuples of F_{n,k} in lexicographic order."""
    if n < 0 or k < 1:
        raise InputError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    return _words(n, _pell_letters(k))


def enumerate_pell_strings(n: int, k: int) -> list[PellString]:
    """All generalized Pell strings of length ``n`` over ``{0..k}``, lexicographically."""
    return [PellString(t, k) for t in iter_pell_tuples(n, k)]


def enumerate_maximal_strings(n: int, k: int) -> list[PellString]:
    """Strings of F_{n,k} that contain no ``0``.

    Only defined for k >= 2; for k = 1 the set is not the maximal-vertex set.
    """
    if k < 2:
        raise UnsupportedParameterError("maximal strings need k >= 2")
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    letters = [(i,) for i in range(1, k)] + [(k, k)]
    return [PellString(t, k) for t in _words(n, letters)]


def weight(u: PellString | Sequence[int], k: int | None = None) -> int:
    """Distance from ``u`` to the all-zero string in M_{n,k}.

    Each symbol in ``1..k-1`` counts one, each ``kk`` block counts one.
    """
    if isinstance(u, PellString):
        k = u.k if k is None else k
        symbols = u.symbols
    else:
        symbols = tuple(u)
    if k is None:
        raise InputError("arity k is required for a raw symbol sequence")
    light = sum(1 for s in symbols if 0 < s < k)
    return light + symbols.count(k) // 2


# ---------------------------------------------------------------------------
# Munarini strings and the codec

def munarini_letter(i: int, k: int) -> tuple[int, ...]:
    """The ``k``-bit block A_i."""
    if i == 0:
        return (0,) * k
    return (0,) * (i - 1) + (1,) + (0,) * (k - i)


def encode_psi_tuple(symbols: Sequence[int], k: int) -> tuple[int, ...]:
    out: list[int] = []
    i, n = 0, len(symbols)
    while i < n:
        s = symbols[i]
        if s == k:
            if i + 1 >= n or symbols[i + 1] != k:
                raise InputError(f"{tuple(symbols)!r} has an odd run of {k}")
            out += munarini_letter(k, k) + munarini_letter(0, k)
            i += 2
        else:
            out += munarini_letter(s, k)
            i += 1
    return tuple(out)


def encode_psi(u: PellString | Sequence[int], k: int | None = None) -> BinaryLabel:
    """Map a Pell string of length n to its Munarini string of length k*n."""
    if isinstance(u, PellString):
        k = u.k
        symbols = u.symbols
    else:
        if k is None:
            raise InputError("arity k is required for a raw symbol sequence")
        symbols = tuple(u)
        if not is_pell_string(symbols, k):
            raise InputError(f"{symbols!r} is not a generalized Pell string")
    return BinaryLabel(encode_psi_tuple(symbols, k))


def decode_psi(v: BinaryLabel | Sequence[int] | str, k: int) -> PellString:
    """Inverse of :func:`encode_psi`.

    Raises InputError when ``v`` does not factor over A_0..A_{k-1}, A_k A_0.
    """
    if isinstance(v, str):
        v = BinaryLabel.from_str(v)
    bits = tuple(v.bits) if isinstance(v, BinaryLabel) else tuple(v)
    if len(bits) % k:
        raise InputError(f"length {len(bits)} is not a multiple of k={k}")
    blocks = [bits[j:j + k] for j in range(0, len(bits), k)]
    index = {munarini_letter(i, k): i for i in range(k + 1)}
    symbols: list[int] = []
    j = 0
    while j < len(blocks):
        i = index.get(blocks[j])
        if i is None:
            raise InputError(f"block {blocks[j]!r} at {j} is not a Munarini letter")
        if i == k:
            if j + 1 >= len(blocks) or blocks[j + 1] != munarini_letter(0, k):
                raise InputError(f"A_{k} at block {j} is not followed by A_0")
            symbols += [k, k]
            j += 2
        else:
            symbols.append(i)
            j += 1
    return PellString(tuple(symbols), k)


def is_munarini_string(v: BinaryLabel | Sequence[int], k: int) -> bool:
    try:
        decode_psi(v, k)
    except InputError:
        return False
    return True


# ---------------------------------------------------------------------------
# words counted by the cube number

def is_ank_word(word: Sequence[int], k: int) -> bool:
    """Word over ``{0..2k}`` whose maximal runs of 0 and of 1 all have even length."""
    run_symbol, run = None, 0
    for s in word:
        if not 0 <= s <= 2 * k:
            raise InputError(f"symbol {s} outside [0, {2 * k}]")
        if s == run_symbol:
            run += 1
            continue
        if run_symbol in (0, 1) and run % 2:
            return False
        run_symbol, run = s, 1
    return not (run_symbol in (0, 1) and run % 2)


def count_ank_words(n: int, k: int) -> int:
    """|A_{n,k}| via a_n = (2k-1) a_{n-1} + 2 a_{n-2}, a_0 = 1, a_1 = 2k-1."""
    if n < 0 or k < 1:
        raise InputError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    a, b = 1, 2 * k - 1
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, (2 * k - 1) * b + 2 * a
    return b
