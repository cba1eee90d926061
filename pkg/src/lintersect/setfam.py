"""Subsets as bitmasks and set families with shadows and intersection checks.

A subset of [n] (n <= 64) is an int whose bit i-1 stands for element i;
element labels are 1-based in all I/O, bit positions 0-based internally.
A SetFamily keeps its members duplicate-free in canonical order: sorted by
(cardinality, mask value).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import FamilyParseError, LevelOutOfRange, ParamOutOfRange

MAX_GROUND_SET = 64


def subset_mask(elements, n: int) -> int:
    """Bitmask for a collection of 1-based element labels."""
    mask = 0
    for e in elements:
        e = int(e)
        if not 1 <= e <= n:
            raise ParamOutOfRange(f"element {e} outside 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def mask_elements(mask: int) -> tuple[int, ...]:
    """1-based sorted element labels of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _canonical(masks) -> tuple[int, ...]:
    return tuple(sorted(masks, key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True)
class SetFamily:
    """Duplicate-free family of subsets of [n] in canonical order."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND_SET:
            raise ParamOutOfRange(f"ground set size {self.n} outside 0..{MAX_GROUND_SET}")
        seen = set()
        for m in self.members:
            if m < 0 or m >> self.n:
                raise ParamOutOfRange(f"mask {m:#x} has bits outside [{self.n}]")
            if m in seen:
                raise ParamOutOfRange(f"duplicate member {mask_elements(m)}")
            seen.add(m)
        object.__setattr__(self, "members", _canonical(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def sizes(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.members)

    def as_elements(self) -> list[tuple[int, ...]]:
        return [mask_elements(m) for m in self.members]


def family(n: int, sets_of_elements) -> SetFamily:
    """Build a family from iterables of 1-based element labels."""
    return SetFamily(n, tuple(subset_mask(s, n) for s in sets_of_elements))


def union_of_levels(n: int, levels) -> SetFamily:
    """All subsets of [n] whose size lies in `levels`, canonical order."""
    ks = sorted(set(int(k) for k in levels))
    if ks and not (0 <= ks[0] and ks[-1] <= n):
        raise LevelOutOfRange(f"levels {ks} outside 0..{n}")
    masks = []
    for k in ks:
        for bits in combinations(range(n), k):
            m = 0
            for b in bits:
                m |= 1 << b
            masks.append(m)
    return SetFamily(n, tuple(masks))


@dataclass(frozen=True)
class LevelStats:
    """Shadow/non-shadow census of one level; counts always sum to C(n,level)."""

    level: int
    shadow_count: int
    nonshadow_count: int


def _shadow_masks(F: SetFamily, t: int) -> set[int]:
    out: set[int] = set()
    for m in F.members:
        bits = [i for i in range(F.n) if m >> i & 1]
        if t > len(bits):
            continue
        for combo in combinations(bits, t):
            sm = 0
            for b in combo:
                sm |= 1 << b
            out.add(sm)
    return out


def shadow(F: SetFamily, t: int) -> SetFamily:
    """t-shadow: every t-subset of [n] contained in at least one member."""
    if not 0 <= t <= F.n:
        raise LevelOutOfRange(f"level {t} outside 0..{F.n}")
    return SetFamily(F.n, tuple(_shadow_masks(F, t)))


def shadow_count(F: SetFamily, t: int) -> int:
    """|shadow(F,t)| for any t >= 0; empty above n without erroring."""
    if t < 0:
        raise LevelOutOfRange(f"level {t} negative")
    if t > F.n:
        return 0
    # Full-level short circuit: a complete level k >= t shadows everything.
    size_census = Counter(F.sizes())
    for k, cnt in size_census.items():
        if k >= t and cnt == comb(F.n, k):
            return comb(F.n, t)
    return len(_shadow_masks(F, t))


def nonshadow_count(F: SetFamily, t: int) -> int:
    """C(n,t) - |shadow(F,t)|, without materializing the non-shadow."""
    if not 0 <= t <= F.n:
        raise LevelOutOfRange(f"level {t} outside 0..{F.n}")
    return comb(F.n, t) - shadow_count(F, t)


def nonshadows(F: SetFamily, t: int) -> SetFamily:
    """The t-subsets contained in no member, canonical order."""
    if not 0 <= t <= F.n:
        raise LevelOutOfRange(f"level {t} outside 0..{F.n}")
    sh = _shadow_masks(F, t)
    masks = []
    for bits in combinations(range(F.n), t):
        m = 0
        for b in bits:
            m |= 1 << b
        if m not in sh:
            masks.append(m)
    return SetFamily(F.n, tuple(masks))


def level_stats(F: SetFamily, levels) -> list[LevelStats]:
    """Per-level shadow/non-shadow counts; levels above n read as (0, 0)."""
    out = []
    for j in sorted(set(int(j) for j in levels)):
        sc = shadow_count(F, j)
        out.append(LevelStats(j, sc, comb(F.n, j) - sc))
    return out


def intersection_profile(F: SetFamily) -> Counter:
    """Multiset of |A & B| over unordered distinct pairs."""
    out: Counter = Counter()
    ms = F.members
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            out[(ms[i] & ms[j]).bit_count()] += 1
    return out


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a hypothesis check; violations are data, not errors."""

    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_L_intersecting(F: SetFamily, L, p: int | None = None) -> CheckResult:
    """Every pairwise intersection size in L (exact) or in L + pZ (modular)."""
    allowed = set(int(x) for x in L)
    ms = F.members
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            size = (ms[i] & ms[j]).bit_count()
            val = size % p if p is not None else size
            if val not in allowed:
                return CheckResult(
                    False,
                    (ms[i], ms[j]),
                    f"|{mask_elements(ms[i])} & {mask_elements(ms[j])}| = {size} not allowed",
                )
    return CheckResult(True)


def check_sizes(F: SetFamily, K, p: int | None = None) -> CheckResult:
    """Every member size in K (exact) or in K + pZ (modular)."""
    allowed = set(int(x) for x in K)
    for m in F.members:
        size = m.bit_count()
        val = size % p if p is not None else size
        if val not in allowed:
            return CheckResult(
                False, (m,), f"|{mask_elements(m)}| = {size} not allowed"
            )
    return CheckResult(True)


# --- family text format ------------------------------------------------
#
# Header line "n=<int>", then one set per line as 1-based labels separated
# by whitespace or commas.  Blank lines and '#' comments are ignored.  A
# lone '-' denotes the empty set (a blank line would be skipped).


def parse_family(text: str) -> SetFamily:
    n = None
    masks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.replace(" ", "").startswith("n="):
                raise FamilyParseError("expected header 'n=<int>'", lineno)
            try:
                n = int(line.split("=", 1)[1])
            except ValueError:
                raise FamilyParseError("bad ground-set size", lineno) from None
            if not 0 <= n <= MAX_GROUND_SET:
                raise FamilyParseError(f"n = {n} outside 0..{MAX_GROUND_SET}", lineno)
            continue
        if line == "-":
            masks.append((0, lineno))
            continue
        try:
            elems = [int(tok) for tok in line.replace(",", " ").split()]
        except ValueError:
            raise FamilyParseError(f"non-integer element in {line!r}", lineno) from None
        try:
            masks.append((subset_mask(elems, n), lineno))
        except ParamOutOfRange as e:
            raise FamilyParseError(str(e), lineno) from None
    if n is None:
        raise FamilyParseError("missing header 'n=<int>'", 1)
    seen = {}
    for m, lineno in masks:
        if m in seen:
            raise FamilyParseError(f"duplicate set (first at line {seen[m]})", lineno)
        seen[m] = lineno
    return SetFamily(n, tuple(m for m, _ in masks))


def format_family(F: SetFamily) -> str:
    lines = [f"n={F.n}"]
    for m in F.members:
        lines.append(" ".join(str(e) for e in mask_elements(m)) if m else "-")
    return "\n".join(lines) + "\n"


def family_from_json(obj) -> SetFamily:
    """Accepts {"n": int, "sets": [[labels], ...]}."""
    try:
        n = int(obj["n"])
        sets = obj["sets"]
    except (KeyError, TypeError, ValueError):
        raise FamilyParseError('expected {"n": int, "sets": [[..], ..]}', 1) from None
    return family(n, sets)
