"""Seeded, platform-independent random instances.

Randomness comes from SplitMix64 so that a seed names the same matrix in
any language. Invertible matrices are built by applying random row
operations to the identity; exact-rank matrices are products P @ Q of thin
full-rank factors.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .core import Matrix, Vector, mat_identity, mat_mul
from .rref import AddMultiple, Scale, Swap, _apply_op, rank

MASK64 = (1 << 64) - 1

ROW_OP_FACTORS = tuple(Fraction(x) for x in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3))
DENOMINATORS = (1, 2, 3)
# |numerator| and denominator of every entry stay at or below this
ENTRY_CAP = 1 << 20
MAX_REROLLS = 16


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014), 64-bit state."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def rational(self, entry_bound: int) -> Fraction:
        num = self.below(2 * entry_bound + 1) - entry_bound
        return Fraction(num, self.choice(DENOMINATORS))


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n: int
    entry_bound: int = 5
    op_count: int | None = None  # None -> 4 * n

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"size must be >= 0, got {self.n}")
        if self.entry_bound < 1:
            raise ValueError(f"entry_bound must be >= 1, got {self.entry_bound}")
        if self.op_count is not None and self.op_count < 0:
            raise ValueError(f"op_count must be >= 0, got {self.op_count}")

    @property
    def ops(self) -> int:
        return 4 * self.n if self.op_count is None else self.op_count


def _within_cap(row) -> bool:
    return all(abs(x.numerator) <= ENTRY_CAP and x.denominator <= ENTRY_CAP for x in row)


def _two_distinct(rng: SplitMix64, n: int) -> tuple[int, int]:
    i = rng.below(n)
    j = rng.below(n - 1)
    if j >= i:
        j += 1
    return i, j


def _random_row_op(rng: SplitMix64, n: int):
    kind = rng.below(3) if n >= 2 else 1
    if kind == 0:
        return Swap(*_two_distinct(rng, n))
    if kind == 1:
        return Scale(rng.below(n), rng.choice(ROW_OP_FACTORS))
    t, s = _two_distinct(rng, n)
    return AddMultiple(t, s, rng.choice(ROW_OP_FACTORS))


def random_row_ops(cfg: GenConfig) -> list:
    """The row operations random_invertible applies to I, in order."""
    return _generate(cfg)[1]


def _generate(cfg: GenConfig) -> tuple[list, list]:
    n = cfg.n
    rng = SplitMix64(cfg.seed)
    data = mat_identity(n).to_lists()
    ops = []
    if n == 0:
        return data, ops
    for _ in range(cfg.ops):
        for _ in range(MAX_REROLLS):
            op = _random_row_op(rng, n)
            trial = list(data)
            _apply_op(trial, op)
            touched = op.row if isinstance(op, Scale) else op.target if isinstance(op, AddMultiple) else None
            if touched is None or _within_cap(trial[touched]):
                break
        else:
            # negation never grows an entry
            op = Scale(rng.below(n), Fraction(-1))
            trial = list(data)
            _apply_op(trial, op)
        data = trial
        ops.append(op)
    return data, ops


def random_invertible(cfg: GenConfig) -> Matrix:
    """Apply cfg.ops random row operations to I; the result has rank n."""
    data, _ = _generate(cfg)
    return Matrix._from_lists(cfg.n, cfg.n, data)


def random_with_rank(cfg: GenConfig, r: int) -> Matrix:
    """n x n matrix of rank exactly r, built as P @ Q.

    P is the first r columns and Q the first r rows of two independent
    random invertible matrices, so both factors have full rank r.
    """
    n = cfg.n
    if not 0 <= r <= n:
        raise ValueError(f"rank {r} out of range for size {n}")
    seeder = SplitMix64(cfg.seed)
    left = random_invertible(replace(cfg, seed=seeder.next_u64()))
    right = random_invertible(replace(cfg, seed=seeder.next_u64()))
    P = Matrix._from_lists(n, r, [list(left.row(i)[:r]) for i in range(n)])
    Q = Matrix._from_lists(r, n, [list(right.row(i)) for i in range(r)])
    M = mat_mul(P, Q)
    got = rank(M)
    if got != r:
        raise AssertionError(f"rank construction produced rank {got}, wanted {r}")
    return M


def random_vector(rng: SplitMix64, n: int, entry_bound: int = 5) -> Vector:
    return Vector(n, tuple(rng.rational(entry_bound) for _ in range(n)))


def random_matrix(seed: int, rows: int, cols: int, entry_bound: int = 5) -> Matrix:
    """Dense matrix with independent entries p/q, |p| <= entry_bound, q in {1, 2, 3}."""
    rng = SplitMix64(seed)
    return Matrix(rows, cols, tuple(rng.rational(entry_bound) for _ in range(rows * cols)))
