"""Exact dense linear algebra over a prime field GF(p).

Vectors are rows.  A matrix ``A`` with ``cols`` columns acts on column vectors
``v`` by ``A @ v``; its kernel therefore lives in ``GF(p)^cols`` and its image
in ``GF(p)^rows``.

Subspaces are stored by their reduced row echelon basis, so two subspaces are
equal exactly when their basis matrices are identical.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import _accel
from .errors import DimensionMismatchError, InvalidParameterError

MAX_PRIME = 2**31


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p) or p >= MAX_PRIME:
        raise InvalidParameterError(f"modulus must be a prime below 2**31, got {p}")
    return p


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    """Modular inverses of ``0..p-1`` (with ``inv[0] = 0``)."""
    if p > 1 << 20:
        raise ValueError("inverse tables are only built for small primes")
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    inv.setflags(write=False)
    return inv


class FpMatrix:
    """Immutable dense matrix over GF(p)."""

    __slots__ = ("p", "data", "_hash")

    def __init__(self, data, p: int, *, shape: tuple[int, int] | None = None):
        self.p = check_prime(p)
        arr = np.array(data, dtype=np.int64)
        if shape is not None:
            arr = arr.reshape(shape)
        if arr.ndim != 2:
            raise ValueError(f"FpMatrix needs a 2-d array, got shape {arr.shape}")
        arr %= self.p
        arr.setflags(write=False)
        self.data = arr
        self._hash = None

    @classmethod
    def _wrap(cls, arr: np.ndarray, p: int) -> "FpMatrix":
        # arr must already be reduced mod p and owned by the caller
        m = object.__new__(cls)
        m.p = p
        arr.setflags(write=False)
        m.data = arr
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix._wrap(self.data.T.copy(), self.p)

    def _check(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise DimensionMismatchError(f"prime mismatch: {self.p} vs {other.p}")

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        return FpMatrix._wrap((self.data @ other.data) % self.p, self.p)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return FpMatrix._wrap((self.data + other.data) % self.p, self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot subtract {other.shape} from {self.shape}")
        return FpMatrix._wrap((self.data - other.data) % self.p, self.p)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix._wrap((-self.data) % self.p, self.p)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix._wrap((self.data * (c % self.p)) % self.p, self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.shape, self.data.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"FpMatrix({self.data.tolist()}, p={self.p})"

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def is_zero(self) -> bool:
        return not self.data.any()

    def rank(self) -> int:
        return rref(self)[2]


def rref(A: FpMatrix) -> tuple[FpMatrix, list[int], int]:
    """Unique reduced row echelon form of ``A``, its pivot columns and rank.

    The returned matrix has the shape of ``A``; zero rows sit at the bottom.
    """
    R, piv = _accel.rref(A.data, A.p, inverse_table(A.p))
    pivots = [int(c) for c in piv]
    return FpMatrix._wrap(R, A.p), pivots, len(pivots)


def rank(A: FpMatrix) -> int:
    return rref(A)[2]


def _rref_rows(arr: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    R, piv = _accel.rref(arr, p, inverse_table(p))
    return R[: piv.size], piv


def _as_rows(arr: np.ndarray, n: int) -> np.ndarray:
    """View ``arr`` as a stack of row vectors of length ``n``."""
    if n == 0:
        rows = arr.shape[0] if arr.ndim == 2 else 0
        return np.zeros((rows, 0), dtype=np.int64)
    return arr.reshape(-1, n)


class Subspace:
    """Subspace of ``GF(p)^ambient_dim`` held by its canonical RREF basis."""

    __slots__ = ("p", "ambient_dim", "basis", "pivots", "_key")

    def __init__(self, basis: FpMatrix, ambient_dim: int, *, _canonical: bool = False):
        if basis.cols != ambient_dim:
            raise DimensionMismatchError(
                f"basis has {basis.cols} columns, ambient dimension is {ambient_dim}"
            )
        self.p = basis.p
        self.ambient_dim = ambient_dim
        if _canonical:
            self.basis = basis
            self.pivots = _pivots_of(basis.data)
        else:
            R, piv = _rref_rows(basis.data, basis.p)
            self.basis = FpMatrix._wrap(R.copy(), basis.p)
            self.pivots = tuple(int(c) for c in piv)
        self._key = None

    @classmethod
    def from_rows(cls, rows, ambient_dim: int, p: int) -> "Subspace":
        arr = _as_rows(np.array(rows, dtype=np.int64), ambient_dim)
        return cls(FpMatrix(arr, p), ambient_dim)

    @classmethod
    def _from_array(cls, arr: np.ndarray, ambient_dim: int, p: int) -> "Subspace":
        # arr: reduced mod p, any shape (k, ambient_dim)
        R, piv = _rref_rows(_as_rows(np.ascontiguousarray(arr, dtype=np.int64), ambient_dim), p)
        s = object.__new__(cls)
        s.p = p
        s.ambient_dim = ambient_dim
        s.basis = FpMatrix._wrap(R.copy(), p)
        s.pivots = tuple(int(c) for c in piv)
        s._key = None
        return s

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(FpMatrix.zeros(0, ambient_dim, p), ambient_dim, _canonical=True)

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(FpMatrix.identity(ambient_dim, p), ambient_dim, _canonical=True)

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.ambient_dim, self.dim, self.basis.data.tobytes())
        return self._key

    def sort_key(self) -> tuple:
        return (self.dim, tuple(self.basis.data.ravel().tolist()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.p == other.p and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.p, self.key))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis.tolist()}, p={self.p})"

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, vectors: np.ndarray) -> np.ndarray:
        """Reduce row vectors modulo this subspace (zero iff contained)."""
        v = _as_rows(np.array(vectors, dtype=np.int64, copy=True), self.ambient_dim) % self.p
        B = self.basis.data
        for i, c in enumerate(self.pivots):
            f = v[:, c].copy()
            if f.any():
                v = (v - np.outer(f, B[i])) % self.p
        return v

    def coordinates(self, vectors: np.ndarray) -> np.ndarray:
        """Coordinates of row vectors (assumed inside) in the RREF basis."""
        v = _as_rows(np.asarray(vectors, dtype=np.int64), self.ambient_dim)
        return v[:, list(self.pivots)] % self.p

    def contains_vectors(self, vectors: np.ndarray) -> bool:
        return not self.reduce(vectors).any()

    def complement_columns(self) -> list[int]:
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]


def _pivots_of(R: np.ndarray) -> tuple[int, ...]:
    out = []
    for row in R:
        nz = np.flatnonzero(row)
        out.append(int(nz[0]))
    return tuple(out)


def _same_space(U: Subspace, V: Subspace) -> None:
    if U.p != V.p or U.ambient_dim != V.ambient_dim:
        raise DimensionMismatchError(
            f"subspaces of GF({U.p})^{U.ambient_dim} and GF({V.p})^{V.ambient_dim}"
        )


def kernel_basis(A: FpMatrix) -> Subspace:
    """The subspace ``{v : A v = 0}`` of ``GF(p)^cols``."""
    p, n = A.p, A.cols
    R, pivots, r = rref(A)
    free = [j for j in range(n) if j not in set(pivots)]
    if not free:
        return Subspace.zero(n, p)
    K = np.zeros((len(free), n), dtype=np.int64)
    Rd = R.data
    for k, f in enumerate(free):
        K[k, f] = 1
        for i, c in enumerate(pivots):
            K[k, c] = (-Rd[i, f]) % p
    return Subspace._from_array(K, n, p)


def image_basis(A: FpMatrix) -> Subspace:
    """Column space of ``A`` as a subspace of ``GF(p)^rows``."""
    return Subspace._from_array(A.data.T.copy(), A.rows, A.p)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _same_space(U, V)
    if U.is_zero():
        return V
    if V.is_zero():
        return U
    return Subspace._from_array(np.vstack([U.basis.data, V.basis.data]), U.ambient_dim, U.p)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    _same_space(U, V)
    p, n = U.p, U.ambient_dim
    if U.is_zero() or V.is_zero():
        return Subspace.zero(n, p)
    # x = a U = b V  <=>  (a, b) in the left kernel of [U; -V]
    stacked = np.vstack([U.basis.data, (-V.basis.data) % p])
    K = kernel_basis(FpMatrix._wrap(stacked.T.copy(), p))
    if K.is_zero():
        return Subspace.zero(n, p)
    a = K.basis.data[:, : U.dim]
    return Subspace._from_array((a @ U.basis.data) % p, n, p)


def subspace_contains(U: Subspace, V: Subspace) -> bool:
    """True iff ``V`` is a subspace of ``U``."""
    _same_space(U, V)
    if V.dim > U.dim:
        return False
    return V.is_zero() or U.contains_vectors(V.basis.data)


def image_of(U: Subspace, A: FpMatrix) -> Subspace:
    """``A(U)`` for ``A`` acting on columns, ``U`` in ``GF(p)^A.cols``."""
    if U.ambient_dim != A.cols:
        raise DimensionMismatchError(f"subspace of dim-{U.ambient_dim} space, map from {A.cols}")
    if U.is_zero():
        return Subspace.zero(A.rows, A.p)
    return Subspace._from_array((U.basis.data @ A.data.T) % A.p, A.rows, A.p)


def preimage_of(W: Subspace, A: FpMatrix) -> Subspace:
    """``{v : A v in W}`` for ``W`` in ``GF(p)^A.rows``."""
    p = A.p
    comp = W.complement_columns()
    if not comp:
        return Subspace.full(A.cols, p)
    # A v in W  <=>  the reduction of A v modulo W vanishes on complement columns
    reduced_cols = W.reduce(A.data.T)  # rows are images of basis vectors
    M = reduced_cols[:, comp].T
    return kernel_basis(FpMatrix._wrap(np.ascontiguousarray(M) % p, p))


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of ``k``-dimensional subspaces of ``GF(p)^n``."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, p: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def _rref_patterns(n: int, d: int, p: int) -> Iterator[np.ndarray]:
    for pivots in itertools.combinations(range(n), d):
        pivset = set(pivots)
        free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pivset]
        base = np.zeros((d, n), dtype=np.int64)
        for i, c in enumerate(pivots):
            base[i, c] = 1
        for vals in itertools.product(range(p), repeat=len(free)):
            m = base.copy()
            for (i, j), x in zip(free, vals):
                m[i, j] = x
            yield m


def enumerate_subspaces(n: int, p: int, d: int | None = None) -> Iterator[Subspace]:
    """Every subspace of ``GF(p)^n`` exactly once.

    Order: by dimension, then lexicographically on the flattened RREF basis.
    """
    p = check_prime(p)
    if n < 0:
        raise ValueError("ambient dimension must be nonnegative")
    dims: Sequence[int] = range(n + 1) if d is None else [d]
    if d is not None and not 0 <= d <= n:
        raise ValueError(f"dimension {d} out of range for ambient {n}")
    for k in dims:
        mats = sorted(_rref_patterns(n, k, p), key=lambda m: tuple(m.ravel().tolist()))
        for m in mats:
            yield Subspace(FpMatrix._wrap(m, p), n, _canonical=True)


def enumerate_superspaces(W: Subspace, d: int | None = None) -> Iterator[Subspace]:
    """Every subspace containing ``W`` (optionally of dimension ``d``)."""
    n, p = W.ambient_dim, W.p
    comp = W.complement_columns()
    q = len(comp)
    rel = None if d is None else d - W.dim
    if rel is not None and not 0 <= rel <= q:
        return
    for S in enumerate_subspaces(q, p, rel):
        if S.is_zero():
            yield W
            continue
        lifted = np.zeros((S.dim, n), dtype=np.int64)
        lifted[:, comp] = S.basis.data
        yield Subspace._from_array(np.vstack([W.basis.data, lifted]), n, p)


def enumerate_subspaces_within(U: Subspace, d: int | None = None) -> Iterator[Subspace]:
    """Every subspace of ``U`` (optionally of dimension ``d``)."""
    n, p = U.ambient_dim, U.p
    for S in enumerate_subspaces(U.dim, p, d):
        if S.is_zero():
            yield Subspace.zero(n, p)
        else:
            yield Subspace._from_array((S.basis.data @ U.basis.data) % p, n, p)


def solve_left(B: np.ndarray, V: np.ndarray, p: int) -> np.ndarray:
    """Coordinates ``C`` with ``C @ B == V`` for independent rows ``B``.

    Raises ``ValueError`` when some row of ``V`` is outside the row space.
    """
    B = np.asarray(B, dtype=np.int64) % p
    V = _as_rows(np.asarray(V, dtype=np.int64), B.shape[1]) % p
    d = B.shape[0]
    aug = np.hstack([B, np.eye(d, dtype=np.int64)])
    R, piv = _accel.rref(aug, p, inverse_table(p))
    piv = [int(c) for c in piv if c < B.shape[1]]
    if len(piv) != d:
        raise ValueError("rows of B are not independent")
    E = R[:d, B.shape[1] :]
    C = (V[:, piv] @ E) % p
    if not np.array_equal((C @ B) % p, V):
        raise ValueError("vector outside the row space")
    return C
