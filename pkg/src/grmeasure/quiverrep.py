"""Quivers, their finite-dimensional representations over GF(p), and morphisms.

Arrow matrices have shape ``dim(target) x dim(source)`` and act on column
vectors.  Every quiver here is acyclic, so simple representations are
one-dimensional and the composition length of a representation is its total
dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, NamedTuple

import numpy as np

from . import _accel
from .config import DEFAULT_CAP, DEFAULT_SEED, RANDOM_TRIALS
from .errors import CapExceededError, DimensionMismatchError, InvalidSubrepError, UndecidedError
from .ffla import (
    FpMatrix,
    Subspace,
    check_prime,
    image_of,
    inverse_table,
    kernel_basis,
    solve_left,
    subspace_sum,
)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple((str(a), str(s), str(t)) for a, s, t in self.arrows))
        if not self.vertices:
            raise ValueError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        names = [a for a, _, _ in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        vs = set(self.vertices)
        for a, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {a} joins unknown vertices {s} -> {t}")
        self.topological_order  # raises on cycles

    @cached_property
    def topological_order(self) -> tuple[str, ...]:
        indeg = {v: 0 for v in self.vertices}
        for _, _, t in self.arrows:
            indeg[t] += 1
        order = []
        ready = [v for v in self.vertices if indeg[v] == 0]
        while ready:
            v = ready.pop(0)
            order.append(v)
            for _, s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        if len(order) != len(self.vertices):
            raise ValueError("quiver has an oriented cycle")
        return tuple(order)

    @cached_property
    def arrow_map(self) -> dict[str, tuple[str, str]]:
        return {a: (s, t) for a, s, t in self.arrows}

    def incoming(self, v: str) -> list[tuple[str, str, str]]:
        return [arr for arr in self.arrows if arr[2] == v]

    def outgoing(self, v: str) -> list[tuple[str, str, str]]:
        return [arr for arr in self.arrows if arr[1] == v]

    def sinks(self) -> list[str]:
        return [v for v in self.vertices if not self.outgoing(v)]

    def sources(self) -> list[str]:
        return [v for v in self.vertices if not self.incoming(v)]

    @cached_property
    def report_order(self) -> tuple[str, ...]:
        """Vertex order for printed dimension vectors.

        Two-vertex quivers whose arrows all point one way (bimodule type) are
        listed sink first; everything else in declaration order.
        """
        if len(self.vertices) == 2 and self.arrows:
            ends = {(s, t) for _, s, t in self.arrows}
            if len(ends) == 1:
                (s, t), = ends
                return (t, s)
        return self.vertices


def _as_block(data, shape: tuple[int, int], what: str) -> np.ndarray:
    arr = np.array(data, dtype=np.int64)
    if arr.size == 0 and shape[0] * shape[1] == 0:
        return arr.reshape(shape)
    if arr.shape != shape:
        raise DimensionMismatchError(f"{what}: matrix shape {arr.shape}, expected {shape}")
    return arr


class Representation:
    """A representation of an acyclic quiver over GF(p); immutable."""

    __slots__ = ("quiver", "p", "dims", "maps", "_hash", "__weakref__")

    def __init__(
        self,
        quiver: Quiver,
        p: int,
        dims: Mapping[str, int],
        maps: Mapping[str, object] | None = None,
    ):
        self.quiver = quiver
        self.p = check_prime(p)
        missing = set(quiver.vertices) - set(dims)
        if missing:
            raise ValueError(f"missing dimensions for vertices {sorted(missing)}")
        self.dims = {v: int(dims[v]) for v in quiver.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise ValueError("dimensions must be nonnegative")
        maps = dict(maps or {})
        out = {}
        for a, s, t in quiver.arrows:
            shape = (self.dims[t], self.dims[s])
            m = maps.pop(a, None)
            if m is None:
                m = FpMatrix.zeros(*shape, self.p)
            elif not isinstance(m, FpMatrix):
                m = FpMatrix(_as_block(m, shape, f"arrow {a}"), self.p)
            if m.p != self.p:
                raise DimensionMismatchError(f"arrow {a}: matrix over GF({m.p}), representation over GF({self.p})")
            if m.shape != shape:
                raise DimensionMismatchError(f"arrow {a}: matrix shape {m.shape}, expected {shape}")
            out[a] = m
        if maps:
            raise ValueError(f"maps given for unknown arrows {sorted(maps)}")
        self.maps = out
        self._hash = None

    @property
    def length(self) -> int:
        return sum(self.dims.values())

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)

    def dim_vector_report(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.report_order)

    def is_zero(self) -> bool:
        return self.length == 0

    def _key(self):
        return (
            self.quiver,
            self.p,
            self.dim_vector,
            tuple(self.maps[a].data.tobytes() for a, _, _ in self.quiver.arrows),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims}, p={self.p})"


def _same_category(M: Representation, N: Representation) -> None:
    if M.quiver != N.quiver or M.p != N.p:
        raise DimensionMismatchError("representations of different quivers or over different primes")


def validate(M: Representation) -> bool:
    """Re-check shapes and moduli of every arrow matrix."""
    for a, s, t in M.quiver.arrows:
        m = M.maps.get(a)
        if m is None or m.p != M.p or m.shape != (M.dims[t], M.dims[s]):
            return False
        if (m.data < 0).any() or (m.data >= M.p).any():
            return False
    return True


class Morphism:
    """A family of vertex blocks ``dim_target(v) x dim_source(v)`` commuting with all arrows."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation, blocks: Mapping[str, object], *, check: bool = True):
        _same_category(source, target)
        self.source = source
        self.target = target
        p = source.p
        out = {}
        for v in source.quiver.vertices:
            shape = (target.dims[v], source.dims[v])
            b = blocks.get(v)
            if b is None:
                b = FpMatrix.zeros(*shape, p)
            elif not isinstance(b, FpMatrix):
                b = FpMatrix(_as_block(b, shape, f"block at {v}"), p)
            if b.shape != shape:
                raise DimensionMismatchError(f"block at {v} has shape {b.shape}, expected {shape}")
            out[v] = b
        self.blocks = out
        if check and not self.commutes():
            raise ValueError("blocks do not commute with the arrow maps")

    def commutes(self) -> bool:
        for a, s, t in self.source.quiver.arrows:
            lhs = self.blocks[t] @ self.source.maps[a]
            rhs = self.target.maps[a] @ self.blocks[s]
            if lhs != rhs:
                return False
        return True

    @classmethod
    def identity(cls, M: Representation) -> "Morphism":
        return cls(M, M, {v: FpMatrix.identity(M.dims[v], M.p) for v in M.quiver.vertices}, check=False)

    @classmethod
    def zero(cls, M: Representation, N: Representation) -> "Morphism":
        return cls(M, N, {}, check=False)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """Composition ``self o other``."""
        if other.target != self.source:
            raise DimensionMismatchError("morphisms are not composable")
        return Morphism(other.source, self.target, {v: self.blocks[v] @ other.blocks[v] for v in self.blocks}, check=False)

    def __add__(self, other: "Morphism") -> "Morphism":
        if other.source != self.source or other.target != self.target:
            raise DimensionMismatchError("morphisms between different modules")
        return Morphism(self.source, self.target, {v: self.blocks[v] + other.blocks[v] for v in self.blocks}, check=False)

    def scale(self, c: int) -> "Morphism":
        return Morphism(self.source, self.target, {v: b.scale(c) for v, b in self.blocks.items()}, check=False)

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks.values())

    def flat(self) -> np.ndarray:
        """All blocks, row-major, concatenated in vertex order."""
        parts = [self.blocks[v].data.ravel() for v in self.source.quiver.vertices]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.flat().tobytes()))

    def __repr__(self) -> str:
        return f"Morphism({ {v: b.tolist() for v, b in self.blocks.items()} })"


def _unflatten(vec: np.ndarray, M: Representation, N: Representation) -> dict[str, FpMatrix]:
    blocks = {}
    pos = 0
    for v in M.quiver.vertices:
        r, c = N.dims[v], M.dims[v]
        blocks[v] = FpMatrix._wrap(np.array(vec[pos : pos + r * c], dtype=np.int64).reshape(r, c), M.p)
        pos += r * c
    return blocks


def hom_basis(M: Representation, N: Representation) -> list[Morphism]:
    """Basis of Hom(M, N): the solution space of all commuting-square equations."""
    _same_category(M, N)
    p = M.p
    Q = M.quiver
    offs = {}
    pos = 0
    for v in Q.vertices:
        offs[v] = pos
        pos += N.dims[v] * M.dims[v]
    n_unknowns = pos
    if n_unknowns == 0:
        return []
    rows = []
    for a, s, t in Q.arrows:
        ns, nt, ms, mt = N.dims[s], N.dims[t], M.dims[s], M.dims[t]
        if nt * ms == 0:
            continue
        eq = np.zeros((nt * ms, n_unknowns), dtype=np.int64)
        # X_t M_a  ->  (I_{N_t} kron M_a^T) vec(X_t)
        if mt:
            eq[:, offs[t] : offs[t] + nt * mt] += np.kron(np.eye(nt, dtype=np.int64), M.maps[a].data.T)
        # - N_a X_s  ->  -(N_a kron I_{M_s}) vec(X_s)
        if ns:
            eq[:, offs[s] : offs[s] + ns * ms] -= np.kron(N.maps[a].data, np.eye(ms, dtype=np.int64))
        rows.append(eq % p)
    if rows:
        K = kernel_basis(FpMatrix._wrap(np.vstack(rows), p))
    else:
        K = Subspace.full(n_unknowns, p)
    return [Morphism(M, N, _unflatten(vec, M, N), check=False) for vec in K.basis.data]


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_basis(M, N))


def is_mono(f: Morphism) -> bool:
    return all(b.rank() == b.cols for b in f.blocks.values())


def is_epi(f: Morphism) -> bool:
    return all(b.rank() == b.rows for b in f.blocks.values())


def is_iso_morphism(f: Morphism) -> bool:
    return all(b.rows == b.cols and b.rank() == b.cols for b in f.blocks.values())


class DirectSum(NamedTuple):
    rep: Representation
    inclusions: tuple[Morphism, Morphism]
    projections: tuple[Morphism, Morphism]


def direct_sum(M: Representation, N: Representation) -> DirectSum:
    """``M ⊕ N`` with block-diagonal arrow maps, M's coordinates first."""
    _same_category(M, N)
    p, Q = M.p, M.quiver
    dims = {v: M.dims[v] + N.dims[v] for v in Q.vertices}
    maps = {}
    for a, s, t in Q.arrows:
        blk = np.zeros((dims[t], dims[s]), dtype=np.int64)
        blk[: M.dims[t], : M.dims[s]] = M.maps[a].data
        blk[M.dims[t] :, M.dims[s] :] = N.maps[a].data
        maps[a] = FpMatrix._wrap(blk, p)
    S = Representation(Q, p, dims, maps)
    inc, proj = [], []
    for X, off in ((M, 0), (N, None)):
        ib, pb = {}, {}
        for v in Q.vertices:
            o = 0 if off == 0 else M.dims[v]
            e = np.zeros((dims[v], X.dims[v]), dtype=np.int64)
            e[o : o + X.dims[v], :] = np.eye(X.dims[v], dtype=np.int64)
            ib[v] = FpMatrix._wrap(e, p)
            pb[v] = FpMatrix._wrap(e.T.copy(), p)
        inc.append(Morphism(X, S, ib, check=False))
        proj.append(Morphism(S, X, pb, check=False))
    return DirectSum(S, (inc[0], inc[1]), (proj[0], proj[1]))


# ---------------------------------------------------------------------------
# endomorphism algebra, indecomposability, bricks, isomorphism
# ---------------------------------------------------------------------------


@dataclass
class EndAlgebra:
    """Endomorphism algebra with identity as basis element 0.

    ``mult_table[i, j]`` holds the coordinates of ``basis[i] o basis[j]``.
    """

    rep: Representation
    basis: list[Morphism]
    mult_table: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.basis)

    def identity_coords(self) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[0] = 1
        return e

    def element(self, coeffs) -> Morphism:
        vec = (np.asarray(coeffs, dtype=np.int64) @ np.vstack([b.flat() for b in self.basis])) % self.rep.p
        return Morphism(self.rep, self.rep, _unflatten(vec, self.rep, self.rep), check=False)

    def multiply(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("i,j,ijk->k", x, y, self.mult_table) % self.rep.p


def _basis_matrix(basis: list[Morphism]) -> np.ndarray:
    return np.vstack([b.flat() for b in basis])


def end_algebra(M: Representation) -> EndAlgebra:
    """Basis of End(M) (identity first) and its structure constants."""
    if M.is_zero():
        raise ValueError("End of the zero representation is not an algebra with 1")
    p = M.p
    basis = hom_basis(M, M)
    B = _basis_matrix(basis)
    ident = Morphism.identity(M)
    c = solve_left(B, ident.flat(), p)[0]
    j = int(np.flatnonzero(c)[0])
    basis = [ident] + basis[:j] + basis[j + 1 :]
    B = _basis_matrix(basis)
    d = len(basis)
    prods = np.vstack([(basis[i] @ basis[k]).flat() for i in range(d) for k in range(d)])
    T = solve_left(B, prods, p).reshape(d, d, d)
    return EndAlgebra(M, basis, T)


def _fitting_power(blocks: dict[str, np.ndarray], length: int, p: int) -> dict[str, np.ndarray]:
    out = dict(blocks)
    e = 1
    while e < length:
        out = {v: (b @ b) % p for v, b in out.items()}
        e *= 2
    return out


def _block_rank(b: np.ndarray, p: int) -> int:
    if b.size == 0:
        return 0
    return int(_accel.rref(b, p, inverse_table(p))[1].size)


def _random_splitting(M: Representation, basis: list[Morphism], trials: int, seed: int) -> bool:
    """Look for an endomorphism that is neither nilpotent nor invertible.

    By Fitting's lemma such an element splits M, so a hit certifies that M is
    decomposable.
    """
    if len(basis) <= 1 or trials <= 0:
        return False
    p = M.p
    rng = np.random.default_rng(seed)
    stack = {v: np.stack([b.blocks[v].data for b in basis]) for v in M.quiver.vertices}
    for _ in range(trials):
        c = rng.integers(0, p, size=len(basis))
        blocks = {v: np.tensordot(c, s, axes=1) % p for v, s in stack.items()}
        powered = _fitting_power(blocks, M.length, p)
        nilpotent = all(not b.any() for b in powered.values())
        if nilpotent:
            continue
        invertible = all(_block_rank(b, p) == b.shape[0] for b in powered.values())
        if not invertible:
            return True
    return False


def is_indecomposable(M: Representation, cap: int = DEFAULT_CAP, seed: int = DEFAULT_SEED) -> bool:
    """True iff End(M) has no idempotents besides 0 and 1.

    Decomposability is first sought with seeded random Fitting splittings
    (a hit is a certificate); a negative answer needs the exhaustive scan of
    End(M), which is refused above ``cap`` elements.
    """
    if M.is_zero():
        raise ValueError("the zero representation is neither decomposable nor indecomposable")
    basis = hom_basis(M, M)
    d = len(basis)
    if d == 1:
        return True
    if _random_splitting(M, basis, RANDOM_TRIALS, seed):
        return False
    if M.p**d > cap:
        raise CapExceededError(f"End has {M.p}^{d} elements, above the cap {cap}")
    E = end_algebra(M)
    idem, _ = _accel.scan_end(E.mult_table, E.identity_coords(), M.p, True, False)
    return idem < 0


def is_brick(M: Representation, cap: int = DEFAULT_CAP, seed: int = DEFAULT_SEED) -> bool:
    """True iff End(M) is a division ring (local with no nonzero nilpotents)."""
    if M.is_zero():
        raise ValueError("the zero representation is not a brick")
    basis = hom_basis(M, M)
    d = len(basis)
    if d == 1:
        return True
    if _random_splitting(M, basis, RANDOM_TRIALS, seed):
        return False
    if M.p**d > cap:
        raise CapExceededError(f"End has {M.p}^{d} elements, above the cap {cap}")
    E = end_algebra(M)
    idem, nil = _accel.scan_end(E.mult_table, E.identity_coords(), M.p, True, True)
    return idem < 0 and nil < 0


def find_idempotent(M: Representation, cap: int = DEFAULT_CAP) -> Morphism | None:
    """A nontrivial idempotent endomorphism, or None when M is indecomposable."""
    E = end_algebra(M)
    if E.dim == 1:
        return None
    if M.p**E.dim > cap:
        raise CapExceededError(f"End has {M.p}^{E.dim} elements, above the cap {cap}")
    idem, _ = _accel.scan_end(E.mult_table, E.identity_coords(), M.p, True, False)
    if idem < 0:
        return None
    return E.element(_accel.digits(idem, M.p, E.dim))


def pack_basis(basis: list[Morphism]) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Pack morphism blocks for :func:`grmeasure._accel.combination_search`."""
    M, N = basis[0].source, basis[0].target
    Q = M.quiver
    rows = np.array([N.dims[v] for v in Q.vertices], dtype=np.int64)
    cols = np.array([M.dims[v] for v in Q.vertices], dtype=np.int64)
    offs = np.concatenate([[0], np.cumsum(rows * cols)]).astype(np.int64)
    return _basis_matrix(basis), offs, rows, cols


def combine(basis: list[Morphism], coeffs) -> Morphism:
    M, N = basis[0].source, basis[0].target
    vec = (np.asarray(coeffs, dtype=np.int64) @ _basis_matrix(basis)) % M.p
    return Morphism(M, N, _unflatten(vec, M, N), check=False)


def search_morphism(
    basis: list[Morphism],
    mode: int,
    cap: int = DEFAULT_CAP,
    seed: int = DEFAULT_SEED,
    trials: int = RANDOM_TRIALS,
) -> Morphism | None:
    """Find a mono / epi / iso in the span of ``basis``.

    Seeded random trials first; then an exhaustive scan when ``p**d <= cap``;
    otherwise :class:`UndecidedError`.
    """
    if not basis:
        return None
    p = basis[0].source.p
    d = len(basis)
    check = {_accel.MODE_MONO: is_mono, _accel.MODE_EPI: is_epi, _accel.MODE_ISO: is_iso_morphism}[mode]
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = combine(basis, rng.integers(0, p, size=d))
        if check(f):
            return f
    if p**d > cap:
        raise UndecidedError(f"no witness in {trials} random trials (seed {seed}) and {p}^{d} > cap {cap}")
    B, offs, rows, cols = pack_basis(basis)
    idx, _ = _accel.combination_search(B, offs, rows, cols, p, inverse_table(p), mode, True)
    if idx < 0:
        return None
    return combine(basis, _accel.digits(idx, p, d))


def socle_dims(M: Representation) -> tuple[int, ...]:
    """dim Hom(S(v), M) for each vertex, in vertex order."""
    out = []
    for v in M.quiver.vertices:
        outs = M.quiver.outgoing(v)
        if not outs or M.dims[v] == 0:
            out.append(M.dims[v])
            continue
        stacked = FpMatrix._wrap(np.vstack([M.maps[a].data for a, _, _ in outs]), M.p)
        out.append(kernel_basis(stacked).dim)
    return tuple(out)


def top_dims(M: Representation) -> tuple[int, ...]:
    """dim Hom(M, S(v)) for each vertex, in vertex order."""
    rad = radical(M)
    return tuple(M.dims[v] - rad[v].dim for v in M.quiver.vertices)


def is_iso(
    M: Representation,
    N: Representation,
    cap: int = DEFAULT_CAP,
    seed: int = DEFAULT_SEED,
) -> Morphism | None:
    """An isomorphism M -> N, or None when there is none.

    Raises :class:`UndecidedError` rather than answering "not isomorphic"
    without proof.
    """
    _same_category(M, N)
    if M.dims != N.dims:
        return None
    if M.is_zero():
        return Morphism.zero(M, N)
    if socle_dims(M) != socle_dims(N) or top_dims(M) != top_dims(N):
        return None
    basis = hom_basis(M, N)
    if not basis:
        return None
    end_m = hom_dim(M, M)
    if len(basis) != end_m or hom_dim(N, N) != end_m:
        return None
    return search_morphism(basis, _accel.MODE_ISO, cap=cap, seed=seed)


# ---------------------------------------------------------------------------
# radical, Loewy structure, standard modules, quotients
# ---------------------------------------------------------------------------


def _push(M: Representation, parts: Mapping[str, Subspace]) -> dict[str, Subspace]:
    """At each vertex, the sum of images of the incoming arrows applied to ``parts``."""
    out = {}
    for v in M.quiver.vertices:
        acc = Subspace.zero(M.dims[v], M.p)
        for a, s, _ in M.quiver.incoming(v):
            acc = subspace_sum(acc, image_of(parts[s], M.maps[a]))
        out[v] = acc
    return out


def radical(M: Representation) -> dict[str, Subspace]:
    """rad M: at each vertex the sum of the images of all incoming arrows."""
    return _push(M, {v: Subspace.full(M.dims[v], M.p) for v in M.quiver.vertices})


def loewy_length(M: Representation) -> int:
    cur = {v: Subspace.full(M.dims[v], M.p) for v in M.quiver.vertices}
    n = 0
    while any(not s.is_zero() for s in cur.values()):
        cur = _push(M, cur)
        n += 1
    return n


def is_local(M: Representation) -> bool:
    """M/rad M is simple."""
    return sum(top_dims(M)) == 1


def paths_from(Q: Quiver, v: str) -> dict[str, list[tuple[str, ...]]]:
    """All paths starting at ``v`` grouped by end vertex (arrow-name tuples)."""
    out: dict[str, list[tuple[str, ...]]] = {w: [] for w in Q.vertices}
    stack = [(v, ())]
    while stack:
        w, path = stack.pop()
        out[w].append(path)
        for a, _, t in Q.outgoing(w):
            stack.append((t, path + (a,)))
    for w in out:
        out[w].sort(key=lambda q: (len(q), q))
    return out


def paths_to(Q: Quiver, v: str) -> dict[str, list[tuple[str, ...]]]:
    out: dict[str, list[tuple[str, ...]]] = {w: [] for w in Q.vertices}
    stack = [(v, ())]
    while stack:
        w, path = stack.pop()
        out[w].append(path)
        for a, s, _ in Q.incoming(w):
            stack.append((s, (a,) + path))
    for w in out:
        out[w].sort(key=lambda q: (len(q), q))
    return out


def simple_at(Q: Quiver, v: str, p: int) -> Representation:
    return Representation(Q, p, {w: int(w == v) for w in Q.vertices})


def projective_at(Q: Quiver, v: str, p: int) -> Representation:
    """P(v): basis at w = paths v -> w; an arrow appends itself to a path."""
    paths = paths_from(Q, v)
    index = {w: {q: i for i, q in enumerate(ps)} for w, ps in paths.items()}
    dims = {w: len(ps) for w, ps in paths.items()}
    maps = {}
    for a, s, t in Q.arrows:
        m = np.zeros((dims[t], dims[s]), dtype=np.int64)
        for q, j in index[s].items():
            m[index[t][q + (a,)], j] = 1
        maps[a] = m
    return Representation(Q, p, dims, maps)


def injective_at(Q: Quiver, v: str, p: int) -> Representation:
    """I(v): dual basis at w = paths w -> v; an arrow strips itself off the front."""
    paths = paths_to(Q, v)
    index = {w: {q: i for i, q in enumerate(ps)} for w, ps in paths.items()}
    dims = {w: len(ps) for w, ps in paths.items()}
    maps = {}
    for a, s, t in Q.arrows:
        m = np.zeros((dims[t], dims[s]), dtype=np.int64)
        for q, j in index[s].items():
            if q and q[0] == a:
                m[index[t][q[1:]], j] = 1
        maps[a] = m
    return Representation(Q, p, dims, maps)


def _parts_of(U) -> Mapping[str, Subspace]:
    return U.parts if hasattr(U, "parts") else U


def check_closed(M: Representation, parts: Mapping[str, Subspace]) -> None:
    for v in M.quiver.vertices:
        s = parts[v]
        if s.ambient_dim != M.dims[v] or s.p != M.p:
            raise InvalidSubrepError(f"part at {v} lives in the wrong space")
    for a, s, t in M.quiver.arrows:
        img = image_of(parts[s], M.maps[a])
        if not img.is_zero() and not parts[t].contains_vectors(img.basis.data):
            raise InvalidSubrepError(f"arrow {a} maps the part at {s} outside the part at {t}")


def quotient(M: Representation, U) -> tuple[Representation, Morphism]:
    """``M/U`` and the projection, using the non-pivot coordinates of each part."""
    parts = _parts_of(U)
    check_closed(M, parts)
    p = M.p
    comp = {v: parts[v].complement_columns() for v in M.quiver.vertices}
    dims = {v: len(comp[v]) for v in M.quiver.vertices}
    proj = {}
    for v in M.quiver.vertices:
        red = parts[v].reduce(np.eye(M.dims[v], dtype=np.int64))  # row i = class of e_i
        proj[v] = FpMatrix._wrap(np.ascontiguousarray(red[:, comp[v]].T) % p, p)
    maps = {}
    for a, s, t in M.quiver.arrows:
        if dims[s] == 0 or dims[t] == 0:
            maps[a] = FpMatrix.zeros(dims[t], dims[s], p)
            continue
        cols = M.maps[a].data[:, comp[s]]  # images of complement basis vectors
        red = parts[t].reduce(cols.T)
        maps[a] = FpMatrix._wrap(np.ascontiguousarray(red[:, comp[t]].T) % p, p)
    Qt = Representation(M.quiver, p, dims, maps)
    return Qt, Morphism(M, Qt, proj, check=False)


def is_connected_support(M: Representation) -> bool:
    """Cheap necessary condition for indecomposability."""
    support = [v for v in M.quiver.vertices if M.dims[v]]
    if not support:
        return False
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        w = stack.pop()
        for a, s, t in M.quiver.arrows:
            if M.maps[a].is_zero():
                continue
            for x, y in ((s, t), (t, s)):
                if x == w and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen == set(support)



def end_radical_basis(M: Representation, cap: int = DEFAULT_CAP) -> list[Morphism]:
    """Basis of the nilpotent endomorphisms of an indecomposable ``M``.

    End(M) is local, so these form its radical.  Found by listing every
    element (``p**dim End <= cap``), hence exact.
    """
    E = end_algebra(M)
    p, d = M.p, E.dim
    if d == 1:
        return []
    if p**d > cap:
        raise CapExceededError(f"End has {p}^{d} elements, above the cap {cap}")
    nsq = 0
    while (1 << nsq) < d + 1:
        nsq += 1
    idx = np.arange(p**d, dtype=np.int64)
    coeffs = _accel._digits_np(idx, p, d)
    cur = coeffs
    for _ in range(nsq):
        cur = _accel._alg_mul_np(cur, cur, E.mult_table, p)
    nil = coeffs[~cur.any(axis=1)]
    span = Subspace._from_array(nil % p, d, p)
    return [E.element(row) for row in span.basis.data]
