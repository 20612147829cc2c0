"""Finite commutative rings with identity, stored as dense operation tables.

Elements are the indices ``0 .. size-1``.  Every structured construction
(integers mod n, polynomial quotients over a prime field, products,
quotients by an ideal, raw JSON tables) materializes its full addition and
multiplication tables once; everything downstream works on the tables.
"""
from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np

DEFAULT_MAX_SIZE = 256
FULL_AXIOM_CHECK_LIMIT = 64
SAMPLED_TRIPLES = 100_000


class RingError(ValueError):
    """Malformed ring recipe, invalid table, or failed axiom check."""


class CapExceeded(RingError):
    """A configured size cap would be exceeded."""


class HomError(RingError):
    """A map between rings violates a homomorphism axiom."""


# --------------------------------------------------------------------------
# Ring recipes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Zmod:
    n: int

    def __str__(self) -> str:
        return f"zmod:{self.n}"


@dataclass(frozen=True)
class PolyQuot:
    """F_p[x]/(f) with ``coeffs`` listed low-to-high; f must be monic."""

    p: int
    coeffs: tuple

    def __str__(self) -> str:
        return f"polyquot:p={self.p};f={','.join(map(str, self.coeffs))}"


@dataclass(frozen=True)
class Product:
    left: "RingSpec"
    right: "RingSpec"

    def __str__(self) -> str:
        return f"prod:({self.left},{self.right})"


@dataclass(frozen=True)
class Quotient:
    base: "RingSpec"
    gens: tuple

    def __str__(self) -> str:
        return f"quot:({self.base})/[{','.join(map(str, self.gens))}]"


@dataclass(frozen=True)
class Table:
    path: str

    def __str__(self) -> str:
        return f"table:{self.path}"


RingSpec = Union[Zmod, PolyQuot, Product, Quotient, Table]

_PREFIXES = ("zmod:", "polyquot:", "prod:", "quot:", "table:")


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for i in range(start, len(text)):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth == 0:
                return i
    raise RingError(f"unbalanced parentheses in {text!r}")


def _split_pair(body: str) -> tuple[str, str]:
    # polyquot coefficient lists also contain commas, so the separator is the
    # first depth-0 comma that is followed by a recipe prefix
    depth = 0
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0 and body[i + 1:].startswith(_PREFIXES):
            return body[:i], body[i + 1:]
    raise RingError(f"product needs two ring specs: {body!r}")


def _int_list(text: str, what: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise RingError(f"bad integer list for {what}: {text!r}") from None


def parse_spec(text: str) -> RingSpec:
    """Parse the textual ring grammar (``zmod:12``, ``prod:(zmod:4,zmod:3)``...)."""
    text = text.strip()
    if text.startswith("zmod:"):
        try:
            return Zmod(int(text[5:]))
        except ValueError:
            raise RingError(f"bad modulus in {text!r}") from None
    if text.startswith("polyquot:"):
        m = re.fullmatch(r"polyquot:p=(\d+);f=([\d,\s]+)", text)
        if not m:
            raise RingError(f"malformed polyquot spec {text!r}")
        return PolyQuot(int(m.group(1)), _int_list(m.group(2), "f"))
    if text.startswith("prod:("):
        end = _matching_paren(text, 5)
        if end != len(text) - 1:
            raise RingError(f"trailing text in {text!r}")
        left, right = _split_pair(text[6:end])
        return Product(parse_spec(left), parse_spec(right))
    if text.startswith("quot:("):
        end = _matching_paren(text, 5)
        rest = text[end + 1:]
        m = re.fullmatch(r"/\[([\d,\s]*)\]", rest)
        if not m:
            raise RingError(f"malformed quotient generators in {text!r}")
        return Quotient(parse_spec(text[6:end]), _int_list(m.group(1), "generators"))
    if text.startswith("table:"):
        if not text[6:]:
            raise RingError("table spec needs a path")
        return Table(text[6:])
    raise RingError(f"unknown ring spec {text!r}")


# --------------------------------------------------------------------------
# The ring
# --------------------------------------------------------------------------


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.int64)
    out.setflags(write=False)
    return out


class FiniteRing:
    """A finite commutative ring with identity given by total tables.

    The tables are validated against the ring axioms at construction (a full
    triple loop up to 64 elements, 10**5 sampled triples above) and are
    read-only afterwards.  Derived data (power cycles, the ideal lattice,
    the spectrum) is cached on the instance.
    """

    def __init__(self, add, mul, zero: int, one: int, spec: RingSpec | None = None,
                 names: Sequence[str] | None = None, validate: bool = True):
        self.add = _frozen(add)
        self.mul = _frozen(mul)
        n = self.add.shape[0]
        if n < 1 or self.add.shape != (n, n) or self.mul.shape != (n, n):
            raise RingError("tables must be square and of equal size")
        if self.add.min() < 0 or self.add.max() >= n or self.mul.min() < 0 or self.mul.max() >= n:
            raise RingError("table entry out of range")
        if not (0 <= zero < n and 0 <= one < n):
            raise RingError("zero/one index out of range")
        self.size = n
        self.zero = int(zero)
        self.one = int(one)
        self.spec = spec
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n:
            raise RingError("one display name per element required")
        self._cache: dict = {}
        self._lock = threading.RLock()
        self._add_l = self.add.tolist()
        self._mul_l = self.mul.tolist()
        if validate:
            self._check_axioms()
        neg = np.empty(n, dtype=np.int64)
        rows, cols = np.nonzero(self.add == self.zero)
        neg[rows] = cols
        self.neg = _frozen(neg)

    def __repr__(self) -> str:
        label = str(self.spec) if self.spec is not None else "table"
        return f"FiniteRing({label}, size={self.size})"

    def __len__(self) -> int:
        return self.size

    def cached(self, key, factory: Callable):
        """Once-only memoization of derived data keyed on this ring."""
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    # -- axioms ------------------------------------------------------------

    def _check_axioms(self) -> None:
        A, M, n = self.add, self.mul, self.size
        z, o = self.zero, self.one
        if not (A == A.T).all():
            raise RingError("addition is not commutative")
        if not (M == M.T).all():
            raise RingError("multiplication is not commutative")
        idx = np.arange(n)
        if not (A[z] == idx).all():
            raise RingError("zero is not an additive identity")
        if not (M[o] == idx).all():
            raise RingError("one is not a multiplicative identity")
        if not ((A == z).sum(axis=1) == 1).all():
            raise RingError("some element has no additive inverse")
        if n > 1 and z == o:
            raise RingError("zero equals one in a nontrivial ring")
        if n <= FULL_AXIOM_CHECK_LIMIT:
            a = idx[:, None, None]
            b = idx[None, :, None]
            c = idx[None, None, :]
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
        ab = A[a, b]
        if not (A[ab, c] == A[a, A[b, c]]).all():
            raise RingError("addition is not associative")
        if not (M[M[a, b], c] == M[a, M[b, c]]).all():
            raise RingError("multiplication is not associative")
        if not (M[a, A[b, c]] == A[M[a, b], M[a, c]]).all():
            raise RingError("multiplication does not distribute over addition")

    # -- element arithmetic --------------------------------------------------

    def plus(self, a: int, b: int) -> int:
        return self._add_l[a][b]

    def times(self, a: int, b: int) -> int:
        return self._mul_l[a][b]

    def minus(self, a: int, b: int) -> int:
        return self._add_l[a][int(self.neg[b])]

    def one_minus(self) -> np.ndarray:
        """Vector ``x -> 1 - x``."""
        return self.cached("one_minus", lambda: _frozen(self.add[self.one, self.neg]))

    def _check_index(self, a: int) -> None:
        if not 0 <= a < self.size:
            raise IndexError(f"element index {a} out of range for ring of size {self.size}")

    def powers(self, a: int) -> tuple:
        """``(a^0, a^1, ..., a^(mu+c))`` where (mu, c) is the power cycle of a."""
        self._check_index(a)
        return self.cached(("powers", a), lambda: self._power_sequence(a))

    def _power_sequence(self, a: int) -> tuple:
        seen: dict[int, int] = {}
        seq = []
        x = self.one
        while x not in seen:
            seen[x] = len(seq)
            seq.append(x)
            x = self._mul_l[x][a]
        seq.append(x)
        return tuple(seq)

    def exponent_bound(self, a: int) -> int:
        """mu + c, the largest exponent any "exists n" search on a must try."""
        return max(1, len(self.powers(a)) - 1)


# --------------------------------------------------------------------------
# Element-level operations
# --------------------------------------------------------------------------


def elem_pow(R: FiniteRing, a: int, k: int) -> int:
    """a**k in R, with a**0 = one; large k is reduced along the power cycle."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    seq = R.powers(a)
    mu, c = power_cycle(R, a)
    if k < len(seq):
        return seq[k]
    return seq[mu + (k - mu) % c]


def power_cycle(R: FiniteRing, a: int) -> tuple[int, int]:
    """Smallest (mu, c), c >= 1, with a^(mu+c) = a^mu."""
    seq = R.powers(a)
    last = seq[-1]
    mu = seq.index(last)
    return mu, len(seq) - 1 - mu


def nilradical_set(R: FiniteRing) -> frozenset:
    def build():
        return frozenset(a for a in range(R.size) if R.zero in R.powers(a))
    return R.cached("nilradical", build)


def units_set(R: FiniteRing) -> frozenset:
    return R.cached("units", lambda: frozenset(np.nonzero((R.mul == R.one).any(axis=1))[0].tolist()))


def idempotents_set(R: FiniteRing) -> frozenset:
    idx = np.arange(R.size)
    return R.cached("idempotents", lambda: frozenset(np.nonzero(R.mul[idx, idx] == idx)[0].tolist()))


def ideal_closure(R: FiniteRing, gens: Iterable[int]) -> frozenset:
    """Members of the ideal generated by ``gens``: the sum of the principal ideals R*g."""
    members = np.zeros(R.size, dtype=bool)
    members[R.zero] = True
    for g in gens:
        R._check_index(int(g))
        principal = np.unique(R.mul[g])
        if members[principal].all():
            continue
        cur = np.nonzero(members)[0]
        members[np.unique(R.add[np.ix_(cur, principal)])] = True
    return frozenset(np.nonzero(members)[0].tolist())


# --------------------------------------------------------------------------
# Constructions
# --------------------------------------------------------------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise RingError("Zmod requires n >= 1")
    idx = np.arange(n)
    return FiniteRing((idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n,
                      0, 1 % n, spec=Zmod(n), names=[str(i) for i in range(n)])


def _poly_name(coeffs: Sequence[int]) -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
        else:
            mono = "x" if deg == 1 else f"x^{deg}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def polyquot(p: int, coeffs: Sequence[int]) -> FiniteRing:
    coeffs = tuple(int(c) for c in coeffs)
    if not _is_prime(p):
        raise RingError(f"PolyQuot needs a prime modulus, got {p}")
    d = len(coeffs) - 1
    if d < 1:
        raise RingError("PolyQuot needs degree >= 1")
    if coeffs[-1] % p != 1:
        raise RingError("PolyQuot modulus polynomial must be monic")
    f = [c % p for c in coeffs]
    n = p ** d
    vecs = [[(i // p ** k) % p for k in range(d)] for i in range(n)]
    weights = [p ** k for k in range(d)]

    def index(v):
        return sum(c * w for c, w in zip(v, weights))

    def mulmod(u, v):
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    prod[i + j] = (prod[i + j] + a * b) % p
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[top]
            if c:
                for k in range(d + 1):
                    prod[top - d + k] = (prod[top - d + k] - c * f[k]) % p
        return prod[:d]

    add = [[index([(a + b) % p for a, b in zip(u, v)]) for v in vecs] for u in vecs]
    mul = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            mul[i][j] = mul[j][i] = index(mulmod(vecs[i], vecs[j]))
    return FiniteRing(add, mul, 0, 1, spec=PolyQuot(p, coeffs), names=[_poly_name(v) for v in vecs])


def product(A: FiniteRing, B: FiniteRing, spec: RingSpec | None = None) -> FiniteRing:
    m = B.size
    ia = np.repeat(np.arange(A.size), m)
    ib = np.tile(np.arange(m), A.size)
    add = A.add[ia[:, None], ia[None, :]] * m + B.add[ib[:, None], ib[None, :]]
    mul = A.mul[ia[:, None], ia[None, :]] * m + B.mul[ib[:, None], ib[None, :]]
    names = [f"({A.names[a]},{B.names[b]})" for a, b in zip(ia, ib)]
    if spec is None and A.spec is not None and B.spec is not None:
        spec = Product(A.spec, B.spec)
    return FiniteRing(add, mul, A.zero * m + B.zero, A.one * m + B.one, spec=spec, names=names)


def quotient(R: FiniteRing, gens: Sequence[int], validate: bool = True) -> tuple[FiniteRing, "RingHom"]:
    """R/(gens) on least coset representatives, with its canonical projection."""
    gens = tuple(int(g) for g in gens)
    members = np.array(sorted(ideal_closure(R, gens)))
    coset_id = np.full(R.size, -1, dtype=np.int64)
    reps = []
    for a in range(R.size):
        if coset_id[a] < 0:
            coset_id[R.add[a, members]] = len(reps)
            reps.append(a)
    reps = np.array(reps)
    add = coset_id[R.add[np.ix_(reps, reps)]]
    mul = coset_id[R.mul[np.ix_(reps, reps)]]
    spec = Quotient(R.spec, gens) if R.spec is not None else None
    names = [f"{R.names[a]}+I" for a in reps]
    Q = FiniteRing(add, mul, int(coset_id[R.zero]), int(coset_id[R.one]), spec=spec,
                   names=names, validate=validate)
    return Q, RingHom(R, Q, coset_id, validate=False)


def load_table(path: str) -> FiniteRing:
    try:
        with open(path) as fh:
            data = json.load(fh)
        size = int(data["size"])
        add, mul = data["add"], data["mul"]
        zero, one = int(data["zero"]), int(data["one"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise RingError(f"cannot read ring table {path!r}: {exc}") from None
    if len(add) != size or len(mul) != size:
        raise RingError("table size does not match declared size")
    return FiniteRing(add, mul, zero, one, spec=Table(path))


def _predicted_size(spec: RingSpec) -> int | None:
    if isinstance(spec, Zmod):
        return spec.n
    if isinstance(spec, PolyQuot):
        return spec.p ** (len(spec.coeffs) - 1) if len(spec.coeffs) > 1 else None
    if isinstance(spec, Product):
        a, b = _predicted_size(spec.left), _predicted_size(spec.right)
        return a * b if a is not None and b is not None else None
    return None


def build_ring(spec: RingSpec | str, max_size: int = DEFAULT_MAX_SIZE) -> FiniteRing:
    """Materialize a ring recipe, enforcing the size cap before building tables."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    predicted = _predicted_size(spec)
    if predicted is not None and predicted > max_size:
        raise CapExceeded(f"{spec} has {predicted} elements, cap is {max_size}")
    if isinstance(spec, Zmod):
        R = zmod(spec.n)
    elif isinstance(spec, PolyQuot):
        R = polyquot(spec.p, spec.coeffs)
    elif isinstance(spec, Product):
        R = product(build_ring(spec.left, max_size), build_ring(spec.right, max_size), spec)
    elif isinstance(spec, Quotient):
        base = build_ring(spec.base, max_size)
        for g in spec.gens:
            if not 0 <= g < base.size:
                raise RingError(f"quotient generator {g} is not an element of {spec.base}")
        R = quotient(base, spec.gens)[0]
    elif isinstance(spec, Table):
        R = load_table(spec.path)
    else:
        raise RingError(f"not a ring spec: {spec!r}")
    if R.size > max_size:
        raise CapExceeded(f"{spec} has {R.size} elements, cap is {max_size}")
    return R


def ring_to_json(R: FiniteRing) -> dict:
    return {"size": R.size, "add": R.add.tolist(), "mul": R.mul.tolist(),
            "zero": R.zero, "one": R.one}


def same_tables(R: FiniteRing, S: FiniteRing) -> bool:
    return (R.size == S.size and R.zero == S.zero and R.one == S.one
            and np.array_equal(R.add, S.add) and np.array_equal(R.mul, S.mul))


# --------------------------------------------------------------------------
# Homomorphisms
# --------------------------------------------------------------------------


class RingHom:
    """A unital ring homomorphism stored as an index table."""

    def __init__(self, domain: FiniteRing, codomain: FiniteRing, table, validate: bool = True,
                 label: str = ""):
        self.domain = domain
        self.codomain = codomain
        self.map = _frozen(table)
        self.label = label
        if self.map.shape != (domain.size,):
            raise HomError("map table must be total on the domain")
        if validate:
            self._check()

    def _check(self) -> None:
        D, C, f = self.domain, self.codomain, self.map
        if f.min() < 0 or f.max() >= C.size:
            raise HomError("map value outside the codomain")
        if f[D.zero] != C.zero:
            raise HomError(f"map(0) = {f[D.zero]} is not zero")
        if f[D.one] != C.one:
            raise HomError(f"map(1) = {f[D.one]} is not one")
        for table_d, table_c, op in ((D.add, C.add, "+"), (D.mul, C.mul, "*")):
            bad = np.argwhere(f[table_d] != table_c[f[:, None], f[None, :]])
            if len(bad):
                a, b = bad[0]
                raise HomError(f"map({a}{op}{b}) != map({a}){op}map({b})")

    def __call__(self, a: int) -> int:
        return int(self.map[a])

    def image(self, elements: Iterable[int]) -> frozenset:
        return frozenset(self.map[list(elements)].tolist()) if elements else frozenset()

    def preimage(self, elements: Iterable[int]) -> frozenset:
        mask = np.zeros(self.codomain.size, dtype=bool)
        mask[list(elements)] = True
        return frozenset(np.nonzero(mask[self.map])[0].tolist())

    def is_bijective(self) -> bool:
        return self.domain.size == self.codomain.size and len(np.unique(self.map)) == self.domain.size

    def __repr__(self) -> str:
        return f"RingHom({self.label or 'map'}: {self.domain!r} -> {self.codomain!r})"


def build_hom(domain: FiniteRing, codomain: FiniteRing, table, label: str = "") -> RingHom:
    return RingHom(domain, codomain, table, label=label)


def identity_hom(R: FiniteRing) -> RingHom:
    return RingHom(R, R, np.arange(R.size), label="id")


def quotient_projection(R: FiniteRing, gens: Sequence[int]) -> RingHom:
    Q, proj = quotient(R, gens)
    return RingHom(R, Q, proj.map, label=f"R->R/({','.join(map(str, gens))})")


def product_projections(P: FiniteRing, A: FiniteRing, B: FiniteRing) -> tuple[RingHom, RingHom]:
    """The two coordinate projections of ``P = A x B`` built by :func:`product`."""
    if P.size != A.size * B.size:
        raise HomError("P is not the product of A and B")
    idx = np.arange(P.size)
    return (RingHom(P, A, idx // B.size, label="pr1"), RingHom(P, B, idx % B.size, label="pr2"))


def crt_map(n: int, m: int, k: int) -> RingHom:
    """Z/n -> Z/m x Z/k, a -> (a mod m, a mod k)."""
    src = zmod(n)
    dst = product(zmod(m), zmod(k))
    idx = np.arange(n)
    return RingHom(src, dst, (idx % m) * k + idx % k, label="crt")
