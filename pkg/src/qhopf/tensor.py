"""Sparse multilinear algebra over tensor powers of a finite-dimensional
algebra.

A tensor of arity k over an algebra of dimension n is a map from k-tuples of
basis indices to nonzero scalars.  Componentwise products use the algebra's
structure constants; leg maps apply a linear map, the counit or the coproduct
to individual tensor factors.
"""

from itertools import product as iproduct

from . import linalg
from .errors import ArityMismatch, NotInvertible, ShapeMismatch


class SparseTensor:
    __slots__ = ("field", "arity", "dim", "entries")

    def __init__(self, field, arity, dim, entries):
        # internal constructor; use make() for unchecked input
        self.field = field
        self.arity = arity
        self.dim = dim
        self.entries = entries

    @staticmethod
    def make(field, arity, dim, items):
        """Build a tensor from an iterable/dict of (key, scalar), dropping
        zeros and validating index ranges."""
        entries = {}
        pairs = items.items() if isinstance(items, dict) else items
        for key, val in pairs:
            key = tuple(key)
            if len(key) != arity:
                raise ShapeMismatch("key %r has arity %d, expected %d"
                                    % (key, len(key), arity))
            if any(i < 0 or i >= dim for i in key):
                raise ShapeMismatch("index out of range in %r (dim %d)" % (key, dim))
            val = field.canon(val)
            if not field.is_zero(val):
                entries[key] = val
        return SparseTensor(field, arity, dim, entries)

    def is_zero(self):
        return not self.entries

    def get(self, key):
        return self.entries.get(tuple(key), self.field.zero)

    def sorted_items(self):
        return sorted(self.entries.items())

    def to_json(self):
        f = self.field
        return {"arity": self.arity,
                "entries": [[list(k), f.to_str(v)] for k, v in self.sorted_items()]}

    def __eq__(self, other):
        return (isinstance(other, SparseTensor) and self.field == other.field
                and self.arity == other.arity and self.dim == other.dim
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.arity, self.dim, tuple(self.sorted_items())))

    def __repr__(self):
        items = ", ".join("%r: %s" % (k, self.field.to_str(v))
                          for k, v in list(self.sorted_items())[:6])
        more = "" if len(self.entries) <= 6 else ", ... (%d entries)" % len(self.entries)
        return "SparseTensor(arity=%d, dim=%d, {%s%s})" % (self.arity, self.dim, items, more)


def vector(field, dim, coeffs):
    """Arity-1 tensor from {index: scalar}."""
    return SparseTensor.make(field, 1, dim, {(i,): c for i, c in coeffs.items()})


def basis_vector(field, dim, i):
    return SparseTensor(field, 1, dim, {(i,): field.one})


def eq_witness(a, b):
    """None when equal, else (key, lhs_str, rhs_str) at the first differing
    multi-index in lexicographic order."""
    diffs = diff_entries(a, b, limit=1)
    return diffs[0] if diffs else None


def diff_entries(a, b, limit=None):
    """Differing coordinates in lexicographic order, up to `limit`."""
    if a.field != b.field or a.arity != b.arity or a.dim != b.dim:
        return [((), "shape %r" % ((a.arity, a.dim),),
                 "shape %r" % ((b.arity, b.dim),))]
    f = a.field
    out = []
    for key in sorted(set(a.entries) | set(b.entries)):
        va = a.entries.get(key, f.zero)
        vb = b.entries.get(key, f.zero)
        if va != vb:
            out.append((key, f.to_str(va), f.to_str(vb)))
            if limit is not None and len(out) >= limit:
                break
    return out


class Algebra:
    """Associative unital algebra: structure constants per basis pair, as a
    sparse list of (basis index, scalar)."""

    __slots__ = ("field", "dim", "struct", "unit_coeffs", "_units", "mono")

    def __init__(self, field, dim, struct, unit_coeffs):
        self.field = field
        self.dim = dim
        self.struct = struct
        self.unit_coeffs = {i: field.canon(c) for i, c in unit_coeffs.items()
                            if not field.is_zero(field.canon(c))}
        self._units = {}
        # group-like bases have at most one product term per pair; that case
        # gets a dedicated fast path in mult()
        if all(len(terms) <= 1 for terms in struct.values()):
            self.mono = {ij: terms[0] for ij, terms in struct.items() if terms}
        else:
            self.mono = None

    @property
    def unit(self):
        return self.unit_tensor(1)

    def unit_tensor(self, k):
        if k not in self._units:
            f = self.field
            entries = {(): f.one}
            for _ in range(k):
                entries = {key + (i,): f.mul(c, ci)
                           for key, c in entries.items()
                           for i, ci in self.unit_coeffs.items()}
            self._units[k] = SparseTensor(f, k, self.dim, entries)
        return self._units[k]

    def vec_mul(self, a, b):
        """Product of two elements given as {index: scalar} dicts."""
        f = self.field
        mono = self.mono
        if mono is not None and f.kind == "prime":
            p = f.p
            get = mono.get
            out = {}
            for i, ca in a.items():
                for j, cb in b.items():
                    t = get((i, j))
                    if t is None:
                        continue
                    v = (out.get(t[0], 0) + ca * cb * t[1]) % p
                    if v:
                        out[t[0]] = v
                    else:
                        out.pop(t[0], None)
            return out
        struct = self.struct
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                terms = struct.get((i, j))
                if not terms:
                    continue
                cab = f.mul(ca, cb)
                for k, ck in terms:
                    v = f.add(out.get(k, f.zero), f.mul(cab, ck))
                    if f.is_zero(v):
                        out.pop(k, None)
                    else:
                        out[k] = v
        return out

    def basis_product(self, i, j):
        return self.struct.get((i, j), ())


def mult(t1, t2, alg):
    """Componentwise product in the k-th tensor power of the algebra."""
    if t1.arity != t2.arity:
        raise ArityMismatch("arity %d vs %d" % (t1.arity, t2.arity))
    if t1.dim != t2.dim:
        raise ShapeMismatch("dim %d vs %d" % (t1.dim, t2.dim))
    t1.field.assert_same(t2.field)
    f = alg.field
    if alg.mono is not None:
        if f.kind == "prime":
            return _mult_mono_prime(t1, t2, alg)
        return _mult_mono(t1, t2, alg)
    struct = alg.struct
    k = t1.arity
    acc = {}
    for k1, c1 in t1.entries.items():
        for k2, c2 in t2.entries.items():
            lists = []
            dead = False
            for l in range(k):
                terms = struct.get((k1[l], k2[l]))
                if not terms:
                    dead = True
                    break
                lists.append(terms)
            if dead:
                continue
            c12 = f.mul(c1, c2)
            for picks in iproduct(*lists):
                c = c12
                for _, cv in picks:
                    c = f.mul(c, cv)
                key = tuple(p[0] for p in picks)
                v = f.add(acc.get(key, f.zero), c)
                if f.is_zero(v):
                    acc.pop(key, None)
                else:
                    acc[key] = v
    return SparseTensor(f, k, t1.dim, acc)


def _mult_mono_prime(t1, t2, alg):
    p = alg.field.p
    mono = alg.mono
    rng = range(t1.arity)
    acc = {}
    get_term = mono.get
    for k1, c1 in t1.entries.items():
        for k2, c2 in t2.entries.items():
            c = c1 * c2
            key = []
            push = key.append
            for l in rng:
                term = get_term((k1[l], k2[l]))
                if term is None:
                    break
                push(term[0])
                c = c * term[1] % p
            else:
                kk = tuple(key)
                acc[kk] = (acc.get(kk, 0) + c) % p
    return SparseTensor(alg.field, t1.arity, t1.dim,
                        {kk: v for kk, v in acc.items() if v})


def _mult_mono(t1, t2, alg):
    f = alg.field
    mono = alg.mono
    rng = range(t1.arity)
    acc = {}
    mul, add_, zero = f.mul, f.add, f.zero
    for k1, c1 in t1.entries.items():
        for k2, c2 in t2.entries.items():
            c = mul(c1, c2)
            key = []
            for l in rng:
                term = mono.get((k1[l], k2[l]))
                if term is None:
                    break
                key.append(term[0])
                c = mul(c, term[1])
            else:
                kk = tuple(key)
                acc[kk] = add_(acc.get(kk, zero), c)
    return SparseTensor(f, t1.arity, t1.dim,
                        {kk: v for kk, v in acc.items() if not f.is_zero(v)})


def mul_all(alg, *tensors):
    out = tensors[0]
    for t in tensors[1:]:
        out = mult(out, t, alg)
    return out


# ----- leg maps -------------------------------------------------------------

class Leg:
    """Per-leg action for apply_legs.  width = number of output legs."""
    __slots__ = ("kind", "rows", "width")

    def __init__(self, kind, rows, width):
        self.kind = kind
        self.rows = rows
        self.width = width


LEG_ID = Leg("id", None, 1)


def lin_leg(rows):
    """rows: {i: ((j, scalar), ...)} for a linear map sending e_i to sum."""
    return Leg("lin", rows, 1)


def counit_leg(values):
    """values: sequence of scalars; drops the leg, scaling by values[i]."""
    return Leg("eps", values, 0)


def coprod_leg(rows):
    """rows: {i: (((j, k), scalar), ...)}; expands one leg into two."""
    return Leg("cop", rows, 2)


def apply_legs(t, legs):
    if len(legs) != t.arity:
        raise ShapeMismatch("got %d leg maps for arity %d" % (len(legs), t.arity))
    f = t.field
    out_arity = sum(l.width for l in legs)
    acc = {}
    one = f.one
    for key, c in t.entries.items():
        parts = []
        dead = False
        for idx, leg in zip(key, legs):
            if leg.kind == "id":
                parts.append((((idx,), one),))
            elif leg.kind == "lin":
                exp = leg.rows.get(idx, ())
                if not exp:
                    dead = True
                    break
                parts.append(tuple(((j,), cv) for j, cv in exp))
            elif leg.kind == "eps":
                ev = leg.rows[idx]
                if f.is_zero(ev):
                    dead = True
                    break
                parts.append((((), ev),))
            else:  # cop
                exp = leg.rows.get(idx, ())
                if not exp:
                    dead = True
                    break
                parts.append(tuple((jk, cv) for jk, cv in exp))
        if dead:
            continue
        for picks in iproduct(*parts):
            cc = c
            kk = ()
            for sub, cv in picks:
                kk += sub
                cc = f.mul(cc, cv)
            v = f.add(acc.get(kk, f.zero), cc)
            if f.is_zero(v):
                acc.pop(kk, None)
            else:
                acc[kk] = v
    return SparseTensor(f, out_arity, t.dim, acc)


# ----- index plumbing -------------------------------------------------------

def flip(t, i, j):
    if i == j or i >= t.arity or j >= t.arity or i < 0 or j < 0:
        raise ShapeMismatch("cannot flip legs %d, %d of arity-%d tensor" % (i, j, t.arity))
    out = {}
    for key, c in t.entries.items():
        k = list(key)
        k[i], k[j] = k[j], k[i]
        out[tuple(k)] = c
    return SparseTensor(t.field, t.arity, t.dim, out)


def permute_legs(t, perm):
    """perm[i] = source position of output leg i."""
    if sorted(perm) != list(range(t.arity)):
        raise ShapeMismatch("bad permutation %r for arity %d" % (perm, t.arity))
    out = {tuple(key[p] for p in perm): c for key, c in t.entries.items()}
    return SparseTensor(t.field, t.arity, t.dim, out)


def concat(t1, t2):
    """Outer product: legs of t1 followed by legs of t2."""
    t1.field.assert_same(t2.field)
    if t1.dim != t2.dim:
        raise ShapeMismatch("dim %d vs %d" % (t1.dim, t2.dim))
    f = t1.field
    out = {}
    for k1, c1 in t1.entries.items():
        for k2, c2 in t2.entries.items():
            out[k1 + k2] = f.mul(c1, c2)
    return SparseTensor(f, t1.arity + t2.arity, t1.dim, out)


def insert_leg(t, pos, vec):
    """Insert an arity-1 tensor as a new leg at position pos."""
    if vec.arity != 1:
        raise ArityMismatch("inserted leg must have arity 1")
    f = t.field
    out = {}
    for key, c in t.entries.items():
        for (i,), cv in vec.entries.items():
            out[key[:pos] + (i,) + key[pos:]] = f.mul(c, cv)
    return SparseTensor(f, t.arity + 1, t.dim, out)


def mul_adjacent(t, pos, alg):
    """Merge legs pos and pos+1 by multiplying them in the algebra."""
    if pos < 0 or pos + 1 >= t.arity:
        raise ShapeMismatch("cannot merge legs %d,%d of arity %d" % (pos, pos + 1, t.arity))
    f = alg.field
    struct = alg.struct
    acc = {}
    for key, c in t.entries.items():
        terms = struct.get((key[pos], key[pos + 1]))
        if not terms:
            continue
        head, tail = key[:pos], key[pos + 2:]
        for k, ck in terms:
            kk = head + (k,) + tail
            v = f.add(acc.get(kk, f.zero), f.mul(c, ck))
            if f.is_zero(v):
                acc.pop(kk, None)
            else:
                acc[kk] = v
    return SparseTensor(f, t.arity - 1, t.dim, acc)


def scale(t, c):
    f = t.field
    c = f.canon(c)
    if f.is_zero(c):
        return SparseTensor(f, t.arity, t.dim, {})
    return SparseTensor(f, t.arity, t.dim,
                        {k: f.mul(c, v) for k, v in t.entries.items()})


def add(t1, t2):
    f = t1.field
    out = dict(t1.entries)
    for k, v in t2.entries.items():
        s = f.add(out.get(k, f.zero), v)
        if f.is_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return SparseTensor(f, t1.arity, t1.dim, out)


def sub(t1, t2):
    return add(t1, scale(t2, t1.field.neg(t1.field.one)))


# ----- inversion ------------------------------------------------------------

def _flatten(key, dim):
    x = 0
    for i in key:
        x = x * dim + i
    return x


def invert(t, alg):
    """Two-sided inverse in the k-th tensor power, by solving the linear
    system of left multiplication against the unit; both product checks run
    before returning."""
    f = alg.field
    k = t.arity
    dim = t.dim
    if t.is_zero():
        raise NotInvertible("the zero tensor has no inverse")
    m = dim ** k
    struct = alg.struct
    cols = {}
    for jkey in iproduct(range(dim), repeat=k):
        col = {}
        jflat = _flatten(jkey, dim)
        for key, c in t.entries.items():
            lists = []
            dead = False
            for l in range(k):
                terms = struct.get((key[l], jkey[l]))
                if not terms:
                    dead = True
                    break
                lists.append(terms)
            if dead:
                continue
            for picks in iproduct(*lists):
                cc = c
                for _, cv in picks:
                    cc = f.mul(cc, cv)
                r = _flatten(tuple(p[0] for p in picks), dim)
                v = f.add(col.get(r, f.zero), cc)
                if f.is_zero(v):
                    col.pop(r, None)
                else:
                    col[r] = v
        if col:
            cols[jflat] = col
    rhs = {_flatten(key, dim): c for key, c in alg.unit_tensor(k).entries.items()}
    x = linalg.solve_sparse(f, m, cols, rhs)
    if x is None:
        raise NotInvertible("left-multiplication system is singular")

    def unflatten(r):
        key = []
        for _ in range(k):
            key.append(r % dim)
            r //= dim
        return tuple(reversed(key))

    inv = SparseTensor(f, k, dim, {unflatten(r): v for r, v in x.items()})
    unit = alg.unit_tensor(k)
    if mult(t, inv, alg) != unit or mult(inv, t, alg) != unit:
        raise NotInvertible("candidate inverse failed the product check")
    return inv


# ----- declarative sums of decomposable expressions -------------------------

def hom_sum(alg, unary, factors, out):
    """Evaluate a sum over the entries of one or more decomposition tensors.

    factors: list of (tensor, names) pairs.  Each entry of each tensor binds
    its indices to the given leg names; the sum ranges over the cartesian
    product of the supports.

    out: one atom list per output leg.  Atoms are evaluated left to right and
    multiplied in the algebra.  An atom is a leg name (a basis element), an
    arity-1 SparseTensor constant, or (map_name, [atoms]) applying one of the
    `unary` linear maps to the product of the sub-atoms.
    """
    f = alg.field
    entry_lists = [list(t.entries.items()) for t, _ in factors]
    name_lists = [names for _, names in factors]
    plain = all(isinstance(a, str) for leg in out for a in leg)
    if plain and alg.mono is not None and f.kind == "prime":
        return _hom_sum_plain_prime(alg, entry_lists, name_lists, out)
    acc = {}
    one = f.one
    for combo in iproduct(*entry_lists):
        coeff = one
        env = {}
        for (key, c), names in zip(combo, name_lists):
            coeff = f.mul(coeff, c)
            for nm, idx in zip(names, key):
                env[nm] = idx
        legs = []
        dead = False
        for atoms in out:
            v = _eval_atoms(alg, unary, env, atoms)
            if not v:
                dead = True
                break
            legs.append(v)
        if dead:
            continue
        for picks in iproduct(*[tuple(v.items()) for v in legs]):
            c = coeff
            for _, cv in picks:
                c = f.mul(c, cv)
            key = tuple(i for i, _ in picks)
            s = f.add(acc.get(key, f.zero), c)
            if f.is_zero(s):
                acc.pop(key, None)
            else:
                acc[key] = s
    return SparseTensor(f, len(out), alg.dim, acc)


def _hom_sum_plain_prime(alg, entry_lists, name_lists, out):
    # every atom is a leg name and every basis product is a monomial, so the
    # whole contraction reduces to index chasing with running coefficients
    p = alg.field.p
    get = alg.mono.get
    pos = {}
    for fi, names in enumerate(name_lists):
        for li, nm in enumerate(names):
            pos[nm] = (fi, li)
    legs_compiled = [[pos[a] for a in leg] for leg in out]
    acc = {}
    for combo in iproduct(*entry_lists):
        c = 1
        for _, cv in combo:
            c = c * cv % p
        outkey = []
        dead = False
        for leg in legs_compiled:
            fi, li = leg[0]
            cur = combo[fi][0][li]
            for fj, lj in leg[1:]:
                t = get((cur, combo[fj][0][lj]))
                if t is None:
                    dead = True
                    break
                cur = t[0]
                c = c * t[1] % p
            if dead:
                break
            outkey.append(cur)
        if dead:
            continue
        kk = tuple(outkey)
        acc[kk] = (acc.get(kk, 0) + c) % p
    return SparseTensor(alg.field, len(out), alg.dim,
                        {k: v for k, v in acc.items() if v})


def _eval_atoms(alg, unary, env, atoms):
    f = alg.field
    v = None
    for a in atoms:
        if isinstance(a, str):
            w = {env[a]: f.one}
        elif isinstance(a, SparseTensor):
            w = {i: c for (i,), c in a.entries.items()}
        else:
            name, sub = a
            u = _eval_atoms(alg, unary, env, sub)
            rows = unary[name]
            w = {}
            for i, ci in u.items():
                for j, cj in rows.get(i, ()):
                    s = f.add(w.get(j, f.zero), f.mul(ci, cj))
                    if f.is_zero(s):
                        w.pop(j, None)
                    else:
                        w[j] = s
        v = dict(w) if v is None else alg.vec_mul(v, w)
        if not v:
            return {}
    return v
