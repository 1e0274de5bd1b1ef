"""Exact scalar arithmetic over a prime field F_p or over the rationals.

Scalars are plain Python values in canonical form: residues in [0, p) for a
prime field, `fractions.Fraction` (auto-reduced, positive denominator) for
the rationals.  All arithmetic goes through a Field object, so equality of
scalars is plain equality of representations.
"""

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, NoSuchRoot

WORD_LIMIT = 1 << 31


def is_prime(p):
    """Trial division; fine for p < 2^31."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of the two concrete fields."""

    kind = None

    def assert_same(self, other):
        if self != other:
            raise FieldMismatch("cannot mix %r and %r" % (self, other))

    def arith(self, op, a, b=None):
        """Dispatcher matching the operation table: add|sub|mul|div|neg|inv."""
        a = self.canon(a)
        if op in ("neg", "inv"):
            return self.neg(a) if op == "neg" else self.inv(a)
        b = self.canon(b)
        if op == "add":
            return self.add(a, b)
        if op == "sub":
            return self.sub(a, b)
        if op == "mul":
            return self.mul(a, b)
        if op == "div":
            return self.div(a, b)
        raise ValueError("unknown operation %r" % op)

    # subclasses: canon, parse, to_str, add, sub, mul, neg, div, inv,
    # is_zero, zero, one, from_int, size, spec, root_of_unity, sample


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError("modulus %r is not a prime" % (p,))
        if p >= WORD_LIMIT:
            raise ValueError("modulus %d too large (must be < 2^31)" % p)
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def __repr__(self):
        return "F_%d" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def spec(self):
        return {"kind": "prime", "p": self.p}

    @property
    def size(self):
        return self.p

    def canon(self, x):
        return int(x) % self.p

    def parse(self, s):
        return int(s, 10) % self.p

    def to_str(self, v):
        return str(v)

    def from_int(self, n):
        return n % self.p

    def is_zero(self, v):
        return v == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of 0 in %r" % self)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def root_of_unity(self, n):
        """Smallest residue that is a primitive n-th root of unity."""
        if n == 1:
            return self.one
        if (self.p - 1) % n != 0:
            raise NoSuchRoot("%r has no primitive %d-th root of unity" % (self, n))
        proper = [n // q for q in range(2, n + 1) if n % q == 0]
        for r in range(2, self.p):
            if pow(r, n, self.p) != 1:
                continue
            if all(pow(r, m, self.p) != 1 for m in proper):
                return r
        raise NoSuchRoot("no primitive %d-th root found in %r" % (n, self))

    def sample(self, rng):
        return rng.below(self.p)


class RationalField(Field):
    kind = "rational"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def spec(self):
        return {"kind": "rational"}

    @property
    def size(self):
        return None

    def canon(self, x):
        return Fraction(x)

    def parse(self, s):
        return Fraction(s)

    def to_str(self, v):
        return str(v)

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, v):
        return v == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return Fraction(a) / b

    def root_of_unity(self, n):
        if n == 1:
            return Fraction(1)
        if n == 2:
            return Fraction(-1)
        raise NoSuchRoot("Q contains no primitive %d-th root of unity" % n)

    def sample(self, rng):
        # small integers keep numerators under control in long products
        return Fraction(rng.below(7)) - 3


def field_from_spec(spec):
    kind = spec.get("kind")
    if kind == "prime":
        return PrimeField(spec["p"])
    if kind == "rational":
        return RationalField()
    raise ValueError("unknown field kind %r" % (kind,))
