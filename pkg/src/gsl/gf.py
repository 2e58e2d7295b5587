"""Arithmetic in small finite fields GF(p^m), p in {2, 3, 5}, m <= 8.

Scalars are plain Python ints in range(q): the code of an element is the
base-p encoding of its coefficient vector with respect to the power basis
1, g, g^2, ... of the residue class g of x.  Code 0 is zero, code 1 is one,
and for m >= 2 code p is the generator g itself.

All arithmetic is exact.  For q <= 256 the multiplication and inversion
tables are precomputed at construction time; larger fields fall back to
polynomial arithmetic per operation.

Polynomials over the prime field appear only internally (moduli and the
irreducibility test) and are stored as little-endian coefficient tuples.
"""

from .errors import DivideByZero, ParseError, ReducibleModulus, UnsupportedSize

SUPPORTED_PRIMES = (2, 3, 5)
MAX_DEGREE = 8
TABLE_LIMIT = 256

# Conventional moduli, pinned so that scalar codes stay stable across
# versions.  Everything else is found by the deterministic search below,
# which returns the irreducible monic polynomial with the smallest code.
DEFAULT_MODULI = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (0, 1),
    (5, 1): (0, 1),
}


def _poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a, mod, p):
    """Remainder of a modulo a monic polynomial, little-endian tuples."""
    a = list(a)
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c == 0:
            continue
        a[i] = 0
        for j in range(d):
            a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    return _poly_trim(a[:d])


def _poly_irreducible_factor(mod, p):
    """Return a proper monic factor of mod, or None if mod is irreducible.

    Trial division by every monic polynomial of degree 1 .. deg/2 is cheap
    at the sizes we support (deg <= 8, p <= 5) and needs no factoring
    theory, so the result is easy to audit.
    """
    deg = len(mod) - 1
    if deg <= 1:
        return None
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            cand = _digits(code, p, d) + (1,)
            if not _poly_rem(mod, cand, p):
                return cand
    return None


def _search_modulus(p, m):
    """Smallest-code irreducible monic polynomial of degree m over GF(p)."""
    for code in range(p ** m):
        cand = _digits(code, p, m) + (1,)
        if _poly_irreducible_factor(cand, p) is None:
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _digits(code, p, m):
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return tuple(out)


def _encode(coeffs, p):
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


class Field(object):
    """The field GF(p^m) with elements coded as ints in range(p**m)."""

    def __init__(self, p, m=1, modulus=None):
        if p not in SUPPORTED_PRIMES:
            raise UnsupportedSize(f"characteristic {p} not in {SUPPORTED_PRIMES}")
        if not 1 <= m <= MAX_DEGREE:
            raise UnsupportedSize(f"degree {m} not in 1..{MAX_DEGREE}")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, m)) or _search_modulus(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[m] != 1:
            raise UnsupportedSize(f"modulus must be monic of degree {m}: {modulus}")
        factor = _poly_irreducible_factor(modulus, p)
        if factor is not None:
            raise ReducibleModulus(modulus, factor)
        self.modulus = modulus
        self.gen = _encode(_poly_rem((0, 1), modulus, p), p)
        self._mul_table = None
        self._inv_table = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self):
        q, p, m = self.q, self.p, self.m
        vecs = [_digits(a, p, m) for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                c = _encode(_poly_rem(_poly_mul(vecs[a], vecs[b], p),
                                      self.modulus, p), p)
                mul[a][b] = c
                mul[b][a] = c
        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            for b in range(1, q):
                if row[b] == 1:
                    inv[a] = b
                    break
        self._mul_table = mul
        self._inv_table = inv

    # -- basic arithmetic ------------------------------------------------

    def add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        code, shift = 0, 1
        while a or b:
            code += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return code

    def neg(self, a):
        p = self.p
        if p == 2:
            return a
        code, shift = 0, 1
        while a:
            code += (-a % p) * shift
            a //= p
            shift *= p
        return code

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        p, m = self.p, self.m
        prod = _poly_mul(_digits(a, p, m), _digits(b, p, m), p)
        return _encode(_poly_rem(prod, self.modulus, p), p)

    def inv(self, a):
        if a == 0:
            raise DivideByZero("inverse of zero")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivideByZero("zero to a negative power")
        e %= self.q - 1
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def frob(self, a, r=1):
        """The Frobenius power a -> a^(p^r); r may be any integer mod m."""
        return self.pow(a, self.p ** (r % self.m))

    # -- enumeration and diagnostics -------------------------------------

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def scalar_from_int(self, k):
        return k % self.p

    def nth_powers(self, n):
        """Sorted list of the distinct values a^n, a nonzero."""
        return sorted({self.pow(a, n) for a in self.nonzero()})

    def nth_root(self, b, n):
        """Smallest nonzero a with a^n == b, or None."""
        for a in self.nonzero():
            if self.pow(a, n) == b:
                return a
        return None

    def scalar_str(self, a):
        """Render a scalar as a polynomial in the generator g."""
        if self.m == 1:
            return str(a)
        terms = []
        for i, c in enumerate(_digits(a, self.p, self.m)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(head + ("g" if i == 1 else f"g^{i}"))
        if not terms:
            return "0"
        return "+".join(reversed(terms))

    @property
    def name(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus)
                == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return self.name


def field_from_name(name):
    """Parse field names like GF(16), GF(2^4) or F_16 into a Field."""
    s = name.strip().replace(" ", "")
    for prefix in ("GF(", "gf(", "F(", "f("):
        if s.startswith(prefix) and s.endswith(")"):
            s = s[len(prefix):-1]
            break
    else:
        if s.startswith(("F_", "f_")):
            s = s[2:]
    if "^" in s:
        ps, ms = s.split("^", 1)
        try:
            return Field(int(ps), int(ms))
        except ValueError:
            raise ParseError(f"bad field name {name!r}")
    try:
        q = int(s)
    except ValueError:
        raise ParseError(f"bad field name {name!r}")
    for p in SUPPORTED_PRIMES:
        if q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n == 1:
                return Field(p, m)
            break
    raise ParseError(f"field size {q} is not a power of 2, 3 or 5")
