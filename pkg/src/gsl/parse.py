"""Presentation files for group carriers, and the expression grammar.

A presentation file is line oriented:

    field GF(2)

    generators
      S ^2
      T ^4

    delta
      S = S + S'
      T = T + T' + T^2*S'

    epsilon
      S = 0
      T = 0

    antipode
      S = S
      T = T

followed by an optional action block with a single `rho = ...` line.
Primed names are the second tensor leg, `^` takes (possibly negative)
integer exponents, and `#` starts a comment.  The antipode block may be
omitted, in which case it is solved by convolution.  Parsing verifies
the result; a broken file raises ParseError with line and column, or
VerifyError with the failing axiom.
"""

from .action import (Coaction, coaction_verify, laurent_invert, _ladd,
                     _lclean, _lmul, _lscale)
from .errors import BadParams, GslError, ParseError, VerifyError
from .gf import field_from_name
from .hopf import HopfAlgebra, hopf_verify
from .talg import Algebra


# -- expression grammar ------------------------------------------------------

def _tokenize(s, line):
    toks = []
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch in " \t":
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            val = int(s[i:j])
            # a tick on a literal is the same scalar on the other leg
            while j < n and s[j] == "'":
                j += 1
            toks.append(("int", val, line, col))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (s[j].isalnum() or s[j] == "_"):
                j += 1
            while j < n and s[j] == "'":
                j += 1
            toks.append(("name", s[i:j], line, col))
            i = j
        elif ch in "+-*^()":
            toks.append(("op", ch, line, col))
            i += 1
        else:
            raise ParseError("unexpected character %r" % ch, line, col)
    toks.append(("end", None, line, n + 1))
    return toks


class _Expr(object):
    """Recursive-descent evaluator: sums of products of powers of atoms.

    env maps names to ring elements (anything with + - * **), embed
    turns an integer literal into one.
    """

    def __init__(self, toks, env, embed):
        self.toks = toks
        self.env = env
        self.embed = embed
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def run(self):
        out = self.expr()
        kind, val, line, col = self.peek()
        if kind != "end":
            raise ParseError("unexpected %r" % str(val), line, col)
        return out

    def expr(self):
        kind, val, _, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            out = self.embed(0) - self.term()
        else:
            out = self.term()
        while True:
            kind, val, _, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                out = out + rhs if val == "+" else out - rhs
            else:
                return out

    def term(self):
        out = self.factor()
        while True:
            kind, val, _, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                out = out * self.factor()
            else:
                return out

    def factor(self):
        base = self.atom()
        kind, val, _, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            return base ** self._signed_int()
        return base

    def _signed_int(self):
        kind, val, line, col = self.take()
        neg = False
        if kind == "op" and val == "-":
            neg = True
            kind, val, line, col = self.take()
        if kind != "int":
            raise ParseError("expected an integer exponent", line, col)
        return -val if neg else val

    def atom(self):
        kind, val, line, col = self.take()
        if kind == "int":
            return self.embed(val)
        if kind == "name":
            try:
                return self.env[val]
            except KeyError:
                raise ParseError("unknown name %r" % val, line, col)
        if kind == "op" and val == "(":
            out = self.expr()
            kind, val, line, col = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", line, col)
            return out
        raise ParseError("unexpected %r" % str(val), line, col)


def evaluate_expr(text, env, embed, line=1):
    return _Expr(_tokenize(text, line), env, embed).run()


class _Laur(object):
    """Laurent polynomial in the line coordinate over a group carrier."""

    def __init__(self, H, d):
        self.H = H
        self.d = _lclean(d)

    def __add__(self, other):
        return _Laur(self.H, _ladd(self.d, other.d))

    def __sub__(self, other):
        neg = _lscale(other.d, self.H.carrier.scalar_int(-1))
        return _Laur(self.H, _ladd(self.d, neg))

    def __mul__(self, other):
        return _Laur(self.H, _lmul(self.d, other.d))

    def __pow__(self, e):
        base = self.d
        if e < 0:
            base = laurent_invert(self.H, base)
            e = -e
        out = {0: self.H.carrier.one()}
        for _ in range(e):
            out = _lmul(out, base)
        return _Laur(self.H, out)


def parse_coaction_expr(H, text, line=1, verify=True):
    """A rho expression over the group H: Laurent in X with generator
    coefficients; W and V are shorthand for 1 + U when U is present."""
    A = H.carrier
    env = {nm: _Laur(H, {0: A.var(nm)}) for nm in A.vars}
    env["X"] = _Laur(H, {1: A.one()})
    if "U" in A.vars:
        w = _Laur(H, {0: A.one() + A.var("U")})
        env.setdefault("W", w)
        env.setdefault("V", w)
    if H.field.m > 1:
        env.setdefault("g", _Laur(H, {0: A.scalar(H.field.gen)}))

    def embed(k):
        return _Laur(H, {0: A.scalar_int(k)})

    val = evaluate_expr(text, env, embed, line)
    c = Coaction(H, val.d)
    if verify:
        rep = coaction_verify(c)
        if not rep["ok"]:
            raise VerifyError("coaction", rep["failures"][0])
    return c


# -- presentation files --------------------------------------------------------

_BLOCKS = ("generators", "delta", "epsilon", "antipode", "action")


def parse_presentation(text):
    """Parse and verify a presentation file.

    Returns the HopfAlgebra, or a Coaction when an action block is
    present.  Structural problems raise ParseError with the line and
    column; a file that parses but breaks an axiom raises VerifyError.
    """
    field = None
    gens = []
    seen = set()
    maps = {"delta": {}, "epsilon": {}, "antipode": {}}
    rho_src = None
    block = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.strip()
        if not stripped:
            continue
        col = body.index(stripped[0]) + 1
        parts = stripped.split()
        if parts[0] == "field":
            if len(parts) != 2:
                raise ParseError("field line wants exactly one name",
                                 lineno, col)
            try:
                field = field_from_name(parts[1])
            except ParseError as e:
                raise ParseError(str(e), lineno, col)
            continue
        if stripped in _BLOCKS:
            block = stripped
            continue
        if field is None:
            raise ParseError("expected a field line first", lineno, col)
        if block is None:
            raise ParseError("expected a block header", lineno, col)
        if block == "generators":
            if (len(parts) not in (2, 3) or not parts[1].startswith("^")
                    or parts[2:] not in ([], ["invertible"])):
                raise ParseError("want: NAME ^ORDER [invertible]",
                                 lineno, col)
            nm = parts[0]
            if not nm.isidentifier():
                raise ParseError("bad generator name %r" % nm, lineno, col)
            if nm in seen:
                raise ParseError("duplicate generator %r" % nm, lineno, col)
            try:
                order = int(parts[1][1:])
            except ValueError:
                raise ParseError("bad truncation order %r" % parts[1],
                                 lineno, col)
            seen.add(nm)
            gens.append((nm, order, len(parts) == 3, lineno, col))
        elif block == "action":
            if "=" not in stripped or stripped.split("=", 1)[0].strip() != "rho":
                raise ParseError("action block wants a single rho = ... line",
                                 lineno, col)
            if rho_src is not None:
                raise ParseError("duplicate rho line", lineno, col)
            rho_src = (stripped.split("=", 1)[1], lineno)
        else:
            if "=" not in stripped:
                raise ParseError("want: NAME = expression", lineno, col)
            nm, rhs = stripped.split("=", 1)
            nm = nm.strip()
            if nm not in seen:
                raise ParseError("map for undeclared generator %r" % nm,
                                 lineno, col)
            if nm in maps[block]:
                raise ParseError("duplicate %s entry for %r" % (block, nm),
                                 lineno, col)
            maps[block][nm] = (rhs, lineno)
    if field is None:
        raise ParseError("missing field line", 1, 1)
    if not gens:
        raise ParseError("no generators declared", 1, 1)
    names = tuple(g[0] for g in gens)
    for want in ("delta", "epsilon"):
        for nm, _, _, lineno, col in gens:
            if nm not in maps[want]:
                raise ParseError("no %s entry for generator %r" % (want, nm),
                                 lineno, col)
    if maps["antipode"]:
        for nm, _, _, lineno, col in gens:
            if nm not in maps["antipode"]:
                raise ParseError("antipode block must cover %r too" % nm,
                                 lineno, col)

    try:
        A = Algebra(field, names, tuple(g[1] for g in gens),
                    tuple("unit" if g[2] else "nil" for g in gens))
    except BadParams as e:
        raise ParseError(str(e), gens[0][3], gens[0][4])
    t2 = A.tensor(A)
    env2 = {nm: t2.var(nm) for nm in t2.vars}
    env1 = {nm: A.var(nm) for nm in A.vars}
    env0 = {}
    if field.m > 1:
        for env, alg in ((env2, t2), (env1, A), (env0, A)):
            env.setdefault("g", alg.scalar(field.gen))

    delta = {}
    for nm in names:
        src, lineno = maps["delta"][nm]
        delta[nm] = evaluate_expr(src, env2, t2.scalar_int, lineno)
    counit = {}
    for nm in names:
        src, lineno = maps["epsilon"][nm]
        val = evaluate_expr(src, env0, A.scalar_int, lineno)
        counit[nm] = val.constant_term()
    antipode = None
    if maps["antipode"]:
        antipode = {}
        for nm in names:
            src, lineno = maps["antipode"][nm]
            antipode[nm] = evaluate_expr(src, env1, A.scalar_int, lineno)

    try:
        H = HopfAlgebra(A, delta, counit, antipode)
    except GslError:
        # the antipode solver gave up; pin a placeholder so that the
        # verifier can name the axiom the file actually breaks
        H = HopfAlgebra(A, delta, counit, dict(env1))
    rep = hopf_verify(H)
    if not rep["ok"]:
        axiom, where, residual = rep["witnesses"][0]
        raise VerifyError(axiom, {"location": where, "residual": residual})
    if rho_src is None:
        return H
    return parse_coaction_expr(H, rho_src[0], rho_src[1])


# -- canonical printing ----------------------------------------------------------

def _coeff_term(cs, i):
    if i == 0:
        return cs
    base = "X" if i == 1 else "X^%d" % i
    if cs == "1":
        return base
    if "+" in cs:
        return "(%s)*%s" % (cs, base)
    return "%s*%s" % (cs, base)


def rho_str(c):
    A = c.group.carrier
    if not c.rho:
        return "0"
    return " + ".join(_coeff_term(A.poly_str(c.rho[i]), i)
                      for i in sorted(c.rho, reverse=True))


def print_presentation(obj):
    """Canonical text form; parse_presentation of the output reproduces
    the object, and printing is a fixed point on parsed canonical text."""
    if isinstance(obj, Coaction):
        return (print_presentation(obj.group)
                + "\naction\n  rho = %s\n" % rho_str(obj))
    H = obj
    A = H.carrier
    if A.ambient is not A:
        raise BadParams("only freely presented carriers can be printed")
    t2 = H.t2()
    lines = ["field %s" % H.field.name, "", "generators"]
    for nm, d, k in zip(A.vars, A.orders, A.kinds):
        lines.append("  %s ^%d%s" % (nm, d,
                                     " invertible" if k == "unit" else ""))
    lines += ["", "delta"]
    for nm in A.vars:
        lines.append("  %s = %s" % (nm, t2.poly_str(H.delta[nm])))
    lines += ["", "epsilon"]
    for nm in A.vars:
        lines.append("  %s = %s" % (nm, H.field.scalar_str(H.counit[nm])))
    lines += ["", "antipode"]
    for nm in A.vars:
        lines.append("  %s = %s" % (nm, A.poly_str(H.antipode[nm])))
    return "\n".join(lines) + "\n"
