"""Echelon-form subspaces of k^n over a small finite field.

A Subspace keeps a reduced row echelon basis, pivoting on the *largest*
nonzero coordinate of each row.  That convention matches the monomial
enumeration used by the ring layer (index 0 is the monomial 1), so the
canonical residue of a vector modulo an ideal is supported on the small
monomials and quotient bases come out as the familiar staircase of low
monomials.

Over GF(2) rows are stored as int bitmasks and reduction is pure xor;
over larger fields rows are lists of scalar codes with the leading
coefficient normalised to 1.
"""


class Subspace(object):

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self._rows = {}  # leading index -> row (int mask if q == 2, else list)
        self._binary = field.q == 2
        # binary rows may be left unreduced against later pivots until a
        # reduced basis is actually read; residues stay canonical either way
        self._dirty = False

    @property
    def dim(self):
        return len(self._rows)

    def copy(self):
        other = Subspace(self.field, self.n)
        if self._binary:
            other._rows = dict(self._rows)
            other._dirty = self._dirty
        else:
            other._rows = {l: list(r) for l, r in self._rows.items()}
        return other

    # -- reduction ---------------------------------------------------------

    def _reduce_mask(self, mask):
        rows = self._rows
        out = 0
        while mask:
            l = mask.bit_length() - 1
            row = rows.get(l)
            if row is None:
                bit = 1 << l
                mask ^= bit
                out |= bit
            else:
                mask ^= row
        return out

    def _reduce_list(self, vec):
        F = self.field
        rows = self._rows
        vec = list(vec)
        for l in range(self.n - 1, -1, -1):
            c = vec[l]
            if c == 0:
                continue
            row = rows.get(l)
            if row is None:
                continue
            for i in range(l + 1):
                if row[i]:
                    vec[i] = F.sub(vec[i], F.mul(c, row[i]))
        return vec

    def residue(self, vec):
        """Canonical representative of vec modulo this subspace.

        Over GF(2) an int is taken as a packed mask and the residue
        comes back packed too.
        """
        if self._binary:
            if isinstance(vec, int):
                return self._reduce_mask(vec)
            return _unpack(self._reduce_mask(_pack(vec)), self.n)
        return self._reduce_list(vec)

    def contains(self, vec):
        if self._binary:
            mask = vec if isinstance(vec, int) else _pack(vec)
            return self._reduce_mask(mask) == 0
        return not any(self._reduce_list(vec))

    def insert(self, vec):
        """Add a vector to the span.  Returns True if the dimension grew."""
        if self._binary:
            mask = vec if isinstance(vec, int) else _pack(vec)
            return self._insert_mask(mask)
        return self._insert_list(vec)

    def _insert_mask(self, mask):
        mask = self._reduce_mask(mask)
        if mask == 0:
            return False
        l = mask.bit_length() - 1
        self._rows[l] = mask
        self._dirty = True
        return True

    def _inter_reduce(self):
        """Clear stale pivot bits out of the stored rows (binary only).

        Ascending pivot order: by the time row l is cleaned, every row it
        can borrow from carries nothing but its own pivot and free columns.
        """
        if not self._dirty:
            return
        rows = self._rows
        pmask = 0
        for l in rows:
            pmask |= 1 << l
        for l in sorted(rows):
            row = rows[l]
            t = row & pmask & ((1 << l) - 1)
            while t:
                b = t.bit_length() - 1
                row ^= rows[b]
                t ^= 1 << b
            rows[l] = row
        self._dirty = False

    def _insert_list(self, vec):
        F = self.field
        vec = self._reduce_list(vec)
        l = _leading(vec)
        if l is None:
            return False
        c = F.inv(vec[l])
        if c != 1:
            vec = [F.mul(c, x) for x in vec]
        for k, row in self._rows.items():
            d = row[l]
            if d:
                self._rows[k] = [F.sub(x, F.mul(d, y)) for x, y in zip(row, vec)]
        self._rows[l] = vec
        return True

    # -- structure ----------------------------------------------------------

    def pivots(self):
        return sorted(self._rows)

    def complement_indices(self):
        """Indices of the monomials spanning a complement (the non-pivots)."""
        return [j for j in range(self.n) if j not in self._rows]

    def basis(self):
        """Echelon basis rows as dense lists, ordered by leading index."""
        if self._binary:
            self._inter_reduce()
        out = []
        for l in sorted(self._rows):
            row = self._rows[l]
            out.append(_unpack(row, self.n) if self._binary else list(row))
        return out

    def right_kernel_basis(self):
        """Basis of the solution space of <row, x> = 0 over all stored rows.

        Each stored row is read as one linear equation on n unknowns.
        """
        if self._binary:
            self._inter_reduce()
        rows = self._rows
        out = []
        for j in range(self.n):
            if j in rows:
                continue
            vec = [0] * self.n
            vec[j] = 1
            for l, row in rows.items():
                c = (row >> j) & 1 if self._binary else row[j]
                if c:
                    vec[l] = self.field.neg(c)
            out.append(vec)
        return out

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.n}, {self.field.name})"


def subspace_from(field, n, vectors):
    S = Subspace(field, n)
    for v in vectors:
        S.insert(v)
    return S


def subspace_sum(A, B):
    assert A.field == B.field and A.n == B.n
    S = Subspace(A.field, A.n)
    for v in A.basis():
        S.insert(v)
    for v in B.basis():
        S.insert(v)
    return S


def subspace_intersect(A, B):
    """Zassenhaus: echelonise (a|a) and (b|0), read rows with zero top block."""
    assert A.field == B.field and A.n == B.n
    n = A.n
    big = Subspace(A.field, 2 * n)
    for a in A.basis():
        big.insert(a + a)
    for b in B.basis():
        big.insert([0] * n + b)
    out = Subspace(A.field, n)
    for l in big.pivots():
        if l < n:
            row = big._rows[l]
            row = _unpack(row, n) if big._binary else row[:n]
            out.insert(row[:n])
    return out


def _pack(vec):
    mask = 0
    for i, c in enumerate(vec):
        if c:
            mask |= 1 << i
    return mask


def _unpack(mask, n):
    return [(mask >> i) & 1 for i in range(n)]


def _leading(vec):
    for i in range(len(vec) - 1, -1, -1):
        if vec[i]:
            return i
    return None


class SpanSolver(object):
    """Echelon basis that remembers how each pivot row was built, so that
    membership tests also return the coefficients over the inserted vectors.

    Vectors that are dependent on earlier ones are silently dropped by add();
    express() then answers in terms of the independent generators actually
    kept, indexed by insertion order.
    """

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self._binary = field.q == 2
        self._rows = {}
        self.count = 0

    def add(self, vec):
        """Insert a vector; returns its generator index, or None if dependent."""
        res, recipe = self._reduce(vec)
        if self._is_zero(res):
            return None
        idx = self.count
        self.count += 1
        lead = self._lead(res)
        F = self.field
        if self._binary:
            rrec = dict(recipe)
            rrec[idx] = 1
        else:
            # res = vec - sum(recipe[k] * gen_k); rescale to lead coeff 1.
            inv = F.inv(res[lead])
            res = [F.mul(inv, c) for c in res]
            rrec = {k: F.neg(F.mul(inv, c)) for k, c in recipe.items()}
            rrec[idx] = inv
        self._rows[lead] = (res, rrec)
        return idx

    def add_all(self, vectors):
        return [self.add(v) for v in vectors]

    def express(self, vec):
        """Return {generator index: coefficient} with vec = sum, or None."""
        res, recipe = self._reduce(vec)
        if not self._is_zero(res):
            return None
        return recipe

    def dim(self):
        return len(self._rows)

    def contains(self, vec):
        res, _ = self._reduce(vec)
        return self._is_zero(res)

    def _reduce(self, vec):
        F = self.field
        if self._binary:
            cur = _pack(vec) if not isinstance(vec, int) else vec
            recipe = {}
            while cur:
                lead = cur.bit_length() - 1
                hit = self._rows.get(lead)
                if hit is None:
                    break
                row, rrec = hit
                cur ^= row
                for k, c in rrec.items():
                    if k in recipe:
                        del recipe[k]
                    else:
                        recipe[k] = 1
            return cur, recipe
        cur = list(vec)
        recipe = {}
        while True:
            lead = _leading(cur)
            if lead is None or lead not in self._rows:
                break
            row, rrec = self._rows[lead]
            coeff = cur[lead]
            for i, c in enumerate(row):
                if c:
                    cur[i] = F.sub(cur[i], F.mul(coeff, c))
            for k, c in rrec.items():
                prev = recipe.get(k, 0)
                val = F.add(prev, F.mul(coeff, c))
                if val:
                    recipe[k] = val
                elif k in recipe:
                    del recipe[k]
        return cur, recipe

    def _is_zero(self, res):
        return res == 0 if self._binary else _leading(res) is None

    def _lead(self, res):
        return res.bit_length() - 1 if self._binary else _leading(res)
