"""Independent oracle: irreducible-module level dimensions via Verma Gram ranks."""
from fractions import Fraction


def partitions_of(n):
    """Non-increasing integer partitions of n."""
    if n == 0:
        yield ()
        return
    def gen(rem, maxpart):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, maxpart), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest
    yield from gen(n, n)


def apply_mode(k, state, h, c):
    """Apply Virasoro L_k to a dict {partition-tuple: coeff} over L_{-mu}|h>.

    Partitions are non-increasing tuples of positive ints; the empty tuple is
    |h>.  Uses [L_m, L_n] = (m-n) L_{m+n} + (c/12) m (m^2-1) delta_{m+n,0},
    L_{k>0}|h> = 0, L_0|h> = h|h>.
    """
    out = {}

    def add(part, coeff):
        if coeff:
            out[part] = out.get(part, Fraction(0)) + coeff

    def insert_negative(m, part):
        """Normal-order L_{-m} L_{-part}|h> into the non-increasing basis."""
        result = {}
        if not part or m >= part[0]:
            result[(m,) + part] = Fraction(1)
            return result
        # commute past the first generator: L_{-m} L_{-a} =
        # L_{-a} L_{-m} + (a - m) L_{-(m+a)}
        a = part[0]
        rest = part[1:]
        for sub, cf in insert_negative(m, rest).items():
            for fin, cf2 in insert_negative(a, sub).items():
                result[fin] = result.get(fin, Fraction(0)) + cf * cf2
        comb = (m + a,)
        for fin, cf in insert_negative(m + a, rest).items():
            result[fin] = result.get(fin, Fraction(0)) + Fraction(a - m) * cf
        return result

    for part, coeff in state.items():
        if coeff == 0:
            continue
        if k == 0:
            add(part, coeff * (h + sum(part)))
            continue
        if k < 0:
            for fin, cf in insert_negative(-k, part).items():
                add(fin, coeff * cf)
            continue
        # k > 0: push through the string L_{-a1} L_{-a2} ... |h>
        if not part:
            continue  # annihilates the highest-weight state
        a = part[0]
        rest = part[1:]
        # commutator term: (k + a) L_{k - a} + (c/12) k (k^2-1) delta_{k,a}
        comm = {}
        m = k - a
        if m == 0:
            for fin, cf in apply_mode(0, {rest: Fraction(1)}, h, c).items():
                comm[fin] = comm.get(fin, Fraction(0)) + Fraction(k + a) * cf
            central = Fraction(c) * k * (k * k - 1) / 12
            comm[rest] = comm.get(rest, Fraction(0)) + central
        else:
            for fin, cf in apply_mode(m, {rest: Fraction(1)}, h, c).items():
                comm[fin] = comm.get(fin, Fraction(0)) + Fraction(k + a) * cf
        for fin, cf in comm.items():
            add(fin, coeff * cf)
        # pass-through term: L_{-a} (L_k rest)
        passed = apply_mode(k, {rest: Fraction(1)}, h, c)
        for fin, cf in passed.items():
            for fin2, cf2 in apply_mode(-a, {fin: Fraction(1)}, h, c).items():
                add(fin2, coeff * cf * cf2)
    return out


def gram_matrix(level, h, c):
    basis = list(partitions_of(level))
    mat = []
    for lam in basis:
        row = []
        for mu in basis:
            state = {mu: Fraction(1)}
            for m in reversed(lam):  # (L_{-l1} L_{-l2})^dagger = L_{l2} L_{l1}
                state = apply_mode(m, state, h, c)
            row.append(state.get((), Fraction(0)))
        mat.append(row)
    return mat


def rank(mat):
    mat = [row[:] for row in mat]
    n = len(mat)
    if n == 0:
        return 0
    m = len(mat[0])
    r = 0
    col = 0
    while r < n and col < m:
        piv = None
        for i in range(r, n):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(n):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        col += 1
    return r


def irreducible_dims(h, c, maxlevel):
    return [rank(gram_matrix(N, Fraction(h), Fraction(c))) for N in range(maxlevel + 1)]
