"""Vanishing-ideal machinery: reduced bases of point ideals, delta sets,
normal forms, and the extension map (multidimensional LFSR).

Delta sets come from Buchberger-Moeller style elimination: monomials are
scanned in increasing order and those whose evaluation vector on the
points is independent of the earlier ones form the delta set; every
other monomial has a unique monic representative with tail supported on
the delta set.  Scanning the box {0..q}^N suffices because x_i^q - x_i
vanishes everywhere, so no minimal leading exponent has a component
above q.

The emitted basis carries one element per last-coordinate level of the
staircase (the shape shift-register synthesis produces, which may
include order-redundant elements such as y*g over a two-point set) plus
the x_i^q-carrying minimal generators; see vanishing_gb.  A second
construction, check_set_basis, seeds the recurrence tails on a check
set B instead of the delta set, which is what erasure-only decoding
beyond the radius and systematic encoding require.
"""

from dataclasses import dataclass

from .gf import ZERO
from .mindex import dominates, dominated_sub, semigroup_add, index_box
from .transform import Spectrum, point_power


class IdealError(ValueError):
    pass


class Polynomial:
    """N-variable polynomial as exponent-tuple -> coefficient-code map."""

    def __init__(self, field, ndim, terms=None):
        self.field = field
        self.ndim = ndim
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c != ZERO:
                    if len(e) != ndim:
                        raise IdealError("exponent %s has wrong arity" % (e,))
                    self.terms[tuple(e)] = c

    def is_zero(self):
        return not self.terms

    def coeff(self, e):
        return self.terms.get(tuple(e), ZERO)

    def add(self, other):
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(out.get(e, ZERO), c)
            if s == ZERO:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(f, self.ndim, out)

    def neg(self):
        f = self.field
        return Polynomial(f, self.ndim, {e: f.neg(c) for e, c in self.terms.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        f = self.field
        if c == ZERO:
            return Polynomial(f, self.ndim, {})
        return Polynomial(f, self.ndim, {e: f.mul(c, v) for e, v in self.terms.items()})

    def mul_term(self, e, c):
        """Multiply by c * x^e (plain exponent addition, no wrap)."""
        f = self.field
        out = {}
        for e2, c2 in self.terms.items():
            out[tuple(a + b for a, b in zip(e, e2))] = f.mul(c, c2)
        return Polynomial(f, self.ndim, out)

    def mul(self, other):
        acc = Polynomial(self.field, self.ndim, {})
        for e, c in other.terms.items():
            acc = acc.add(self.mul_term(e, c))
        return acc

    def eval(self, point):
        f = self.field
        acc = ZERO
        for e, c in self.terms.items():
            acc = f.add(acc, f.mul(c, point_power(f, point, e)))
        return acc

    def leading(self, order):
        if not self.terms:
            raise IdealError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def sorted_terms(self, order=None):
        if order is None:
            key = lambda e: (sum(e),) + tuple(reversed(e))
        else:
            key = order.key
        return [(e, self.terms[e]) for e in sorted(self.terms, key=key)]

    def text(self, order=None):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                ("x%d" % (i + 1)) + ("" if k == 1 else "^%d" % k)
                for i, k in enumerate(e) if k != 0
            )
            parts.append("%d*%s" % (c, mono) if mono else "%d" % c)
        return " + ".join(parts)

    @classmethod
    def parse(cls, field, ndim, text):
        terms = {}
        body = text.strip()
        if body == "0":
            return cls(field, ndim, {})
        for part in body.split("+"):
            part = part.strip()
            if not part:
                continue
            factors = part.split("*")
            coeff = field.parse(factors[0])
            exps = [0] * ndim
            for fac in factors[1:]:
                fac = fac.strip()
                if not fac.startswith("x"):
                    raise IdealError("bad factor %r" % (fac,))
                if "^" in fac:
                    var, k = fac[1:].split("^")
                else:
                    var, k = fac[1:], "1"
                i = int(var) - 1
                if not 0 <= i < ndim:
                    raise IdealError("variable x%s out of range" % (var,))
                exps[i] += int(k)
            e = tuple(exps)
            if e in terms:
                raise IdealError("duplicate monomial %s" % (e,))
            if coeff != ZERO:
                terms[e] = coeff
        return cls(field, ndim, terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.terms == other.terms)

    def __repr__(self):
        return "Polynomial(%s)" % self.text()


def leading_monomial(f, order):
    return f.leading(order)


@dataclass(frozen=True)
class DeltaSet:
    members: frozenset

    def __contains__(self, e):
        return tuple(e) in self.members

    def __len__(self):
        return len(self.members)

    def sorted(self, order):
        return sorted(self.members, key=order.key)

    def is_downward_closed(self):
        for d in self.members:
            for i, k in enumerate(d):
                if k > 0:
                    lower = d[:i] + (k - 1,) + d[i + 1:]
                    if lower not in self.members:
                        return False
        return True


class ReducedGroebnerBasis:
    """Basis {g^(w)}, each monic with tail supported on the delta set."""

    def __init__(self, field, ndim, order, elements, leading, delta):
        self.field = field
        self.ndim = ndim
        self.order = order
        self.elements = list(elements)
        self.leading = list(leading)
        self.delta = delta
        # tail term lists, used by the extension recurrence
        self._tails = [
            [(e, c) for e, c in g.terms.items() if e != aw]
            for g, aw in zip(self.elements, self.leading)
        ]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _level_leads(members, q, ndim):
    """Shift-register-style leading indices of the complement of a
    downward-closed delta set: recursing on the last coordinate, one lead
    per slice (the first gap of the slice), stopping at the first empty
    slice; slices full across {0..q-1} contribute nothing (the x_i^q
    generators cover them)."""
    if ndim == 1:
        c = 0
        while (c,) in members:
            c += 1
        return [(c,)] if c <= q - 1 else []
    out = []
    for t in range(q):
        slice_t = {a[:-1] for a in members if a[-1] == t}
        if not slice_t:
            out.append((0,) * (ndim - 1) + (t,))
            break
        out.extend(s + (t,) for s in _level_leads(slice_t, q, ndim - 1))
    return out


def vanishing_gb(points, order):
    """Reduced basis of the vanishing ideal of a point set, plus its
    delta set.  ``points`` is a PointSet (or anything with .field, .ndim,
    .points).

    Every element is monic with tail supported on the delta set; the
    emitted leading indices are the per-level ones (one per slice of the
    staircase, the shape shift-register synthesis produces) together
    with the divisibility-minimal generators that carry a component q,
    ordered by level."""
    f = points.field
    ndim = points.ndim
    pts = list(points.points)
    n = len(pts)
    if n == 0:
        raise IdealError("empty point set has no vanishing-ideal basis")
    q = f.q

    candidates = sorted(index_box(q, ndim, top=q), key=order.key)
    delta = []
    echelon = []  # (pivot position, normalized row, combination over delta)
    min_leads = []
    scan_tails = {}

    def reduce_vector(e):
        vec = [point_power(f, p, e) for p in pts]
        comb = {}
        for pivot, row, rc in echelon:
            c = vec[pivot]
            if c == ZERO:
                continue
            for i in range(n):
                if row[i] != ZERO:
                    vec[i] = f.sub(vec[i], f.mul(c, row[i]))
            for d, v in rc.items():
                s = f.add(comb.get(d, ZERO), f.mul(c, v))
                if s == ZERO:
                    comb.pop(d, None)
                else:
                    comb[d] = s
        return vec, comb

    for e in candidates:
        if any(dominates(e, m) for m in min_leads):
            continue
        vec, comb = reduce_vector(e)
        pivot = next((i for i in range(n) if vec[i] != ZERO), None)
        if pivot is None:
            min_leads.append(e)
            scan_tails[e] = comb
        else:
            inv = f.inv(vec[pivot])
            row = [f.mul(v, inv) for v in vec]
            rc = {d: f.neg(f.mul(v, inv)) for d, v in comb.items()}
            rc[e] = inv
            echelon.append((pivot, row, rc))
            delta.append(e)

    if len(delta) != n:
        raise IdealError("delta set size %d != %d points (non-distinct points?)"
                         % (len(delta), n))
    members = set(delta)

    emit = set(_level_leads(members, q, ndim))
    emit.update(m for m in min_leads if any(x >= q for x in m))
    for m in min_leads:
        if m not in emit and not any(dominates(m, e) for e in emit):
            emit.add(m)
    leads = sorted(emit, key=lambda a: tuple(reversed(a)))

    elements = []
    for e in leads:
        if e in scan_tails:
            comb = scan_tails[e]
        else:
            vec, comb = reduce_vector(e)
            if any(v != ZERO for v in vec):
                raise IdealError("lead %s is not in the ideal (internal error)" % (e,))
        terms = {e: 0}
        for d, cd in comb.items():
            terms[d] = f.neg(cd)
        elements.append(Polynomial(f, ndim, terms))

    ds = DeltaSet(frozenset(delta))
    gb = ReducedGroebnerBasis(f, ndim, order, elements, leads, ds)
    return gb, ds


def check_set_basis(points, b_set, order):
    """Recurrence family seeded on a check set B: one monic element per
    needed leading index of A\\B, with tail supported on B, vanishing on
    the points.

    This is the basis that drives erasure-only decoding beyond the
    radius (and hence systematic encoding): the tail coefficients of
    each element are solved from the point-evaluation system, which is
    solvable for every lead exactly when ev restricted to (V_B, points)
    is surjective.  When the delta set of the points equals B it
    coincides with vanishing_gb.  The returned object's delta set is B,
    the seed domain of the recurrences.
    """
    f = points.field
    ndim = points.ndim
    pts = list(points.points)
    if not pts:
        raise IdealError("empty point set")
    q = f.q
    b_list = [tuple(b) for b in b_set]
    members = set(b_list)
    for b in members:
        if len(b) != ndim or any(not 0 <= x < q for x in b):
            raise IdealError("check index %s outside A" % (b,))

    emit = set(_level_leads(members, q, ndim))
    space = index_box(q, ndim)
    outside = [a for a in sorted(space, key=order.key) if a not in members]
    minimal = [a for a in outside if not any(dominates(a, m) and a != m for m in outside)]
    for m in minimal:
        if m not in emit and not any(dominates(m, e) for e in emit):
            emit.add(m)
    leads = sorted(emit, key=lambda a: tuple(reversed(a)))

    # one elimination of the point-evaluation matrix serves every lead
    mat = [[point_power(f, p, b) for b in b_list] for p in pts]
    rhs = [[f.neg(point_power(f, p, a)) for a in leads] for p in pts]
    nb = len(b_list)
    nl = len(leads)
    aug = [mat[i] + rhs[i] for i in range(len(pts))]
    pivots = []
    rank = 0
    for col in range(nb):
        piv = next((r for r in range(rank, len(aug)) if aug[r][col] != ZERO), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = f.inv(aug[rank][col])
        aug[rank] = [f.mul(x, inv) for x in aug[rank]]
        for r in range(len(aug)):
            if r != rank and aug[r][col] != ZERO:
                c = aug[r][col]
                aug[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(aug)):
        if any(aug[r][nb + j] != ZERO for j in range(nl)):
            raise IdealError(
                "check-set system unsolvable on the points (ev not surjective)")

    elements = []
    for j, a in enumerate(leads):
        terms = {a: 0}
        for r, col in enumerate(pivots):
            c = aug[r][nb + j]
            if c != ZERO:
                terms[b_list[col]] = c
        elements.append(Polynomial(f, ndim, terms))
    return ReducedGroebnerBasis(f, ndim, order, elements, leads,
                                DeltaSet(frozenset(members)))


def normal_form(poly, gb):
    """Remainder of the division algorithm by the basis; support lies in
    the delta set and poly - remainder is in the ideal."""
    f = gb.field
    order = gb.order
    work = Polynomial(f, gb.ndim, dict(poly.terms))
    remainder = {}
    while work.terms:
        lt = work.leading(order)
        c = work.terms[lt]
        hit = next((w for w, aw in enumerate(gb.leading) if dominates(lt, aw)), None)
        if hit is None:
            remainder[lt] = c
            del work.terms[lt]
            continue
        shift = dominated_sub(lt, gb.leading[hit])
        work = work.sub(gb.elements[hit].mul_term(shift, c))
    return Polynomial(f, gb.ndim, remainder)


def extension_prefix(field, ndim, order, target):
    """Indices of A up to the order-maximum of the target, ascending."""
    top = max(target, key=order.key)
    space = index_box(field.q, ndim)
    kt = order.key(top)
    return sorted((a for a in space if order.key(a) <= kt), key=order.key)


def _is_sequential(gb):
    """True when every tail monomial precedes its element's lead in the
    order, so the recurrences close over the already-generated prefix."""
    cached = getattr(gb, "_sequential", None)
    if cached is None:
        key = gb.order.key
        cached = all(
            all(key(e) < key(aw) for e, _ in tail)
            for tail, aw in zip(gb._tails, gb.leading)
        )
        gb._sequential = cached
    return cached


def _recur_value(f, gb, w, a, values, q):
    base = dominated_sub(a, gb.leading[w])
    acc = ZERO
    for d, gd in gb._tails[w]:
        ref = semigroup_add(base, d, q)
        if ref not in values:
            return None
        acc = f.add(acc, f.mul(gd, values[ref]))
    return f.neg(acc)


def extend(h, gb, target):
    """LFSR prolongation of a seed spectrum along the basis recurrences.

    For a outside the seed set, every basis element whose leading index
    is dominated by a yields h_a = -sum_d g_d h_{(a - a_w) (+) d} with
    semigroup addition; all admissible elements are evaluated and must
    agree.  For bases whose tails precede their leads (vanishing-ideal
    bases) the values are generated in one increasing-order sweep of the
    prefix of A covering the target; check-set-seeded families may
    reference forward indices, so they are generated over all of A by
    worklist passes and every admissible recurrence is verified at the
    end.
    """
    f = gb.field
    ndim = gb.ndim
    q = f.q
    order = gb.order
    dset = gb.delta.members
    if h.domain() != set(dset):
        raise IdealError("seed spectrum domain does not match the basis seed set")
    target = [tuple(t) for t in target]
    for t in target:
        if len(t) != ndim or any(not 0 <= x < q for x in t):
            raise IdealError("target index %s outside A" % (t,))
    if not target:
        return Spectrum(f, ndim, dict(h.values))

    admissible = [w for w, aw in enumerate(gb.leading) if all(x < q for x in aw)]
    out = dict(h.values)

    if _is_sequential(gb):
        values = {}
        for a in extension_prefix(f, ndim, order, target):
            if a in dset:
                values[a] = h.values[a]
                continue
            result = None
            for w in admissible:
                if not dominates(a, gb.leading[w]):
                    continue
                r = _recur_value(f, gb, w, a, values, q)
                if result is None:
                    result = r
                elif r != result:
                    raise IdealError("inconsistent recurrences at %s (corrupt basis)" % (a,))
            if result is None:
                raise IdealError("no admissible basis element for %s (corrupt basis)" % (a,))
            values[a] = result
    else:
        values = dict(h.values)
        space = sorted(index_box(q, ndim), key=order.key)
        pending = [a for a in space if a not in values]
        per_index = {
            a: [w for w in admissible if dominates(a, gb.leading[w])] for a in pending
        }
        for a in pending:
            if not per_index[a]:
                raise IdealError("no admissible basis element for %s (corrupt basis)" % (a,))
        while pending:
            stalled = True
            left = []
            for a in pending:
                result = None
                for w in per_index[a]:
                    result = _recur_value(f, gb, w, a, values, q)
                    if result is not None:
                        break
                if result is None:
                    left.append(a)
                else:
                    values[a] = result
                    stalled = False
            if stalled:
                raise IdealError(
                    "recurrence family is not sequentially computable (stuck on %d indices)"
                    % len(left))
            pending = left
        for a in space:
            if a in dset:
                continue
            for w in per_index[a]:
                r = _recur_value(f, gb, w, a, values, q)
                if r != values[a]:
                    raise IdealError("inconsistent recurrences at %s (corrupt basis)" % (a,))

    for t in target:
        out[t] = values[t]
    return Spectrum(f, ndim, out)
