"""Viewing the R-matrix (and the inverse of its flip) as twists onto the
coopposite coproduct yields two families of evaluation data and two
invertible comparison elements.  This module computes them, checks the
identities connecting them to the canonical element, verifies ribbon
candidates, and searches for ribbon elements."""

from dataclasses import dataclass
from itertools import product as iproduct

from . import linalg
from .drinfeld import drinfeld_u
from .errors import (BudgetExceeded, InternalInconsistency, NotInvertible,
                     ShapeMismatch)
from .report import CheckReport, witness_from
from .tensor import (SparseTensor, apply_legs, concat, eq_witness, flip,
                     invert, mul_all, mult)


@dataclass
class RTwistElements:
    alpha_hat: SparseTensor
    beta_hat: SparseTensor
    alpha_check: SparseTensor
    beta_check: SparseTensor
    u_hat: SparseTensor
    u_hat_inv: SparseTensor
    u_check: SparseTensor
    u_check_inv: SparseTensor


@dataclass
class RibbonCandidate:
    v: SparseTensor
    provenance: str  # user | closed-form | solver


@dataclass
class RibbonSearch:
    candidates: list
    region: str


def rtwist_elements(d):
    """All eight elements arising from the two R-twists, with their inverse
    formulas and comparison relations verified before returning."""
    def build():
        alg = d.algebra
        R, R_inv = d.R, d.r_inv
        alpha_hat = d.hsum([(R_inv, ("s", "t"))], [[("S", ["s"]), d.alpha, "t"]])
        beta_hat = d.hsum([(R, ("s", "t"))], [["s", d.beta, ("S", ["t"])]])
        alpha_check = d.hsum([(R, ("s", "t"))], [[("S", ["t"]), d.alpha, "s"]])
        beta_check = d.hsum([(R_inv, ("s", "t"))], [["t", d.beta, ("S", ["s"])]])

        def comparison(ev):
            return d.hsum([(d.phi, ("x", "y", "z"))],
                          [[("S", ["z"]), ev, "y",
                            ("Sinv", [d.beta]), ("Sinv", ["x"])]])

        def comparison_inv(coev):
            return d.hsum([(d.phi, ("x", "y", "z"))],
                          [[("Sinv", ["z"]), ("Sinv", [d.alpha]), "y",
                            coev, ("S", ["x"])]])

        u_hat = comparison(alpha_hat)
        u_hat_inv = comparison_inv(beta_hat)
        u_check = comparison(alpha_check)
        u_check_inv = comparison_inv(beta_check)

        one = d.unit_tensor(1)
        for name, a, b in (("hat", u_hat, u_hat_inv),
                           ("check", u_check, u_check_inv)):
            if mult(a, b, alg) != one or mult(b, a, alg) != one:
                raise InternalInconsistency(
                    "the %s comparison element fails its inverse formula; "
                    "the datum violates an axiom" % name)
        for name, uu, uu_inv, ev, coev in (
                ("hat", u_hat, u_hat_inv, alpha_hat, beta_hat),
                ("check", u_check, u_check_inv, alpha_check, beta_check)):
            for i in range(d.dim):
                lhs = d.antipode(d.basis(i))
                rhs = mul_all(alg, uu,
                              apply_legs(d.basis(i), [d.leg("Sinv")]), uu_inv)
                if lhs != rhs:
                    raise InternalInconsistency(
                        "the %s comparison element does not conjugate the "
                        "inverse antipode to the antipode" % name)
            if ev != mult(uu, apply_legs(d.alpha, [d.leg("Sinv")]), alg):
                raise InternalInconsistency(
                    "%s evaluation element fails its comparison relation" % name)
            if coev != mult(apply_legs(d.beta, [d.leg("Sinv")]), uu_inv, alg):
                raise InternalInconsistency(
                    "%s coevaluation element fails its comparison relation" % name)
        return RTwistElements(alpha_hat=alpha_hat, beta_hat=beta_hat,
                              alpha_check=alpha_check, beta_check=beta_check,
                              u_hat=u_hat, u_hat_inv=u_hat_inv,
                              u_check=u_check, u_check_inv=u_check_inv)
    return d.cache("rtwist", build)


def check_rtwist_relations(d):
    """Cross relations between the two twist families and the canonical
    element."""
    rep = CheckReport()
    alg = d.algebra
    el = rtwist_elements(d)
    u = drinfeld_u(d).u
    sinv = d.leg("Sinv")

    def sinv_of(t):
        return apply_legs(t, [sinv])

    _add(rep, "inv_antipode_of_alpha_check",
         eq_witness(sinv_of(el.alpha_check), mult(el.u_hat_inv, d.alpha, alg)))
    _add(rep, "inv_antipode_of_alpha_hat",
         eq_witness(sinv_of(el.alpha_hat), mult(el.u_check_inv, d.alpha, alg)))
    _add(rep, "inv_antipode_of_beta_check",
         eq_witness(sinv_of(el.beta_check), mult(d.beta, el.u_hat, alg)))
    _add(rep, "inv_antipode_of_beta_hat",
         eq_witness(sinv_of(el.beta_hat), mult(d.beta, el.u_check, alg)))
    _add(rep, "u_equals_u_check", eq_witness(u, el.u_check))
    _add(rep, "u_equals_antipode_of_u_hat_inv",
         eq_witness(u, d.antipode(el.u_hat_inv)))
    _add(rep, "alpha_check_is_antipode_alpha_times_u",
         eq_witness(el.alpha_check, mult(d.antipode(d.alpha), u, alg)))
    _add(rep, "u_hat_inv_is_inv_antipode_of_u_check",
         eq_witness(mult(el.u_hat, sinv_of(el.u_check), alg), d.unit_tensor(1)))
    return rep


# ----- ribbon elements ------------------------------------------------------


def is_ribbon(d, v):
    """The defining checks of a ribbon element plus the derived counit and
    invertibility consequences."""
    if v.arity != 1 or v.dim != d.dim:
        raise ShapeMismatch("ribbon candidate must be an element of the algebra")
    rep = CheckReport()
    alg = d.algebra
    f = d.field

    if v.is_zero():
        rep.add_fail("ribbon_nonzero", {"reason": "candidate is zero"})
        return rep
    rep.add_pass("ribbon_nonzero")

    bad = None
    for i in range(d.dim):
        diff = eq_witness(mult(v, d.basis(i), alg), mult(d.basis(i), v, alg))
        if diff is not None:
            bad = witness_from(diff, basis=i)
            break
    rep.add("ribbon_central", "fail" if bad else "pass", bad)

    rr = mult(flip(d.R, 0, 1), d.R, alg)
    diff = eq_witness(d.coproduct(v), mult(rr, concat(v, v), alg))
    _add(rep, "ribbon_coproduct", diff)

    _add(rep, "ribbon_antipode_fixed", eq_witness(d.antipode(v), v))

    defining_ok = rep.ok
    val = d.eps_of(v)
    if val == f.one:
        rep.add_pass("ribbon_counit")
    else:
        rep.add_fail("ribbon_counit",
                     {"index": [], "lhs": f.to_str(val), "rhs": "1"})
    try:
        invert(v, alg)
        rep.add_pass("ribbon_invertible")
    except NotInvertible as exc:
        if defining_ok:
            raise InternalInconsistency(
                "candidate passes the defining ribbon checks but is not "
                "invertible; the datum violates an axiom")
        rep.add_fail("ribbon_invertible", {"reason": str(exc)})
    return rep


def check_ribbon_lemma(d, v):
    """The square of the ribbon element moves one twist family's evaluation
    data onto the other's."""
    rep = CheckReport()
    alg = d.algebra
    el = rtwist_elements(d)
    v2 = mult(v, v, alg)
    _add(rep, "ribbon_square_times_alpha_check",
         eq_witness(mult(v2, el.alpha_check, alg), el.alpha_hat))
    _add(rep, "ribbon_square_times_beta_hat",
         eq_witness(mult(v2, el.beta_hat, alg), el.beta_check))
    return rep


def check_main_theorem(d, v):
    """The inverse square of the ribbon element equals u S(u), and the
    intermediate identity expressing the square through the two comparison
    elements."""
    rep = CheckReport()
    alg = d.algebra
    try:
        v_inv = invert(v, alg)
        rep.add_pass("ribbon_invertible")
    except NotInvertible as exc:
        rep.add_fail("ribbon_invertible", {"reason": str(exc)})
        return rep
    u = drinfeld_u(d).u
    lhs = mult(v_inv, v_inv, alg)
    rhs = mult(u, d.antipode(u), alg)
    _add(rep, "ribbon_inverse_square_is_u_Su", eq_witness(lhs, rhs))
    el = rtwist_elements(d)
    _add(rep, "ribbon_square_is_uhat_ucheck_inv",
         eq_witness(mult(v, v, alg), mult(el.u_hat, el.u_check_inv, alg)))
    return rep


def center(d):
    """Basis of the center, from the nullspace of the stacked commutator
    system; exact and deterministic."""
    f = d.field
    n = d.dim
    alg = d.algebra
    rows = []
    for i in range(n):
        for k in range(n):
            row = [f.zero] * n
            for j in range(n):
                c = f.zero
                for kk, cv in alg.struct.get((j, i), ()):
                    if kk == k:
                        c = f.add(c, cv)
                for kk, cv in alg.struct.get((i, j), ()):
                    if kk == k:
                        c = f.sub(c, cv)
                if not f.is_zero(c):
                    row[j] = c
            rows.append(row)
    basis = linalg.nullspace(f, rows, n)
    return [SparseTensor.make(f, 1, n, {(j,): c for j, c in enumerate(vec)})
            for vec in basis]


def find_ribbon(d, budget, method="auto"):
    """All ribbon elements found inside the searched region, each verified
    by the defining checks before being returned.

    The search space is cut by the necessary condition that the square of a
    ribbon element equals the inverse of u S(u).  With a tagged orthogonal
    block decomposition the square roots are found blockwise; otherwise the
    span of the center is enumerated when the field is small enough."""
    f = d.field
    alg = d.algebra
    u = drinfeld_u(d).u
    c = invert(mult(u, d.antipode(u), alg), alg)
    blocks = d.metadata.get("blocks") if method in ("auto", "blocks") else None
    if method == "blocks" and not blocks:
        raise BudgetExceeded("no block decomposition available", required=None)
    if blocks:
        roots, region = _block_roots(d, c, blocks, budget)
    else:
        roots, region = _enumerate_center_roots(d, c, budget)
    out = []
    seen = set()
    for v in roots:
        key = tuple(v.sorted_items())
        if key in seen:
            continue
        seen.add(key)
        if is_ribbon(d, v).ok:
            out.append(RibbonCandidate(v=v, provenance="solver"))
    out.sort(key=lambda cand: tuple(cand.v.sorted_items()))
    return RibbonSearch(candidates=out, region=region)


def _block_roots(d, c, blocks, budget):
    f = d.field
    if f.size is None:
        raise BudgetExceeded("blockwise enumeration needs a finite field",
                             required=None)
    alg = d.algebra
    per_block = []
    total = 0
    for block in blocks:
        block = list(block)
        total += f.size ** len(block)
        if total > budget:
            raise BudgetExceeded(
                "block enumeration needs %d points, budget is %d"
                % (total, budget), required=total)
        c_block = SparseTensor.make(
            f, 1, d.dim, {k: v for k, v in c.entries.items() if k[0] in block})
        roots = []
        for coeffs in iproduct(range(f.size), repeat=len(block)):
            v = SparseTensor.make(f, 1, d.dim,
                                  {(i,): f.from_int(x)
                                   for i, x in zip(block, coeffs)})
            if mult(v, v, alg) == c_block:
                roots.append(v)
        if not roots:
            return [], "blockwise, %d points, no square root in a block" % total
        per_block.append(roots)
    combos = 1
    for roots in per_block:
        combos *= len(roots)
    if combos > budget:
        raise BudgetExceeded("combining block roots needs %d candidates"
                             % combos, required=combos)
    out = []
    for pick in iproduct(*per_block):
        entries = {}
        for part in pick:
            entries.update(part.entries)
        out.append(SparseTensor(f, 1, d.dim, entries))
    return out, "blockwise over %d blocks, %d points" % (len(blocks), total)


def _enumerate_center_roots(d, c, budget):
    f = d.field
    alg = d.algebra
    zs = center(d)
    k = len(zs)
    if f.size is None:
        raise BudgetExceeded(
            "cannot enumerate the center span over an infinite field",
            required=None)
    total = f.size ** k
    if total > budget:
        raise BudgetExceeded(
            "center enumeration needs %d points, budget is %d" % (total, budget),
            required=total)
    out = []
    for coeffs in iproduct(range(f.size), repeat=k):
        entries = {}
        for x, z in zip(coeffs, zs):
            if x == 0:
                continue
            cx = f.from_int(x)
            for key, cv in z.entries.items():
                s = f.add(entries.get(key, f.zero), f.mul(cx, cv))
                if f.is_zero(s):
                    entries.pop(key, None)
                else:
                    entries[key] = s
        v = SparseTensor(f, 1, d.dim, entries)
        if mult(v, v, alg) == c:
            out.append(v)
    return out, "center span, %d points (center dim %d)" % (total, k)


def _add(rep, name, diff, **extra):
    if diff is None:
        rep.add_pass(name)
    else:
        rep.add_fail(name, witness_from(diff, **extra))
