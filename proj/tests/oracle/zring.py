"""Z[z^2, a^{+-1}] helpers for the oracle (sympy based)."""
import sympy as sp
from hecke_oracle import q, a, qnum

y = sp.symbols("y")  # y = z^2 = q^2 - 2 + q^-2


def terms(f):
    """Laurent polynomial in q, a -> {a_exp: {q_exp: coeff}}."""
    f = sp.expand(f)
    out = {}
    for term in sp.Add.make_args(f):
        if term == 0:
            continue
        c, rest = term.as_coeff_Mul()
        pw = rest.as_powers_dict()
        eq = pw.get(q, 0)
        ea = pw.get(a, 0)
        out.setdefault(ea, {})
        out[ea][eq] = out[ea].get(eq, 0) + c
    return {k: {e: c for e, c in v.items() if c != 0} for k, v in out.items()}


def to_z2(f):
    out = {}
    for ae, d in terms(f).items():
        if not d:
            continue
        for e, c in d.items():
            if e.q != 1 if hasattr(e, 'q') else False:
                return None
            if e % 2 or d.get(-e, 0) != c:
                return None
        K = max(d) // 2
        E = [sp.Integer(2), y + 2]
        for k in range(2, K + 1):
            E.append(sp.expand((y + 2) * E[-1] - E[-2]))
        expr = d.get(0, 0)
        for e, c in d.items():
            if e > 0:
                expr += c * E[e // 2]
        out[ae] = sp.Poly(sp.expand(expr), y)
    return out


def p2div(f, p):
    """None if not in Q[z^2,a]; else {a_exp: (quotient, remainder)} dividing by [p]^2."""
    P2 = to_z2(qnum(p) ** 2)[0]
    zz = to_z2(f)
    if zz is None:
        return None
    return {ae: sp.div(pol, P2) for ae, pol in zz.items()}
