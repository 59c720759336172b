"""Scripted derivations for the degree-8 eliminations, the ordinary-surface table and the patchwork targets.

Each script returns a ``Reproduction`` whose ``lines`` spell out the exact
integer steps and whose ``verdict`` states the conclusion reached.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geography import (
    CurveClass,
    OrdinarySurfaceData,
    chern_from_branch,
    invert_chern,
    ordinary_invariants,
    solve_ordinary,
)
from .patchwork.targets import TARGET_TABLE, verify_targets


@dataclass
class Reproduction:
    name: str
    lines: list = field(default_factory=list)
    verdict: str = ""
    ok: bool = False  # the derivation reached its expected conclusion
    rows: list = field(default_factory=list)

    def text(self) -> str:
        return "\n".join([f"== {self.name}"] + self.lines + [f"verdict: {self.verdict}"]) + "\n"


def _quintic_double_curve_degree(d: int, nu: int = 5) -> int:
    e2 = nu * (nu - 1) - d
    assert e2 % 2 == 0
    return e2 // 2


def deg8_case_i() -> Reproduction:
    r = Reproduction("deg8-case-i")
    nu, cc = 5, CurveClass(8, 9, 8)
    e = _quintic_double_curve_degree(cc.d, nu)
    ch = chern_from_branch(nu, cc)
    r.lines.append(f"B in B(8,9,8), nu={nu}, double curve degree e={e}")
    r.lines.append(f"c1^2 = 9*{nu} - 9*{cc.d}/2 - ({cc.chi})/2 = {ch.c1sq}")
    r.lines.append(f"c2 = 3*{nu} - ({cc.chi}) - {cc.c} = {ch.c2}")
    assert invert_chern(ch.c1sq, ch.c2, nu, cc.d) == (cc.c, cc.n)
    total = ch.c1sq + ch.c2
    chi_o = total // 12
    assert total % 12 == 0
    r.lines.append(f"chi(O) = (c1^2 + c2)/12 = {total}/12 = {chi_o}")
    p_g = 0
    r.lines.append(f"p_g = {p_g} (a degree-{e} double curve spans more than a plane, so |K| is empty)")
    q = 1 + p_g - chi_o
    r.lines.append(f"chi(O) = 1 - q + p_g gives q = 1 + {p_g} - {chi_o} = {q}")
    r.ok = q < 0
    r.verdict = "no such surface (q < 0)" if r.ok else f"no contradiction (q={q})"
    return r


def deg8_case_ii() -> Reproduction:
    r = Reproduction("deg8-case-ii")
    nu, cc = 5, CurveClass(8, 12, 0)
    e = _quintic_double_curve_degree(cc.d, nu)
    ch = chern_from_branch(nu, cc)
    r.lines.append(f"B in B(8,12,0), nu={nu}, e={e}, (c1^2, c2) = ({ch.c1sq}, {ch.c2})")
    sol = solve_ordinary(nu, e, ch)
    r.lines.append(f"4(g-u) + 9t = {4 * sol.g_minus_u + 9 * sol.t}, 8(g-u) + 15t = {8 * sol.g_minus_u + 15 * sol.t}")
    r.lines.append(f"t={sol.t}, g-u={sol.g_minus_u}")
    r.lines.append(f"p = 2e(nu-4) - 4(g-u) - 6t = {sol.pinch}")
    r.ok = sol.contradiction
    r.verdict = "no such surface (p = 0, but p must be positive)" if r.ok else f"no contradiction (p={sol.pinch})"
    return r


def deg8_case_iii() -> Reproduction:
    r = Reproduction("deg8-case-iii")
    nu, cc = 5, CurveClass(8, 15, 0)
    e = _quintic_double_curve_degree(cc.d, nu)
    base = nu * (nu - 1) * (nu - 2) - 3 * e * (nu - 2)
    r.lines.append(f"B in B(8,15,0), nu={nu}, e={e}")
    r.lines.append(f"c = {nu * (nu - 1) * (nu - 2)} - 3*{e}*{nu - 2} + 3t = {base} + 3t")
    assert (cc.c - base) % 3 == 0
    t = (cc.c - base) // 3
    r.lines.append(f"c = {cc.c} gives t = {t} triple points")
    meet = 3 * t
    r.lines.append(f"the plane through the {t} triple points meets the double curve in at least {meet} > {e} points,"
                   " so it contains the double curve")
    r.lines.append(f"the plane section of the surface has degree {nu}, too small to contain a degree-{e} curve")
    r.ok = t == 3 and meet > e and nu < e
    r.verdict = f"no such surface ({nu} < {e})" if r.ok else "bookkeeping inconclusive"
    return r


ORDINARY_EXAMPLES = (
    ("cubic, double line", OrdinarySurfaceData(3, 1, 0, 0, -1), (4, 3, 0), 2),
    ("quartic, double line", OrdinarySurfaceData(4, 1, 0, 0, -1), (10, 18, 8), 4),
    ("quartic, double conic", OrdinarySurfaceData(4, 2, 2, 0, -1), (8, 12, 4), 4),
    ("quartic, two skew double lines", OrdinarySurfaceData(4, 2, 0, 0, -2), (8, 12, 8), 8),
    ("quartic, nodal double cubic", OrdinarySurfaceData(4, 3, 4, 0, -1), (6, 6, 4), 4),
    ("quartic, three concurrent double lines", OrdinarySurfaceData(4, 3, 0, 1, -3), (6, 9, 0), 6),
)


def ordinary_examples() -> Reproduction:
    r = Reproduction("ordinary-examples")
    r.lines.append("nu e e* t g-u | d c n | c1^2 c2 | p | case")
    good = True
    for label, data, expected, pinch in ORDINARY_EXAMPLES:
        inv = ordinary_invariants(data)
        got = (inv.cc.d, inv.cc.c, inv.cc.n)
        good &= got == expected and inv.pinch == pinch
        r.rows.append({"nu": data.nu, "e": data.e, "e_star": data.e_star, "t": data.t,
                       "g_minus_u": data.g_minus_u, "d": got[0], "c": got[1], "n": got[2],
                       "c1sq": inv.chern.c1sq, "c2": inv.chern.c2, "pinch": inv.pinch})
        r.lines.append(f"{data.nu} {data.e} {data.e_star} {data.t} {data.g_minus_u} | "
                       f"{got[0]} {got[1]} {got[2]} | {inv.chern.c1sq} {inv.chern.c2} | {inv.pinch} | {label}")
    r.ok = good
    r.verdict = "all six cases reproduced" if good else "mismatch in the table"
    return r


BOUNDARY_DEMO = (8, (56, 336, 840))


def target_table() -> Reproduction:
    r = Reproduction("appendixA-targets")
    r.lines.append("nu | constructed (d,c,n) | required (d,c,n+1) | status")
    good = True
    for nu in range(3, 11):
        check = verify_targets(nu, TARGET_TABLE[nu])
        good &= check.ok
        r.rows.append({"nu": nu, "constructed": list(check.constructed), "required": list(check.required),
                       "ok": check.ok})
        r.lines.append(f"{nu} | {check.constructed} | {check.required} | {'ok' if check.ok else 'fail'}")
    nu, constructed = BOUNDARY_DEMO
    demo = verify_targets(nu, constructed)
    r.lines.append(f"{nu} | {demo.constructed} | {demo.required} | {'ok' if demo.ok else 'fail'}"
                   " (boundary demo: Salmon counts alone, no extra node)")
    r.rows.append({"nu": nu, "constructed": list(demo.constructed), "required": list(demo.required),
                   "ok": demo.ok, "demo": True})
    r.ok = good and not demo.ok
    r.verdict = "all tabulated targets met; boundary demo fails as expected" if r.ok else "target check mismatch"
    return r


SCRIPTS = {
    "deg8-case-i": deg8_case_i,
    "deg8-case-ii": deg8_case_ii,
    "deg8-case-iii": deg8_case_iii,
    "ordinary-examples": ordinary_examples,
    "appendixA-targets": target_table,
}


def reproduce(name: str) -> Reproduction:
    try:
        script = SCRIPTS[name]
    except KeyError:
        raise ValueError(f"unknown script {name!r}; choose from {sorted(SCRIPTS)}") from None
    return script()

