"""Declared resolution data for the two composite toric automorphisms.

None of these exceptional loci is derived from formulas; each part records
the stated conclusion about a factor map together with its provenance, and
the library only does the bookkeeping.
"""

from __future__ import annotations

from ..burnside import (
    ZERO,
    Axiom,
    ClassLabel,
    EquivalenceOracle,
    Ledger,
    LedgerPart,
    ResolutionData,
)


def _z(name: str, dim: int) -> ClassLabel:
    return ClassLabel.parse(name, dim, ZERO)


# P^3: sigma = eta' . psi' . phi . pi^-1 . psi^-1 . eta^-1 (applied right to left)


def p3_oracle() -> EquivalenceOracle:
    return EquivalenceOracle([
        Axiom("~/", ("C",), ("Cjac",),
              "C ~/ Jac^2(C) for a genus-one curve C with C(k) empty"),
        Axiom("~", ("P2",), ("F2",), "P2 ~ F2 ~ P1xP1"),
        Axiom("~", ("P2",), ("P1xP1",), "P2 ~ F2 ~ P1xP1"),
        Axiom("~", ("Z1",), ("Z1p",),
              "eta1' and eta1 share the boundary configuration"),
    ])


def p3_parts() -> dict[str, ResolutionData]:
    d = 2
    phi = ResolutionData(
        "phi", (_z("C*P1", d),), (_z("Cjac*P1", d),),
        provenance="Exc(phi) = C x P1, Exc(phi^-1) = C' x P1",
    )
    pi = ResolutionData(
        "pi", (_z("P2", d),), (_z("F2", d),),
        provenance="pi = projection from a point: Exc = P2 up, F2 down",
    )
    psi = ResolutionData("psi", (_z("Epsi", d),), (_z("Epsi", d),),
                         provenance="Exc(psi) = Exc(psi^-1)")
    psi_p = ResolutionData("psi'", (_z("Epsi'", d),), (_z("Epsi'", d),),
                           provenance="Exc(psi') = Exc(psi'^-1)")
    eta1 = ResolutionData("eta1", (_z("Z1", d),), (), provenance="declared model of eta1")
    eta1_p = ResolutionData("eta1'", (_z("Z1p", d),), (), provenance="declared model of eta1'")
    # eta2 is toric: its exceptional divisors are lc places whose residue forms pair up
    t_up = ClassLabel.parse("P2", d, "wT")
    t_dn = ClassLabel.parse("P1xP1", d, "wT'")
    eta2 = ResolutionData("eta2", (t_up,), (t_dn,), ((t_up, t_dn),),
                          provenance="eta2 toric: lc places pair (P2, wT) with (P1xP1, wT')")
    return {"phi": phi, "pi": pi, "psi": psi, "psi'": psi_p,
            "eta1": eta1, "eta1'": eta1_p, "eta2": eta2}


def ledger_p3(oracle: EquivalenceOracle | None = None) -> Ledger:
    r = p3_parts()
    parts = (
        # eta^-1 = eta1^-1 . eta2^-1, with c(eta^-1) = -c(eta2) - c(eta1)
        LedgerPart(-1, r["eta2"], "eta^-1, toric factor"),
        LedgerPart(-1, r["eta1"], "eta^-1"),
        LedgerPart(1, r["psi"].inverse(), "psi^-1"),
        LedgerPart(1, r["pi"].inverse(), "pi^-1"),
        LedgerPart(1, r["phi"], "phi"),
        LedgerPart(1, r["psi'"], "psi'"),
        LedgerPart(1, r["eta1'"], "eta'"),
        LedgerPart(1, r["eta2"], "eta', toric factor"),
    )
    return Ledger("sigma_P3", parts, oracle or p3_oracle())


def p3_generators() -> list[ClassLabel]:
    return [_z("C*P1", 2), _z("Cjac*P1", 2)]


# P^4: sigma = eta' . phi' . psi . phi^-1 . eta^-1


def p4_oracle() -> EquivalenceOracle:
    curves = ("Ca", "Cb", "Cc", "Cd")
    axioms = [Axiom("~/", ("SL",), ("SM",),
                    "S_L ~/ S_M stably, for very general degree-12 K3 surfaces")]
    for s in ("SL", "SM"):
        for c in curves:
            axioms.append(Axiom("~/", (s, "P1"), (c, "P2"),
                                "MRC(S x P1) = S, so S x P1 ~/ C x P2"))
    return EquivalenceOracle(axioms)


def p4_parts() -> dict[str, ResolutionData]:
    d = 3
    psi = ResolutionData("psi", (_z("SL*P1", d),), (_z("SM*P1", d),),
                         provenance="Exc(psi) = S_L x P1, Exc(psi^-1) = S_M x P1")
    phi = ResolutionData("phi", (_z("Ephi", d),), (_z("Ephi", d),),
                         provenance="Exc(phi) = Exc(phi^-1)")
    phi_p = ResolutionData("phi'", (_z("Ephi'", d),), (_z("Ephi'", d),),
                           provenance="Exc(phi') = Exc(phi'^-1)")
    eta1 = ResolutionData("eta1", (_z("P3", d),), (), provenance="c(eta1) = (P3, 0)")
    ideta2 = ResolutionData("id x eta2", (_z("Ca*P2", d), _z("Cb*P2", d)), (),
                            provenance="c(id x eta2) = sum over curves C of (C x P2, 0)")
    eta4 = ResolutionData("eta4", (_z("P3", d), _z("P3", d)), (), provenance="c(eta4) = 2 (P3, 0)")
    eta1_p = ResolutionData("eta1'", (_z("P3", d),), (), provenance="c(eta1') = (P3, 0)")
    ideta2_p = ResolutionData("id x eta2'", (_z("Cc*P2", d), _z("Cd*P2", d)), (),
                              provenance="c(id x eta2') = sum over curves C of (C x P2, 0)")
    eta4_p = ResolutionData("eta4'", (_z("P3", d), _z("P3", d)), (), provenance="c(eta4') = 2 (P3, 0)")
    return {"psi": psi, "phi": phi, "phi'": phi_p, "eta1": eta1, "id x eta2": ideta2,
            "eta4": eta4, "eta1'": eta1_p, "id x eta2'": ideta2_p, "eta4'": eta4_p}


def ledger_p4(oracle: EquivalenceOracle | None = None) -> Ledger:
    r = p4_parts()
    parts = (
        LedgerPart(-1, r["eta1"], "eta^-1"),
        LedgerPart(-1, r["id x eta2"], "eta^-1"),
        LedgerPart(-1, r["eta4"], "eta^-1"),
        LedgerPart(1, r["phi"].inverse(), "phi^-1"),
        LedgerPart(1, r["psi"], "psi"),
        LedgerPart(1, r["phi'"], "phi'"),
        LedgerPart(1, r["eta1'"], "eta'"),
        LedgerPart(1, r["id x eta2'"], "eta'"),
        LedgerPart(1, r["eta4'"], "eta'"),
    )
    return Ledger("sigma_P4", parts, oracle or p4_oracle())


def p4_generators() -> list[ClassLabel]:
    return [_z("SL*P1", 3), _z("SM*P1", 3)]
