"""Exact verification of the supersymmetry algebra.

Each relation is checked as an identity between exactly computed integer
maps; the reported residual is the largest absolute entry component of the
difference, so a passing relation has residual exactly 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import LinearMap, anticommutator, commutator
from .operators import SuperOperators


@dataclass(frozen=True)
class RelationCheck:
    """One verified operator identity."""

    name: str
    holds: bool
    residual: int

    @classmethod
    def of(cls, name: str, lhs: LinearMap, rhs: LinearMap) -> "RelationCheck":
        diff = lhs - rhs
        return cls(name=name, holds=diff.is_zero(), residual=diff.max_abs())


@dataclass(frozen=True)
class AlgebraReport:
    """All checked relations; all_hold summarizes them."""

    checks: tuple[RelationCheck, ...] = field(default_factory=tuple)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def failed(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.holds]

    def by_name(self, name: str) -> RelationCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_superalgebra(sup: SuperOperators) -> AlgebraReport:
    """The closed system of supercharge relations, checked exactly.

    The nilpotent charges square to zero, their anticommutator is the
    hamiltonian, the hermitian charges square to the hamiltonian and
    anticommute with each other, both commute with the hamiltonian, and
    the hermitian and nilpotent charges determine each other by exact
    halving.  The hamiltonian here was built block-by-block from the two
    Laplacians, so these are genuine cross-checks, not definitions
    re-stated.
    """
    q1, q2 = sup.q1, sup.q2
    qp, qm = sup.q_plus, sup.q_minus
    ham = sup.hamiltonian
    zero = LinearMap.zero(sup.super, sup.super)
    checks = [
        RelationCheck.of("q_plus squares to zero", qp @ qp, zero),
        RelationCheck.of("q_minus squares to zero", qm @ qm, zero),
        RelationCheck.of("q_plus, q_minus anticommute to hamiltonian", anticommutator(qp, qm), ham),
        RelationCheck.of("q1 squares to hamiltonian", q1 @ q1, ham),
        RelationCheck.of("q2 squares to hamiltonian", q2 @ q2, ham),
        RelationCheck.of("q1, q2 anticommute", anticommutator(q1, q2), zero),
        RelationCheck.of("hamiltonian commutes with q_plus", commutator(ham, qp), zero),
        RelationCheck.of("hamiltonian commutes with q_minus", commutator(ham, qm), zero),
        RelationCheck.of("hamiltonian commutes with q1", commutator(ham, q1), zero),
        RelationCheck.of("hamiltonian commutes with q2", commutator(ham, q2), zero),
        RelationCheck.of("q1 is q_plus + q_minus", qp + qm, q1),
        RelationCheck.of("q2 is i(q_minus - q_plus)", (qm - qp).scale((0, 1)), q2),
        RelationCheck.of("q_plus recovered by halving", (q1 + q2.scale((0, 1))).halved(), qp),
        RelationCheck.of("q_minus recovered by halving", (q1 - q2.scale((0, 1))).halved(), qm),
        RelationCheck.of("q1 self-adjoint", q1.adjoint(), q1),
        RelationCheck.of("q2 self-adjoint", q2.adjoint(), q2),
        RelationCheck.of("q_plus adjoint is q_minus", qp.adjoint(), qm),
        RelationCheck.of("hamiltonian self-adjoint", ham.adjoint(), ham),
    ]
    return AlgebraReport(checks=tuple(checks))


def verify_grading(sup: SuperOperators) -> AlgebraReport:
    """The parity structure: involution, eigenprojectors, anticommutation.

    The grading squares to the identity and is self-adjoint; its
    eigenprojectors are idempotent, complementary and recover it; every
    supercharge anticommutes with it; the hamiltonian commutes with it;
    and the second hermitian charge is the grading twist of the first.
    """
    chi = sup.grading
    p0, p1 = sup.proj_bosonic, sup.proj_fermionic
    ident = LinearMap.identity(sup.super)
    zero = LinearMap.zero(sup.super, sup.super)
    checks = [
        RelationCheck.of("grading squares to identity", chi @ chi, ident),
        RelationCheck.of("grading self-adjoint", chi.adjoint(), chi),
        RelationCheck.of("bosonic projector idempotent", p0 @ p0, p0),
        RelationCheck.of("fermionic projector idempotent", p1 @ p1, p1),
        RelationCheck.of("projectors orthogonal", p0 @ p1, zero),
        RelationCheck.of("projectors complete", p0 + p1, ident),
        RelationCheck.of("projectors recover grading", p0 - p1, chi),
        RelationCheck.of("grading anticommutes with q1", anticommutator(chi, sup.q1), zero),
        RelationCheck.of("grading anticommutes with q2", anticommutator(chi, sup.q2), zero),
        RelationCheck.of("grading anticommutes with q_plus", anticommutator(chi, sup.q_plus), zero),
        RelationCheck.of(
            "grading anticommutes with q_minus", anticommutator(chi, sup.q_minus), zero
        ),
        RelationCheck.of("grading commutes with hamiltonian", commutator(chi, sup.hamiltonian), zero),
        RelationCheck.of("q2 is i * grading * q1", (chi @ sup.q1).scale((0, 1)), sup.q2),
    ]
    return AlgebraReport(checks=tuple(checks))


def verify_factorizations(inc, vops) -> AlgebraReport:
    """Degree and adjacency assembled from incidence maps match direct counts."""
    from .operators import (
        adjacency_direct,
        degree_in_direct,
        degree_out_direct,
        laplacian_direct,
    )

    g = inc.graph
    checks = [
        RelationCheck.of("in-degree factorization", vops.deg_in, degree_in_direct(g)),
        RelationCheck.of("out-degree factorization", vops.deg_out, degree_out_direct(g)),
        RelationCheck.of("adjacency factorization", vops.adj, adjacency_direct(g)),
        RelationCheck.of("adjacency symmetric", vops.adj.adjoint(), vops.adj),
        RelationCheck.of("laplacian is degree minus adjacency", vops.laplacian, laplacian_direct(g)),
        RelationCheck.of("laplacian factorization", inc.diff_adj @ inc.diff, vops.laplacian),
        RelationCheck.of("laplacian self-adjoint", vops.laplacian.adjoint(), vops.laplacian),
    ]
    return AlgebraReport(checks=tuple(checks))
