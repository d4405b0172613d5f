"""Spectra, kernels, pairing and the polar geometry of the difference operator.

Counting questions (kernel dimensions, the rank split between zero and
nonzero spectrum) are settled by exact integer elimination; floating point
is used only for eigenvalues and eigenvectors themselves, with every
floating claim checked against a stated tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DirectedGraph, connected_components
from .linalg import LinearMap, StateVector, exact_kernel_basis, exact_rank, stack_columns
from .operators import IncidenceOperators, SuperOperators, build_super_operators


class NotSelfAdjoint(ValueError):
    """Raised when a spectrum is requested for a non-self-adjoint map."""


class NotAnEigenpair(ValueError):
    """Raised when eigenvector transport is fed a vector that fails residual checks."""


# -- kernel counting ----------------------------------------------------------


@dataclass(frozen=True)
class KernelReport:
    """Exact kernel and range dimensions of the difference operator family.

    rank is the exact rank of the difference operator.  The kernel of the
    operator is the space of functions constant on each weak component, so
    its dimension should equal num_components; the kernel of the adjoint
    is the cycle space.  components lists (vertices, edges) per weak
    component; formulas_consistent records the per-component cross-check
    dim_ker_adj = sum over components of m_c - (n_c - 1).
    """

    num_vertices: int
    num_edges: int
    num_components: int
    components: tuple[tuple[int, int], ...]
    rank: int
    dim_ker_diff: int
    dim_rg_diff: int
    dim_ker_adj: int
    dim_rg_adj: int
    dim_ker_dirac: int
    dim_ker_hamiltonian: int
    formulas_consistent: bool


def kernel_report(inc: IncidenceOperators) -> KernelReport:
    g = inc.graph
    comps = connected_components(g)
    vertex_to_comp = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            vertex_to_comp[v] = ci
    edge_counts = [0] * len(comps)
    for tail, _ in g.edges:
        edge_counts[vertex_to_comp[tail]] += 1
    breakdown = tuple((len(comp), edge_counts[ci]) for ci, comp in enumerate(comps))
    rank = exact_rank(inc.diff)
    n, m = g.num_vertices, g.num_edges
    dim_ker_diff = n - rank
    dim_ker_adj = m - rank
    formulas = dim_ker_diff == len(comps) and dim_ker_adj == sum(
        mc - (nc - 1) for nc, mc in breakdown
    )
    return KernelReport(
        num_vertices=n,
        num_edges=m,
        num_components=len(comps),
        components=breakdown,
        rank=rank,
        dim_ker_diff=dim_ker_diff,
        dim_rg_diff=rank,
        dim_ker_adj=dim_ker_adj,
        dim_rg_adj=rank,
        dim_ker_dirac=dim_ker_diff + dim_ker_adj,
        dim_ker_hamiltonian=dim_ker_diff + dim_ker_adj,
        formulas_consistent=formulas,
    )


def harmonic_vertex_basis(inc: IncidenceOperators) -> list[dict[int, int]]:
    """Integer basis of the kernel of the difference operator (component indicators)."""
    return exact_kernel_basis(inc.diff)


def harmonic_edge_basis(inc: IncidenceOperators) -> list[dict[int, int]]:
    """Integer basis of the kernel of the adjoint (the cycle space)."""
    return exact_kernel_basis(inc.diff_adj)


# -- spectra ------------------------------------------------------------------


def symmetric_spectrum(m: LinearMap, tol: float = 1e-8) -> np.ndarray:
    """Ascending eigenvalues of an exactly self-adjoint map.

    Real maps go straight to the symmetric eigensolver.  A complex map is
    embedded as the real symmetric operator [[re, -im], [im, re]], whose
    spectrum is that of the map with every eigenvalue doubled in
    multiplicity; adjacent pairs are then averaged back.  The pairing of
    the embedding is verified to tol.
    """
    if not m.is_self_adjoint():
        raise NotSelfAdjoint(f"{m!r} is not self-adjoint")
    if not m.has_imag():
        return np.linalg.eigvalsh(m.to_dense_real())
    dense = m.to_dense()
    n = dense.shape[0]
    emb = np.zeros((2 * n, 2 * n))
    emb[:n, :n] = dense.real
    emb[n:, n:] = dense.real
    emb[:n, n:] = -dense.imag
    emb[n:, :n] = dense.imag
    doubled = np.linalg.eigvalsh(emb)
    paired = doubled.reshape(-1, 2)
    scale = max(1.0, float(np.max(np.abs(doubled))) if doubled.size else 1.0)
    spread = float(np.max(np.abs(paired[:, 0] - paired[:, 1]))) if paired.size else 0.0
    # floored at solver noise: the exact self-adjointness check above already
    # rejects bad input, so a split here can only mean an implementation bug
    if spread > max(tol, 1e-10) * scale:
        raise NotSelfAdjoint(f"embedding pairs split by {spread}, expected doubled spectrum")
    return paired.mean(axis=1)


def eigensystem(m: LinearMap) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and orthonormal eigenvectors of a self-adjoint map."""
    if not m.is_self_adjoint():
        raise NotSelfAdjoint(f"{m!r} is not self-adjoint")
    if m.has_imag():
        return np.linalg.eigh(m.to_dense())
    return np.linalg.eigh(m.to_dense_real())


def multisets_match(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """Sorted pointwise comparison, absolute below magnitude 1, relative above."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if a.shape != b.shape:
        return False
    for x, y in zip(a, b):
        scale = max(abs(x), abs(y))
        bound = tol if scale <= 1.0 else tol * scale
        if abs(x - y) > bound:
            return False
    return True


@dataclass(frozen=True)
class PairingReport:
    """The two Laplacians share their nonzero spectrum.

    The number of zero eigenvalues on each side is fixed by the exact rank,
    never by a floating threshold: the vertex Laplacian has n - rank zeros,
    the edge Laplacian m - rank, and the trailing rank eigenvalues of both
    must agree to tolerance, and agree with the squared singular values of
    the difference operator.  The super Hamiltonian spectrum away from zero
    must be the multiset union of the two sides, so every nonzero level is
    at least twofold degenerate.
    """

    rank: int
    vertex_spectrum: np.ndarray
    edge_spectrum: np.ndarray
    singular_values: np.ndarray
    vertex_zeros: int
    edge_zeros: int
    nonzero_match: bool
    singular_match: bool
    hamiltonian_union_match: bool
    max_mismatch: float
    zero_block_bound: float

    @property
    def verdict(self) -> bool:
        return self.nonzero_match and self.singular_match and self.hamiltonian_union_match


def pairing_check(inc: IncidenceOperators, tol: float = 1e-8) -> PairingReport:
    rank = exact_rank(inc.diff)
    vertex_lap = inc.diff_adj @ inc.diff
    edge_lap = inc.diff @ inc.diff_adj
    vspec = symmetric_spectrum(vertex_lap, tol)
    espec = symmetric_spectrum(edge_lap, tol)
    n, m = inc.vertex.dim, inc.edge.dim
    vz, ez = n - rank, m - rank
    v_nonzero = vspec[vz:]
    e_nonzero = espec[ez:]
    if inc.edge.dim and inc.vertex.dim:
        sing = np.linalg.svd(inc.diff.to_dense_real(), compute_uv=False)
    else:
        sing = np.zeros(0)
    sing_nonzero = np.sort(sing[:rank])  # numpy sorts singular values descending
    max_mismatch = float(np.max(np.abs(v_nonzero - e_nonzero))) if rank else 0.0
    zero_block = 0.0
    if vz:
        zero_block = max(zero_block, float(np.max(np.abs(vspec[:vz]))))
    if ez:
        zero_block = max(zero_block, float(np.max(np.abs(espec[:ez]))))
    sup = build_super_operators(inc)
    hspec = symmetric_spectrum(sup.hamiltonian, tol)
    h_nonzero = hspec[vz + ez :]
    union = np.sort(np.concatenate([v_nonzero, e_nonzero]))
    return PairingReport(
        rank=rank,
        vertex_spectrum=vspec,
        edge_spectrum=espec,
        singular_values=np.sort(sing)[::-1],
        vertex_zeros=vz,
        edge_zeros=ez,
        nonzero_match=multisets_match(v_nonzero, e_nonzero, tol),
        singular_match=multisets_match(sing_nonzero**2, v_nonzero, tol)
        and multisets_match(sing_nonzero**2, e_nonzero, tol),
        hamiltonian_union_match=multisets_match(h_nonzero, union, tol),
        max_mismatch=max_mismatch,
        zero_block_bound=zero_block,
    )


@dataclass(frozen=True)
class DiracSpectrumReport:
    """Spectra of the two hermitian supercharges and their symmetry.

    Both spectra must be invariant under negation, agree with each other,
    and square to the super Hamiltonian spectrum; the defects are sorted
    pointwise multiset mismatches.
    """

    q1_spectrum: np.ndarray
    q2_spectrum: np.ndarray
    hamiltonian_spectrum: np.ndarray
    q1_symmetric: bool
    q2_symmetric: bool
    q1_symmetry_defect: float
    q2_symmetry_defect: float
    charges_match: bool
    squares_match: bool

    @property
    def verdict(self) -> bool:
        return self.q1_symmetric and self.q2_symmetric and self.charges_match and self.squares_match


def spectrum_symmetry_defect(spectrum: np.ndarray) -> float:
    """How far a sorted spectrum is from being invariant under negation."""
    s = np.sort(np.asarray(spectrum, dtype=float))
    return float(np.max(np.abs(s + s[::-1]))) if s.size else 0.0


def dirac_spectrum(sup: SuperOperators, tol: float = 1e-8) -> DiracSpectrumReport:
    q1spec = symmetric_spectrum(sup.q1, tol)
    q2spec = symmetric_spectrum(sup.q2, tol)
    hspec = symmetric_spectrum(sup.hamiltonian, tol)
    d1 = spectrum_symmetry_defect(q1spec)
    d2 = spectrum_symmetry_defect(q2spec)
    return DiracSpectrumReport(
        q1_spectrum=q1spec,
        q2_spectrum=q2spec,
        hamiltonian_spectrum=hspec,
        q1_symmetric=multisets_match(q1spec, -q1spec, tol),
        q2_symmetric=multisets_match(q2spec, -q2spec, tol),
        q1_symmetry_defect=d1,
        q2_symmetry_defect=d2,
        charges_match=multisets_match(q1spec, q2spec, tol),
        squares_match=multisets_match(q1spec**2, hspec, tol),
    )


# -- polar decomposition ------------------------------------------------------


@dataclass(frozen=True)
class PolarReport:
    """The difference operator split into a partial isometry times its modulus.

    modulus_vertex is the operator square root of the vertex Laplacian,
    modulus_edge of the edge Laplacian, each from its own eigensystem.
    isometry maps vertex functions to edge functions, unitary between the
    orthogonal complements of the kernels; its rank is fixed by exact
    elimination.  The projector residuals compare isometry*isometry and
    isometry isometry* against projectors assembled independently from the
    exact integer kernel bases.  Residuals are sup-norm defects.
    """

    rank: int
    singular_values: np.ndarray
    isometry: np.ndarray
    modulus_vertex: np.ndarray
    modulus_edge: np.ndarray
    residual_factorization: float
    residual_adjoint: float
    residual_modulus_transport: float
    residual_partial_isometry: float
    residual_intertwining: float
    residual_block_identity: float
    residual_domain_projector: float
    residual_range_projector: float

    @property
    def max_residual(self) -> float:
        return max(
            self.residual_factorization,
            self.residual_adjoint,
            self.residual_modulus_transport,
            self.residual_partial_isometry,
            self.residual_intertwining,
            self.residual_block_identity,
            self.residual_domain_projector,
            self.residual_range_projector,
        )


def _kernel_projector(vectors: list[dict[int, int]], dim: int) -> np.ndarray:
    """Orthogonal projector onto the span of exact integer kernel vectors."""
    if not vectors or dim == 0:
        return np.zeros((dim, dim))
    cols = np.zeros((dim, len(vectors)))
    for j, vec in enumerate(vectors):
        for r, v in vec.items():
            cols[r, j] = v
    q, _ = np.linalg.qr(cols)
    return q @ q.T


def polar_decompose(inc: IncidenceOperators) -> PolarReport:
    """Factor the difference operator as isometry @ modulus.

    The two moduli come from independent eigensystems of the two
    Laplacians.  The partial isometry is assembled from the singular
    vectors of the difference operator itself, keeping exactly rank
    singular directions with the rank fixed by exact elimination, so no
    floating cutoff decides what counts as zero.
    """
    rank = exact_rank(inc.diff)
    n, m = inc.vertex.dim, inc.edge.dim
    d = inc.diff.to_dense_real()
    vertex_lap = (inc.diff_adj @ inc.diff).to_dense_real()
    edge_lap = (inc.diff @ inc.diff_adj).to_dense_real()
    vvals, vvecs = np.linalg.eigh(vertex_lap)
    evals, evecs = np.linalg.eigh(edge_lap)
    # the lowest dim - rank eigenvalues are exact zeros; flattening them
    # before the square root stops sqrt from amplifying solver noise
    vvals[: n - rank] = 0.0
    evals[: m - rank] = 0.0
    modulus_vertex = vvecs @ np.diag(np.sqrt(np.clip(vvals, 0.0, None))) @ vvecs.T
    modulus_edge = evecs @ np.diag(np.sqrt(np.clip(evals, 0.0, None))) @ evecs.T
    if d.size:
        u, sing, vt = np.linalg.svd(d)
        isometry = u[:, :rank] @ vt[:rank, :]
    else:
        sing = np.zeros(0)
        isometry = np.zeros((m, n))

    def sup(x: np.ndarray) -> float:
        return float(np.max(np.abs(x))) if x.size else 0.0

    res_fact = sup(isometry @ modulus_vertex - d)
    res_adj = sup(modulus_vertex @ isometry.T - d.T)
    res_transport = sup(isometry @ modulus_vertex @ isometry.T - modulus_edge)
    res_partial = sup(isometry @ isometry.T @ isometry - isometry)
    res_inter = sup(
        isometry @ vertex_lap @ isometry.T - edge_lap @ (isometry @ isometry.T)
    )
    # the first-order block operator equals the block isometry times the
    # block modulus: [[0, S*],[S, 0]] @ diag(|d|, |d*|) = [[0, d*],[d, 0]]
    upper = isometry.T @ modulus_edge - d.T
    res_block = max(res_fact, sup(upper))
    p_ker_vertex = _kernel_projector(exact_kernel_basis(inc.diff), n)
    p_ker_edge = _kernel_projector(exact_kernel_basis(inc.diff_adj), m)
    res_domain = sup(isometry.T @ isometry + p_ker_vertex - np.eye(n))
    res_range = sup(isometry @ isometry.T + p_ker_edge - np.eye(m))
    return PolarReport(
        rank=rank,
        singular_values=sing[:rank],
        isometry=isometry,
        modulus_vertex=modulus_vertex,
        modulus_edge=modulus_edge,
        residual_factorization=res_fact,
        residual_adjoint=res_adj,
        residual_modulus_transport=res_transport,
        residual_partial_isometry=res_partial,
        residual_intertwining=res_inter,
        residual_block_identity=res_block,
        residual_domain_projector=res_domain,
        residual_range_projector=res_range,
    )


# -- eigenvector transport ----------------------------------------------------


@dataclass(frozen=True)
class TransportReport:
    """A nonzero vertex Laplacian eigenpair carried to the edge side.

    From an eigenpair (energy, f) of the vertex Laplacian with energy > 0,
    the normalized image g = diff f / sqrt(energy) is an edge Laplacian
    eigenvector with the same energy, and the two supercharge eigenvectors
    (f, +-g) on the direct sum space have Dirac eigenvalues +-sqrt(energy);
    the phase-twisted pairs (if, +-g) are eigenvectors of the second
    charge.  The plus and minus vectors are linearly independent, while
    their parity-pure parts (f, 0) and (0, g) are grading eigenvectors.
    Residuals are sup norms of the defining identities.
    """

    energy: float
    vertex_vector: StateVector
    edge_vector: StateVector
    residual_vertex: float
    residual_edge: float
    residual_down: float
    residual_up: float
    residual_dirac_plus: float
    residual_dirac_minus: float
    residual_q2_plus: float
    residual_q2_minus: float
    residual_hamiltonian: float
    residual_purity: float
    independent: bool

    @property
    def max_residual(self) -> float:
        return max(
            self.residual_vertex,
            self.residual_edge,
            self.residual_down,
            self.residual_up,
            self.residual_dirac_plus,
            self.residual_dirac_minus,
            self.residual_q2_plus,
            self.residual_q2_minus,
            self.residual_hamiltonian,
            self.residual_purity,
        )


def _sup(vec: np.ndarray) -> float:
    return float(np.max(np.abs(vec))) if vec.size else 0.0


def _dense_context(sup: SuperOperators, inc: IncidenceOperators) -> dict[str, np.ndarray]:
    return {
        "d": inc.diff.to_dense(),
        "d_adj": inc.diff_adj.to_dense(),
        "vertex_lap": (inc.diff_adj @ inc.diff).to_dense(),
        "edge_lap": (inc.diff @ inc.diff_adj).to_dense(),
        "dirac": sup.dirac.to_dense(),
        "q2": sup.q2.to_dense(),
        "ham": sup.hamiltonian.to_dense(),
        "chi": sup.grading.to_dense(),
    }


def transport_eigenpair(
    sup: SuperOperators,
    inc: IncidenceOperators,
    energy: float,
    vertex_vector: StateVector,
    tol: float = 1e-6,
) -> TransportReport:
    """Carry a positive-energy vertex eigenpair across the supersymmetry.

    Raises NotAnEigenpair if the input fails its own eigenvalue equation at
    tol, if the energy is not positive, or if the vector is negligibly
    small.
    """
    return _transport(_dense_context(sup, inc), inc, energy, vertex_vector, tol)


def _transport(
    ctx: dict[str, np.ndarray],
    inc: IncidenceOperators,
    energy: float,
    vertex_vector: StateVector,
    tol: float,
) -> TransportReport:
    if energy <= 0:
        raise NotAnEigenpair(f"transport requires positive energy, got {energy}")
    f = vertex_vector.coefficients
    norm_f = float(np.linalg.norm(f))
    if norm_f < tol:
        raise NotAnEigenpair("vertex vector is numerically zero")
    res_vertex = _sup(ctx["vertex_lap"] @ f - energy * f) / norm_f
    if res_vertex > tol:
        raise NotAnEigenpair(
            f"vertex residual {res_vertex} exceeds tolerance {tol} at energy {energy}"
        )
    root = float(np.sqrt(energy))
    d = ctx["d"]
    g = (d @ f) / root
    res_edge = _sup(ctx["edge_lap"] @ g - energy * g) / norm_f
    res_down = _sup(ctx["d_adj"] @ g - root * f) / norm_f
    res_up = _sup(d @ f - root * g) / norm_f
    dirac = ctx["dirac"]
    q2 = ctx["q2"]
    ham = ctx["ham"]
    chi = ctx["chi"]
    plus = np.concatenate([f, g])
    minus = np.concatenate([f, -g])
    res_dirac_plus = _sup(dirac @ plus - root * plus) / norm_f
    res_dirac_minus = _sup(dirac @ minus + root * minus) / norm_f
    # the second charge pairs the phase-twisted vertex part with the same edge part
    tw_plus = np.concatenate([1j * f, g])
    tw_minus = np.concatenate([1j * f, -g])
    res_q2_plus = _sup(q2 @ tw_plus - root * tw_plus) / norm_f
    res_q2_minus = _sup(q2 @ tw_minus + root * tw_minus) / norm_f
    res_ham = max(
        _sup(ham @ plus - energy * plus),
        _sup(ham @ minus - energy * minus),
    ) / norm_f
    pure_b = np.concatenate([f, np.zeros(inc.edge.dim)])
    pure_f = np.concatenate([np.zeros(inc.vertex.dim), g])
    res_purity = max(
        _sup(chi @ pure_b - pure_b),
        _sup(chi @ pure_f + pure_f),
    ) / norm_f
    gram = np.array(
        [
            [np.vdot(plus, plus), np.vdot(plus, minus)],
            [np.vdot(minus, plus), np.vdot(minus, minus)],
        ]
    )
    independent = bool(abs(np.linalg.det(gram)) > tol * max(1.0, norm_f**4))
    return TransportReport(
        energy=energy,
        vertex_vector=vertex_vector,
        edge_vector=StateVector(inc.edge, g),
        residual_vertex=res_vertex,
        residual_edge=res_edge,
        residual_down=res_down,
        residual_up=res_up,
        residual_dirac_plus=res_dirac_plus,
        residual_dirac_minus=res_dirac_minus,
        residual_q2_plus=res_q2_plus,
        residual_q2_minus=res_q2_minus,
        residual_hamiltonian=res_ham,
        residual_purity=res_purity,
        independent=independent,
    )


def transport_all(
    sup: SuperOperators, inc: IncidenceOperators, tol: float = 1e-6
) -> list[TransportReport]:
    """Transport every positive vertex Laplacian eigenpair.

    The zero block is identified by exact rank (the lowest n - rank
    eigenpairs are skipped), so near-zero numerical eigenvalues are never
    transported by mistake.
    """
    rank = exact_rank(inc.diff)
    vertex_lap = inc.diff_adj @ inc.diff
    vals, vecs = eigensystem(vertex_lap)
    zeros = inc.vertex.dim - rank
    ctx = _dense_context(sup, inc)
    out = []
    for i in range(zeros, len(vals)):
        vec = StateVector(inc.vertex, vecs[:, i])
        out.append(_transport(ctx, inc, float(vals[i]), vec, tol))
    return out


# -- zero modes ---------------------------------------------------------------


@dataclass(frozen=True)
class ZeroModeReport:
    """Exact classification of the hamiltonian kernel by parity.

    Bosonic zero modes are locally constant vertex functions, one per
    weakly connected component; fermionic zero modes are cycle vectors.
    counts_match compares the exact kernel bases against the dimension
    report; cycles_span_kernel checks by exact rank that the fundamental
    cycle basis spans the same space as the adjoint kernel.  The index is
    their difference, components minus cycle dimension.
    """

    bosonic: int
    fermionic: int
    counts_match: bool
    cycles_span_kernel: bool

    @property
    def index(self) -> int:
        return self.bosonic - self.fermionic

    @property
    def verdict(self) -> bool:
        return self.counts_match and self.cycles_span_kernel


def zero_mode_classification(inc: IncidenceOperators) -> ZeroModeReport:
    from .cycles import fundamental_cycle_basis

    rep = kernel_report(inc)
    vertex_kernel = exact_kernel_basis(inc.diff)
    edge_kernel = exact_kernel_basis(inc.diff_adj)
    counts = len(vertex_kernel) == rep.dim_ker_diff and len(edge_kernel) == rep.dim_ker_adj
    cycles = fundamental_cycle_basis(inc.graph)
    combined = stack_columns(list(edge_kernel) + list(cycles.vectors), inc.edge)
    spans = (
        len(cycles.vectors) == rep.dim_ker_adj
        and (exact_rank(combined) if combined.domain.dim else 0) == rep.dim_ker_adj
    )
    return ZeroModeReport(
        bosonic=len(vertex_kernel),
        fermionic=len(edge_kernel),
        counts_match=counts,
        cycles_span_kernel=spans,
    )
