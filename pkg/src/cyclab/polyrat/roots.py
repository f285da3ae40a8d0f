# this_file: src/cyclab/polyrat/roots.py
"""Polynomial roots by companion-matrix eigenvalues, plus clustering of multiple roots."""

from dataclasses import dataclass

import numpy as np
from loguru import logger
from scipy import linalg
from scipy.cluster import hierarchy

from .poly import ComplexArray, Poly
from .series import synth_div


def companion_matrix(p: Poly) -> ComplexArray:
    """Frobenius companion matrix of ``p`` (degree >= 1, nonzero constant term not required)."""
    if p.degree < 1:
        raise ValueError(f"Companion matrix needs degree >= 1, got {p.degree}")
    monic = p.array / p.coeffs[-1]
    n = p.degree
    mat = np.zeros((n, n), dtype=complex)
    mat[1:, :-1] = np.eye(n - 1, dtype=complex)
    mat[:, -1] = -monic[:-1]
    return mat


def poly_roots(p: Poly) -> ComplexArray:
    """All roots of ``p`` with multiplicity, as companion eigenvalues.

    Exact zero roots are split off before the eigenvalue problem.
    """
    if p.is_zero:
        raise ValueError("The zero polynomial has no finite root set")
    coeffs = p.array
    shift = 0
    while shift < len(coeffs) and coeffs[shift] == 0:
        shift += 1
    reduced = Poly.from_array(coeffs[shift:])
    zeros = np.zeros(shift, dtype=complex)
    if reduced.degree < 1:
        return zeros
    eig = linalg.eigvals(companion_matrix(reduced))
    return np.concatenate([zeros, np.asarray(eig, dtype=complex)])


@dataclass(frozen=True)
class RootCluster:
    """A group of numerically coincident roots."""

    centroid: complex
    multiplicity: int
    spread: float
    members: tuple[complex, ...] = ()


def cluster_roots(roots: ComplexArray, radius: float) -> list[RootCluster]:
    """Group roots by single linkage at ``radius`` (scaled by 1 + |root|).

    The centroid of a perturbed k-fold root is accurate to roughly machine precision
    even though the individual roots scatter by about eps^(1/k).
    """
    values = np.asarray(roots, dtype=complex).ravel()
    if values.size == 0:
        return []
    if values.size == 1:
        labels = np.ones(1, dtype=int)
    else:
        i, j = np.triu_indices(values.size, k=1)
        moduli = np.abs(values)
        gaps = np.abs(values[i] - values[j]) / (1.0 + np.maximum(moduli[i], moduli[j]))
        tree = hierarchy.linkage(gaps, method="single")
        labels = hierarchy.fcluster(tree, t=radius, criterion="distance")

    clusters: list[RootCluster] = []
    for label in np.unique(labels):
        pts = values[labels == label]
        centroid = complex(np.mean(pts))
        spread = float(np.max(np.abs(pts - centroid))) if pts.size > 1 else 0.0
        members = tuple(complex(p) for p in pts)
        clusters.append(RootCluster(centroid, int(pts.size), spread, members))
        if pts.size > 1:
            logger.debug(f"Root cluster at {centroid:.6g} with multiplicity {pts.size}")
    clusters.sort(key=lambda c: (circle_angle(c.centroid), abs(c.centroid)))
    return clusters


def circle_angle(z: complex, snap: float = 1e-12) -> float:
    """Argument of ``z`` in [0, 2 pi), snapping tiny negative angles to 0."""
    angle = float(np.angle(z))
    if angle < -snap:
        angle += 2 * np.pi
    return max(angle, 0.0)


def unimodular_clusters(
    clusters: list[RootCluster], tol: float
) -> tuple[list[RootCluster], list[RootCluster]]:
    """Split clusters into (on-circle, off-circle); on-circle centroids are projected to |z| = 1."""
    on_circle: list[RootCluster] = []
    off_circle: list[RootCluster] = []
    for cluster in clusters:
        modulus = abs(cluster.centroid)
        if abs(modulus - 1.0) <= tol:
            projected = cluster.centroid / modulus
            on_circle.append(
                RootCluster(projected, cluster.multiplicity, cluster.spread, cluster.members)
            )
        else:
            off_circle.append(cluster)
    return on_circle, off_circle


def taylor_at(p: Poly, zeta: complex, order: int) -> ComplexArray:
    """First ``order`` Taylor coefficients of ``p`` at ``zeta`` by repeated synthetic division."""
    out = np.zeros(order, dtype=complex)
    rest = p
    for k in range(order):
        rest, out[k] = synth_div(rest, zeta)
    return out


def vanishes_to_order(p: Poly, zeta: complex, order: int, tol: float) -> bool:
    """Whether p has a zero of order ``order`` at the unimodular point ``zeta``.

    The j-th Taylor coefficient at zeta is compared against sum_m |a_m| C(m, j), its
    largest possible size on the circle.
    """
    values = np.abs(taylor_at(p, zeta, order))
    bounds = taylor_at(Poly.from_array(np.abs(p.array)), 1.0, order).real
    return bool(np.all(values <= tol * bounds))


def circle_clusters(
    p: Poly, roots: ComplexArray, radius: float, boundary_tol: float, vanishing_tol: float
) -> tuple[list[RootCluster], list[RootCluster]]:
    """Cluster the roots of ``p`` and split them into (on-circle, off-circle).

    A cluster of k roots with centroid within ``boundary_tol`` of the circle is a k-fold
    circle zero only if p vanishes to order k at the projected centroid. Otherwise its
    members are regrouped at radius ``boundary_tol``, so a root just outside the circle
    does not merge with its neighbour just inside.
    """
    on_circle, off_circle = unimodular_clusters(cluster_roots(roots, radius), boundary_tol)
    confirmed: list[RootCluster] = []
    for cluster in on_circle:
        if vanishes_to_order(p, cluster.centroid, cluster.multiplicity, vanishing_tol):
            confirmed.append(cluster)
            continue
        members = np.array(cluster.members, dtype=complex)
        if radius > boundary_tol:
            logger.debug(
                f"No {cluster.multiplicity}-fold circle zero at {cluster.centroid:.6g}, regrouping"
            )
            regrouped_on, regrouped_off = circle_clusters(
                p, members, boundary_tol, boundary_tol, vanishing_tol
            )
            confirmed.extend(regrouped_on)
            off_circle.extend(regrouped_off)
        else:
            off_circle.extend(RootCluster(complex(m), 1, 0.0, (complex(m),)) for m in members)
    confirmed.sort(key=lambda c: circle_angle(c.centroid))
    return confirmed, off_circle


def poles_in_closed_disc(den: Poly, tol: float = 1e-12) -> list[complex]:
    """Roots of a denominator with modulus at most 1 + tol."""
    if den.degree < 1:
        return []
    return [complex(r) for r in poly_roots(den) if abs(r) <= 1.0 + tol]
