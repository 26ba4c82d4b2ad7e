"""Spiral-groove thrust air bearing: compressible Reynolds solver and
narrow-groove analytic reference.

The steady isothermal compressible Reynolds equation in polar coordinates,

    (1/r) d/dr ( r p h^3 dp/dr ) + (1/r^2) d/dth ( p h^3 dp/dth )
        = 6 mu omega d(p h)/dth,

is solved on spiral-aligned coordinates u = ln(r/r_in), v = th - u/tan(beta),
in which the groove pattern is a one-dimensional stripe field h(v).  With
the substitution q = p^2 the transformed equation reads

    du( D du q ) - s du( D dv q ) - s dv( D du q ) + (1+s^2) dv( D dv q )
        = 2 Lam exp(2u) dv( sqrt(q) h ),     D = h^3,  s = 1/tan(beta),

discretized by a finite-volume scheme that is vertex-centered in u (ambient
Dirichlet rows at both radii) and cell-centered in the periodic v direction.
Groove edges are v = const lines; across each v-face the land/groove
segments compose exactly: Poiseuille conductance in series, sum(L/h^3), and
the Couette drive weighted by sum(L/h^2)/sum(L/h^3) - the flux-conserving
(harmonic) treatment of the step film.  On grids whose angular count is a
multiple of four times the groove count the edges coincide with faces, the
coefficients are exact, and the observed convergence is second order.
The nonlinear system (the Couette term carries sqrt(q)) is solved by damped
Newton iteration with a colored finite-difference sparse Jacobian.

The narrow-groove (infinite-groove-number) reference evaluates the
classical effective-medium solution in the incompressible limit and serves
as an independent cross-check on the numerical load.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.linalg import spsolve

AIR_VISCOSITY = 1.85e-5  # Pa s, room-temperature film
MIN_RADIAL_NODES = 33  # 32 radial intervals
MIN_ANGULAR_NODES = 64


class SolverError(RuntimeError):
    """Newton iteration failed; carries the residual history."""

    def __init__(self, message, residual_history=None):
        super().__init__(message)
        self.residual_history = residual_history or []


class NoEquilibriumError(RuntimeError):
    """Axial balance has no root in the clearance interval."""


@dataclass(frozen=True)
class SpiralGrooveBearing:
    """Spiral-groove thrust face geometry.

    Only the groove depths are reported for the hardware (15 um top, 36 um
    bottom); radii, count, angle and width fraction are toolkit defaults
    sized to the rotor hub annulus and overridable in config.
    """

    inner_radius: float = 1.0e-3  # m
    outer_radius: float = 2.2e-3  # m
    groove_depth: float = 15.0e-6  # m
    groove_count: int = 12
    spiral_angle: float = 20.0  # deg from circumferential
    groove_width_fraction: float = 0.5
    pump_direction: str = "pump-in"  # or "pump-out"

    def __post_init__(self):
        if not self.outer_radius > self.inner_radius > 0.0:
            raise ValueError("radii must satisfy outer > inner > 0")
        if self.groove_depth < 0.0:
            raise ValueError("groove_depth must be non-negative")
        if self.groove_count < 4:
            raise ValueError("groove_count must be at least 4")
        if not 5.0 < self.spiral_angle < 85.0:
            raise ValueError("spiral_angle must lie in (5, 85) degrees")
        if not 0.0 < self.groove_width_fraction < 1.0:
            raise ValueError("groove_width_fraction must lie in (0, 1)")
        if self.pump_direction not in ("pump-in", "pump-out"):
            raise ValueError("pump_direction must be 'pump-in' or 'pump-out'")


@dataclass(frozen=True)
class FilmState:
    nominal_clearance: float = 5.0e-6  # m
    rpm: float = 15000.0
    ambient_pressure: float = 101325.0  # Pa
    viscosity: float = AIR_VISCOSITY  # Pa s

    def __post_init__(self):
        if self.nominal_clearance <= 0.0:
            raise ValueError("nominal_clearance must be positive")
        if self.ambient_pressure <= 0.0 or self.viscosity <= 0.0:
            raise ValueError("ambient_pressure and viscosity must be positive")

    @property
    def omega(self) -> float:
        return 2.0 * math.pi * self.rpm / 60.0


@dataclass(frozen=True)
class PressureField:
    """Solved pressures on the spiral-aligned node lattice.

    radii has shape (n_r,); angles and pressures have shape (n_r, n_theta).
    Each radial row carries its own angular stations (the lattice is sheared
    along the spirals); every row is 2 pi periodic, and the first and last
    radial rows sit exactly at ambient pressure.
    """

    radii: np.ndarray  # (n_r,) node radii, m
    angles: np.ndarray  # (n_r, n_theta) node angles in [0, 2pi), rad
    pressures: np.ndarray  # (n_r, n_theta) absolute pressures, Pa
    ambient_pressure: float  # Pa


@dataclass(frozen=True)
class AxialEquilibrium:
    top_clearance: float  # m
    bottom_clearance: float  # m
    top_load: float  # N
    bottom_load: float  # N
    net_load: float  # N, top minus bottom
    converged: bool


def signed_spiral_tangent(bearing: SpiralGrooveBearing) -> float:
    """Tangent of the spiral angle, signed by pump direction.

    Pump-in grooves drag gas inward for positive rotation (pressurising the
    interior); the pump-out face is the mirrored pattern.
    """
    k = math.tan(math.radians(bearing.spiral_angle))
    return -k if bearing.pump_direction == "pump-in" else k


def in_groove(bearing: SpiralGrooveBearing, r, theta):
    """Groove membership of points (r, theta); broadcasts over arrays.

    Grooves are bands centered on the logarithmic spiral seed lines
    theta = ln(r/r_in)/tan(beta) + 2 pi m / N.
    """
    k = signed_spiral_tangent(bearing)
    psi = theta - np.log(np.asarray(r) / bearing.inner_radius) / k
    s = np.mod(psi * bearing.groove_count / (2.0 * math.pi)
               + 0.5 * bearing.groove_width_fraction, 1.0)
    return s < bearing.groove_width_fraction


def film_thickness(bearing: SpiralGrooveBearing, film: FilmState, r, theta):
    """Local film thickness, m: clearance plus groove depth inside grooves."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < bearing.inner_radius) or np.any(r_arr > bearing.outer_radius):
        raise ValueError(
            f"radius outside [{bearing.inner_radius}, {bearing.outer_radius}] m"
        )
    h = np.where(in_groove(bearing, r_arr, theta),
                 film.nominal_clearance + bearing.groove_depth,
                 film.nominal_clearance)
    return float(h) if np.isscalar(r) and np.isscalar(theta) else h


def compressibility_number(bearing: SpiralGrooveBearing, film: FilmState) -> float:
    """Lambda = 6 mu omega r_out^2 / (p_a c^2)."""
    return (6.0 * film.viscosity * film.omega * bearing.outer_radius ** 2
            / (film.ambient_pressure * film.nominal_clearance ** 2))


def solve_reynolds(bearing: SpiralGrooveBearing, film: FilmState,
                   n_r: int = 65, n_theta: int = 96,
                   tolerance: float = 1.0e-9, max_iterations: int = 60) -> PressureField:
    """Solve the steady compressible Reynolds equation on an n_r x n_theta grid.

    n_r counts radial node rows (including the two ambient boundary rows);
    n_theta counts angular cells.  For exactly face-aligned groove edges use
    an n_theta that is a multiple of four times the groove count.  A damped
    Newton iteration drives every node's residual below `tolerance` relative
    to the magnitude of that node's flux terms; steps are halved while they
    push the squared pressure below (0.1 ambient)^2 or fail to reduce the
    residual norm.
    """
    if n_r < MIN_RADIAL_NODES or n_theta < MIN_ANGULAR_NODES:
        raise ValueError(
            f"grid must be at least {MIN_RADIAL_NODES} x {MIN_ANGULAR_NODES} nodes"
        )
    if n_theta % 4 != 0:
        raise ValueError("n_theta must be a multiple of 4")
    p_amb = film.ambient_pressure
    clearance = film.nominal_clearance
    k = signed_spiral_tangent(bearing)
    s = 1.0 / k
    # compressibility_number carries the rotation sign through omega
    lam = (compressibility_number(bearing, film)
           * (bearing.inner_radius / bearing.outer_radius) ** 2)

    u_span = math.log(bearing.outer_radius / bearing.inner_radius)
    du = u_span / (n_r - 1)
    dv = 2.0 * math.pi / n_theta
    u_nodes = np.linspace(0.0, u_span, n_r)
    v_nodes = (np.arange(n_theta) + 0.5) * dv

    h_land = 1.0
    h_groove = (clearance + bearing.groove_depth) / clearance

    # Column film values (strips are v = const bands).
    a_frac = bearing.groove_width_fraction
    n_g = bearing.groove_count
    col_in_groove = np.mod(v_nodes * n_g / (2.0 * math.pi) + 0.5 * a_frac,
                           1.0) < a_frac
    h_col = np.where(col_in_groove, h_groove, h_land)
    d_col = h_col ** 3

    # v-face path geometry.  Face j sits between columns j-1 and j; the path
    # between the two nodes may contain one groove edge whose position is
    # known analytically.  Each side's film value and length feed the exact
    # series composites; field means over each side come from within-strip
    # linear reconstruction so that the composites stay second-order
    # accurate across the film step.
    h_left_col = np.roll(h_col, 1)  # film at node j-1 for face j
    h_right_col = h_col
    len_left = np.full(n_theta, 0.5 * dv)
    len_right = np.full(n_theta, 0.5 * dv)
    scale_y = n_g / (2.0 * math.pi)
    for j in range(n_theta):
        v_a = (j - 0.5) * dv
        v_b = (j + 0.5) * dv
        y_a = v_a * scale_y + 0.5 * a_frac
        y_b = v_b * scale_y + 0.5 * a_frac
        edges = []
        m = math.floor(y_a)
        while m <= y_b + 1.0:
            for cand in (float(m), m + a_frac):
                if y_a < cand < y_b:
                    edges.append(cand)
            m += 1
        if len(edges) == 1:
            v_e = (edges[0] - 0.5 * a_frac) / scale_y
            len_left[j] = v_e - v_a
            len_right[j] = v_b - v_e
        # 0 edges: uniform path; >1 edges (under-resolved stripes): keep the
        # midpoint split, which degrades gracefully to first order.
    s3 = len_left / h_left_col ** 3 + len_right / h_right_col ** 3
    inv_h2_left = len_left / h_left_col ** 2
    inv_h2_right = len_right / h_right_col ** 2

    # Within-strip slope validity for the reconstruction.
    valid_left = np.roll(col_in_groove, 2) == np.roll(col_in_groove, 1)
    valid_right = np.roll(col_in_groove, -1) == col_in_groove
    kinked = h_left_col != h_right_col

    def side_means(field):
        """Per-face means of a node field over the left/right path sides.

        field has shape (rows, n_theta); returns (m_left, m_right) of the
        same shape.  Kink-free faces use the linear interpolant between the
        two nodes; kinked faces extrapolate from inside each strip.
        """
        g_b = field
        g_a = np.roll(field, 1, 1)
        slope_l = np.where(valid_left[None, :],
                           (g_a - np.roll(field, 2, 1)) / dv, 0.0)
        slope_r = np.where(valid_right[None, :],
                           (np.roll(field, -1, 1) - g_b) / dv, 0.0)
        m_l_kink = g_a + 0.5 * slope_l * len_left[None, :]
        m_r_kink = g_b - 0.5 * slope_r * len_right[None, :]
        m_l_plain = 0.75 * g_a + 0.25 * g_b
        m_r_plain = 0.25 * g_a + 0.75 * g_b
        m_l = np.where(kinked[None, :], m_l_kink, m_l_plain)
        m_r = np.where(kinked[None, :], m_r_kink, m_r_plain)
        return m_l, m_r

    # exp(2u) integrated over each interior row's control span, and nodal /
    # face values (the face value is the arithmetic nodal mean so the
    # uniform-film wedge cancels exactly).
    e_cell = (np.exp(2.0 * (u_nodes[1:-1] + 0.5 * du))
              - np.exp(2.0 * (u_nodes[1:-1] - 0.5 * du))) / 2.0
    e_nodes = np.exp(2.0 * u_nodes)
    e_face = 0.5 * (e_nodes[:-1] + e_nodes[1:])

    n_rows = n_r - 2
    n_unknown = n_rows * n_theta
    one_plus_s2 = 1.0 + s * s

    def full_field(q_int):
        q = np.empty((n_r, n_theta))
        q[0, :] = 1.0
        q[-1, :] = 1.0
        q[1:-1, :] = q_int
        return q

    def fluxes(q):
        """Residual of every interior cell plus the per-node scale.

        v-face fluxes F_B are composed exactly over the land/groove path
        segments.  The u-face flux F_A needs the cross derivative dvQ,
        whose raw estimate is polluted by the pressure kinks at groove
        edges; it is eliminated through the continuous v-flux,
        F_A = D duQ / (2 (1+s^2)) - s/(1+s^2) (F_B + Lam exp(2u) P H).
        """
        p_nodes = np.sqrt(q)
        dq_all = q - np.roll(q, 1, 1)
        # d/du of the path integral of Q (for the cross term): central at
        # interior rows, one-sided second order at the boundary rows.
        m_l_q, m_r_q = side_means(q)
        i_q = len_left[None, :] * m_l_q + len_right[None, :] * m_r_q
        di_q = np.empty_like(i_q)
        di_q[1:-1, :] = (i_q[2:, :] - i_q[:-2, :]) / (2.0 * du)
        di_q[0, :] = (-3.0 * i_q[0, :] + 4.0 * i_q[1, :] - i_q[2, :]) / (2.0 * du)
        di_q[-1, :] = (3.0 * i_q[-1, :] - 4.0 * i_q[-2, :] + i_q[-3, :]) / (2.0 * du)
        # Couette path sum of P / h^2
        m_l_p, m_r_p = side_means(p_nodes)
        sp = inv_h2_left[None, :] * m_l_p + inv_h2_right[None, :] * m_r_p

        # Pointwise v-face flux F_B at every node row (continuous in v).
        fb_rows = (0.5 * one_plus_s2 * dq_all - 0.5 * s * di_q
                   - lam * e_nodes[:, None] * sp) / s3[None, :]

        # u-face flux with the cross term eliminated via F_B.
        fb_at_nodes = 0.5 * (fb_rows + np.roll(fb_rows, -1, 1))
        fb_uface = 0.5 * (fb_at_nodes[:-1, :] + fb_at_nodes[1:, :])
        p_uface = 0.5 * (p_nodes[:-1, :] + p_nodes[1:, :])
        fa = (d_col[None, :] * (q[1:, :] - q[:-1, :]) / (2.0 * one_plus_s2 * du)
              - (s / one_plus_s2)
              * (fb_uface + lam * e_face[:, None] * p_uface * h_col[None, :]))
        fu_diff = dv * (fa[1:, :] - fa[:-1, :])

        # Cell-integrated v-face fluxes for the interior control volumes.
        fv = (du * (0.5 * one_plus_s2 * dq_all[1:-1, :]
                    - 0.5 * s * di_q[1:-1, :])
              - lam * e_cell[:, None] * sp[1:-1, :]) / s3[None, :]
        fv_diff = np.roll(fv, -1, 1) - fv

        residual = fu_diff + fv_diff
        scale = (2.0 * dv * d_col[None, :] / (one_plus_s2 * du)
                 + 2.0 * dv * abs(s) / one_plus_s2
                 * (1.0 + abs(lam) * e_cell[:, None] / du * h_col[None, :])
                 + du * one_plus_s2 * (1.0 / s3 + 1.0 / np.roll(s3, -1))[None, :]
                 + abs(lam) * e_cell[:, None]
                 * ((inv_h2_left + inv_h2_right) / s3
                    + np.roll((inv_h2_left + inv_h2_right) / s3, -1))[None, :]
                 + 0.5 * abs(s) * dv
                 * (1.0 / s3 + 1.0 / np.roll(s3, -1))[None, :])
        return residual, scale

    # Residual stencil reach: two rows and two columns each way.  Colored
    # finite differences need a column stride of at least five that divides
    # the periodic direction.
    col_stride = next(c for c in range(5, n_theta + 1) if n_theta % c == 0)

    def jacobian(q):
        """Colored finite-difference Jacobian of the residual."""
        base, _ = fluxes(q)
        eps = 1.0e-7
        idx = np.arange(n_unknown).reshape(n_rows, n_theta)
        rows, cols, vals = [], [], []
        offsets = [(di, dj) for di in (-2, -1, 0, 1, 2)
                   for dj in (-2, -1, 0, 1, 2)]
        for ci in range(5):
            for cj in range(col_stride):
                mask = np.zeros((n_rows, n_theta), dtype=bool)
                mask[ci::5, cj::col_stride] = True
                if not np.any(mask):
                    continue
                q_pert = q.copy()
                q_pert[1:-1, :][mask] += eps
                pert, _ = fluxes(q_pert)
                delta = (pert - base) / eps
                src_i, src_j = np.nonzero(mask)
                for di, dj in offsets:
                    ti = src_i + di
                    keep = (ti >= 0) & (ti < n_rows)
                    if not np.any(keep):
                        continue
                    tj = (src_j[keep] + dj) % n_theta
                    ti = ti[keep]
                    block = delta[ti, tj]
                    nz = block != 0.0
                    if not np.any(nz):
                        continue
                    rows.append(idx[ti[nz], tj[nz]])
                    cols.append(idx[src_i[keep][nz], src_j[keep][nz]])
                    vals.append(block[nz])
        return coo_matrix(
            (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
            shape=(n_unknown, n_unknown)).tocsr()

    q_int = np.ones((n_rows, n_theta))
    history = []
    for iteration in range(max_iterations):
        f, scale = fluxes(full_field(q_int))
        res = float(np.max(np.abs(f) / scale))
        history.append(res)
        if res < tolerance:
            break
        jac = jacobian(full_field(q_int))
        step = spsolve(jac, -f.ravel()).reshape(n_rows, n_theta)
        norm0 = float(np.linalg.norm(f))
        alpha = 1.0
        for _ in range(40):
            trial = q_int + alpha * step
            if np.min(trial) <= 0.01:
                alpha *= 0.5
                continue
            f_trial, _ = fluxes(full_field(trial))
            if float(np.linalg.norm(f_trial)) <= (1.0 - 1e-4 * alpha) * norm0:
                break
            alpha *= 0.5
        else:
            raise SolverError(
                f"line search stalled at iteration {iteration}", history)
        q_int = q_int + alpha * step
    else:
        raise SolverError(
            f"Newton did not reach residual {tolerance:g} in {max_iterations} "
            f"iterations (last {history[-1]:.3e})", history)

    pressures = np.sqrt(full_field(q_int)) * p_amb
    radii = bearing.inner_radius * np.exp(u_nodes)
    angles = np.mod(v_nodes[None, :] + u_nodes[:, None] / k, 2.0 * math.pi)
    return PressureField(radii=radii, angles=angles, pressures=pressures,
                         ambient_pressure=p_amb)


def load_capacity(field: PressureField) -> float:
    """Integral of gauge pressure over the annulus, N.

    Rectangle rule along each periodic angular row; across rows the area
    element r dr = r_in^2 exp(2u) du is integrated against piecewise-linear
    nodal weights in closed form, so a field with uniform gauge pressure
    integrates to exactly gauge * annulus area.
    """
    gauge = field.pressures - field.ambient_pressure
    row_mean = gauge.mean(axis=1)

    r_in = field.radii[0]
    u = np.log(field.radii / r_in)

    def ramp_up(a, b):
        # integral of exp(2u) (u - a)/(b - a) over [a, b]
        return (math.exp(2.0 * b) * (2.0 * (b - a) - 1.0) + math.exp(2.0 * a)) \
            / (4.0 * (b - a))

    weights = np.zeros_like(u)
    for i in range(u.size - 1):
        a, b = u[i], u[i + 1]
        total = (math.exp(2.0 * b) - math.exp(2.0 * a)) / 2.0
        rise = ramp_up(a, b)
        weights[i + 1] += rise
        weights[i] += total - rise
    return float(2.0 * math.pi * r_in ** 2 * np.dot(weights, row_mean))


def solve_load(bearing: SpiralGrooveBearing, film: FilmState,
               n_r: int = 65, n_theta: int = 96) -> float:
    """Convenience: solve and integrate the load, N."""
    return load_capacity(solve_reynolds(bearing, film, n_r, n_theta))


def narrow_groove_reference(bearing: SpiralGrooveBearing, film: FilmState) -> float:
    """Narrow-groove-theory load in the incompressible limit, N.

    Effective-medium coefficients for the striped film (parallel/series
    conductances and the Couette coupling) give an axisymmetric radial
    pumping flux; the pressure profile follows from uniform net through-flow
    with ambient pressure at both edges.  Positive for pump-in at positive
    rotation, negative for pump-out.
    """
    if bearing.groove_count < 12:
        warnings.warn(
            f"narrow-groove theory assumes many grooves; count = "
            f"{bearing.groove_count} is below 12", stacklevel=2)
    a = bearing.groove_width_fraction
    h1 = film.nominal_clearance
    h2 = film.nominal_clearance + bearing.groove_depth
    k_par = (1.0 - a) * h1 ** 3 + a * h2 ** 3
    k_ser = 1.0 / ((1.0 - a) / h1 ** 3 + a / h2 ** 3)
    h_t = (1.0 - a) * h1 + a * h2
    h_n = k_ser * ((1.0 - a) / h1 ** 2 + a / h2 ** 2)
    beta = math.radians(bearing.spiral_angle)
    sign = 1.0 if bearing.pump_direction == "pump-in" else -1.0
    sin_b, cos_b = math.sin(beta), math.cos(beta)
    coupling = sin_b * cos_b * (h_t - h_n)
    k_rr = k_par * sin_b ** 2 + k_ser * cos_b ** 2

    r_in, r_out = bearing.inner_radius, bearing.outer_radius
    log_ratio = math.log(r_out / r_in)
    j_quad = ((r_out ** 4 - r_in ** 4) / 4.0
              - r_in ** 2 * (r_out ** 2 - r_in ** 2) / 2.0)
    j_log = (r_out ** 2 / 2.0 * log_ratio - (r_out ** 2 - r_in ** 2) / 4.0)
    j_total = j_quad - (r_out ** 2 - r_in ** 2) / log_ratio * j_log
    # j_total < 0 for r_out > r_in, so inward pumping (negative coupling
    # flux) yields a positive load.
    return sign * (-6.0) * math.pi * film.viscosity * film.omega \
        * coupling * j_total / k_rr


def axial_stiffness(bearing: SpiralGrooveBearing, film: FilmState,
                    n_r: int = 65, n_theta: int = 96,
                    relative_step: float = 1.0e-3) -> float:
    """Central-difference stiffness -dW/dc, N/m (positive = restoring)."""
    dc = relative_step * film.nominal_clearance
    load_hi = solve_load(bearing, replace(film, nominal_clearance=film.nominal_clearance + dc),
                         n_r, n_theta)
    load_lo = solve_load(bearing, replace(film, nominal_clearance=film.nominal_clearance - dc),
                         n_r, n_theta)
    return -(load_hi - load_lo) / (2.0 * dc)


def axial_equilibrium(top: SpiralGrooveBearing, bottom: SpiralGrooveBearing,
                      total_gap: float, external_load: float, rpm: float,
                      ambient_pressure: float = 101325.0,
                      viscosity: float = AIR_VISCOSITY,
                      n_r: int = 33, n_theta: int = 64,
                      load_tolerance: float = 1.0e-6,
                      scan_points: int = 48) -> AxialEquilibrium:
    """Clearance split where the top/bottom load difference balances an
    external axial load.

    Sign convention: each face's load is the gauge-pressure integral of its
    own film; net_load = top_load - bottom_load is the force the pair exerts
    pressing the rotor toward the bottom face, and equilibrium makes it
    equal the externally applied load (positive pressing the rotor up
    against the pair, e.g. drive-gas lift of magnitude rotor weight).

    Scans c_top for a sign change of the imbalance, then bisects to
    |net_load - external_load| <= load_tolerance.
    """
    if total_gap <= 0.0:
        raise ValueError("total_gap must be positive")

    def net(c_top):
        film_top = FilmState(c_top, rpm, ambient_pressure, viscosity)
        film_bot = FilmState(total_gap - c_top, rpm, ambient_pressure, viscosity)
        w_top = solve_load(top, film_top, n_r, n_theta)
        w_bot = solve_load(bottom, film_bot, n_r, n_theta)
        return w_top - w_bot, w_top, w_bot

    lo_frac, hi_frac = 0.02, 0.98
    fractions = np.linspace(lo_frac, hi_frac, scan_points)
    values = []
    c_lo = c_hi = None
    for frac in fractions:
        imbalance = net(frac * total_gap)[0] - external_load
        values.append(imbalance)
        if len(values) > 1 and values[-2] * values[-1] <= 0.0:
            c_lo = fractions[len(values) - 2] * total_gap
            c_hi = frac * total_gap
            lo_val = values[-2]
            break
    if c_lo is None:
        raise NoEquilibriumError(
            f"no sign change of the axial imbalance over c_top in "
            f"[{lo_frac * total_gap:.3e}, {hi_frac * total_gap:.3e}] m; "
            f"endpoint imbalances {values[0]:.3e} N and {values[-1]:.3e} N"
        )

    clearance_tolerance = 1.0e-10  # m, pins the split well below load noise
    for _ in range(80):
        c_mid = 0.5 * (c_lo + c_hi)
        net_mid, w_top, w_bot = net(c_mid)
        imbalance = net_mid - external_load
        if abs(imbalance) <= load_tolerance and (c_hi - c_lo) <= clearance_tolerance:
            break
        if lo_val * imbalance <= 0.0:
            c_hi = c_mid
        else:
            c_lo = c_mid
            lo_val = imbalance
    else:
        c_mid = 0.5 * (c_lo + c_hi)
        net_mid, w_top, w_bot = net(c_mid)
        imbalance = net_mid - external_load
    return AxialEquilibrium(
        top_clearance=c_mid, bottom_clearance=total_gap - c_mid,
        top_load=w_top, bottom_load=w_bot, net_load=net_mid,
        converged=abs(imbalance) <= load_tolerance)
