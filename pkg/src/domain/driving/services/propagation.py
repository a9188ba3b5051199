"""Fixed-step propagation of state vectors and density matrices."""

import logging
from typing import Callable, Optional, Tuple, Union

import numpy as np

from src.domain.driving.value_objects import (
    LINDBLAD,
    UNITARY,
    LindbladParams,
    MovingBasis,
    Trajectory,
)
from src.domain.numerics import as_cmatrix, as_cvector, rk4_step, schrodinger_rhs, time_grid
from src.domain.shared.exceptions import (
    ConvergenceWarning,
    DomainError,
    HamiltonianEvaluationError,
    InvariantViolation,
    PositivityViolation,
)

logger = logging.getLogger(__name__)

DEFAULT_STEPS = 4096
DEFAULT_STRIDE = 8
CONVERGENCE_TOLERANCE = 1e-7
POSITIVITY_FLOOR = -1e-8
_UNIFORM_TOLERANCE = 1e-9

HamiltonianSource = Union[Callable[[float], np.ndarray], object]


def _check_grid(t_grid: np.ndarray) -> float:
    if t_grid.ndim != 1 or t_grid.size < 2:
        raise InvariantViolation("Time grid needs at least two nodes")
    steps = np.diff(t_grid)
    dt = float(steps.mean())
    if dt <= 0 or float(np.max(np.abs(steps - dt))) > _UNIFORM_TOLERANCE * max(1.0, abs(dt)):
        raise InvariantViolation("Time grid must be uniform and increasing")
    return dt


def sample_hamiltonians(source: HamiltonianSource, times: np.ndarray) -> np.ndarray:
    """Stack ``H(t)`` for every time.

    Drives exposing a vectorised ``hamiltonians(times)`` are sampled in one
    call; plain callables are evaluated point by point.

    Raises:
        HamiltonianEvaluationError: on non-finite entries or a failing callable.
    """
    try:
        if hasattr(source, "hamiltonians"):
            stack = np.asarray(source.hamiltonians(times), dtype=complex)
        else:
            stack = np.stack([np.asarray(source(float(t)), dtype=complex) for t in times])
    except DomainError:
        raise
    except (ArithmeticError, ValueError, TypeError) as e:
        raise HamiltonianEvaluationError(f"Hamiltonian evaluation failed: {e}") from e

    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise HamiltonianEvaluationError(f"Hamiltonian samples have shape {stack.shape}")
    bad = ~np.all(np.isfinite(stack), axis=(1, 2))
    if np.any(bad):
        first = float(times[int(np.argmax(bad))])
        raise HamiltonianEvaluationError(f"Non-finite Hamiltonian at t={first:.6g}", t=first)
    return stack


def _nodes_and_midpoints(source: HamiltonianSource, t_grid: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    midpoints = 0.5 * (t_grid[:-1] + t_grid[1:])
    return sample_hamiltonians(source, t_grid), sample_hamiltonians(source, midpoints)


def _record_indices(n_steps: int, stride: int) -> np.ndarray:
    if stride < 1:
        raise InvariantViolation(f"record_stride must be at least 1, got {stride}")
    indices = np.arange(0, n_steps + 1, stride)
    if indices[-1] != n_steps:
        indices = np.append(indices, n_steps)
    return indices


def propagate_schrodinger(
    h_fn: HamiltonianSource,
    psi0,
    t_grid: np.ndarray,
    record_stride: int = DEFAULT_STRIDE,
    check_convergence: bool = False,
    tracking_basis: Optional[MovingBasis] = None,
    tracking_level: int = 0,
) -> Trajectory:
    """Integrate ``i dpsi/dt = H psi`` with classical RK4 on a uniform grid.

    The state is never renormalised; ``norm_drift`` reports the largest
    ``|‖psi‖ - 1|`` over all steps. With ``check_convergence`` the run is
    repeated at half the step and a :class:`ConvergenceWarning` is attached
    when the final target population moves by ``1e-7`` or more. With a
    ``tracking_basis`` the overlap ``|<phi_n(t)|psi(t)>|`` of level
    ``tracking_level`` is recorded at every recorded time.
    """
    psi = as_cvector(psi0, normalized=True)
    t_grid = np.asarray(t_grid, dtype=float)
    dt = _check_grid(t_grid)
    n_steps = t_grid.size - 1

    h_nodes, h_mids = _nodes_and_midpoints(h_fn, t_grid)
    if h_nodes.shape[1] != psi.size:
        raise InvariantViolation(f"Hamiltonian dimension {h_nodes.shape[1]} does not match state {psi.size}")

    record = _record_indices(n_steps, record_stride)
    states = np.empty((record.size, psi.size), dtype=complex)
    states[0] = psi
    slot = 1
    norm_drift = abs(float(np.linalg.norm(psi)) - 1.0)

    for k in range(n_steps):
        psi = rk4_step(psi, schrodinger_rhs, dt, h_nodes[k], h_mids[k], h_nodes[k + 1])
        norm_drift = max(norm_drift, abs(float(np.linalg.norm(psi)) - 1.0))
        if slot < record.size and record[slot] == k + 1:
            states[slot] = psi
            slot += 1

    if not np.all(np.isfinite(psi)):
        raise HamiltonianEvaluationError("State vector diverged during propagation")

    times = t_grid[record]
    populations = np.abs(states) ** 2

    tracking = None
    if tracking_basis is not None:
        tracking = np.array([
            abs(np.vdot(tracking_basis(t).vector(tracking_level), state))
            for t, state in zip(times, states)
        ])

    warning = None
    if check_convergence and psi.size >= 3:
        warning = _convergence_check(h_fn, psi0, t_grid, float(populations[-1, 2]))

    return Trajectory(
        times=times,
        populations=populations,
        states=states,
        final_state=psi,
        norm_drift=norm_drift,
        n_steps=n_steps,
        kind=UNITARY,
        convergence_warning=warning,
        tracking_fidelity=tracking,
    )


def _convergence_check(h_fn, psi0, t_grid: np.ndarray, p3_final: float) -> Optional[ConvergenceWarning]:
    n_steps = t_grid.size - 1
    refined = time_grid(float(t_grid[0]), float(t_grid[-1]), 2 * n_steps)
    rerun = propagate_schrodinger(h_fn, psi0, refined, record_stride=2 * n_steps)
    delta = abs(rerun.p3_final - p3_final)
    if delta >= CONVERGENCE_TOLERANCE:
        message = f"Final P3 changes by {delta:.3e} when the step is halved ({n_steps} -> {2 * n_steps} steps)"
        logger.warning(message)
        return ConvergenceWarning(message, delta=delta)
    logger.debug(f"Step-halved rerun agrees on P3 within {delta:.3e}")
    return None


def _lindblad_rhs_factory(operators):
    prepared = [
        (rate, lowering, lowering.conj().T, lowering.conj().T @ lowering)
        for rate, lowering in operators
    ]

    def rhs(rho: np.ndarray, hamiltonian: np.ndarray) -> np.ndarray:
        out = -1j * (hamiltonian @ rho - rho @ hamiltonian)
        for rate, lowering, raising, number in prepared:
            out += rate * (lowering @ rho @ raising - 0.5 * (number @ rho + rho @ number))
        return out

    return rhs


def _lowest_eigenvalue(rho: np.ndarray) -> float:
    return float(np.min(np.linalg.eigvalsh(rho)))


def propagate_lindblad(
    h_fn: HamiltonianSource,
    rho0,
    lp: LindbladParams,
    t_grid: np.ndarray,
    record_stride: int = DEFAULT_STRIDE,
) -> Trajectory:
    """Integrate ``drho/dt = -i[H, rho] + sum_n G_n (S rho S^+ - {S^+ S, rho}/2)``.

    ``rho`` is re-symmetrised after every step and its spectrum is checked;
    ``norm_drift`` is the largest ``|tr rho - 1|``.

    Raises:
        PositivityViolation: if an eigenvalue of ``rho`` drops below ``-1e-8``.
    """
    rho = as_cmatrix(rho0)
    dim = rho.shape[0]
    if float(np.max(np.abs(rho - rho.conj().T))) > 1e-10:
        raise InvariantViolation("Initial density matrix is not Hermitian")
    if abs(float(np.trace(rho).real) - 1.0) > 1e-9:
        raise InvariantViolation("Initial density matrix must have unit trace")
    if float(np.min(np.linalg.eigvalsh(rho))) < -1e-10:
        raise InvariantViolation("Initial density matrix is not positive semidefinite")
    if dim != 3 and not lp.is_closed:
        raise InvariantViolation(f"Spontaneous emission needs a three-level system, got dimension {dim}")

    t_grid = np.asarray(t_grid, dtype=float)
    dt = _check_grid(t_grid)
    n_steps = t_grid.size - 1
    h_nodes, h_mids = _nodes_and_midpoints(h_fn, t_grid)
    if h_nodes.shape[1] != dim:
        raise InvariantViolation(f"Hamiltonian dimension {h_nodes.shape[1]} does not match rho {dim}")

    rhs = _lindblad_rhs_factory(lp.collapse_operators(dim))
    record = _record_indices(n_steps, record_stride)
    states = np.empty((record.size, dim, dim), dtype=complex)
    states[0] = rho
    slot = 1
    trace_drift = abs(float(np.trace(rho).real) - 1.0)
    min_eigenvalue = _lowest_eigenvalue(rho)

    for k in range(n_steps):
        rho = rk4_step(rho, rhs, dt, h_nodes[k], h_mids[k], h_nodes[k + 1])
        rho = 0.5 * (rho + rho.conj().T)
        lowest = _lowest_eigenvalue(rho)
        min_eigenvalue = min(min_eigenvalue, lowest)
        if lowest < POSITIVITY_FLOOR:
            t = float(t_grid[k + 1])
            raise PositivityViolation(
                f"Density matrix eigenvalue {lowest:.3e} at t={t:.6g}; the step is too coarse",
                t=t,
                eigenvalue=lowest,
            )
        trace_drift = max(trace_drift, abs(float(np.trace(rho).real) - 1.0))
        if slot < record.size and record[slot] == k + 1:
            states[slot] = rho
            slot += 1

    populations = np.real(np.einsum("kii->ki", states))
    return Trajectory(
        times=t_grid[record],
        populations=populations,
        states=states,
        final_state=rho,
        norm_drift=trace_drift,
        n_steps=n_steps,
        kind=LINDBLAD,
        min_eigenvalue=min_eigenvalue,
    )
