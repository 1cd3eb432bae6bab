import functools

import pytest

from fracwell.grid_config import State, WellConfig, make_discretization, make_grid
from fracwell.gradient_flow import solve_flow
from fracwell.observables import compute_observables
from fracwell.operator import assemble

ACCEPTANCE_LINES = []


class Solved:
    def __init__(self, cfg, disc):
        self.cfg, self.disc = cfg, disc
        self.grid = make_grid(cfg, disc)
        self.op = assemble(cfg, disc)
        self.masses = []
        self.parity = []
        sign = 1 if cfg.state is State.GROUND else -1

        def watch(n, phi):
            self.masses.append(phi.mass)
            v = phi.values
            self.parity.append(abs(v - sign * v[::-1]).max() / abs(v).max())

        self.phi, self.report = solve_flow(cfg, disc, op=self.op, callback=watch)
        self.obs = compute_observables(self.op, self.phi, self.grid, cfg.beta, cfg.state)


@functools.lru_cache(maxsize=None)
def _solve(alpha, beta, state, J, dt, eps):
    cfg = WellConfig(alpha=alpha, beta=beta, state=State.parse(state))
    return Solved(cfg, make_discretization(cfg, J, dt, eps))


@pytest.fixture(scope="session")
def solve():
    """Cached solver: solve(alpha, beta=0, state='ground', J=2048, dt=0.005, eps=1e-5)."""

    def run(alpha, beta=0.0, state="ground", J=2048, dt=0.005, eps=1e-5):
        return _solve(float(alpha), float(beta), state, int(J), float(dt), float(eps))

    return run


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
